from fractions import Fraction

from rest_framework import serializers


class RationalField(serializers.Field):
    """Exact rational as {"numerator": p, "denominator": q}."""
    default_error_messages = {
        'invalid': 'Expected an object with integer numerator and positive denominator.',
    }

    def to_representation(self, value):
        value = Fraction(value)
        return {'numerator': value.numerator, 'denominator': value.denominator}

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            self.fail('invalid')
        numerator = data.get('numerator')
        denominator = data.get('denominator')
        if not isinstance(numerator, int) or not isinstance(denominator, int) or denominator <= 0:
            self.fail('invalid')
        return Fraction(numerator, denominator)


class BigIntegerField(serializers.Field):
    """Unbounded integer kept as a JSON number."""
    default_error_messages = {'invalid': 'Expected an integer.'}

    def to_representation(self, value):
        return int(value)

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, int):
            self.fail('invalid')
        return data


class PosetSerializer(serializers.Serializer):
    elements = serializers.IntegerField(min_value=1)
    covers = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0),
                                                               min_length=2, max_length=2))
    frame = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)),
                                  required=False, allow_null=True)

    def validate(self, data):
        n = data['elements']
        for i, j in data['covers']:
            if i >= n or j >= n:
                raise serializers.ValidationError(f"cover ({i}, {j}) out of range")
        return data


class RankProfileSerializer(serializers.Serializer):
    ranks = serializers.ListField(child=serializers.IntegerField(min_value=0))
    height = serializers.IntegerField(min_value=0)
    width = serializers.IntegerField(min_value=1)


class SubsetPredicateReportSerializer(serializers.Serializer):
    subset = serializers.ListField(child=serializers.IntegerField(min_value=0))
    verdict = serializers.BooleanField()
    witness = serializers.IntegerField(allow_null=True)

    def validate(self, data):
        if data['verdict'] == (data['witness'] is not None):
            raise serializers.ValidationError("witness must be present exactly when the verdict is false")
        return data


def poset_payload(p, frame=None):
    return {
        'elements': p.size,
        'covers': [list(pair) for pair in p.covers],
        'frame': [sorted(cell) for cell in frame] if frame is not None else None,
    }


def subset_report_payload(report):
    return {'subset': sorted(report.subset), 'verdict': report.verdict, 'witness': report.witness}
