from rest_framework import serializers

FORMATS = ['text', 'json']


class HeaderSerializer(serializers.Serializer):
    """First object of every JSON-lines stream."""
    posetaut = serializers.CharField()
    command = serializers.CharField()
    seed = serializers.IntegerField(min_value=0)
    caps = serializers.DictField(child=serializers.IntegerField(min_value=0))


class ValidationReportSerializer(serializers.Serializer):
    elements = serializers.IntegerField(min_value=1)
    covers = serializers.IntegerField(min_value=0)
    height = serializers.IntegerField(min_value=0)
    width = serializers.IntegerField(min_value=1)
    frame_cells = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_null=True)
    frame_tight = serializers.BooleanField(allow_null=True)
    comments = serializers.ListField(child=serializers.CharField(allow_blank=True))


class BoundSummarySerializer(serializers.Serializer):
    targets = serializers.IntegerField(min_value=0)
    certified = serializers.IntegerField(min_value=0)
    refused = serializers.IntegerField(min_value=0)

    def validate(self, data):
        if data['certified'] + data['refused'] != data['targets']:
            raise serializers.ValidationError("every target is either certified or refused")
        return data


class ViolationSerializer(serializers.Serializer):
    suite = serializers.CharField()
    poset = serializers.CharField(allow_blank=True)
    message = serializers.CharField()


class CorpusSummarySerializer(serializers.Serializer):
    """Last line of a ``corpus_verify`` report."""
    max_n = serializers.IntegerField(min_value=0)
    random_count = serializers.IntegerField(min_value=0)
    jobs = serializers.IntegerField(min_value=1)
    posets_checked = serializers.IntegerField(min_value=0)
    suites = serializers.ListField(child=serializers.CharField())
    violations = serializers.IntegerField(min_value=0)
    status = serializers.ChoiceField(choices=['passed', 'failed'])
    run = serializers.IntegerField(allow_null=True)
    archive = serializers.CharField(allow_null=True)


def header_payload(version, command, seed, caps):
    return {'posetaut': version, 'command': command, 'seed': seed, 'caps': dict(caps)}


def violation_payload(violation):
    suite, poset_text, message = violation
    return {'suite': suite, 'poset': poset_text, 'message': message}
