from rest_framework import serializers

from core.exact import fraction_payload
from poset_core.serializers import BigIntegerField, RationalField


class EndoFamilySerializer(serializers.Serializer):
    description = serializers.CharField()
    count = BigIntegerField()
    verified = serializers.BooleanField()
    fanned_levels = serializers.ListField(child=serializers.IntegerField(min_value=0))


class RatioReportSerializer(serializers.Serializer):
    aut_order = BigIntegerField()
    end_count = BigIntegerField()
    end_exact = serializers.BooleanField()
    lg_ratio_upper = RationalField()
    ratio = RationalField()
    family = serializers.CharField(allow_blank=True)

    def validate(self, data):
        if data['end_exact'] == bool(data['family']):
            raise serializers.ValidationError("a family is named exactly when the End count is a lower bound")
        return data


class CountReportSerializer(serializers.Serializer):
    elements = serializers.IntegerField(min_value=1)
    aut_order = BigIntegerField()
    end_count = BigIntegerField()
    end_exact = serializers.BooleanField()
    family = serializers.CharField(allow_blank=True)
    end_lg_lower = RationalField()
    frame_end_count = BigIntegerField(allow_null=True)


def family_payload(family):
    return {
        'description': family.description,
        'count': family.count,
        'verified': family.verified,
        'fanned_levels': list(family.fanned_levels),
    }


def ratio_payload(report):
    return {
        'aut_order': report.aut_order,
        'end_count': report.end_count,
        'end_exact': report.end_exact,
        'lg_ratio_upper': fraction_payload(report.lg_ratio_upper),
        'ratio': fraction_payload(report.ratio),
        'family': report.family,
    }


def count_payload(report):
    return dict(report, end_lg_lower=fraction_payload(report['end_lg_lower']))
