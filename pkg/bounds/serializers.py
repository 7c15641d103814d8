from rest_framework import serializers

from core.exact import fraction_payload
from orbit_structure.serializers import LockCycleSerializer, lock_cycle_payload
from poset_core.serializers import BigIntegerField, RationalField
from .width11 import BRANCHES

RULES = [
    'nesting-product', 'nesting-constant', 'exceptional-table', 'two-cell-union',
    'deconstruction-combination', 'primitive-union', 'alternating-union', 'exact-order',
    'lexicographic-sum', 'max-locked-ratio', 'union-product',
]


class DerivationSerializer(serializers.Serializer):
    rule = serializers.ChoiceField(choices=RULES)
    statement = serializers.CharField()
    constants = serializers.DictField(child=RationalField())
    children = serializers.ListField(child=serializers.DictField(), required=False)

    def validate_children(self, value):
        nested = DerivationSerializer(data=value, many=True)
        if not nested.is_valid():
            raise serializers.ValidationError(nested.errors)
        return value


class CertificateSerializer(serializers.Serializer):
    """Report of the ``bound`` command when a certificate is issued."""
    status = serializers.ChoiceField(choices=['certified'])
    target = serializers.CharField()
    elements = serializers.IntegerField(min_value=1)
    exponent = RationalField()
    verdict = serializers.CharField()
    aut_order = BigIntegerField(required=False, allow_null=True)
    holds = serializers.BooleanField(required=False, allow_null=True)
    derivation = DerivationSerializer()


class RefusalSerializer(serializers.Serializer):
    status = serializers.ChoiceField(choices=['refused'])
    target = serializers.CharField()
    reason = serializers.CharField()
    cell = serializers.IntegerField(min_value=0, allow_null=True)
    level = serializers.IntegerField(min_value=0, allow_null=True)
    advisory = LockCycleSerializer(many=True)


class UnionFactorSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=['standard', 'chains'])
    w = serializers.IntegerField(min_value=2)
    elements = serializers.ListField(child=serializers.IntegerField(min_value=0))
    factor = RationalField()


class Width11VerdictSerializer(serializers.Serializer):
    branch = serializers.ChoiceField(choices=BRANCHES)
    elements = serializers.IntegerField(min_value=1)
    width = serializers.IntegerField(min_value=1, max_value=11)
    aut_order = BigIntegerField()
    certified_lg_aut_upper = RationalField()
    endo_lg_lower = RationalField()
    end_count = BigIntegerField()
    end_exact = serializers.BooleanField()
    ratio_conclusion = serializers.CharField()
    ratio_bound = RationalField(allow_null=True)
    covered = serializers.IntegerField(min_value=0)
    factors = UnionFactorSerializer(many=True)
    derivation = DerivationSerializer()


def derivation_payload(derivation):
    return {
        'rule': derivation.rule,
        'statement': derivation.statement,
        'constants': {name: fraction_payload(value) for name, value in derivation.constants.items()},
        'children': [derivation_payload(child) for child in derivation.children],
    }


def certificate_payload(certificate, aut_order=None):
    return {
        'status': 'certified',
        'target': certificate.target,
        'elements': certificate.size,
        'exponent': fraction_payload(certificate.exponent),
        'verdict': certificate.verdict,
        'aut_order': aut_order,
        'holds': None if aut_order is None else certificate.check(aut_order),
        'derivation': derivation_payload(certificate.derivation),
    }


def refusal_payload(target, refusal):
    return {
        'status': 'refused',
        'target': target,
        'reason': refusal.reason,
        'cell': refusal.cell,
        'level': refusal.level,
        'advisory': [lock_cycle_payload(report) for report in refusal.advisory],
    }


def verdict_payload(verdict):
    return {
        'branch': verdict.branch,
        'elements': verdict.size,
        'width': verdict.width,
        'aut_order': verdict.aut_order,
        'certified_lg_aut_upper': fraction_payload(verdict.certified_lg_aut_upper),
        'endo_lg_lower': fraction_payload(verdict.endo_lg_lower),
        'end_count': verdict.end_count,
        'end_exact': verdict.end_exact,
        'ratio_conclusion': verdict.ratio_conclusion,
        'ratio_bound': None if verdict.ratio_bound is None else fraction_payload(verdict.ratio_bound),
        'covered': verdict.covered,
        'factors': [
            {'kind': factor.kind, 'w': factor.w, 'elements': list(factor.elements),
             'factor': fraction_payload(factor.factor)}
            for factor in verdict.factors
        ],
        'derivation': derivation_payload(verdict.derivation),
    }
