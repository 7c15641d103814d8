import math

from rest_framework import serializers

from poset_core.serializers import BigIntegerField


class AntichainPartitionSerializer(serializers.Serializer):
    cell = serializers.IntegerField(min_value=0)
    ell = serializers.IntegerField(min_value=1)
    antichain_size = serializers.IntegerField(min_value=1)


class FactorizationSerializer(serializers.Serializer):
    aut_order = BigIntegerField()
    compacted_order = BigIntegerField()
    residual_order = BigIntegerField()
    equal = serializers.BooleanField()
    residual_matches = serializers.BooleanField()
    separation_partition = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)))


class StepSerializer(serializers.Serializer):
    """One line of the ``decompose`` report."""
    step = serializers.IntegerField(min_value=1)
    removed_cell = serializers.IntegerField(min_value=0)
    labels = serializers.ListField(child=serializers.IntegerField(min_value=0))
    s = serializers.IntegerField(min_value=1)
    t = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=2)
    r = serializers.IntegerField(min_value=2)
    m = serializers.IntegerField(min_value=3)
    partitions = AntichainPartitionSerializer(many=True)
    u_n_cells = serializers.ListField(child=serializers.IntegerField(min_value=1))
    q_cells = serializers.ListField(child=serializers.IntegerField(min_value=1))
    verification = FactorizationSerializer(required=False, allow_null=True)

    def validate(self, data):
        if not data['s'] <= data['t'] <= data['n'] < data['r'] <= data['m'] + 1:
            raise serializers.ValidationError("indices must satisfy s <= t <= n < r <= m + 1")
        return data


class SequenceSerializer(serializers.Serializer):
    """Summary line of the ``decompose`` report; ``b`` is null when no antichain was collapsed."""
    elements = serializers.IntegerField(min_value=1)
    cells = serializers.IntegerField(min_value=1)
    policy = serializers.CharField()
    steps = serializers.IntegerField(min_value=0)
    b = serializers.IntegerField(min_value=2, allow_null=True)
    final_residual_cells = serializers.ListField(child=serializers.IntegerField(min_value=1))


def step_payload(index, step, verification=None):
    context = step.context
    return {
        'step': index,
        'removed_cell': context.removed_cell,
        'labels': list(context.labels),
        's': context.s,
        't': context.t,
        'n': context.n,
        'r': context.r,
        'm': context.m,
        'partitions': [
            {'cell': cell, 'ell': len(parts), 'antichain_size': parts[0].size}
            for cell, parts in sorted(context.partitions.items())
        ],
        'u_n_cells': [len(cell) for cell in step.u_n.cells],
        'q_cells': [len(cell) for cell in step.q.cells],
        'verification': verification,
    }


def verification_payload(factorization, residual_matches, partition):
    lhs, left, right, equal = factorization
    return {
        'aut_order': lhs,
        'compacted_order': left,
        'residual_order': right,
        'equal': equal,
        'residual_matches': residual_matches,
        'separation_partition': [list(cell) for cell in partition],
    }


def sequence_payload(u, sequence, policy):
    return {
        'elements': u.size,
        'cells': len(u.cells),
        'policy': policy,
        'steps': len(sequence.steps),
        'b': None if sequence.b == math.inf else sequence.b,
        'final_residual_cells': [len(cell) for cell in sequence.final_residual.cells],
    }
