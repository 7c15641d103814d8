from rest_framework import serializers

from poset_core.serializers import BigIntegerField

ORIENTATIONS = ['below', 'above', 'both']


class OrbitGraphEdgeSerializer(serializers.Serializer):
    cells = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2)
    orientation = serializers.ChoiceField(choices=ORIENTATIONS)


class OrbitGraphSerializer(serializers.Serializer):
    cell_sizes = serializers.ListField(child=serializers.IntegerField(min_value=1))
    edges = OrbitGraphEdgeSerializer(many=True)

    def validate(self, data):
        count = len(data['cell_sizes'])
        for edge in data['edges']:
            c, d = edge['cells']
            if not c < d < count:
                raise serializers.ValidationError(f"edge ({c}, {d}) is not an ordered pair of cells")
        return data


class LockCycleSerializer(serializers.Serializer):
    cycle = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=3)
    M = serializers.IntegerField(min_value=2)
    steps = serializers.ListField(child=serializers.ChoiceField(choices=['standard', 'chains']))
    locked_pairs = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2))

    def validate(self, data):
        if len(data['steps']) != len(data['cycle']):
            raise serializers.ValidationError("one step kind per cycle edge")
        if len(data['locked_pairs']) != data['M']:
            raise serializers.ValidationError("one locked pair per element of the first cell")
        return data


class AnalysisSerializer(serializers.Serializer):
    """Report of the ``analyze`` command."""
    elements = serializers.IntegerField(min_value=1)
    height = serializers.IntegerField(min_value=0)
    width = serializers.IntegerField(min_value=1)
    aut_order = BigIntegerField()
    orbits = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    tight = serializers.BooleanField()
    without_slack = serializers.BooleanField()
    max_locked = serializers.BooleanField()
    orbit_graph = OrbitGraphSerializer()
    unions = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    factorization = serializers.ListField(child=BigIntegerField(), min_length=2, max_length=2)
    lock_cycles = LockCycleSerializer(many=True)


def orbit_graph_payload(og):
    return {
        'cell_sizes': list(og.cell_sizes),
        'edges': [{'cells': [c, d], 'orientation': og.orientation[(c, d)]} for c, d in og.edges],
    }


def lock_cycle_payload(report):
    return {
        'cycle': list(report.cycle),
        'M': report.M,
        'steps': list(report.steps),
        'locked_pairs': [list(pair) for pair in report.locked_pairs],
    }
