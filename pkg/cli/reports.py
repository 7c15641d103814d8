"""
Report builders shared by the management commands.

JSON reports are one object per line, rendered with the REST framework
renderer. Text reports are aligned ``key: value`` blocks.
"""
from rest_framework.renderers import JSONRenderer

from orbit_structure.locks import lock_cycles
from orbit_structure.serializers import lock_cycle_payload, orbit_graph_payload
from orbit_structure.services import (
    factorization_check, interdependent_orbit_unions, is_max_locked, orbit_graph, structured,
)
from poset_core.services import rank_height_width

_renderer = JSONRenderer()


def render_json(payload):
    return _renderer.render(payload).decode('utf-8')


def _is_rational(value):
    return isinstance(value, dict) and set(value) == {'numerator', 'denominator'}


def _text_value(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if _is_rational(value):
        if value['denominator'] == 1:
            return str(value['numerator'])
        return f"{value['numerator']}/{value['denominator']}"
    if isinstance(value, (dict, list)):
        return render_json(value)
    return str(value)


def render_text(payload):
    width = max((len(key) for key in payload), default=0)
    return '\n'.join(f"{key.ljust(width)}: {_text_value(value)}" for key, value in payload.items())


def analysis_payload(p, frame=None):
    sp = structured(p, frame)
    og = orbit_graph(sp)
    profile = rank_height_width(p)
    lhs, rhs, _ = factorization_check(p)
    return {
        'elements': p.size,
        'height': profile.height,
        'width': profile.width,
        'aut_order': sp.frame_group.order(),
        'orbits': [list(cell) for cell in sp.cells],
        'tight': sp.tight,
        'without_slack': sp.without_slack,
        'max_locked': is_max_locked(p),
        'orbit_graph': orbit_graph_payload(og),
        'unions': [list(cells) for cells in interdependent_orbit_unions(og)],
        'factorization': [lhs, rhs],
        'lock_cycles': [lock_cycle_payload(report) for report in lock_cycles(sp, og)],
    }


def validation_payload(document):
    p, frame = document.poset, document.frame
    profile = rank_height_width(p)
    return {
        'elements': p.size,
        'covers': len(p.covers),
        'height': profile.height,
        'width': profile.width,
        'frame_cells': None if frame is None else [len(cell) for cell in frame],
        'frame_tight': None if frame is None else structured(p, frame).tight,
        'comments': list(document.comments),
    }
