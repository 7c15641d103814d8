import logging
from fractions import Fraction

from django.conf import settings

from catalog.services import random_poset
from core.exact import at_most_power_of_two
from deconstruction.exceptions import DeconstructionError
from orbit_structure.services import (
    interdependent_orbit_unions, is_max_locked, orbit_graph, structured, union_structured_poset,
)
from permgroup.nesting import contains_alternating
from poset_core.services import width
from .certificates import SMALL_CELL_EXPONENT, all_primitive, cell_groups, certify_union
from .exceptions import CertificateRefused, PrimitivityError, SoundnessViolation
from .nesting import nesting_constant_derivation
from .width11 import MAX_WIDTH, width11_pipeline

logger = logging.getLogger(__name__)

ALTERNATING_CELL_MIN_SIZE = 6
SMALL_CELL_MAX_SIZE = 11
ALTERNATING_SMALL_CELL_MAX_SIZE = 5


def _cap(caps, name, default):
    value = (caps or {}).get(name)
    return value if value is not None else default


def _tight_unions(p, cap, sp=None):
    sp = sp or structured(p)
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        union, _ = union_structured_poset(sp, cells)
        if union.size > 1 and union.tight and union.frame_group.order() <= cap:
            yield cells, union


def check_certificates(p, caps=None, sp=None):
    """Every issued certificate holds against the exact frame group order."""
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp):
        order = union.frame_group.order()
        groups = cell_groups(union)
        small = all(g.degree <= SMALL_CELL_MAX_SIZE for g in groups) and all(
            g.degree <= ALTERNATING_SMALL_CELL_MAX_SIZE for g in groups if contains_alternating(g))
        for strategy in ('primitive', 'iou'):
            try:
                certificate = certify_union(union, strategy)
            except (CertificateRefused, PrimitivityError, DeconstructionError):
                continue
            except SoundnessViolation as exc:
                problems.append(f"union {list(cells)}, {strategy}: {exc}")
                continue
            if not certificate.check(order):
                problems.append(f"union {list(cells)}, {strategy}: |Aut_D(U)| = {order} exceeds {certificate.verdict}")
            if strategy == 'iou' and small and certificate.exponent > SMALL_CELL_EXPONENT:
                problems.append(f"union {list(cells)}: small cells but exponent {certificate.exponent}")
    return problems


def check_alternating_unions(p, caps=None, sp=None):
    """A narrow union with a cell of at least six elements carrying its alternating group is max-locked."""
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp):
        if width(union.poset) > MAX_WIDTH:
            continue
        if any(g.degree >= ALTERNATING_CELL_MIN_SIZE and contains_alternating(g) for g in cell_groups(union)):
            if not is_max_locked(union.poset):
                problems.append(f"union {list(cells)} has a large alternating cell but is not max-locked")
    return problems


def check_primitive_unions(p, caps=None, sp=None):
    """With every cell group primitive, each cell group has the order of the whole frame group."""
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp):
        if not all_primitive(union):
            continue
        order = union.frame_group.order()
        orders = [g.order() for g in cell_groups(union)]
        if any(cell_order != order for cell_order in orders):
            problems.append(f"union {list(cells)}: |Aut_D(U)| = {order} but cell groups have orders {orders}")
    return problems


def check_verdict(verdict):
    problems = []
    if not at_most_power_of_two(verdict.aut_order, verdict.certified_lg_aut_upper):
        problems.append(f"{verdict.branch}: |Aut| = {verdict.aut_order} above 2^{verdict.certified_lg_aut_upper}")
    if not at_most_power_of_two(Fraction(1, verdict.end_count), -verdict.endo_lg_lower):
        problems.append(f"{verdict.branch}: End count {verdict.end_count} below 2^{verdict.endo_lg_lower}")
    if verdict.end_exact and verdict.ratio_bound is not None:
        if Fraction(verdict.aut_order, verdict.end_count) > verdict.ratio_bound:
            problems.append(f"{verdict.branch}: |Aut|/|End| = {verdict.aut_order}/{verdict.end_count} "
                            f"above {verdict.ratio_bound}")
    return problems


def check_width11(p, caps=None, sp=None):
    if width(p) > MAX_WIDTH:
        return []
    end_cap = _cap(caps, 'end_cap', settings.END_COUNT_CAP)
    return check_verdict(width11_pipeline(p, end_cap=end_cap))


def check_nesting_constant():
    try:
        nesting_constant_derivation()
    except SoundnessViolation as exc:
        return [str(exc)]
    return []


def check_width11_corpus(count=100, seed=0, caps=None):
    """Verdict soundness on seeded random posets of width at most 11."""
    problems = []
    for offset in range(count):
        n = 4 + offset % 7
        p = random_poset(n, levels=1 + offset % 4, density=40, seed=seed + offset)
        problems.extend(f"random seed {seed + offset}: {problem}" for problem in check_width11(p, caps))
    return problems


POSET_SUITES = {
    'certificate-soundness': check_certificates,
    'alternating-unions': check_alternating_unions,
    'primitive-unions': check_primitive_unions,
    'width11-verdict': check_width11,
}

SUITES = {
    'nesting-constant': check_nesting_constant,
    'width11-corpus': check_width11_corpus,
}
