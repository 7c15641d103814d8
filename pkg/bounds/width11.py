"""
Case analysis for posets of width at most 11.

The branches are tried in this order:

* ``maxlocked_large_w`` / ``many_maxlocked``: max-locked height-1 unions
  cover at least lg n elements. The ratio |Aut|/|End| is bounded by the
  product of w!/(w-1)^w (S_w) and w!/w^w (wC_2) over those unions.
* ``small_orbits_bound``: no nontrivial autonomous antichains. lg|Aut| is
  bounded by the sum of the union certificates.
* ``lexsum_reduction``: otherwise. The maximal autonomous antichains are
  collapsed and |Aut(P)| <= |Aut(T)| * prod |class|!.

Every verdict reports the inequality reached at this size, with lg|End|
from an exact count or a constructed family.
"""
import logging
from fractions import Fraction
from math import factorial, prod

from django.conf import settings

from core.exact import describe_fraction, lg_lower, lg_upper
from counting.search import aut_group
from counting.services import end_count_or_bound
from deconstruction.exceptions import DeconstructionError
from orbit_structure.services import (
    interdependent_orbit_unions, max_locked_unions, orbit_graph, structured, union_structured_poset,
)
from poset_core.services import induced_subposet, maximal_autonomous_antichain_partition, width
from .certificates import certify_union, describe_union
from .domain import Derivation, LexsumReduction, UnionFactor, Width11Verdict
from .exceptions import CertificateRefused, PrimitivityError, WidthExceededError

logger = logging.getLogger(__name__)

MAX_WIDTH = 11
BRANCHES = ('many_maxlocked', 'maxlocked_large_w', 'small_orbits_bound', 'lexsum_reduction')


def union_ratio_factor(kind, w):
    if kind == 'standard':
        return Fraction(factorial(w), (w - 1) ** w)
    return Fraction(factorial(w), w ** w)


def max_locked_ratio(p, sp=None):
    """(per-union factors, their exact product) over the max-locked height-1 unions."""
    factors = tuple(
        UnionFactor(kind=union.kind, w=union.w, elements=union.elements,
                    factor=union_ratio_factor(union.kind, union.w))
        for union in max_locked_unions(p, sp)
    )
    return factors, prod((factor.factor for factor in factors), start=Fraction(1))


def autonomous_classes(p, sp=None):
    """Maximal autonomous antichains inside the orbits, ordered by first element."""
    sp = sp or structured(p)
    classes = []
    for orbit in sp.cells:
        classes.extend(cell.members for cell in maximal_autonomous_antichain_partition(p, range(p.size), orbit))
    return sorted(classes)


def lexsum_reduction(p, sp=None):
    """
    Collapse every maximal autonomous antichain to its first element. P is
    the lexicographic sum of these antichains over the quotient T, so
    |Aut(P)| <= |Aut(T)| * prod |class|!.
    """
    classes = tuple(autonomous_classes(p, sp))
    representatives = tuple(members[0] for members in classes)
    quotient, _ = induced_subposet(p, representatives)
    quotient_order = aut_group(quotient).order()
    bound = quotient_order * prod(factorial(len(members)) for members in classes)
    logger.info(f"collapsed {p.size} elements to {quotient.size}, |Aut| <= {bound}")
    return LexsumReduction(quotient=quotient, representatives=representatives, classes=classes,
                           quotient_order=quotient_order, bound=bound)


def _is_large(size, n, threshold):
    if threshold is None:
        # size >= sqrt(lg n)
        return 2 ** (size * size) >= n
    return size >= threshold


def _union_bound(union, precision):
    """(lg upper bound, derivation) from a certificate, or from the exact order when none is issued."""
    for strategy in ('primitive', 'iou'):
        try:
            certificate = certify_union(union, strategy)
        except (CertificateRefused, PrimitivityError, DeconstructionError):
            continue
        return certificate.exponent * union.size, certificate.derivation
    order = union.frame_group.order()
    bound = lg_upper(order, precision)
    return bound, Derivation(rule='exact-order', statement=f"{describe_union(union)}: |Aut_D(U)| = {order}",
                             constants={'order': Fraction(order), 'lg_upper': bound})


def _small_orbits(p, sp, precision):
    total = Fraction(0)
    children = []
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        union, _ = union_structured_poset(sp, cells)
        if union.size == 1:
            continue
        if union.tight:
            bound, derivation = _union_bound(union, precision)
        else:
            order = union.frame_group.order()
            bound = lg_upper(order, precision)
            derivation = Derivation(rule='exact-order', statement=f"{describe_union(union)}: |Aut_D(U)| = {order}",
                                    constants={'order': Fraction(order), 'lg_upper': bound})
        total += bound
        children.append(derivation)
    return total, Derivation(
        rule='union-product',
        statement=f"|Aut(P)| is the product over {len(children)} nontrivial unions, lg|Aut| <= {total}",
        constants={'lg_upper': total},
        children=tuple(children),
    )


def width11_pipeline(p, large_union_threshold=None, end_cap=None, precision=None):
    """Classify p into the width-11 branches and report the bound reached."""
    precision = precision if precision is not None else settings.LG_PRECISION
    w = width(p)
    if w > MAX_WIDTH:
        raise WidthExceededError(f"width {w} exceeds {MAX_WIDTH}")
    n = p.size
    sp = structured(p)
    aut_order = sp.frame_group.order()
    end_count, end_exact, family = end_count_or_bound(p, end_cap)
    endo_lower = lg_lower(end_count, precision)
    factors, ratio = max_locked_ratio(p, sp)
    covered = sum(2 * factor.w for factor in factors)
    ratio_bound = None

    if factors and 2 ** covered >= n:
        large = any(_is_large(len(factor.elements), n, large_union_threshold) for factor in factors)
        branch = 'maxlocked_large_w' if large else 'many_maxlocked'
        upper = lg_upper(aut_order, precision)
        ratio_bound = ratio
        derivation = Derivation(
            rule='max-locked-ratio',
            statement=f"{covered} of {n} elements lie in max-locked unions, "
                      f"|Aut|/|End| <= {describe_fraction(ratio)}",
            constants={'ratio': ratio, 'covered': Fraction(covered)},
            children=tuple(
                Derivation(rule='max-locked-ratio',
                           statement=f"{factor.kind} union of width {factor.w}",
                           constants={'factor': factor.factor})
                for factor in factors
            ),
        )
        conclusion = f"|Aut|/|End| <= {describe_fraction(ratio)}"
    elif all(len(members) == 1 for members in autonomous_classes(p, sp)):
        branch = 'small_orbits_bound'
        upper, derivation = _small_orbits(p, sp, precision)
        conclusion = f"lg|Aut| - lg|End| <= {describe_fraction(upper - endo_lower)}"
    else:
        branch = 'lexsum_reduction'
        reduction = lexsum_reduction(p, sp)
        upper = lg_upper(reduction.bound, precision)
        ratio_bound = Fraction(reduction.bound, end_count)
        derivation = Derivation(
            rule='lexicographic-sum',
            statement=f"{len(reduction.classes)} classes over a quotient of {reduction.quotient.size} elements, "
                      f"|Aut| <= {reduction.quotient_order} * prod |class|! = {reduction.bound}",
            constants={'quotient_order': Fraction(reduction.quotient_order), 'bound': Fraction(reduction.bound)},
        )
        conclusion = f"|Aut|/|End| <= {describe_fraction(ratio_bound)}"

    logger.info(f"width-{w} poset of {n} elements: {branch}, {conclusion}")
    return Width11Verdict(
        branch=branch, size=n, width=w, aut_order=aut_order,
        certified_lg_aut_upper=upper, endo_lg_lower=endo_lower,
        end_count=end_count, end_exact=end_exact, ratio_conclusion=conclusion,
        derivation=derivation, ratio_bound=ratio_bound, covered=covered, factors=factors,
    )
