import logging
from fractions import Fraction

from django.conf import settings

from core.exact import lg_lower, lg_upper
from .domain import RatioReport
from .endomorphisms import count_endomorphisms, count_frame_endomorphisms
from .families import constructive_endo_lower_bound
from .search import automorphism_count

logger = logging.getLogger(__name__)


def end_count_or_bound(p, cap=None, seed=0):
    """(count, exact, family description): the exact |End| under the cap, else the family bound."""
    cap = cap if cap is not None else settings.END_COUNT_CAP
    if p.size <= cap:
        return count_endomorphisms(p, cap), True, ''
    family = constructive_endo_lower_bound(p, seed)
    logger.warning(f"{p.size} elements exceed the endomorphism cap {cap}; using the {family.description} family")
    return family.count, False, family.description


def ac_ratio(p, end_cap=None, precision=None):
    """|Aut(P)| against |End(P)|, with an exact rational upper bound on their lg difference."""
    precision = precision if precision is not None else settings.LG_PRECISION
    aut_order = automorphism_count(p)
    end_count, exact, family = end_count_or_bound(p, end_cap)
    bound = lg_upper(Fraction(aut_order, end_count), precision)
    return RatioReport(aut_order=aut_order, end_count=end_count, end_exact=exact,
                       lg_ratio_upper=bound, family=family)


def count_report(p, frame=None, end_cap=None, precision=None):
    """Exact |Aut|, |End| (or its family bound) and, with a frame, |End_D|."""
    precision = precision if precision is not None else settings.LG_PRECISION
    end_count, exact, family = end_count_or_bound(p, end_cap)
    report = {
        'elements': p.size,
        'aut_order': automorphism_count(p),
        'end_count': end_count,
        'end_exact': exact,
        'family': family,
        'end_lg_lower': lg_lower(end_count, precision),
        'frame_end_count': None,
    }
    if frame is not None:
        report['frame_end_count'] = count_frame_endomorphisms(p, frame, end_cap)
    return report
