import logging
from math import factorial

from django.conf import settings
from sympy import divisors, isprime

from catalog.services import generate_frame, lock_cycle, spec
from poset_core.services import maximal_autonomous_antichain_partition
from .endomorphisms import count_endomorphisms, count_frame_endomorphisms
from .families import candidate_families, verify_family
from .oracles import brute_force_automorphism_count
from .search import aut_group, iter_automorphisms

logger = logging.getLogger(__name__)

AUTONOMY_FILTER_MAX_ORDER = 5040
HEIGHT_ONE_FLOOR_MAX_N = 12


def _cap(caps, name, default):
    value = (caps or {}).get(name)
    return value if value is not None else default


def check_automorphism_search(p, caps=None):
    cap = _cap(caps, 'aut_brute_max_n', settings.AUT_BRUTE_FORCE_MAX_N)
    if p.size > cap:
        return []
    order, expected = aut_group(p).order(), brute_force_automorphism_count(p, cap)
    return [] if order == expected else [f"search found {order} automorphisms, enumeration {expected}"]


def check_autonomy_filter(p, caps=None):
    """
    On an orbit A without nontrivial autonomous antichains, two automorphisms
    that agree off A agree everywhere.
    """
    group = aut_group(p)
    if group.order() > AUTONOMY_FILTER_MAX_ORDER:
        return []
    automorphisms = iter_automorphisms(p, cap=AUTONOMY_FILTER_MAX_ORDER)
    problems = []
    for orbit in group.orbits():
        cells = maximal_autonomous_antichain_partition(p, range(p.size), orbit)
        if any(cell.nontrivial for cell in cells):
            continue
        outside = [x for x in range(p.size) if x not in orbit]
        seen = {}
        for perm in automorphisms:
            key = tuple(perm(x) for x in outside)
            if key in seen and seen[key] != perm:
                problems.append(f"automorphisms {seen[key]} and {perm} agree off orbit {list(orbit)}")
                break
            seen[key] = perm
    return problems


def check_endomorphism_floor(p, caps=None):
    cap = _cap(caps, 'end_cap', settings.END_COUNT_CAP)
    if p.size > cap:
        return []
    end = count_endomorphisms(p, cap)
    problems = []
    for family in candidate_families(p):
        if not verify_family(p, family):
            problems.append(f"{family.description} family contains a map that is not order-preserving")
        if family.count > end:
            problems.append(f"{family.description} family has {family.count} maps but |End| = {end}")
    if p.height == 1 and p.size <= HEIGHT_ONE_FLOOR_MAX_N and end < 2 ** p.size:
        problems.append(f"height-1 poset with {end} < 2^{p.size} endomorphisms")
    return problems


def check_divisor_arithmetic(low=6, high=24):
    """k!((n/k)!)^k <= l!((n/l)!)^l < (n-1)! for composite n, l the least nontrivial divisor."""
    problems = []
    for n in range(low, high + 1):
        if isprime(n):
            continue
        proper = [k for k in divisors(n) if 1 < k < n]
        least = proper[0]
        ceiling = factorial(least) * factorial(n // least) ** least
        if not ceiling < factorial(n - 1):
            problems.append(f"n = {n}: {ceiling} is not below {n - 1}!")
        for k in proper:
            if factorial(k) * factorial(n // k) ** k > ceiling:
                problems.append(f"n = {n}, k = {k} exceeds the least-divisor product")
    return problems


def check_lock_cycle_endomorphisms(sizes=(3, 4)):
    """On the lock-cycle fixture every frame-preserving endomorphism is an automorphism."""
    problems = []
    for M in sizes:
        frame = generate_frame(spec('lock_cycle', M=M))
        p = lock_cycle(M)
        colours = [next(i for i, cell in enumerate(frame) if x in cell) for x in range(p.size)]
        endos = count_frame_endomorphisms(p, frame, cap=p.size)
        order = aut_group(p, colours).order()
        if endos != order or order != factorial(M):
            problems.append(f"M = {M}: {endos} frame endomorphisms, {order} frame automorphisms")
    return problems


POSET_SUITES = {
    'automorphism-search': check_automorphism_search,
    'autonomy-filter': check_autonomy_filter,
    'endomorphism-floor': check_endomorphism_floor,
}

SUITES = {
    'divisor-arithmetic': check_divisor_arithmetic,
    'lock-cycle-endomorphisms': check_lock_cycle_endomorphisms,
}
