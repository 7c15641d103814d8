"""
The exponent a proper primitive nesting gives for |G| <= 2^(c * degree).

A level of degree k acting on blocks of size |B_j| contributes
d_j / |B_j|, with d_j from ``permgroup.exceptional.level_bound_constant``.
Over all proper nestings the sum of the first eight levels is at most
NESTING_SUM_BOUND and the rest is a geometric tail, which together give
NESTING_CONSTANT.
"""
import logging
from fractions import Fraction

from permgroup.exceptional import TABLE_DEGREES, level_bound_constant
from .domain import Derivation
from .exceptions import ImproperNestingError, SoundnessViolation

logger = logging.getLogger(__name__)

SMALL_DEGREES = (2, 3, 4, 5)
# every untabulated degree above 5 is at least this
UNTABULATED_DEGREE = 14
TRUNCATED_LEVELS = 8

NESTING_SUM_BOUND = Fraction(17268, 10000)
NESTING_TAIL_BOUND = Fraction(108, 10000)
NESTING_CONSTANT = Fraction(17376, 10000)


def degree_choices():
    """(d, 1/k) for every level degree k the maximisation ranges over."""
    degrees = sorted(set(SMALL_DEGREES) | {k for k in TABLE_DEGREES if k > 5})
    choices = [(level_bound_constant(k), Fraction(1, k)) for k in degrees]
    choices.append((Fraction(1), Fraction(1, UNTABULATED_DEGREE)))
    return choices


def require_proper(nest):
    for j, level in enumerate(nest.levels):
        if not level.proper:
            message = f"level {j} of degree {level.degree} carries a factorial factor"
            logger.error(message)
            raise ImproperNestingError(message, level=j)


def nesting_exponent(nest):
    """Exact sum of d_j / |B_j| over every level of a proper nesting."""
    require_proper(nest)
    return sum((Fraction(level.bound_constant) / len(nest.blocks[j]) for j, level in enumerate(nest.levels)),
               Fraction(0))


def truncated_exponent(nest):
    """The first eight terms of the sum plus the tail bound when there are more levels."""
    require_proper(nest)
    head = sum((Fraction(level.bound_constant) / len(nest.blocks[j])
                for j, level in enumerate(nest.levels[:TRUNCATED_LEVELS])), Fraction(0))
    return head + (nesting_tail() if len(nest.levels) > TRUNCATED_LEVELS else 0)


def nesting_tail(levels=TRUNCATED_LEVELS):
    """max d / 2^(levels - 1): levels from ``levels`` on sit above blocks of size at least 2^j."""
    return max(d for d, _ in degree_choices()) / 2 ** (levels - 1)


def verify_nesting_constant(levels=TRUNCATED_LEVELS):
    """
    Maximum of d_0 + d_1/k_0 + d_2/(k_0 k_1) + ... over the first ``levels``
    level degrees. The sum nests as d(k_0) + (d(k_1) + ...)/k_0 and is
    increasing in the inner value, so maximising from the top level down is
    exhaustive.
    """
    choices = degree_choices()
    best = Fraction(0)
    for _ in range(levels):
        best = max(d + factor * best for d, factor in choices)
    logger.info(f"nesting sum over {levels} levels is at most {float(best):.6f}")
    return best


def nesting_constant_derivation(levels=TRUNCATED_LEVELS):
    best = verify_nesting_constant(levels)
    tail = nesting_tail(levels)
    if best > NESTING_SUM_BOUND or tail > NESTING_TAIL_BOUND or NESTING_SUM_BOUND + NESTING_TAIL_BOUND > NESTING_CONSTANT:
        message = f"nesting sum {best} with tail {tail} exceeds {NESTING_CONSTANT}"
        logger.error(message)
        raise SoundnessViolation(message)
    return Derivation(
        rule='nesting-constant',
        statement=f"every proper nesting has exponent <= {NESTING_SUM_BOUND} + {NESTING_TAIL_BOUND}",
        constants={'maximum': best, 'sum_bound': NESTING_SUM_BOUND, 'tail': tail,
                   'tail_bound': NESTING_TAIL_BOUND, 'constant': NESTING_CONSTANT},
    )


def nesting_derivation(nest, label):
    """``nesting-product`` step for one nesting: per-level constants and the exact exponent."""
    exponent = nesting_exponent(nest)
    children = []
    for j, level in enumerate(nest.levels):
        rule = 'exceptional-table' if level.degree > 5 and level.degree in TABLE_DEGREES else 'nesting-product'
        children.append(Derivation(
            rule=rule,
            statement=f"level {j} of degree {level.degree} on blocks of {len(nest.blocks[j])}",
            constants={'d': level.bound_constant, 'block_size': len(nest.blocks[j])},
        ))
    return Derivation(
        rule='nesting-product',
        statement=f"{label}: |G| <= 2^({exponent} * {nest.domain_size})",
        constants={'exponent': exponent, 'truncated': truncated_exponent(nest)},
        children=tuple(children),
    )
