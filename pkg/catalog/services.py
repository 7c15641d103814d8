import logging

import numpy as np

from poset_core.domain import Poset
from poset_core.services import from_relation, lexicographic_sum, transitive_closure
from .domain import GeneratorSpec
from .exceptions import GeneratorError

logger = logging.getLogger(__name__)

RELAY_ORBITS = ('A', 'B', 'C', 'D', 'M', 'A~', 'B~', 'C~', 'D~')


def _require(condition, message):
    if not condition:
        raise GeneratorError(message)


def antichain(n):
    _require(n >= 1, f"antichain needs n >= 1, got {n}")
    return Poset.antichain(n)


def chain(n):
    _require(n >= 1, f"chain needs n >= 1, got {n}")
    return Poset.chain(n)


def s_w(w):
    """Standard example: minimal i is below maximal w+j iff i != j."""
    _require(w >= 3, f"s_w needs w >= 3, got {w}")
    return from_relation(2 * w, [(i, w + j) for i in range(w) for j in range(w) if i != j])


def w_c2(w):
    _require(w >= 1, f"w_c2 needs w >= 1, got {w}")
    return from_relation(2 * w, [(i, w + i) for i in range(w)])


def crown(k):
    """The 2k-crown: a_i below b_i and b_{i+1}, indices mod k."""
    _require(k >= 2, f"crown needs k >= 2, got {k}")
    return from_relation(2 * k, [(i, k + (i + step) % k) for i in range(k) for step in (0, 1)])


def crown_blown_up(k, m=2):
    _require(m >= 1, f"crown_blown_up needs m >= 1, got {m}")
    base = crown(k)
    return lexicographic_sum(base, [Poset.antichain(m)] * base.size)


def lock_cycle(M, shift=0):
    """
    Four M-element levels x^1..x^4 with x_j^1 < x_k^2 iff j != k,
    x_j^3 < x_j^2, x_j^3 < x_j^4 and x_j^1 < x_{j+shift}^4.
    """
    _require(M >= 3, f"lock_cycle needs M >= 3, got {M}")
    _require(0 <= shift < M, f"shift must lie in 0..{M - 1}, got {shift}")
    x1, x2, x3, x4 = (range(level * M, (level + 1) * M) for level in range(4))
    pairs = [(x1[j], x2[k]) for j in range(M) for k in range(M) if j != k]
    pairs += [(x3[j], x2[j]) for j in range(M)]
    pairs += [(x3[j], x4[j]) for j in range(M)]
    pairs += [(x1[j], x4[(j + shift) % M]) for j in range(M)]
    return from_relation(4 * M, pairs)


def _relay_index(orbit, i):
    return RELAY_ORBITS.index(orbit) * 3 + i % 3


def relay():
    """
    Two mirrored three-layer towers of 3-element orbits joined at the top,
    with a shared M orbit feeding both B layers.
    """
    r = _relay_index
    pairs = []
    for i in range(3):
        pairs += [(r('A', i), r('B', i)), (r('A', i), r('B', i + 1))]
        pairs += [(r('C', i), r('D', i)), (r('C', i), r('D', i + 1))]
        pairs += [(r('M', i), r('B', i))]
        pairs += [(r('A~', i), r('B~', i)), (r('A~', i), r('B~', i - 1))]
        pairs += [(r('M', i), r('B~', i)), (r('M', i), r('B~', i + 1))]
        pairs += [(r('C~', i), r('D~', i)), (r('C~', i), r('D~', i - 1))]
        pairs += [(r('C', i), r('D~', i)), (r('C~', i), r('D', i))]
        for j in range(3):
            pairs += [(r('B', i), r('C', j)), (r('B~', i), r('C~', j))]
    labels = [f"{orbit}{i + 1}" for orbit in RELAY_ORBITS for i in range(3)]
    return from_relation(27, pairs, labels)


def separated_crown(k):
    """
    The 2k-crown with each minimal element doubled to a_i, a'_i and the
    twins told apart by a matching a_i < e_i, a'_i < e'_i.

    Layout: a 0..k-1, a' k..2k-1, b 2k..3k-1, e 3k..4k-1, e' 4k..5k-1.
    """
    _require(k >= 2, f"separated_crown needs k >= 2, got {k}")
    pairs = []
    for i in range(k):
        for twin in (i, k + i):
            pairs += [(twin, 2 * k + i), (twin, 2 * k + (i + 1) % k)]
        pairs += [(i, 3 * k + i), (k + i, 4 * k + i)]
    return from_relation(5 * k, pairs)


def random_poset(n, levels=3, density=40, seed=None):
    """Seeded layered order: uniform levels, upward pairs kept with probability density%."""
    _require(n >= 1, f"random needs n >= 1, got {n}")
    _require(levels >= 1, f"levels must be positive, got {levels}")
    _require(0 <= density <= 100, f"density is a percentage, got {density}")
    rng = np.random.default_rng(seed)
    level = rng.integers(0, levels, size=n)
    keep = rng.random((n, n)) < density / 100
    lt = np.less.outer(level, level) & keep
    return Poset(transitive_closure(lt))


def circulant(k, levels=2, density=40, seed=None):
    """
    Seeded poset on levels x k elements invariant under i -> i+1 on every
    level; element (level, i) has index level*k + i.
    """
    _require(k >= 1, f"circulant needs k >= 1, got {k}")
    _require(levels >= 1, f"levels must be positive, got {levels}")
    _require(0 <= density <= 100, f"density is a percentage, got {density}")
    rng = np.random.default_rng(seed)
    n = levels * k
    lt = np.zeros((n, n), dtype=bool)
    for low in range(levels):
        for high in range(low + 1, levels):
            for offset in range(k):
                if rng.random() < density / 100:
                    for i in range(k):
                        lt[low * k + i, high * k + (i + offset) % k] = True
    return Poset(transitive_closure(lt))


def generate(spec):
    p = spec.parameters
    builders = {
        'antichain': lambda: antichain(p['n']),
        'chain': lambda: chain(p['n']),
        's_w': lambda: s_w(p['w']),
        'w_c2': lambda: w_c2(p['w']),
        'crown': lambda: crown(p['k']),
        'crown_blown_up': lambda: crown_blown_up(p['k'], p['m']),
        'lock_cycle': lambda: lock_cycle(p['M'], p['shift']),
        'relay': relay,
        'separated_crown': lambda: separated_crown(p['k']),
        'random': lambda: random_poset(p['n'], p['levels'], p['density'], spec.seed),
        'circulant': lambda: circulant(p['k'], p['levels'], p['density'], spec.seed),
    }
    poset = builders[spec.kind]()
    logger.info(f"generated {spec.kind} {p} with {poset.size} elements")
    return poset


def generate_frame(spec):
    """The frame a fixture is designed around, or None when the natural frame is meant."""
    if spec.kind == 'lock_cycle':
        M = spec['M']
        return tuple(tuple(range(level * M, (level + 1) * M)) for level in range(4))
    if spec.kind == 'relay':
        return tuple(tuple(range(3 * index, 3 * index + 3)) for index in range(len(RELAY_ORBITS)))
    if spec.kind == 'separated_crown':
        k = spec['k']
        return (tuple(range(2 * k)), tuple(range(2 * k, 3 * k)), tuple(range(3 * k, 5 * k)))
    return None


def spec(kind, seed=None, **parameters):
    return GeneratorSpec(kind=kind, parameters=parameters, seed=seed)
