import threading
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup as SymPermutationGroup

from .exceptions import EnumerationCapError, GroupError, OrderMismatchError


@dataclass(frozen=True)
class Permutation:
    """A bijection of 0..d-1 stored as its image array."""
    image: tuple

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(len(image))):
            raise GroupError(f"{list(image)} is not a permutation")
        object.__setattr__(self, 'image', image)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        image = list(range(degree))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                image[point] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(image))

    @classmethod
    def from_sympy(cls, perm, degree):
        image = list(perm.array_form)
        image.extend(range(len(image), degree))
        return cls(tuple(image))

    @property
    def degree(self):
        return len(self.image)

    def __call__(self, point):
        return self.image[point]

    def __mul__(self, other):
        """Apply self first, then other."""
        return Permutation(tuple(other.image[x] for x in self.image))

    def inverse(self):
        inverse = [0] * self.degree
        for x, y in enumerate(self.image):
            inverse[y] = x
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.image))

    def restricted(self, points):
        """Action on an invariant point list, relabeled to 0..len(points)-1."""
        position = {x: i for i, x in enumerate(points)}
        try:
            return Permutation(tuple(position[self.image[x]] for x in points))
        except KeyError:
            raise GroupError(f"points {list(points)} are not invariant under {self}")

    def to_sympy(self):
        return SymPermutation(list(self.image))

    def cycles(self):
        seen = set()
        cycles = []
        for start in range(self.degree):
            if start in seen or self.image[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.image[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.image[x]
            cycles.append(tuple(cycle))
        return cycles

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in cycle) + ")" for cycle in cycles)


class PermGroup:
    """
    Permutation group on 0..degree-1 given by generators.

    The order is computed once, lazily, by the sympy Schreier-Sims
    implementation unless a search already established it, in which case
    ``check_order`` compares the two. Explicit closure is available through
    ``elements``.
    """

    def __init__(self, degree, generators=(), order=None):
        if degree < 1:
            raise GroupError(f"degree must be positive, got {degree}")
        gens = []
        for generator in generators:
            if not isinstance(generator, Permutation):
                generator = Permutation(tuple(generator))
            if generator.degree != degree:
                raise GroupError(f"generator {generator} has degree {generator.degree}, expected {degree}")
            if not generator.is_identity() and generator not in gens:
                gens.append(generator)
        self.degree = degree
        self.generators = tuple(gens)
        self._order = None if order is None else int(order)
        self._sympy_group = None
        self._lock = threading.Lock()

    def __getstate__(self):
        return {'degree': self.degree, 'generators': self.generators, '_order': self._order}

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._sympy_group = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    def sympy_group(self):
        with self._lock:
            if self._sympy_group is None:
                perms = [g.to_sympy() for g in self.generators] or [SymPermutation(list(range(self.degree)))]
                self._sympy_group = SymPermutationGroup(perms)
            return self._sympy_group

    def order(self):
        if self._order is None:
            group = self.sympy_group()
            with self._lock:
                if self._order is None:
                    self._order = int(group.order())
        return self._order

    def check_order(self):
        """Compares an order recorded by a search against sympy's Schreier-Sims."""
        computed = int(self.sympy_group().order())
        if self._order is not None and self._order != computed:
            raise OrderMismatchError(self._order, computed)
        return computed

    def orbits(self):
        if not self.generators:
            return [(x,) for x in range(self.degree)]
        orbits = [tuple(sorted(orbit)) for orbit in self.sympy_group().orbits()]
        return sorted(orbits)

    def is_transitive(self):
        return len(self.orbits()) == 1

    def elements(self, cap=10**6):
        """All group elements by breadth-first closure under the generators."""
        identity = Permutation.identity(self.degree)
        seen = {identity}
        queue = deque([identity])
        while queue:
            current = queue.popleft()
            for generator in self.generators:
                product = current * generator
                if product not in seen:
                    seen.add(product)
                    if len(seen) > cap:
                        raise EnumerationCapError(f"group has more than {cap} elements")
                    queue.append(product)
        return seen

    def contains(self, perm):
        return self.sympy_group().contains(perm.to_sympy())


@dataclass(frozen=True)
class BlockSystem:
    cells: tuple

    @property
    def cell_size(self):
        return len(self.cells[0])

    def cell_of(self, point):
        for index, cell in enumerate(self.cells):
            if point in cell:
                return index
        raise GroupError(f"point {point} not covered by the block system")


@dataclass(frozen=True)
class NestingLevel:
    degree: int
    group_order: int
    proper: bool
    bound_constant: Fraction


@dataclass(frozen=True)
class PrimitiveNesting:
    blocks: tuple
    levels: tuple

    @property
    def domain_size(self):
        return len(self.blocks[-1])

    @property
    def proper(self):
        return all(level.proper for level in self.levels)


@dataclass(frozen=True)
class NestingClassification:
    proper: bool
    factorial_indices: tuple


@dataclass(frozen=True)
class ExceptionalEntry:
    degree: int
    name: str
    order: int
    lg_over_n_bound: Fraction
    transitivity_note: str
