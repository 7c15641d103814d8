from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np

from .exceptions import CycleDetectedError, PosetError


@dataclass(frozen=True, eq=False)
class Poset:
    """
    A finite strict order on elements 0..n-1.

    ``lt[i, j]`` is True iff i < j. The matrix is copied, checked for
    irreflexivity and transitivity, and frozen read-only.
    """
    lt: np.ndarray
    labels: Optional[tuple] = None

    def __post_init__(self):
        lt = np.array(self.lt, dtype=bool, copy=True)
        if lt.ndim != 2 or lt.shape[0] != lt.shape[1]:
            raise PosetError(f"relation must be square, got shape {lt.shape}")
        if lt.shape[0] < 1:
            raise PosetError("a poset needs at least one element")
        if lt.diagonal().any():
            element = int(np.flatnonzero(lt.diagonal())[0])
            raise CycleDetectedError(f"cycle detected through element {element}")
        as_int = lt.astype(np.int64)
        if ((as_int @ as_int > 0) & ~lt).any():
            raise PosetError("relation is not transitive")
        lt.setflags(write=False)
        object.__setattr__(self, 'lt', lt)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != lt.shape[0]:
                raise PosetError(f"expected {lt.shape[0]} labels, got {len(labels)}")
            object.__setattr__(self, 'labels', labels)

    @classmethod
    def antichain(cls, n):
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def chain(cls, n):
        return cls(np.triu(np.ones((n, n), dtype=bool), k=1))

    @property
    def size(self):
        return self.lt.shape[0]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.lt, other.lt)

    def __hash__(self):
        return hash((self.size, self.lt.tobytes(), self.labels))

    def __repr__(self):
        return f"Poset(size={self.size}, comparabilities={int(self.lt.sum())})"

    def label(self, element):
        return self.labels[element] if self.labels else str(element)

    def less(self, x, y):
        return bool(self.lt[x, y])

    def comparable(self, x, y):
        return bool(self.lt[x, y] or self.lt[y, x])

    @cached_property
    def up_masks(self):
        """Strict up-sets as integer bitmasks."""
        return tuple(_row_mask(row) for row in self.lt)

    @cached_property
    def down_masks(self):
        """Strict down-sets as integer bitmasks."""
        return tuple(_row_mask(column) for column in self.lt.T)

    @cached_property
    def closed_up_masks(self):
        return tuple(mask | (1 << x) for x, mask in enumerate(self.up_masks))

    @cached_property
    def linear_extension(self):
        # |down(y)| < |down(x)| whenever y < x
        down_sizes = self.lt.sum(axis=0)
        return tuple(int(x) for x in np.argsort(down_sizes, kind='stable'))

    @cached_property
    def ranks(self):
        ranks = [0] * self.size
        for x in self.linear_extension:
            below = np.flatnonzero(self.lt[:, x])
            if below.size:
                ranks[x] = max(ranks[y] for y in below) + 1
        return tuple(ranks)

    @cached_property
    def height(self):
        return max(self.ranks)

    @cached_property
    def cover_matrix(self):
        as_int = self.lt.astype(np.int64)
        covers = self.lt & ~(as_int @ as_int > 0)
        covers.setflags(write=False)
        return covers

    @cached_property
    def covers(self):
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix)))

    @cached_property
    def lower_covers(self):
        return tuple(tuple(int(y) for y in np.flatnonzero(self.cover_matrix[:, x]))
                     for x in range(self.size))

    @cached_property
    def upper_covers(self):
        return tuple(tuple(int(y) for y in np.flatnonzero(self.cover_matrix[x, :]))
                     for x in range(self.size))

    def rank_level(self, rank):
        return tuple(x for x, r in enumerate(self.ranks) if r == rank)


@dataclass(frozen=True)
class RankProfile:
    ranks: tuple
    height: int
    width: int


@dataclass(frozen=True)
class SubsetPredicateReport:
    subset: frozenset
    verdict: bool
    witness: Optional[int] = None

    def __post_init__(self):
        if self.verdict == (self.witness is not None):
            raise PosetError("witness must be present exactly when the verdict is false")

    def __bool__(self):
        return self.verdict


@dataclass(frozen=True)
class AutonomousCell:
    members: tuple
    representative: int

    @property
    def size(self):
        return len(self.members)

    @property
    def nontrivial(self):
        return len(self.members) > 1


@dataclass(frozen=True)
class PosetDocument:
    poset: Poset
    frame: Optional[tuple] = None
    comments: tuple = field(default=())


def _row_mask(row):
    mask = 0
    for index in np.flatnonzero(row):
        mask |= 1 << int(index)
    return mask


def mask_of(elements):
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def elements_of(mask):
    elements = []
    index = 0
    while mask:
        if mask & 1:
            elements.append(index)
        mask >>= 1
        index += 1
    return elements
