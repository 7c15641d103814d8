from dataclasses import dataclass, field
from fractions import Fraction

from core.exact import at_most_power_of_two, describe_fraction


@dataclass(frozen=True)
class Derivation:
    """
    One step of a certificate: a rule tag, the inequality it establishes,
    the exact constants it used and the steps it rests on.
    """
    rule: str
    statement: str
    constants: dict = field(default_factory=dict)
    children: tuple = ()

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def leaf_constants(self):
        return {name: value for step in self.walk() if not step.children for name, value in step.constants.items()}


@dataclass(frozen=True)
class BoundCertificate:
    """The claim |Aut_D(U)| <= 2^(exponent * size) for the union ``target``."""
    target: str
    size: int
    exponent: Fraction
    derivation: Derivation

    @property
    def verdict(self):
        return f"|Aut_D(U)| <= 2^({describe_fraction(self.exponent)} * {self.size})"

    def check(self, order, size=None):
        """True iff order <= 2^(exponent * size) by exact integer comparison."""
        return at_most_power_of_two(order, self.exponent, self.size if size is None else size)


@dataclass(frozen=True)
class ResidualCell:
    size: int
    order: int


@dataclass(frozen=True)
class ResidualData:
    """
    What one prune-and-compact step feeds into the combination step: the
    order of the residual group, the orders of its restrictions to the
    cells D_t..D_m and the sizes of the collapsed antichains.
    """
    order: int
    cells: tuple
    antichain_sizes: tuple

    @property
    def trivial(self):
        return self.order == 1


@dataclass(frozen=True)
class UnionFactor:
    kind: str
    w: int
    elements: tuple
    factor: Fraction


@dataclass(frozen=True)
class LexsumReduction:
    """The poset T on class representatives and the bound |Aut(T)| * prod |class|!."""
    quotient: object
    representatives: tuple
    classes: tuple
    quotient_order: int
    bound: int


@dataclass(frozen=True)
class Width11Verdict:
    branch: str
    size: int
    width: int
    aut_order: int
    certified_lg_aut_upper: Fraction
    endo_lg_lower: Fraction
    end_count: int
    end_exact: bool
    ratio_conclusion: str
    derivation: Derivation
    ratio_bound: Fraction = None
    covered: int = 0
    factors: tuple = ()
