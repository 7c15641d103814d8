from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class EndoFamily:
    """
    A constructed set of endomorphisms.

    ``verified`` is set when every member was checked order-preserving, or a
    sample was checked for families whose members share one local argument.
    """
    description: str
    count: int
    verified: bool
    fanned_levels: tuple = ()


@dataclass(frozen=True)
class RatioReport:
    aut_order: int
    end_count: int
    end_exact: bool
    lg_ratio_upper: Fraction
    family: str = ''

    @property
    def ratio(self):
        return Fraction(self.aut_order, self.end_count)
