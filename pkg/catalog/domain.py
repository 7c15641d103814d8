from dataclasses import dataclass, field
from typing import Optional

from .exceptions import GeneratorError

# kind -> {parameter: default}; None marks a required parameter
KIND_PARAMETERS = {
    'antichain': {'n': None},
    'chain': {'n': None},
    's_w': {'w': None},
    'w_c2': {'w': None},
    'crown': {'k': None},
    'crown_blown_up': {'k': None, 'm': 2},
    'lock_cycle': {'M': None, 'shift': 0},
    'relay': {},
    'separated_crown': {'k': None},
    'random': {'n': None, 'levels': 3, 'density': 40},
    'circulant': {'k': None, 'levels': 2, 'density': 40},
}

SEEDED_KINDS = ('random', 'circulant')

# alternative kind names accepted on input
KIND_ALIASES = {
    'no_d_endos': 'lock_cycle',
    'transmit_drive': 'relay',
}


@dataclass(frozen=True)
class GeneratorSpec:
    """
    A named poset family with integer parameters.

    ``density`` is a percentage. Seeded kinds need a seed; it is ignored for
    the deterministic ones.
    """
    kind: str
    parameters: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', KIND_ALIASES.get(self.kind, self.kind))
        if self.kind not in KIND_PARAMETERS:
            raise GeneratorError(f"unknown generator kind {self.kind!r}")
        expected = KIND_PARAMETERS[self.kind]
        unknown = set(self.parameters) - set(expected)
        if unknown:
            raise GeneratorError(f"{self.kind} does not take {', '.join(sorted(unknown))}")
        resolved = {}
        for name, default in expected.items():
            value = self.parameters.get(name, default)
            if value is None:
                raise GeneratorError(f"{self.kind} requires parameter {name}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise GeneratorError(f"parameter {name} must be an integer, got {value!r}")
            resolved[name] = value
        object.__setattr__(self, 'parameters', resolved)
        if self.kind in SEEDED_KINDS and self.seed is None:
            raise GeneratorError(f"{self.kind} requires a seed")
        if self.seed is not None and not 0 <= self.seed < 2 ** 64:
            raise GeneratorError(f"seed must be a 64-bit unsigned value, got {self.seed}")

    @classmethod
    def from_arguments(cls, kind, assignments=(), seed=None):
        """Builds a spec from ``name=value`` strings."""
        parameters = {}
        for assignment in assignments:
            name, separator, value = assignment.partition('=')
            if not separator:
                raise GeneratorError(f"expected name=value, got {assignment!r}")
            try:
                parameters[name.strip()] = int(value)
            except ValueError:
                raise GeneratorError(f"parameter {name.strip()} must be an integer, got {value!r}")
        return cls(kind=kind, parameters=parameters, seed=seed)

    def __getitem__(self, name):
        return self.parameters[name]
