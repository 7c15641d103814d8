class DeconstructionError(ValueError):
    pass


class CutvertexError(DeconstructionError):
    pass


class GraphNotConnectedError(DeconstructionError):
    pass


class NotAnOrbitUnionError(DeconstructionError):
    pass


class DeconstructionInvariantError(RuntimeError):
    """A property every prune-and-compact step must have failed on a concrete input."""
    pass
