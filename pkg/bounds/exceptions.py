class BoundsError(ValueError):
    pass


class ImproperNestingError(BoundsError):
    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class HypothesisViolation(BoundsError):
    """One numbered hypothesis of the combination step does not hold."""
    def __init__(self, clause, message):
        super().__init__(f"hypothesis {clause}: {message}")
        self.clause = clause


class PrimitivityError(BoundsError):
    pass


class WidthExceededError(BoundsError):
    pass


class CertificateRefused(BoundsError):
    """
    No certificate can be issued for this union. ``advisory`` holds lock
    cycle reports when equal cells carrying alternating groups were the
    obstacle.
    """
    def __init__(self, reason, cell=None, level=None, advisory=()):
        super().__init__(reason)
        self.reason = reason
        self.cell = cell
        self.level = level
        self.advisory = tuple(advisory)


class SoundnessViolation(RuntimeError):
    """An issued bound is below an exactly computed value."""
    pass
