class PosetError(ValueError):
    pass


class PosetFormatError(PosetError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CycleDetectedError(PosetError):
    pass


class EmptySubsetError(PosetError):
    pass


class NotAnAntichainError(PosetError):
    pass


class PieceCountError(PosetError):
    pass
