class CountingError(ValueError):
    pass


class CapExceededError(CountingError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{size} elements exceed the exact counting cap of {cap}")


class InvalidFrameError(CountingError):
    pass
