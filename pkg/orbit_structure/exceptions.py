class FrameError(ValueError):
    pass


class SameCellError(FrameError):
    pass


class NotTightError(FrameError):
    pass
