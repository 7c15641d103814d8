class GroupError(ValueError):
    pass


class NotTransitiveError(GroupError):
    pass


class NotABlockError(GroupError):
    pass


class BlockContainmentError(GroupError):
    pass


class EnumerationCapError(GroupError):
    pass


class TableIntegrityError(RuntimeError):
    pass


class OrderMismatchError(RuntimeError):
    def __init__(self, recorded, computed):
        self.recorded = recorded
        self.computed = computed
        super().__init__(f"recorded group order {recorded} but Schreier-Sims gives {computed}")
