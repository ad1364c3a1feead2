class LatticeGuardExceeded(Exception):
    """An enumeration produced more distinct subgroups than the guard allows."""

    def __init__(self, partial_count, limit, what="subgroups"):
        super().__init__(f"more than {limit} {what} (stopped at {partial_count})")
        self.partial_count = partial_count
        self.limit = limit
