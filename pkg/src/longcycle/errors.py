"""Exception types shared across modules."""


class CapacityError(Exception):
    """An input exceeds the configured size cap of an exhaustive routine."""
