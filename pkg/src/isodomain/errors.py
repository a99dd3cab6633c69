class InvalidArgument(ValueError):
    """An input lies outside the documented domain of an operation."""


class SingularityError(InvalidArgument):
    """A kernel integral was requested over a set where it diverges."""
