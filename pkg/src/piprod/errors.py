class DomainError(ValueError):
    """Argument outside the domain where an operation is defined."""


class NumericalFailure(ArithmeticError):
    """A numerical procedure could not deliver its stated accuracy."""
