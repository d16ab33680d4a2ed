"""Exception types shared across the toolkit."""


class InvalidInput(ValueError):
    """Input data violates a documented precondition (shape, range, finiteness)."""


class ConfigError(ValueError):
    """Configuration value outside its legal domain."""


class NumericalError(ArithmeticError):
    """Non-finite values produced where finite results are required."""


class GeometryError(RuntimeError):
    """Scene constraint satisfaction failed (rejection sampling exhausted)."""


class IoError(OSError):
    """File or manifest could not be read or written."""
