"""Exception types shared across the package."""


class QuadratureConfigError(ValueError):
    """Quadrature exactness is below what the basis requires."""


class DegenerateBasisError(RuntimeError):
    """Null-space filtering removed every trial direction."""


class EvaluationDomainError(ValueError):
    """Basis evaluated where it is not defined (e.g. at an MFS source)."""
