"""Exception types shared by all modules."""


class DomainError(ValueError):
    """Input outside the domain where a formula or model is defined."""


class SupercriticalCouplingError(DomainError):
    """Coulomb coupling too strong for a real square root (Z alpha >= bound)."""


class NoTurningPointsError(DomainError):
    """The effective momentum has no classically allowed region."""


class BracketingError(DomainError):
    """No sign change found while scanning for a bound-state energy."""


class QuadratureError(RuntimeError):
    """Requested accuracy not reached within the evaluation budget."""
