class CostGuardError(RuntimeError):
    """Raised when a computation would exceed the desk-scale limits."""


# Desk-scale limits shared by the enumeration routines.
MAX_WEYL_ORDER = 10_000
MAX_ORBIT_SIZE = 1_000_000
MAX_DOMINANT_WEIGHTS = 20_000
