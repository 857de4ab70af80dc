"""Exception hierarchy shared across the package.

InputError covers malformed or mathematically invalid input (CLI exit 1).
BudgetExhausted covers exhausted search or iteration budgets (CLI exit 2).
InternalCheckError flags a violated built-in theorem check; it is a bug
in this package or a genuinely inconsistent input, never a user error.
"""


class IsoschurError(Exception):
    pass


class InputError(IsoschurError):
    """Invalid input: bad file, non-acyclic quiver, vector of wrong length, ..."""


class NotExceptionalError(InputError):
    """A proposed sequence of classes is not exceptional."""


class NormalizeError(InputError):
    """A class that should be (anti)positive has mixed signs."""


class BudgetExhausted(IsoschurError):
    """An iteration or search budget ran out before reaching the goal."""


class SpectralCertificateError(IsoschurError):
    """Position could not be certified: spectral data outside the supported
    (rational plus one quadratic factor) shape, or ambiguous signs."""


class InternalCheckError(IsoschurError):
    """A built-in cross-check (redundant theorem verification) failed."""
