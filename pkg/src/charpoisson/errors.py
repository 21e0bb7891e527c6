"""Exception types shared across the package."""


class CharPoissonError(Exception):
    """Base class for all library errors."""


class NotGoodPoint(CharPoissonError):
    """Raised when an operation requires a representation with trivial
    centralizer and the certificate says otherwise."""


class IllConditioned(CharPoissonError):
    """Raised when the duality pairing matrix is numerically singular
    (condition number above the hard cap); signals a bad mesh or a
    non-generic representation."""


class NotACocycle(CharPoissonError):
    """Raised when a cochain handed to the cup pairing is not closed
    within tolerance."""


class GoodnessLostUnderPerturbation(CharPoissonError):
    """Raised by finite-difference probes when a perturbed representation
    fails the goodness certificate."""
