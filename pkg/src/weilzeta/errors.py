"""Exception types shared across the package."""


class WeilzetaError(Exception):
    """Base class for all package errors."""


class IncompatibleMonomials(WeilzetaError):
    """Sum of closed-form reals with different transcendental parts."""


class NotRational(WeilzetaError):
    """A closed-form real that was expected to be rational is not."""


class PoleAtPoint(WeilzetaError):
    """Evaluation of a rational function at a pole."""


class PolePersists(WeilzetaError):
    """A regularized limit that is still infinite."""


class PoleOfL(WeilzetaError):
    """L(1, chi) requested for a principal character."""


class UnsupportedParity(WeilzetaError):
    """Special L-value requested at an argument of the wrong parity."""


class SingularMatrix(WeilzetaError):
    """Matrix operation that requires a nonzero determinant."""


class TooLarge(WeilzetaError):
    """An enumeration guard tripped."""


class NoRecurrenceFound(WeilzetaError):
    """Solution counts did not fit a short linear recurrence."""


class InvalidLattice(WeilzetaError):
    """Gram matrix input that is not an even nondegenerate lattice."""


class ParityError(WeilzetaError):
    """Weight incompatible with the signature (no such modular forms)."""


class NotDefinite(WeilzetaError):
    """Theta enumeration requires a negative definite Gram matrix."""


class NotSquarefree(WeilzetaError):
    """The one-dimensional weight-1/2 closed forms need squarefree m."""
