"""Exception hierarchy shared by all modules."""


class WeylGroupoidError(Exception):
    """Base class for every error raised by this package."""


class RankError(WeylGroupoidError, ValueError):
    """The pair (n, m) is not admissible for the requested operation."""


class InvalidInput(WeylGroupoidError, ValueError):
    """A partition, shuffle, weight or root is malformed for the rank."""


class NotACorner(WeylGroupoidError):
    """A box toggle was requested at a box that is not an inner/outer corner."""


class DomainError(WeylGroupoidError):
    """An operation was applied outside the set where it is defined."""


class NotSimple(WeylGroupoidError):
    """An odd reflection was requested at a root that is not simple."""


class NotIsotropic(WeylGroupoidError):
    """The root is not an isotropic (odd) root."""


class AmbiguousAction(WeylGroupoidError, AssertionError):
    """Two members of one equivalence class produced different results."""


class NoSupportingPath(WeylGroupoidError):
    """No path through the rectangle accounts for the zero pattern of a weight."""


class AmbiguousSupport(WeylGroupoidError):
    """Several paths account for the zero pattern and nothing breaks the tie."""


class SpecError(WeylGroupoidError, ValueError):
    """A block specification has bad sums or non-positive entries."""


class EmptyChain(WeylGroupoidError, ValueError):
    """A chain of adjacent Borel subalgebras must contain at least one step."""
