"""Exception hierarchy shared by all cellalg modules."""


class CellAlgError(Exception):
    """Base class for every error raised by this package."""


# --- linear algebra ---------------------------------------------------------

class NoSolution(CellAlgError):
    """The linear system a*x = b is inconsistent."""


class Singular(CellAlgError):
    """A square matrix has rank < size; signals a degenerate bilinear form."""


# --- algebra construction ---------------------------------------------------

class NonAssociative(CellAlgError):
    """(x_i x_j) x_k != x_i (x_j x_k) for some basis triple."""


class NoIdentity(CellAlgError):
    """No two-sided identity element solves e*x_i = x_i*e = x_i."""


class NotGraded(CellAlgError):
    """A structure constant violates deg(x_k) = deg(x_i) + deg(x_j)."""


class BadInvolution(CellAlgError):
    """The declared involution is not a degree-preserving anti-automorphism."""


class ZeroTrace(CellAlgError):
    """The trace form vanishes identically."""


class NotCentral(CellAlgError):
    """A twist element does not lie in the center."""


class Degenerate(CellAlgError):
    """A trace form has a singular Gram matrix."""


class NonHomogeneousTrace(CellAlgError):
    """An operation requires a homogeneous trace but got a mixed one."""


# --- cellular structure and duality -----------------------------------------

class InconsistentPhi(CellAlgError):
    """Gram coefficient extraction depends on the choice of (S, V):
    the cell datum is invalid."""


class NotScalarMultiple(CellAlgError):
    """G(l)*G'(l) is not a scalar matrix, or the idempotency cross-check
    disagrees; signals broken preconditions upstream."""


class ConsistencyError(CellAlgError):
    """A mathematically guaranteed postcondition failed; indicates an
    implementation bug or corrupted input."""


class InconsistentVerdicts(CellAlgError):
    """The semisimplicity criteria disagree where theory forces agreement."""


# --- builders ----------------------------------------------------------------

class BadCharacteristic(CellAlgError):
    """The field characteristic violates a builder's constraint."""


class MixedFields(CellAlgError):
    """Direct-sum parts live over different fields."""


class MixedTraceDegrees(CellAlgError):
    """Direct-sum parts carry traces of different homogeneity degrees."""


class InfiniteDimensional(CellAlgError):
    """Path enumeration for a quiver quotient exceeded its bound."""


class InhomogeneousRelation(CellAlgError):
    """A quiver relation mixes paths of different degrees or endpoints."""


# --- verifier and I/O ---------------------------------------------------------

class UnknownClaim(CellAlgError):
    """A claim id is not present in the registry."""


class ValidationError(CellAlgError):
    """A presentation document violates an invariant.

    Carries the name of the first violated axiom and a location witness.
    """

    def __init__(self, axiom: str, location: str, message: str):
        self.axiom = axiom
        self.location = location
        super().__init__(f"{axiom} at {location}: {message}")
