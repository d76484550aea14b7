"""Exception hierarchy shared by the decomposition and CLI layers."""


class NonUnitaryError(ValueError):
    """Input matrix fails the unitarity check."""


class DecompositionError(RuntimeError):
    """A factorization step could not certify its own output."""


class PairingError(DecompositionError):
    """Eigenvalues of a Cartan square could not be matched into conjugate pairs."""


class StructureError(DecompositionError):
    """A factor that must lie in a fixed subgroup does not, within tolerance."""


class BranchError(DecompositionError):
    """No admissible square-root branch produced a valid factor."""


class KroneckerError(DecompositionError):
    """A two-qubit factor is not a tensor product within tolerance."""
