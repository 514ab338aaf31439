"""Dense complex linear-algebra kernels used throughout the package.

Matrices are plain complex128 ndarrays.  All routines are correctness
first: system sizes stay below a few hundred, so dense LAPACK-backed
algorithms are the right tool.  The matrix exponential, SVD, general
eigensolver and determinant delegate to well-tested library kernels
behind the interfaces fixed here; the principal matrix logarithm and
phase unwinding are implemented locally because their branch handling
is part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import BranchCutError, ConvergenceError, GapClosedError

__all__ = [
    "SingularTriplet",
    "PhaseUnwindResult",
    "expm",
    "svd",
    "svd_factors",
    "eig_general",
    "det",
    "matrix_log_principal",
    "phase_unwind",
]


@dataclass(frozen=True)
class SingularTriplet:
    """One singular value with its unit-norm left/right singular vectors.

    Satisfies A @ v == s * u for the decomposed matrix A.
    """

    s: float
    u: np.ndarray
    v: np.ndarray


def _require_square(A: np.ndarray, op: str) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"{op} requires a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError(f"{op} requires finite entries")
    return A


def expm(A: np.ndarray) -> np.ndarray:
    """Matrix exponential via scaling-and-squaring with a Pade core."""
    A = _require_square(A, "expm")
    return scipy.linalg.expm(A)


def svd_factors(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full SVD factors (U, s, Vh) with singular values descending."""
    A = np.asarray(A, dtype=complex)
    if not np.all(np.isfinite(A)):
        raise ValueError("svd requires finite entries")
    return np.linalg.svd(A)


def svd(A: np.ndarray) -> list[SingularTriplet]:
    """Singular triplets of A, ordered by descending singular value."""
    U, s, Vh = svd_factors(A)
    return [SingularTriplet(float(s[i]), U[:, i].copy(), Vh[i].conj().copy()) for i in range(len(s))]


def eig_general(A: np.ndarray, vectors: bool = False):
    """Eigenvalues (and optionally right eigenvectors) of a general matrix.

    Convergence failure of the underlying QR iteration surfaces as a
    ConvergenceError; it is never swallowed.
    """
    A = _require_square(A, "eig_general")
    try:
        if vectors:
            lam, V = np.linalg.eig(A)
            return lam, V
        return np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise ConvergenceError(f"eigensolver did not converge: {exc}") from exc


def det(A: np.ndarray) -> complex:
    """Determinant via LU factorization."""
    A = _require_square(A, "det")
    return complex(np.linalg.det(A))


def matrix_log_principal(A: np.ndarray, branch_tol: float = 1e-10) -> np.ndarray:
    """Principal matrix logarithm through the eigendecomposition.

    Eigenvalue phases are taken in (-pi, pi].  An eigenvalue lying
    within ``branch_tol`` of the branch cut (the negative real axis,
    zero included) raises BranchCutError; callers hitting the exp(-i E T)
    = -1 case are expected to switch to a determinant-based route.
    """
    A = _require_square(A, "matrix_log_principal")
    lam, V = eig_general(A, vectors=True)
    # distance to the cut (-inf, 0]: |Im| left of the origin, |lam| right of it
    dist_to_cut = np.where(lam.real <= 0, np.abs(lam.imag), np.abs(lam))
    on_cut = dist_to_cut <= branch_tol
    if np.any(on_cut):
        bad = lam[on_cut][0]
        raise BranchCutError(
            f"eigenvalue {bad} within {branch_tol:g} of the log branch cut"
        )
    logl = np.log(np.abs(lam)) + 1j * np.angle(lam)
    # V @ diag(logl) @ V^{-1} without forming the inverse explicitly
    return np.linalg.solve(V.T, (V * logl).T).T


@dataclass(frozen=True)
class PhaseUnwindResult:
    total_phase: float
    winding: int
    max_step: float


def phase_unwind(values, closed: bool = True) -> PhaseUnwindResult:
    """Accumulate principal-branch phase increments along a sequence.

    Increments are folded into (-pi, pi]; the caller must supply a grid
    fine enough that no true increment reaches pi (``max_step`` is
    reported so grid adequacy can be verified).  A zero entry means the
    tracked determinant vanished, i.e. a gap closed: that is raised, not
    returned.  With ``closed`` the last-to-first increment is included
    and winding = round(total/2pi) counts loops around the origin.
    """
    vals = np.asarray(values, dtype=complex)
    if vals.ndim != 1 or len(vals) == 0:
        raise ValueError("phase_unwind expects a nonempty 1d sequence")
    mags = np.abs(vals)
    if np.any(mags == 0.0):
        idx = int(np.argmin(mags))
        raise GapClosedError(f"zero value in sequence at position {idx}", where=idx)
    ang = np.angle(vals)
    if closed:
        steps = np.diff(np.concatenate([ang, ang[:1]]))
    else:
        steps = np.diff(ang)
    # fold each raw increment into (-pi, pi]
    steps = (steps + np.pi) % (2 * np.pi) - np.pi
    total = float(np.sum(steps))
    max_step = float(np.max(np.abs(steps))) if len(steps) else 0.0
    return PhaseUnwindResult(total, int(round(total / (2 * np.pi))), max_step)
