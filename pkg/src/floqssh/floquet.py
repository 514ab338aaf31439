"""One-period evolution operators and quasienergies for the driven chain.

The drive is piecewise constant, so the time-ordered exponential
collapses to a product of segment exponentials with the later segment
on the left; the drive starts at t = 0 with segment 1.  Quasienergies
E_l are defined by U(T) |u_l> = exp(-i E_l T) |u_l> with the real part
folded into (-pi/T, pi/T], the edge value mapped to +pi/T.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .model import DriveProtocol, ModelParams, bloch_hamiltonian, realspace_hamiltonian

BLOCH = "bloch"
REAL = "real"


@dataclass(frozen=True)
class FloquetOperator:
    """One-period evolution operator with its construction metadata."""

    matrix: np.ndarray
    period: float
    space: str  # BLOCH or REAL
    k: float | None = None
    cells: int | None = None
    boundary: str | None = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class QuasienergySpectrum:
    """Complex quasienergies with matching unit-norm right eigenvectors."""

    energies: np.ndarray
    vectors: np.ndarray  # column n is the eigenvector of energies[n]
    period: float

    def __len__(self) -> int:
        return len(self.energies)


def bloch_evolution(k: float, params: ModelParams, drive: DriveProtocol) -> FloquetOperator:
    """U(k, T) = exp(-i H2 t2) exp(-i H1 t1) with H_j at the segment hopping."""
    H1 = bloch_hamiltonian(k, params.with_v(drive.v1))
    H2 = bloch_hamiltonian(k, params.with_v(drive.v2))
    U = linalg.expm(-1j * H2 * drive.t2) @ linalg.expm(-1j * H1 * drive.t1)
    return FloquetOperator(U, drive.period, BLOCH, k=float(k))


def realspace_evolution(
    params: ModelParams,
    drive: DriveProtocol,
    disorder: np.ndarray | None = None,
) -> FloquetOperator:
    """Real-space one-period operator, optionally with a static perturbation.

    The perturbation is added to both segment Hamiltonians (it carries no
    time dependence of its own).
    """
    H1 = realspace_hamiltonian(params, drive.v1)
    H2 = realspace_hamiltonian(params, drive.v2)
    if disorder is not None:
        disorder = np.asarray(disorder)
        if disorder.shape != H1.shape:
            raise ValueError(
                f"disorder shape {disorder.shape} does not match chain dimension {H1.shape}"
            )
        H1 = H1 + disorder
        H2 = H2 + disorder
    U = linalg.expm(-1j * H2 * drive.t2) @ linalg.expm(-1j * H1 * drive.t1)
    return FloquetOperator(U, drive.period, REAL, cells=params.cells, boundary=params.boundary)


def quasienergies(op: FloquetOperator) -> QuasienergySpectrum:
    """Eigen-decompose U(T) and map eigenvalues to quasienergies.

    E = (i/T) log(lambda) on the principal branch, then Re E folded so
    the boundary of the quasienergy zone is represented by +pi/T.
    Ordering is deterministic (by real part, then imaginary part).
    """
    T = op.period
    lam, vecs = linalg.eig_general(op.matrix, vectors=True)
    re = -np.angle(lam) / T
    im = np.log(np.abs(lam)) / T
    # np.angle returns pi for the negative real axis, mapping to -pi/T; fold it
    edge = re <= -np.pi / T
    re = np.where(edge, re + 2 * np.pi / T, re)
    energies = re + 1j * im
    order = np.lexsort((energies.imag, energies.real))
    energies = energies[order]
    vecs = vecs[:, order]
    vecs = vecs / np.linalg.norm(vecs, axis=0, keepdims=True)
    return QuasienergySpectrum(energies, vecs, T)


def effective_hamiltonian(op: FloquetOperator) -> np.ndarray:
    """H_eff = (i/T) log U(T) on the principal branch.

    Raises BranchCutError when an eigenvalue of U sits on the negative
    real axis, which happens exactly at pi/T gap closings; callers use
    det(U + I) based diagnostics there instead.
    """
    return (1j / op.period) * linalg.matrix_log_principal(op.matrix)
