"""Non-Hermitian SSH chain with asymmetric intra-cell hopping.

The chain has L unit cells of two sites (A, B).  Intra-cell hopping is
asymmetric, t_left = w + gamma/2 on A<-B and t_right = w - gamma/2 on
B<-A, which drives the skin effect; inter-cell hopping v is symmetric.
Site ordering is fixed globally as (a1, b1, a2, b2, ..., aL, bL); every
module in the package inherits this convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigError

OPEN = "open"
PERIODIC = "periodic"

ALL_PAIRS = "all_pairs"
NEAREST_NEIGHBOR = "nearest_neighbor"


@dataclass(frozen=True)
class ModelParams:
    """Static chain parameters.

    w, gamma, v are the mean intra-cell hopping, the hopping asymmetry
    and the inter-cell hopping.  ``cells`` is the number of unit cells L;
    the matrix dimension is 2L.
    """

    w: float
    gamma: float
    v: float
    cells: int
    boundary: str = OPEN

    def __post_init__(self):
        if self.cells < 1:
            raise ConfigError(f"model.cells must be >= 1, got {self.cells}")
        if self.boundary not in (OPEN, PERIODIC):
            raise ConfigError(f"model.boundary must be 'open' or 'periodic', got {self.boundary!r}")
        for name in ("w", "gamma", "v"):
            if not np.isfinite(getattr(self, name)):
                raise ConfigError(f"model.{name} must be finite")

    @property
    def t_left(self) -> float:
        return self.w + self.gamma / 2.0

    @property
    def t_right(self) -> float:
        return self.w - self.gamma / 2.0

    def with_v(self, v: float) -> "ModelParams":
        return replace(self, v=v)


@dataclass(frozen=True)
class DriveProtocol:
    """Two-segment piecewise-constant drive of the inter-cell hopping.

    Within every period the inter-cell hopping is f for a time t1 and
    then q*f for a time t2.  Zero-length segments are allowed (used by
    composition identities) but the total period must be positive.
    """

    f: float
    q: float
    t1: float
    t2: float

    def __post_init__(self):
        if self.t1 < 0 or self.t2 < 0:
            raise ConfigError("drive segment durations must be nonnegative")
        if self.t1 + self.t2 <= 0:
            raise ConfigError("drive period must be positive")

    @property
    def period(self) -> float:
        return self.t1 + self.t2

    @property
    def v1(self) -> float:
        return self.f

    @property
    def v2(self) -> float:
        return self.q * self.f

    def segment_v(self, t: float) -> float:
        """Inter-cell hopping active at time t (periodic in the period)."""
        return self.v1 if (t % self.period) < self.t1 else self.v2


@dataclass(frozen=True)
class DisorderSpec:
    """Chiral-symmetric hopping disorder.

    The perturbation couples A sites to B sites only, with amplitudes
    drawn i.i.d. uniform on [-0.5, 0.5] scaled by ``strength``.  The
    stream is keyed by (seed, realization_index) so realizations are
    reproducible and order-independent.  ``range`` selects dense A-B
    coupling (every pair of cells) or only the clean-bond pairs.
    """

    strength: float
    seed: int
    realization_index: int = 0
    range: str = ALL_PAIRS

    def __post_init__(self):
        if self.strength < 0:
            raise ConfigError("disorder.strength must be nonnegative")
        if self.realization_index < 0:
            raise ConfigError("disorder.realization_index must be nonnegative")
        if self.range not in (ALL_PAIRS, NEAREST_NEIGHBOR):
            raise ConfigError(f"disorder.range must be '{ALL_PAIRS}' or '{NEAREST_NEIGHBOR}'")


def chiral_operator(cells: int) -> np.ndarray:
    """Diagonal of the real-space chiral operator: +1 on A sites, -1 on B."""
    signs = np.empty(2 * cells)
    signs[0::2] = 1.0
    signs[1::2] = -1.0
    return signs


def bloch_hamiltonian(k: float, params: ModelParams) -> np.ndarray:
    """2x2 momentum-space Hamiltonian at momentum k.

    Off-diagonal entries are t_left + v e^{-ik} (A row) and
    t_right + v e^{+ik} (B row); the diagonal is exactly zero, which is
    the sublattice symmetry sigma_z H sigma_z = -H.
    """
    dx = params.w + params.v * np.cos(k)
    dy = params.v * np.sin(k)
    g2 = params.gamma / 2.0
    return np.array(
        [[0.0, dx - 1j * dy + g2], [dx + 1j * dy - g2, 0.0]],
        dtype=complex,
    )


def realspace_hamiltonian(params: ModelParams, v_value: float | None = None) -> np.ndarray:
    """Dense 2L x 2L chain Hamiltonian.

    ``v_value`` overrides the static inter-cell hopping (the drive swaps
    it between segments).  Periodic boundary adds the wrap bond between
    b_L and a_1.
    """
    v = params.v if v_value is None else v_value
    L = params.cells
    H = np.zeros((2 * L, 2 * L), dtype=complex)
    tl, tr = params.t_left, params.t_right
    for l in range(L):
        a, b = 2 * l, 2 * l + 1
        H[a, b] = tl
        H[b, a] = tr
        if l > 0:
            H[a, b - 2] = v
            H[b - 2, a] = v
    if params.boundary == PERIODIC and L > 1:
        H[0, 2 * L - 1] = v
        H[2 * L - 1, 0] = v
    return H


def sample_disorder(spec: DisorderSpec, cells: int) -> np.ndarray:
    """Draw one chiral disorder realization as a 2L x 2L matrix.

    Only A-B blocks are populated, so the matrix anticommutes with the
    chiral operator by construction (structural zeros on A-A and B-B).
    The full dense amplitude tables are always drawn, then masked for
    the nearest-neighbor range; this keeps the random stream layout
    independent of the range choice.
    """
    L = cells
    rng = np.random.default_rng(np.random.SeedSequence([spec.seed, spec.realization_index]))
    alpha = rng.uniform(-0.5, 0.5, size=(L, L))  # alpha[i, j] couples a_i <- b_j
    beta = rng.uniform(-0.5, 0.5, size=(L, L))  # beta[j, i] couples b_j <- a_i
    if spec.range == NEAREST_NEIGHBOR:
        # keep only amplitudes on clean bonds: a_i<->b_i and a_i<->b_{i-1}
        mask = np.zeros((L, L), dtype=bool)
        idx = np.arange(L)
        mask[idx, idx] = True
        mask[idx[1:], idx[:-1]] = True
        alpha = np.where(mask, alpha, 0.0)
        beta = np.where(mask.T, beta, 0.0)
    dH = np.zeros((2 * L, 2 * L), dtype=complex)
    if spec.strength > 0:
        dH[0::2, 1::2] = spec.strength * alpha
        dH[1::2, 0::2] = spec.strength * beta
    return dH


def chiral_conjugation_check(H: np.ndarray, signs: np.ndarray) -> tuple[bool, float]:
    """Residual of the anticommutation Gamma H Gamma = -H.

    Returns (holds, residual) where residual is the max-norm of
    Gamma H Gamma + H and holds means residual < 1e-10.
    """
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError("H must be square")
    if H.shape[0] != signs.shape[0]:
        raise ValueError(f"dimension mismatch: H is {H.shape[0]}, chiral operator is {signs.shape[0]}")
    residual = float(np.max(np.abs(signs[:, None] * H * signs[None, :] + H)))
    return residual < 1e-10, residual
