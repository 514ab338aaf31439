"""State diagnostics: skin-effect strength, edge-mode selection, profiles.

Cell index x runs 1..L and the cell weight of a state is the summed
probability on both sublattice sites of the cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .floquet import QuasienergySpectrum


@dataclass(frozen=True)
class StateSet:
    """2L normalized right eigenvectors with their quasienergies."""

    energies: np.ndarray
    vectors: np.ndarray  # column n belongs to energies[n]
    cells: int

    @classmethod
    def from_spectrum(cls, spec: QuasienergySpectrum) -> "StateSet":
        return cls(spec.energies, spec.vectors, spec.vectors.shape[0] // 2)


@dataclass(frozen=True)
class EdgeMode:
    index: int
    energy: complex
    side: str  # "left" or "right"


def localization_profile(state: np.ndarray, cells: int) -> np.ndarray:
    """Per-cell weights of a state, normalized to sum to one."""
    psi = np.asarray(state).ravel()
    if len(psi) != 2 * cells:
        raise ValueError(f"state length {len(psi)} does not match 2L={2 * cells}")
    p = np.abs(psi) ** 2
    p = p[0::2] + p[1::2]
    total = p.sum()
    if total == 0:
        raise ValueError("zero state has no localization profile")
    return p / total


def _cell_weights(states: StateSet) -> np.ndarray:
    # (L, 2L) array: column n is the cell profile of state n
    p = np.abs(states.vectors) ** 2
    return p[0::2, :] + p[1::2, :]


def wipr(states: StateSet) -> float:
    """Weighted inverse participation ratio of a full state set.

    WIPR = (1/2L) sum_n sum_x p_{n,x}^2 (x - L/2) with x the unit-cell
    index (1..L) and p the cell weight.  Left-leaning skin states push
    it strongly negative; its magnitude collapsing toward zero signals
    the skin effect being destroyed.
    """
    norms = np.linalg.norm(states.vectors, axis=0)
    if np.any(np.abs(norms - 1.0) > 1e-6):
        worst = int(np.argmax(np.abs(norms - 1.0)))
        raise ValueError(f"state {worst} is not normalized (norm={norms[worst]:.8f})")
    L = states.cells
    cw = _cell_weights(states)
    x = np.arange(1, L + 1, dtype=float)
    return float(np.sum(cw**2 * (x - L / 2.0)[:, None]) / (2 * L))


def classify_edge_modes(
    states: StateSet,
    period: float,
    mode: str,
    energy_tol: float = 0.1,
    localization_min: float = 0.4,
    dedup_overlap: float = 0.99,
) -> list[EdgeMode]:
    """Select edge-pinned modes near quasienergy 0 ("zero") or pi/T ("pi").

    A state qualifies when its Floquet eigenvalue exp(-i E T) lies within
    ``energy_tol`` of +1 (zero) or -1 (pi) and its cell weight in the
    outer 10 percent of cells on either side is at least
    ``localization_min``.  Near-degenerate states of the strongly
    non-normal operator collapse onto one eigendirection; qualifying
    states whose eigenvectors overlap beyond ``dedup_overlap`` are
    therefore counted as a single physical mode (the representative with
    the smallest eigenvalue distance is kept).  An empty list is a valid
    result.
    """
    if mode not in ("zero", "pi"):
        raise ValueError(f"mode must be 'zero' or 'pi', got {mode!r}")
    target = 1.0 if mode == "zero" else -1.0
    lam = np.exp(-1j * states.energies * period)
    dist = np.abs(lam - target)
    candidates = [n for n in range(len(states.energies)) if dist[n] < energy_tol]
    L = states.cells
    n_edge = max(1, L // 10)
    kept = []
    for n in candidates:
        p = localization_profile(states.vectors[:, n], L)
        left, right = p[:n_edge].sum(), p[-n_edge:].sum()
        if left + right >= localization_min:
            kept.append((n, "left" if left >= right else "right"))
    # collapse parallel eigendirections, keeping the best-pinned member
    kept.sort(key=lambda item: dist[item[0]])
    selected: list[tuple[int, str]] = []
    for n, side in kept:
        v = states.vectors[:, n]
        if all(abs(np.vdot(states.vectors[:, m], v)) < dedup_overlap for m, _ in selected):
            selected.append((n, side))
    selected.sort(key=lambda item: item[0])
    return [EdgeMode(n, complex(states.energies[n]), side) for n, side in selected]
