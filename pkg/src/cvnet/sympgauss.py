"""Symplectic and Gaussian-state algebra on covariance matrices.

Conventions: quadrature ordering (x1, y1, x2, y2, ..., xn, yn), hbar = 1,
vacuum variance 1/2 per quadrature.  Mode indices are 0-based.  All
operations are pure functions returning new values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    IndexOutOfRange,
    NonPositiveDefinite,
    NonPositiveInput,
    PairingFailure,
    SingularMeasurement,
)

# Default tolerances; every function taking one accepts an override.
SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-10
POSDEF_TOL = 1e-12
PAIRING_RTOL = 1e-8
PINV_THRESHOLD = 1e-12
SYMPLECTIC_CHECK_TOL = 1e-12


def symplectic_form(n_modes: int) -> np.ndarray:
    """Return Omega, the direct sum of n_modes blocks [[0, 1], [-1, 0]]."""
    if n_modes < 1:
        raise DomainError(f"n_modes must be >= 1, got {n_modes}")
    block = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n_modes), block)


class CovMatrix:
    """Real symmetric 2n x 2n covariance matrix.

    Symmetry is enforced at construction (tolerance ``symmetry_tol``) and the
    stored data is exactly symmetrized.  ``physicality_checked`` records
    whether :func:`is_physical` has been run on this instance.
    """

    __slots__ = ("data", "n_modes", "physicality_checked")

    def __init__(self, data, *, symmetry_tol: float = SYMMETRY_TOL):
        arr = np.array(data, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
            raise DomainError(f"covariance matrix must be square 2n x 2n, got {arr.shape}")
        asym = float(np.abs(arr - arr.T).max(initial=0.0))
        scale = max(1.0, float(np.abs(arr).max(initial=0.0)))
        if asym > symmetry_tol * scale:
            raise DomainError(f"matrix asymmetry {asym:.3e} exceeds tolerance {symmetry_tol:.1e}")
        self.data = 0.5 * (arr + arr.T)
        self.n_modes = arr.shape[0] // 2
        self.physicality_checked = False

    @classmethod
    def vacuum(cls, n_modes: int) -> "CovMatrix":
        return cls(0.5 * np.eye(2 * n_modes))

    def copy(self) -> "CovMatrix":
        return CovMatrix(self.data)

    def __repr__(self) -> str:
        return f"CovMatrix(n_modes={self.n_modes})"


@dataclass(frozen=True)
class Bipartition:
    """Split of the modes {0..n-1} into two non-empty disjoint sides."""

    side_a: frozenset[int]
    n_modes: int
    side_b: frozenset[int] = field(init=False)

    def __post_init__(self):
        side_a = frozenset(self.side_a)
        all_modes = frozenset(range(self.n_modes))
        if not side_a or not side_a <= all_modes:
            raise DomainError(f"side_a {sorted(side_a)} invalid for {self.n_modes} modes")
        side_b = all_modes - side_a
        if not side_b:
            raise DomainError("side_b must be non-empty")
        object.__setattr__(self, "side_a", side_a)
        object.__setattr__(self, "side_b", side_b)


def one_vs_rest(n_modes: int) -> Bipartition:
    """Bipartition of mode 0 against all remaining modes."""
    return Bipartition(frozenset({0}), n_modes)


def _check_modes(V: CovMatrix, modes) -> list[int]:
    idx = list(modes)
    for m in idx:
        if not 0 <= m < V.n_modes:
            raise IndexOutOfRange(f"mode {m} out of range for {V.n_modes} modes")
    return idx


def symplectic_spectrum(
    V: CovMatrix,
    *,
    posdef_tol: float = POSDEF_TOL,
    pairing_rtol: float = PAIRING_RTOL,
) -> np.ndarray:
    """Symplectic eigenvalues of V, ascending.

    Computed as the moduli of the eigenvalues of Omega @ V, which occur in
    +/- i nu pairs for symmetric positive-definite V; the pairing is verified
    to relative tolerance ``pairing_rtol``.
    """
    min_eig = float(np.linalg.eigvalsh(V.data).min())
    if min_eig <= posdef_tol:
        raise NonPositiveDefinite(f"minimum eigenvalue {min_eig:.3e} <= {posdef_tol:.1e}")
    ev = np.linalg.eigvals(symplectic_form(V.n_modes) @ V.data)
    mods = np.sort(np.abs(ev)).reshape(V.n_modes, 2)
    mismatch = np.abs(mods[:, 1] - mods[:, 0]) / mods[:, 1]
    if np.any(mismatch > pairing_rtol):
        raise PairingFailure(f"max pair mismatch {mismatch.max():.3e} > {pairing_rtol:.1e}")
    return mods.mean(axis=1)


def partial_transpose(V: CovMatrix, modes) -> CovMatrix:
    """Flip the sign of the y quadrature of each selected mode (an involution)."""
    idx = _check_modes(V, modes)
    signs = np.ones(2 * V.n_modes)
    for m in idx:
        signs[2 * m + 1] = -1.0
    return CovMatrix(signs[:, None] * V.data * signs[None, :])


def min_symplectic_eig_pt(V: CovMatrix, part: Bipartition, **tol_kw) -> float:
    """Smallest symplectic eigenvalue of the partial transpose over part.side_a."""
    if part.n_modes != V.n_modes:
        raise DomainError("bipartition does not match matrix size")
    return float(symplectic_spectrum(partial_transpose(V, part.side_a), **tol_kw).min())


def log_negativity(V: CovMatrix, part: Bipartition, **tol_kw) -> float:
    """Logarithmic negativity max(0, -ln(2 eta-)) across the bipartition."""
    return max(0.0, -float(np.log(2.0 * min_symplectic_eig_pt(V, part, **tol_kw))))


def fidelity_from_eig(eta_minus: float) -> float:
    """Optimal coherent-state teleportation fidelity 1 / (1 + 2 eta-)."""
    if not eta_minus > 0.0:
        raise NonPositiveInput(f"eta_minus must be > 0, got {eta_minus}")
    return 1.0 / (1.0 + 2.0 * eta_minus)


def channel_transmissivity(eta0: float, alpha: float, length: float) -> float:
    """Effective transmissivity eta0 * exp(-alpha * length / 10).

    ``alpha`` in dB/km, ``length`` in km; natural exponential, as defined.
    """
    if not 0.0 < eta0 <= 1.0:
        raise DomainError(f"eta0 must be in (0, 1], got {eta0}")
    if alpha < 0.0 or length < 0.0:
        raise DomainError("alpha and length must be non-negative")
    return float(eta0 * np.exp(-alpha * length / 10.0))


def lossy_channel(V: CovMatrix, eta: float) -> CovMatrix:
    """Uniform loss channel eta * V + ((1 - eta) / 2) * I."""
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"eta must be in [0, 1], got {eta}")
    return CovMatrix(eta * V.data + 0.5 * (1.0 - eta) * np.eye(2 * V.n_modes))


def beamsplitter_symplectic(n_modes: int, i: int, j: int, t: float) -> np.ndarray:
    """Symplectic of a beam splitter with transmittance t on modes i and j."""
    if i == j:
        raise DomainError("beam splitter requires two distinct modes")
    for m in (i, j):
        if not 0 <= m < n_modes:
            raise IndexOutOfRange(f"mode {m} out of range for {n_modes} modes")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"transmittance must be in [0, 1], got {t}")
    c, s = np.sqrt(t), np.sqrt(1.0 - t)
    S = np.eye(2 * n_modes)
    for q in (0, 1):  # same rotation on x and y
        S[2 * i + q, 2 * i + q] = c
        S[2 * i + q, 2 * j + q] = s
        S[2 * j + q, 2 * i + q] = -s
        S[2 * j + q, 2 * j + q] = c
    return S


def apply_symplectic(V: CovMatrix, S: np.ndarray, *, check_tol: float | None = None) -> CovMatrix:
    """Congruence transform S V S^T, optionally verifying S Omega S^T = Omega."""
    if check_tol is not None:
        omega = symplectic_form(V.n_modes)
        err = float(np.abs(S @ omega @ S.T - omega).max())
        if err > check_tol:
            raise DomainError(f"matrix is not symplectic: |S Omega S^T - Omega| = {err:.3e}")
    return CovMatrix(S @ V.data @ S.T)


def beamsplitter(V: CovMatrix, i: int, j: int, t: float) -> CovMatrix:
    """Apply a beam splitter of transmittance t between modes i and j."""
    S = beamsplitter_symplectic(V.n_modes, i, j, t)
    return apply_symplectic(V, S, check_tol=SYMPLECTIC_CHECK_TOL)


def homodyne_condition(
    V: CovMatrix,
    mode: int,
    quadrature: str,
    *,
    pinv_threshold: float = PINV_THRESHOLD,
) -> CovMatrix:
    """Condition on an ideal homodyne measurement of one quadrature.

    Standard Gaussian update B - C (Z A Z)^+ C^T, where A is the measured
    mode's 2x2 block, Z selects the measured quadrature and ^+ is the rank-1
    pseudoinverse with threshold ``pinv_threshold``.  The measured mode is
    removed from the result.
    """
    if V.n_modes < 2:
        raise DomainError("need at least two modes to condition")
    _check_modes(V, [mode])
    if quadrature not in ("x", "y"):
        raise DomainError(f"quadrature must be 'x' or 'y', got {quadrature!r}")
    q = 0 if quadrature == "x" else 1
    meas = [2 * mode, 2 * mode + 1]
    keep = [k for k in range(2 * V.n_modes) if k not in meas]
    A = V.data[np.ix_(meas, meas)]
    B = V.data[np.ix_(keep, keep)]
    C = V.data[np.ix_(keep, meas)]
    var = A[q, q]
    if var < pinv_threshold:
        raise SingularMeasurement(f"measured quadrature variance {var:.3e} below threshold")
    inv = np.zeros((2, 2))
    inv[q, q] = 1.0 / var
    return CovMatrix(B - C @ inv @ C.T)


def reduced_cm(V: CovMatrix, modes) -> CovMatrix:
    """Restriction of V to the listed modes, order preserved."""
    idx = _check_modes(V, modes)
    if len(set(idx)) != len(idx):
        raise DomainError("modes must be distinct")
    rows = [2 * m + q for m in idx for q in (0, 1)]
    return CovMatrix(V.data[np.ix_(rows, rows)])


def is_physical(V: CovMatrix, *, tol: float = PHYSICALITY_TOL) -> tuple[bool, float]:
    """Check the uncertainty relation V + (i/2) Omega >= 0.

    Returns (ok, margin) where margin is the minimum eigenvalue of the
    Hermitian matrix V + (i/2) Omega; ok means margin >= -tol.
    """
    herm = V.data + 0.5j * symplectic_form(V.n_modes)
    margin = float(np.linalg.eigvalsh(herm).min())
    V.physicality_checked = True
    return margin >= -tol, margin
