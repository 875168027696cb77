"""Validated state containers and Hermitian linear algebra.

Density operators and pure states are frozen dataclasses that validate on
construction and expose read-only arrays. The eigensolver is a cyclic Jacobi
sweep for complex Hermitian matrices; a closed form covers the 2x2 case so
the two routes can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotHermitian,
    NotPositiveSemidefinite,
    TraceNotOne,
    ValidationError,
    WeightSumInvalid,
)

HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
PSD_TOL = 1e-9
NORM_TOL = 1e-9

# Jacobi termination: off-diagonal Frobenius norm below this, or give up
# after the sweep cap (convergence is quadratic; 100 sweeps is far beyond
# anything a finite-precision Hermitian matrix needs).
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

ORTHONORMALITY_TOL = 1e-8


def _as_square_complex(matrix) -> np.ndarray:
    m = np.array(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix contains non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector over a reference basis."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.size < 1:
            raise DimensionMismatch(f"amplitudes must be a 1-d vector, got shape {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise ValidationError("amplitudes contain non-finite entries")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValidationError(
                f"squared norm is {norm_sq!r}, off unity by {abs(norm_sq - 1.0):.3e}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def probabilities(self) -> np.ndarray:
        """Squared amplitude magnitudes in the reference basis."""
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, unit-trace, positive-semidefinite matrix.

    Construction validates all three properties (tolerances 1e-9) and stores
    an exactly hermitized, read-only copy. Qubit entries are reachable as
    ``x`` (top-left), ``y`` (bottom-right) and ``a`` (upper off-diagonal).
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = _as_square_complex(self.matrix)
        herm_dev = float(np.max(np.abs(m - m.conj().T)))
        if herm_dev > HERMITIAN_TOL:
            raise NotHermitian(
                f"max |M - M^H| entry is {herm_dev:.3e}, above tolerance {HERMITIAN_TOL:.0e}"
            )
        m = 0.5 * (m + m.conj().T)
        trace_dev = abs(float(np.trace(m).real) - 1.0)
        if trace_dev > TRACE_TOL:
            raise TraceNotOne(
                f"trace is {float(np.trace(m).real)!r}, off unity by {trace_dev:.3e}"
            )
        smallest = float(np.min(_jacobi_eigh(m, vectors=False)[0]))
        if smallest < -PSD_TOL:
            raise NotPositiveSemidefinite(
                f"smallest eigenvalue is {smallest:.3e}, below -{PSD_TOL:.0e}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def _require_qubit(self) -> None:
        if self.dim != 2:
            raise DimensionMismatch(f"qubit accessor used on a dim-{self.dim} operator")

    @property
    def x(self) -> float:
        """Top-left diagonal entry (qubit operators only)."""
        self._require_qubit()
        return float(self.matrix[0, 0].real)

    @property
    def y(self) -> float:
        """Bottom-right diagonal entry (qubit operators only)."""
        self._require_qubit()
        return float(self.matrix[1, 1].real)

    @property
    def a(self) -> complex:
        """Upper off-diagonal entry (qubit operators only)."""
        self._require_qubit()
        return complex(self.matrix[0, 1])

    def diagonal(self) -> np.ndarray:
        """Real parts of the diagonal, as a fresh writable array."""
        return np.real(np.diag(self.matrix)).copy()


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues in descending order with matching orthonormal eigenstates."""

    eigenvalues: np.ndarray
    eigenvectors: tuple[PureState, ...]

    def __post_init__(self) -> None:
        vals = np.array(self.eigenvalues, dtype=np.float64)
        if vals.ndim != 1 or vals.size != len(self.eigenvectors):
            raise DimensionMismatch(
                f"{vals.size} eigenvalues paired with {len(self.eigenvectors)} eigenvectors"
            )
        if np.any(vals[:-1] < vals[1:]):
            raise ValidationError("eigenvalues must be in descending order")
        vals.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", tuple(self.eigenvectors))

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def basis_matrix(self) -> np.ndarray:
        """Eigenvectors as columns of a unitary matrix."""
        return np.column_stack([s.amplitudes for s in self.eigenvectors])

    def reconstruct(self) -> np.ndarray:
        """Sum of eigenvalue-weighted projectors, as a raw matrix."""
        u = self.basis_matrix()
        return (u * self.eigenvalues) @ u.conj().T


def make_density(matrix, tolerance: float = HERMITIAN_TOL) -> DensityOperator:
    """Validate a raw matrix into a DensityOperator.

    Asymmetry up to `tolerance` is repaired by averaging with the conjugate
    transpose; anything larger raises NotHermitian. Trace and positivity are
    then enforced at the standard 1e-9 tolerances.
    """
    if not (tolerance >= 0.0):
        raise ValidationError(f"tolerance must be nonnegative, got {tolerance!r}")
    m = _as_square_complex(matrix)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > tolerance:
        raise NotHermitian(
            f"max |M - M^H| entry is {herm_dev:.3e}, above tolerance {tolerance:.3e}"
        )
    return DensityOperator(0.5 * (m + m.conj().T))


def outer_product(state: PureState) -> DensityOperator:
    """Rank-one projector |state><state|."""
    amps = state.amplitudes
    return DensityOperator(np.outer(amps, amps.conj()))


def mix(components) -> DensityOperator:
    """Convex combination of density operators.

    `components` is an iterable of (weight, DensityOperator) pairs. Weights
    must be nonnegative and sum to 1 within 1e-9; operators must share one
    dimension.
    """
    pairs = list(components)
    if not pairs:
        raise WeightSumInvalid("mixture needs at least one component")
    total = 0.0
    dim = pairs[0][1].dim
    acc = np.zeros((dim, dim), dtype=np.complex128)
    for weight, op in pairs:
        w = float(weight)
        if not math.isfinite(w) or w < 0.0:
            raise WeightSumInvalid(f"weight {weight!r} is negative or non-finite")
        if op.dim != dim:
            raise DimensionMismatch(f"component dims differ: {op.dim} vs {dim}")
        total += w
        acc += w * op.matrix
    if abs(total - 1.0) > 1e-9:
        raise WeightSumInvalid(f"weights sum to {total!r}, off unity by {abs(total - 1.0):.3e}")
    return DensityOperator(acc)


def eig2_closed_form(op: DensityOperator) -> tuple[float, float]:
    """Qubit eigenvalues 1/2 +- sqrt(((x-y)/2)^2 + |a|^2), descending."""
    op._require_qubit()
    half_gap = math.hypot(0.5 * (op.x - op.y), abs(op.a))
    return (0.5 + half_gap, 0.5 - half_gap)


def _rotate(a: np.ndarray, v: np.ndarray | None, p: int, q: int) -> None:
    """One Jacobi rotation annihilating the (p, q) off-diagonal pair.

    The pivot's phase is peeled off first so the rotation angle reduces to
    the real symmetric formula; rows and columns then pick up conjugate
    phase factors.
    """
    apq = complex(a[p, q])
    r = abs(apq)
    app = float(a[p, p].real)
    aqq = float(a[q, q].real)
    phase = apq / r
    theta = 0.5 * math.atan2(2.0 * r, app - aqq)
    c = math.cos(theta)
    s = math.sin(theta)
    s_plus = s * phase
    s_minus = s * phase.conjugate()

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p + s_minus * col_q
    a[:, q] = -s_plus * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p + s_plus * row_q
    a[q, :] = -s_minus * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    if v is not None:
        vcol_p = v[:, p].copy()
        vcol_q = v[:, q].copy()
        v[:, p] = c * vcol_p + s_minus * vcol_q
        v[:, q] = -s_plus * vcol_p + c * vcol_q


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi_eigh(
    matrix: np.ndarray,
    vectors: bool = True,
    offdiag_tol: float = JACOBI_OFFDIAG_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Returns (eigenvalues, eigenvector columns), unsorted. The input is
    assumed Hermitian; callers validate. Raises ConvergenceFailure with the
    residual off-diagonal norm if the sweep cap is hit.
    """
    a = np.array(matrix, dtype=np.complex128)
    d = a.shape[0]
    v = np.eye(d, dtype=np.complex128) if vectors else None
    if d == 1:
        return np.real(np.diag(a)).copy(), v
    # Pivots already this far below the target norm cannot push it back up.
    skip = offdiag_tol / (d * d)
    sweeps = 0
    while _offdiag_norm(a) >= offdiag_tol:
        if sweeps >= max_sweeps:
            residual = _offdiag_norm(a)
            raise ConvergenceFailure(
                f"off-diagonal norm {residual:.3e} after {sweeps} sweeps "
                f"(target {offdiag_tol:.0e})",
                residual=residual,
            )
        for p in range(d - 1):
            for q in range(p + 1, d):
                if abs(a[p, q]) > skip:
                    _rotate(a, v, p, q)
        sweeps += 1
    return np.real(np.diag(a)).copy(), v


def eig_hermitian(op: DensityOperator) -> SpectralDecomposition:
    """Full spectral decomposition, eigenvalues descending.

    Ties keep the ascending original column order of the diagonalized
    matrix, making the output deterministic for degenerate spectra.
    """
    values, basis = _jacobi_eigh(op.matrix)
    order = np.argsort(-values, kind="stable")
    eigenvalues = values[order]
    states = tuple(PureState(basis[:, k]) for k in order)
    return SpectralDecomposition(eigenvalues, states)


def kron(left: DensityOperator, right: DensityOperator) -> DensityOperator:
    """Tensor product of two density operators."""
    return DensityOperator(np.kron(left.matrix, right.matrix))


def partial_trace(ab: DensityOperator, dim_a: int, dim_b: int, keep: str) -> DensityOperator:
    """Reduced state of one factor of a bipartite operator.

    `keep` selects the surviving factor, "A" or "B"; dim_a * dim_b must
    equal the operator's dimension.
    """
    if dim_a < 1 or dim_b < 1 or dim_a * dim_b != ab.dim:
        raise DimensionMismatch(
            f"dim_a * dim_b = {dim_a} * {dim_b} does not factor a dim-{ab.dim} operator"
        )
    side = str(keep).upper()
    if side not in ("A", "B"):
        raise ValidationError(f"keep must be 'A' or 'B', got {keep!r}")
    t = ab.matrix.reshape(dim_a, dim_b, dim_a, dim_b)
    if side == "A":
        reduced = np.einsum("ikjk->ij", t)
    else:
        reduced = np.einsum("kikj->ij", t)
    return DensityOperator(reduced)
