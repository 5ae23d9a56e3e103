"""Lowest eigenvalues of Pauli operators.

Small problems are diagonalized densely. Larger ones run Lanczos with full
reorthogonalization while the Krylov basis fits the memory budget, and ARPACK on a
matrix-free ``LinearOperator`` beyond that.
"""

import logging
from typing import Protocol

import numpy as np
from scipy.linalg import eigh, eigh_tridiagonal
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from ..pauli.models import TermSum
from ..pauli.operator import ParitySector, PauliOperator
from ..utils.errors import NoConvergenceError
from .models import Level, SolverOptions

logger = logging.getLogger(__name__)

_BREAKDOWN = 1e-12


class MatVecOperator(Protocol):
    dim: int

    def matvec(self, v: np.ndarray) -> np.ndarray: ...

    def to_dense(self) -> np.ndarray: ...


def compile_operator(
    termsum: TermSum, parity: tuple[int, int] | None = None
) -> PauliOperator | ParitySector:
    """Compile a term sum, optionally restricted to an X-string parity (mask, value)."""
    op = PauliOperator(termsum)
    if parity is None:
        return op
    return ParitySector(op, *parity)


def cluster_levels(values: np.ndarray | list[float], tol: float = 1e-8) -> list[Level]:
    """Group ascending eigenvalues into levels within ``tol`` of each level's first value."""
    levels: list[Level] = []
    start: float | None = None
    count = 0
    for value in sorted(float(v) for v in values):
        if start is not None and value - start <= tol:
            count += 1
            continue
        if start is not None:
            levels.append(Level(energy=start, multiplicity=count))
        start, count = value, 1
    if start is not None:
        levels.append(Level(energy=start, multiplicity=count))
    return levels


def gaps(values: np.ndarray | list[float], tol: float = 1e-8) -> tuple[float, float]:
    """Plain gap E1 - E0 and the gap to the first level above E0 + tol.

    A missing level gives ``nan``.
    """
    ordered = sorted(float(v) for v in values)
    if len(ordered) < 2:
        return float("nan"), float("nan")
    plain = ordered[1] - ordered[0]
    above = next((v for v in ordered if v > ordered[0] + tol), None)
    return plain, float("nan") if above is None else above - ordered[0]


def _dense(op: MatVecOperator, k: int) -> np.ndarray:
    return eigh(op.to_dense(), eigvals_only=True, subset_by_index=[0, k - 1])


def _project_out(w: np.ndarray, locked: np.ndarray) -> np.ndarray:
    if locked.shape[0]:
        w -= locked.T @ (locked @ w)
    return w


def _lanczos_pass(
    op: MatVecOperator,
    want: int,
    options: SolverOptions,
    rng: np.random.Generator,
    locked: np.ndarray,
    v0: np.ndarray | None,
) -> tuple[np.ndarray, np.ndarray]:
    """One Lanczos run on the complement of ``locked``.

    Returns the lowest ``want`` Ritz values whose residual is below ``options.tol``
    together with their Ritz vectors as rows.

    Raises:
        NoConvergenceError: If the iteration cap is reached first.
    """
    dim = op.dim
    free = dim - locked.shape[0]
    m_max = min(options.max_iter, free)
    basis = np.empty((m_max, dim))
    alphas: list[float] = []
    betas: list[float] = []

    v = rng.standard_normal(dim) if v0 is None else np.asarray(v0, dtype=float).copy()
    for _ in range(2):
        v = _project_out(v, locked)
    v /= np.linalg.norm(v)
    beta = 0.0
    for j in range(m_max):
        basis[j] = v
        w = _project_out(op.matvec(v), locked)
        alpha = float(v @ w)
        w -= alpha * v
        if j > 0:
            w -= beta * basis[j - 1]
        for _ in range(2):
            w -= basis[: j + 1].T @ (basis[: j + 1] @ w)
            w = _project_out(w, locked)
        beta = float(np.linalg.norm(w))
        alphas.append(alpha)
        betas.append(beta)
        m = j + 1

        if m >= want or m == m_max:
            theta, vecs = eigh_tridiagonal(np.array(alphas), np.array(betas[:-1]))
            take = min(want, m)
            residuals = beta * np.abs(vecs[-1, :take])
            if m == free or (m >= want and np.all(residuals < options.tol)):
                ritz = vecs[:, :take].T @ basis[:m]
                return theta[:take], ritz

        if beta < _BREAKDOWN:
            # invariant subspace: continue with a fresh direction orthogonal to everything
            w = rng.standard_normal(dim)
            for _ in range(2):
                w -= basis[: j + 1].T @ (basis[: j + 1] @ w)
                w = _project_out(w, locked)
            betas[-1] = 0.0
            beta = 0.0
            v = w / np.linalg.norm(w)
        else:
            v = w / beta

    raise NoConvergenceError(
        f"Lanczos did not converge {want} eigenvalues in {m_max} steps", iterations=m_max
    )


def _lanczos(
    op: MatVecOperator, k: int, options: SolverOptions, v0: np.ndarray | None
) -> np.ndarray:
    """Lanczos with full reorthogonalization, locking and deflated restarts.

    A single Krylov space holds one copy of a degenerate eigenvalue, so converged Ritz
    pairs are locked and the next run starts in their orthogonal complement. The
    lowest ``k`` locked values are final once a run finds nothing below the k-th.

    Raises:
        NoConvergenceError: If a run reaches the iteration cap or the runs do not settle.
    """
    dim = op.dim
    rng = np.random.default_rng(options.seed)
    locked = np.empty((0, dim))
    values: list[float] = []
    max_runs = 2 * k + 2
    for run in range(max_runs):
        if locked.shape[0] == dim:
            break
        want = min(k, dim - locked.shape[0])
        theta, ritz = _lanczos_pass(op, want, options, rng, locked, v0 if run == 0 else None)
        if len(values) >= k and theta[0] >= sorted(values)[k - 1] - options.tol:
            logger.debug("[Spectrum] Lanczos settled after %d runs", run + 1)
            break
        # re-orthonormalize against the locked rows
        for value, vec in zip(theta, ritz):
            for _ in range(2):
                vec = _project_out(vec, locked)
            norm = float(np.linalg.norm(vec))
            if norm < 0.5:
                continue
            locked = np.vstack([locked, vec / norm])
            values.append(float(value))
    else:
        raise NoConvergenceError(
            f"Lanczos locking did not settle {k} eigenvalues in {max_runs} runs",
            iterations=max_runs * options.max_iter,
        )
    return np.sort(np.array(values))[:k]


def _arpack(
    op: MatVecOperator, k: int, options: SolverOptions, v0: np.ndarray | None
) -> np.ndarray:
    dim = op.dim
    if v0 is None:
        v0 = np.random.default_rng(options.seed).standard_normal(dim)
    linear = LinearOperator((dim, dim), matvec=op.matvec, dtype=np.float64)
    try:
        values = eigsh(
            linear,
            k=k,
            which="SA",
            tol=options.tol,
            maxiter=options.max_iter * 10,
            v0=v0,
            return_eigenvectors=False,
        )
    except ArpackNoConvergence as e:
        raise NoConvergenceError(
            f"ARPACK did not converge {k} eigenvalues", iterations=options.max_iter * 10
        ) from e
    return np.sort(values)


def lowest_eigs(
    op: TermSum | PauliOperator | ParitySector,
    k: int,
    options: SolverOptions | None = None,
    parity: tuple[int, int] | None = None,
    v0: np.ndarray | None = None,
) -> np.ndarray:
    """Ascending lowest ``k`` eigenvalues (all of them when the dimension is below ``k``).

    Args:
        op: A term sum or an already compiled operator.
        k: Number of eigenvalues.
        options: Solver options; defaults when omitted.
        parity: Restrict a term sum to the eigenspace (mask, value) of an X-string.
        v0: Optional start vector for the iterative solvers.

    Raises:
        NoConvergenceError: If the iterative solver hits its cap.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    options = options or SolverOptions()
    if isinstance(op, TermSum):
        op = compile_operator(op, parity)
    k = min(k, op.dim)

    if op.dim <= options.dense_limit:
        return _dense(op, k)
    # ARPACK requires k < dim
    if k >= op.dim - 1:
        return _dense(op, k)

    krylov_bytes = options.max_iter * op.dim * 8
    if krylov_bytes <= options.memory_mb * (1 << 20):
        return _lanczos(op, k, options, v0)
    logger.debug(
        "[Spectrum] Krylov basis of %.1f MB over budget; using ARPACK", krylov_bytes / (1 << 20)
    )
    return _arpack(op, k, options, v0)
