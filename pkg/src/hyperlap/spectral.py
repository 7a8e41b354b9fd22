"""Numerical checks of the line-graph spectral bound.

For any hypergraph, the smallest adjacency eigenvalue of its line graph is
at least ``-k_max``; for linear k-uniform hypergraphs ``-k`` additionally
has multiplicity at least ``L - N``.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from .hypercore import Hypergraph, IncidenceMatrix, is_k_uniform, is_linear, k_max
from .linegraph import line_graph

DENSE_EIG_THRESHOLD = 2000
ITERATIVE_TOL = 1e-8


@dataclass(frozen=True)
class SpectralReport:
    lambda_min: float
    k_max: int
    bound_satisfied: bool
    multiplicity_at_minus_k: Optional[int]
    tolerance: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _check_symmetric(A) -> None:
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix is not square: {A.shape}")
    if sp.issparse(A):
        diff = abs(A - A.T)
        asym = diff.max() if diff.nnz else 0
    else:
        asym = np.max(np.abs(A - A.T)) if A.size else 0
    if asym > 0:
        raise ValueError("matrix is not symmetric")


def eigenvalues(A) -> np.ndarray:
    """Full spectrum of a symmetric matrix in ascending order."""
    _check_symmetric(A)
    if A.shape[0] > DENSE_EIG_THRESHOLD:
        raise ValueError(
            f"dense eigensolve limited to n <= {DENSE_EIG_THRESHOLD}; use smallest_eigenvalue"
        )
    dense = A.toarray() if sp.issparse(A) else np.asarray(A)
    return np.linalg.eigvalsh(dense.astype(np.float64))


def smallest_eigenvalue(A, tol: float = ITERATIVE_TOL) -> float:
    """Smallest eigenvalue; dense up to the threshold, Lanczos (ARPACK) beyond it."""
    _check_symmetric(A)
    n = A.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if n <= DENSE_EIG_THRESHOLD:
        return float(eigenvalues(A)[0])
    M = sp.csr_array(A, dtype=np.float64)
    # fixed start vector keeps the iteration reproducible
    v0 = np.ones(n) / np.sqrt(n)
    vals = eigsh(M, k=1, which="SA", tol=tol, maxiter=10 * n, v0=v0, return_eigenvectors=False)
    return float(vals[0])


def verify_bound(h: Hypergraph, tol: float = 1e-9) -> SpectralReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if h.link_count < 1:
        raise ValueError("need at least one hyperlink")
    kmax = k_max(h)
    A = line_graph(h).adjacency(weighted=True)

    multiplicity = None
    k = is_k_uniform(h)
    if A.shape[0] <= DENSE_EIG_THRESHOLD:
        vals = eigenvalues(A)
        lam = float(vals[0])
        if k is not None and is_linear(h):
            multiplicity = int(np.sum(np.abs(vals + k) <= tol * max(1, k)))
    else:
        lam = smallest_eigenvalue(A)

    return SpectralReport(
        lambda_min=lam,
        k_max=kmax,
        bound_satisfied=lam >= -kmax - tol,
        multiplicity_at_minus_k=multiplicity,
        tolerance=tol,
    )


def gram_psd_check(R: IncidenceMatrix, tol: float = 1e-9) -> bool:
    """PSD check of ``R^T R`` plus agreement of its nonzero spectrum with ``R R^T``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    M = R.matrix.astype(np.float64)
    big = np.linalg.eigvalsh((M.T @ M).toarray())
    small = np.linalg.eigvalsh((M @ M.T).toarray())
    scale = max(1.0, float(np.max(np.abs(big))) if big.size else 1.0)
    if big.size and big[0] < -tol * scale:
        return False
    if small.size and small[0] < -tol * scale:
        return False
    # the larger Gram matrix carries |L - N| extra zeros
    m = min(big.size, small.size)
    top_big = big[big.size - m:]
    top_small = small[small.size - m:]
    if not np.allclose(top_big, top_small, rtol=0, atol=tol * scale):
        return False
    longer = big if big.size > small.size else small
    extra = longer[: longer.size - m]
    return bool(np.all(np.abs(extra) <= tol * scale))
