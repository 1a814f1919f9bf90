"""Real Lie algebra machinery over skew-Hermitian matrices.

A subspace is represented by a ``LieBasis``: a stack of matrices that are
orthonormal under the real inner product <A, B> = Re Tr(A^dag B).  For fast
projections every matrix is also kept as a real vector
(Re entries, Im entries) since the inner product is then a plain dot product.
"""

from __future__ import annotations

import numpy as np

from . import qalg
from .qalg import TOL_RANK


def _vec(mats: np.ndarray) -> np.ndarray:
    # (..., d, d) complex -> (..., 2 d^2) real; dot of vecs == Re Tr(A^dag B)
    d = mats.shape[-1]
    flat = mats.reshape(mats.shape[:-2] + (d * d,))
    return np.concatenate([flat.real, flat.imag], axis=-1)


def _unvec(v: np.ndarray, dim: int) -> np.ndarray:
    half = dim * dim
    return (v[:half] + 1j * v[half:]).reshape(dim, dim)


class LieBasis:
    """Orthonormal list of matrices spanning a real subspace."""

    def __init__(self, dim: int, mats: np.ndarray | None = None):
        self.dim = dim
        if mats is None:
            mats = np.zeros((0, dim, dim), dtype=complex)
        self.mats = np.asarray(mats, dtype=complex)
        self.vecs = _vec(self.mats)

    def __len__(self) -> int:
        return self.mats.shape[0]

    def __iter__(self):
        return iter(self.mats)

    def _residual(self, w: np.ndarray) -> np.ndarray:
        # project twice for numerical stability
        for _ in range(2):
            if len(self):
                w = w - self.vecs.T @ (self.vecs @ w)
        return w

    def _append(self, w: np.ndarray, tol: float) -> bool:
        w = self._residual(w)
        n = np.linalg.norm(w)
        if n <= tol:
            return False
        w = w / n
        self.vecs = np.vstack([self.vecs, w]) if len(self) else w[None, :]
        self.mats = np.concatenate([self.mats, _unvec(w, self.dim)[None]])
        return True


def _validate(mats, require_traceless: bool, tol: float):
    for m in mats:
        m = np.asarray(m, dtype=complex)
        scale = max(1.0, qalg.frob(m))
        if qalg.frob(m + qalg.dagger(m)) > tol * scale:
            raise ValueError("input matrix is not skew-Hermitian")
        if require_traceless and abs(np.trace(m)) > tol * scale:
            raise ValueError("input matrix is not traceless")


def orthonormalize(mats, tol: float | None = None,
                   require_traceless: bool = True, dim: int | None = None) -> LieBasis:
    """Gram-Schmidt an iterable of matrices; near-dependent inputs are dropped.

    ``dim`` is only needed when the list is empty.
    """
    tol = TOL_RANK if tol is None else tol
    mats = [np.asarray(m, dtype=complex) for m in mats]
    _validate(mats, require_traceless, tol)
    dim = mats[0].shape[0] if mats else (dim or 2)
    basis = LieBasis(dim)
    for m in mats:
        n = qalg.frob(m)
        if n == 0.0:
            continue
        basis._append(_vec(m / n), tol)
    return basis


def contains(basis: LieBasis, M, tol: float | None = None) -> bool:
    """True iff M lies in span(basis) with relative residual below tol."""
    tol = TOL_RANK if tol is None else tol
    M = np.asarray(M, dtype=complex)
    n = qalg.frob(M)
    if n == 0.0:
        return True
    return np.linalg.norm(basis._residual(_vec(M))) <= tol * n


def _bracket_sweep(basis: LieBasis, new_mats: np.ndarray, other: np.ndarray,
                   tol: float, cap: int) -> np.ndarray:
    """Bracket new_mats against other, append independent residuals to basis.

    Returns the stack of matrices that were actually added.
    """
    if new_mats.shape[0] == 0 or other.shape[0] == 0:
        return np.zeros((0, basis.dim, basis.dim), dtype=complex)
    # batched [N_i, B_j] for all pairs; inputs are unit norm so the residual
    # threshold is already normalized by the input norms
    prod = np.einsum("iab,jbc->ijac", new_mats, other)
    prod_t = np.einsum("jab,ibc->ijac", other, new_mats)
    brackets = (prod - prod_t).reshape(-1, basis.dim, basis.dim)
    W = _vec(brackets)
    W = W - (W @ basis.vecs.T) @ basis.vecs
    norms = np.linalg.norm(W, axis=1)
    added = []
    for idx in np.nonzero(norms > tol)[0]:
        if len(basis) >= cap:
            break
        if basis._append(W[idx], tol):
            added.append(basis.mats[-1])
    return np.array(added) if added else np.zeros((0, basis.dim, basis.dim), dtype=complex)


def closure(generators, tol: float | None = None) -> LieBasis:
    """Smallest bracket-closed real subspace containing the generators.

    Worklist sweep: bracket every new element against the whole current
    basis, keep independent residuals, stop when a sweep adds nothing or
    the dimension reaches dim^2 - 1 (the whole of su(d)).
    """
    tol = TOL_RANK if tol is None else tol
    basis = orthonormalize(generators, tol=tol)
    cap = basis.dim * basis.dim - 1
    new = basis.mats
    while new.shape[0] and len(basis) < cap:
        new = _bracket_sweep(basis, new, basis.mats, tol, cap)
    return basis


def invariant_space(L: LieBasis, seed, tol: float | None = None) -> LieBasis:
    """Smallest subspace containing seed and invariant under ad of L.

    The seed may carry a trace (it is typically i times a density matrix),
    so only skew-Hermiticity is required of it.
    """
    tol = TOL_RANK if tol is None else tol
    seed = np.asarray(seed, dtype=complex)
    _validate([seed], require_traceless=False, tol=tol)
    V = LieBasis(L.dim)
    V._append(_vec(seed / qalg.frob(seed)), tol)
    cap = L.dim * L.dim
    new = V.mats
    while new.shape[0] and len(V) < cap:
        new = _bracket_sweep(V, new, L.mats, tol, cap)
    return V


def trace_A_image(V: LieBasis, tol: float | None = None) -> LieBasis:
    """Orthonormal basis of the image of V under the partial trace over A."""
    tol = TOL_RANK if tol is None else tol
    if V.dim != 4:
        raise ValueError("trace_A_image expects a basis of 4x4 matrices")
    images = [qalg.partial_trace(m, keep="S") for m in V.mats]
    out = LieBasis(2)
    for m in images:
        n = qalg.frob(m)
        if n > tol:
            out._append(_vec(m / n), tol)
    return out


def span_equals(a: LieBasis, b: LieBasis, tol: float | None = None) -> bool:
    """Mutual containment of two bases."""
    return (len(a) == len(b)
            and all(contains(b, m, tol) for m in a.mats)
            and all(contains(a, m, tol) for m in b.mats))
