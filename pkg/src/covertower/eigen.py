"""Dense symmetric eigensolver: Householder tridiagonalization + implicit QL.

Self-contained so that spectral results do not depend on an external LAPACK
build; numpy is used only for array storage and vectorized row updates.
Deterministic: identical input bits give identical output bits.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, ValidationError

_MAX_QL_ITERATIONS = 50


def symmetric_eigensystem(
    matrix: np.ndarray, vectors: bool = True
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix.

    Returns (w, V) with V[:, k] the eigenvector for w[k], or (w, None) when
    vectors is False.  Each eigenvector is sign-normalized so its largest-
    magnitude entry is positive.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValidationError("matrix must be symmetric")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None)
    if n == 1:
        return a[0].copy(), (np.ones((1, 1)) if vectors else None)

    d, e, qt = _householder_tridiagonalize(a, vectors)
    _ql_implicit_shift(d, e, qt)

    order = np.argsort(d, kind="stable")
    w = d[order]
    if not vectors:
        return w, None
    v = qt[order].T.copy()
    for k in range(n):
        col = v[:, k]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0.0:
            # out-of-place negate: in-place ufuncs on strided column views
            # hit a numpy 2.2 fast-path bug at certain widths
            v[:, k] = -col
    return w, v


def _householder_tridiagonalize(
    a: np.ndarray, vectors: bool
) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """Reduce to tridiagonal (d, e); e[i] couples d[i-1] and d[i].

    When vectors is requested, returns the accumulated orthogonal transform
    as qt with rows qt[k] = Q[:, k] (row-major for fast rotation updates).
    """
    A = a.copy()
    n = A.shape[0]
    qt = np.eye(n) if vectors else None
    e = np.zeros(n)
    for i in range(n - 1, 1, -1):
        row = A[i, :i]
        if np.all(row[: i - 1] == 0.0):
            e[i] = row[i - 1]
            continue
        sigma = float(np.linalg.norm(row))
        beta = -math.copysign(sigma, row[i - 1]) if row[i - 1] != 0.0 else -sigma
        u = row.copy()
        u[i - 1] -= beta
        tau = 2.0 / float(u @ u)
        sub = A[:i, :i]
        p = tau * (sub @ u)
        k = 0.5 * tau * float(u @ p)
        q = p - k * u
        sub -= np.outer(q, u)
        sub -= np.outer(u, q)
        A[i, :i] = 0.0
        A[:i, i] = 0.0
        A[i, i - 1] = beta
        A[i - 1, i] = beta
        e[i] = beta
        if vectors:
            qt[:i, :] -= np.outer(tau * u, u @ qt[:i, :])
    if n > 1:
        e[1] = A[1, 0]
    return np.diag(A).copy(), e, qt


def _ql_implicit_shift(d: np.ndarray, e: np.ndarray, qt: np.ndarray | None) -> None:
    """Diagonalize the tridiagonal (d, e) in place, rotating qt rows along."""
    n = d.shape[0]
    off = np.empty(n)
    off[:-1] = e[1:]  # off[i] couples d[i] and d[i+1]
    off[-1] = 0.0
    eps = np.finfo(float).eps
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                scale = abs(d[m]) + abs(d[m + 1])
                if abs(off[m]) <= eps * scale:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > _MAX_QL_ITERATIONS:
                raise ConvergenceError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * off[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + off[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * off[i]
                b = c * off[i]
                r = math.hypot(f, g)
                off[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    off[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if qt is not None:
                    old_i1 = qt[i + 1].copy()
                    qt[i + 1] = s * qt[i] + c * old_i1
                    qt[i] = c * qt[i] - s * old_i1
            if underflow:
                continue
            d[l] -= p
            off[l] = g
            off[m] = 0.0
