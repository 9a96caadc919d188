"""Exact dense linear algebra on numpy object arrays.

Entries are field elements (``mpq`` or :class:`~strad.fields.GFElement`);
the routines only use ``+ - * /`` and comparison with zero, so they work
over any of the fields in :mod:`strad.fields`.
"""

from __future__ import annotations

import numpy as np


def zeros(field, rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    z = field.zero
    for idx in np.ndindex(rows, cols):
        out[idx] = z
    return out


def identity(field, n: int) -> np.ndarray:
    out = zeros(field, n, n)
    for i in range(n):
        out[i, i] = field.one
    return out


def asmatrix(field, rows, shape=None) -> np.ndarray:
    """Convert nested sequences into an object matrix over ``field``."""
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return zeros(field, *shape)
    arr = np.array(rows, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d array")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = field(arr[idx])
    return out


def matmul(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(field, a.shape[0], b.shape[1])
    return a.dot(b)


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def rref(a: np.ndarray):
    """Reduced row echelon form.  Returns ``(R, pivots)`` with zero rows dropped."""
    rows, cols = a.shape
    m = [list(r) for r in a]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        pr = [x * inv for x in pr]
        m[r] = pr
        for i in range(rows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    m[i] = [x - f * y for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    out = np.empty((r, cols), dtype=object)
    for i in range(r):
        out[i, :] = m[i]
    return out, pivots


def rank(a: np.ndarray) -> int:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return len(rref(a)[1])


def nullspace(field, a: np.ndarray) -> list[np.ndarray]:
    """Basis of ``{x : a x = 0}`` as a list of 1-d object vectors."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        r, pivots = zeros(field, 0, cols), []
    else:
        r, pivots = rref(a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.array([field.zero] * cols, dtype=object)
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(v)
    return basis


def solve(field, a: np.ndarray, b: np.ndarray):
    """One solution of ``a x = b`` (``b`` a 1-d vector), or ``None``."""
    rows, cols = a.shape
    if rows == 0:
        return np.array([field.zero] * cols, dtype=object)
    aug = np.empty((rows, cols + 1), dtype=object)
    aug[:, :cols] = a
    aug[:, cols] = b
    r, pivots = rref(aug)
    if pivots and pivots[-1] == cols:
        return None
    x = np.array([field.zero] * cols, dtype=object)
    for i, p in enumerate(pivots):
        x[p] = r[i, cols]
    return x


def row_basis(field, vectors, width: int):
    """RREF basis (matrix, pivots) of the span of the given row vectors."""
    vectors = list(vectors)
    if not vectors:
        return zeros(field, 0, width), []
    return rref(np.array([list(v) for v in vectors], dtype=object).reshape(len(vectors), width))


def reduce_against(vec, basis: np.ndarray, pivots) -> np.ndarray:
    """Subtract from ``vec`` its component along an RREF row basis."""
    v = np.array(vec, dtype=object)
    for i, p in enumerate(pivots):
        c = v[p]
        if c != 0:
            v = v - c * basis[i]
    return v


def in_span(vec, basis: np.ndarray, pivots) -> bool:
    return all(x == 0 for x in reduce_against(vec, basis, pivots))


def determinant_nonzero(a: np.ndarray) -> bool:
    n, m = a.shape
    return n == m and rank(a) == n
