"""Exact integer linear algebra on dense matrices.

Matrices are 2-D numpy arrays of Python ints (``dtype=object``), so every
computation is exact with no magnitude bound.  Ordinary numpy operators
(``@``, ``+``, ``-``, ``.T``) are the matrix algebra; this module adds the
normal forms and lattice routines built on them:

  * :func:`smith_normal_form`   -- u @ m @ v = s, unimodular u, v,
    non-negative diagonal forming a divisibility chain
  * :func:`hermite_normal_form` -- column-style echelon form m @ u = h
  * :func:`kernel_basis`, :func:`cokernel_invariants`
  * :func:`lattice_contains`, :func:`lattice_solve`

Internally the elimination runs on int64 while all entries stay below
2**31 and transparently restarts on Python ints the moment any value
grows past that bound, so the fast path can never wrap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FgAbGroup

_LIMIT = 1 << 31  # one int64 op on entries below 2**31 cannot wrap


class _Promote(Exception):
    """Internal: int64 entries grew past the guard; redo with Python ints."""


def _prep(data) -> np.ndarray:
    """Normalize array-like integer data to a 2-D integer or object array."""
    a = np.asarray(data)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(0, 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if a.size == 0:
        return np.zeros(a.shape, dtype=np.int64)
    if a.dtype == object:
        if a.size and not all(type(x) is int for x in a.flat):
            out = np.empty(a.shape, dtype=object)
            for idx, x in np.ndenumerate(a):
                if not isinstance(x, (int, np.integer)):
                    raise TypeError(f"matrix entry is not an integer: {x!r}")
                out[idx] = int(x)
            return out
        return a
    if not np.issubdtype(a.dtype, np.integer):
        raise TypeError(f"matrix entries must be integers, got {a.dtype}")
    return a


def as_intmat(data) -> np.ndarray:
    """Coerce array-like integer data to a 2-D object array of Python ints.

    Lists of lists, integer numpy arrays and existing object arrays are all
    accepted; an empty list becomes a 0 x 0 matrix.
    """
    return _to_object(_prep(data))


def as_intvec(data, length: int | None = None) -> np.ndarray:
    """Coerce array-like data to a 1-D object array of Python ints."""
    a = np.asarray(data)
    if a.ndim != 1:
        raise ValueError(f"expected a vector, got shape {a.shape}")
    if length is not None and a.shape[0] != length:
        raise ValueError(f"expected length {length}, got {a.shape[0]}")
    if a.size == 0:
        return np.zeros(0, dtype=object)
    if a.dtype == object:
        if a.size and not all(type(x) is int for x in a.flat):
            out = np.empty(a.shape[0], dtype=object)
            for i, x in enumerate(a):
                if not isinstance(x, (int, np.integer)):
                    raise TypeError(f"vector entry is not an integer: {x!r}")
                out[i] = int(x)
            return out
        return a
    if not np.issubdtype(a.dtype, np.integer):
        raise TypeError(f"vector entries must be integers, got {a.dtype}")
    return a.astype(object)


def _to_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def hstack(*mats) -> np.ndarray:
    """Column-concatenate matrices that share a row count."""
    mats = [as_intmat(m) for m in mats]
    rows = {m.shape[0] for m in mats}
    if len(rows) > 1:
        raise ValueError(f"row counts differ: {sorted(rows)}")
    return np.hstack(mats)


def _working(m: np.ndarray, force_object: bool) -> tuple[np.ndarray, bool]:
    """Working copy for elimination, downcast to int64 when provably safe."""
    if m.dtype != object:
        if not force_object and (m.size == 0 or int(np.abs(m).max()) < _LIMIT):
            return m.astype(np.int64), True
        return _to_object(m).copy(), False
    if not force_object and max((abs(x) for x in m.flat), default=0) < _LIMIT:
        return m.astype(np.int64), True
    return m.copy(), False


def _check(fast: bool, *arrays: np.ndarray) -> None:
    """Guard the slabs an elementary operation just modified."""
    if fast:
        for a in arrays:
            if a.size and (a.max() >= _LIMIT or a.min() <= -_LIMIT):
                raise _Promote


def _min_abs_pivot(block: np.ndarray) -> tuple[int, int] | None:
    """Position of the smallest-magnitude nonzero entry, row-major ties."""
    nzr, nzc = np.nonzero(block)
    if nzr.size == 0:
        return None
    k = int(np.argmin(np.abs(block[nzr, nzc])))
    return int(nzr[k]), int(nzc[k])


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ m @ v = s with u, v unimodular and s in Smith normal form."""

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.s.shape)
        return tuple(int(self.s[i, i]) for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _smith_run(m: np.ndarray, want_transforms: bool, force_object: bool):
    s, fast = _working(m, force_object)
    rows, cols = s.shape
    if want_transforms:
        dtype = np.int64 if fast else object
        u = np.eye(rows, dtype=dtype)
        v = np.eye(cols, dtype=dtype)
    else:
        u = v = None
    t = 0
    while t < min(rows, cols):
        pos = _min_abs_pivot(s[t:, t:])
        if pos is None:
            break
        i, j = pos[0] + t, pos[1] + t
        if i != t:
            s[[t, i], :] = s[[i, t], :]
            if u is not None:
                u[[t, i], :] = u[[i, t], :]
        if j != t:
            s[:, [t, j]] = s[:, [j, t]]
            if v is not None:
                v[:, [t, j]] = v[:, [j, t]]
        if s[t, t] < 0:
            s[t, t:] = -s[t, t:]
            if u is not None:
                u[t, :] = -u[t, :]
        p = s[t, t]
        qs = s[t + 1:, t] // p
        if qs.any():
            s[t + 1:, t:] -= qs[:, None] * s[t, t:][None, :]
            if u is None:
                _check(fast, s[t + 1:, t:])
            else:
                u[t + 1:, :] -= qs[:, None] * u[t, :][None, :]
                _check(fast, s[t + 1:, t:], u[t + 1:, :])
        qs = s[t, t + 1:] // p
        if qs.any():
            s[t:, t + 1:] -= s[t:, t][:, None] * qs[None, :]
            if v is None:
                _check(fast, s[t:, t + 1:])
            else:
                v[:, t + 1:] -= v[:, t][:, None] * qs[None, :]
                _check(fast, s[t:, t + 1:], v[:, t + 1:])
        if p != 1 and (s[t + 1:, t].any() or s[t, t + 1:].any()):
            continue  # remainders left; re-pivot on a smaller entry
        if p > 1:
            rem = s[t + 1:, t + 1:]
            if rem.size:
                bad = np.nonzero(rem % p)
                if bad[0].size:
                    r = t + 1 + int(bad[0][0])
                    s[t, t:] += s[r, t:]
                    if u is None:
                        _check(fast, s[t, t:])
                    else:
                        u[t, :] += u[r, :]
                        _check(fast, s[t, t:], u[t, :])
                    continue  # pivot must divide the remaining block
        t += 1
    return s, u, v


def smith_normal_form(m) -> SmithDecomposition:
    """Smith normal form with recorded unimodular transforms.

    Returns ``SmithDecomposition(u, s, v)`` with ``u @ m @ v == s``, the
    diagonal of s non-negative and each entry dividing the next.  Works for
    any rectangular matrix, including empty ones, and is deterministic:
    the pivot is always the smallest-magnitude nonzero entry (first in
    row-major order on ties), which keeps intermediate values small.
    """
    m = _prep(m)
    try:
        s, u, v = _smith_run(m, True, force_object=False)
    except _Promote:
        s, u, v = _smith_run(m, True, force_object=True)
    return SmithDecomposition(u=_to_object(u), s=_to_object(s),
                              v=_to_object(v))


def smith_diagonal(m) -> tuple[int, ...]:
    """Diagonal of the Smith normal form, skipping transform bookkeeping."""
    m = _prep(m)
    try:
        s, _, _ = _smith_run(m, False, force_object=False)
    except _Promote:
        s, _, _ = _smith_run(m, False, force_object=True)
    n = min(s.shape)
    return tuple(int(s[i, i]) for i in range(n))


def cokernel_invariants(m) -> FgAbGroup:
    """Canonical form of Z^rows / (column lattice of m).

    The free rank is rows - rank(m); the invariant factors are the Smith
    diagonal entries exceeding 1.
    """
    m = _prep(m)
    diag = smith_diagonal(m)
    rank = sum(1 for d in diag if d)
    return FgAbGroup(m.shape[0] - rank, tuple(d for d in diag if d > 1))


@dataclass(frozen=True)
class HermiteDecomposition:
    """Column-style Hermite form: m @ u = h with u unimodular.

    ``h`` is in column echelon form: the first nonzero entry of column j
    sits at row ``pivots[j][0]``, those rows strictly increasing, every
    pivot positive, and entries left of a pivot in its row reduced to
    [0, pivot).  Columns past ``rank`` are zero.
    """

    h: np.ndarray
    u: np.ndarray
    pivots: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, v) -> np.ndarray | None:
        """Integer x with (original matrix) @ x = v, or None.

        Forward substitution over the pivots of h; the solution is pulled
        back through u.
        """
        v = as_intvec(v, self.h.shape[0]).copy()
        y = np.zeros(self.h.shape[1], dtype=object)
        for r, c in self.pivots:
            q, rem = divmod(int(v[r]), int(self.h[r, c]))
            if rem:
                return None
            if q:
                y[c] = q
                v = v - q * self.h[:, c]
        if any(x != 0 for x in v):
            return None
        return self.u @ y


def _hermite_run(m: np.ndarray, force_object: bool):
    h, fast = _working(m, force_object)
    rows, cols = h.shape
    u = np.eye(cols, dtype=np.int64 if fast else object)
    pivots = []
    pc = 0
    for r in range(rows):
        if pc == cols:
            break
        while True:
            seg = h[r, pc:]
            nz = np.nonzero(seg)[0]
            if nz.size == 0:
                break
            k = int(np.argmin(np.abs(seg[nz])))
            c0 = pc + int(nz[k])
            if c0 != pc:
                h[:, [pc, c0]] = h[:, [c0, pc]]
                u[:, [pc, c0]] = u[:, [c0, pc]]
            if h[r, pc] < 0:
                h[:, pc] = -h[:, pc]
                u[:, pc] = -u[:, pc]
            p = h[r, pc]
            qs = h[r, pc + 1:] // p
            if qs.any():
                h[:, pc + 1:] -= h[:, pc][:, None] * qs[None, :]
                u[:, pc + 1:] -= u[:, pc][:, None] * qs[None, :]
                _check(fast, h[:, pc + 1:], u[:, pc + 1:])
            if not h[r, pc + 1:].any():
                break
        if pc < cols and h[r, pc] != 0:
            qs = h[r, :pc] // h[r, pc]
            if qs.any():
                h[:, :pc] -= h[:, pc][:, None] * qs[None, :]
                u[:, :pc] -= u[:, pc][:, None] * qs[None, :]
                _check(fast, h[:, :pc], u[:, :pc])
            pivots.append((r, pc))
            pc += 1
    return h, u, tuple(pivots)


def hermite_normal_form(m) -> HermiteDecomposition:
    """Column-style Hermite normal form with its unimodular transform."""
    m = _prep(m)
    try:
        h, u, pivots = _hermite_run(m, force_object=False)
    except _Promote:
        h, u, pivots = _hermite_run(m, force_object=True)
    return HermiteDecomposition(h=_to_object(h), u=_to_object(u),
                                pivots=pivots)


def kernel_basis(m) -> np.ndarray:
    """Basis of the integer kernel lattice {x : m @ x = 0}, as columns.

    The result has shape (cols, k); k = 0 means the kernel is trivial.
    Because the basis comes from the unimodular Hermite transform it spans
    the full kernel lattice, not a finite-index sublattice.
    """
    dec = hermite_normal_form(m)
    return dec.u[:, dec.rank:]


def lattice_solve(m, v) -> np.ndarray | None:
    """Integer x with m @ x = v, or None when v is outside the lattice."""
    m = _prep(m)
    as_intvec(v, m.shape[0])
    return hermite_normal_form(m).solve(v)


def lattice_contains(m, v) -> bool:
    """True iff v lies in the column lattice of m."""
    return lattice_solve(m, v) is not None
