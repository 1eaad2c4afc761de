"""Exact linear algebra over F_q on integer-indexed matrices.

Rows are lists of element indices (see Field.index); all elimination is
table-driven and exact. The span enumerators expand F_q-vectors into
base-p digit vectors so that bulk enumeration can run through numpy in
chunks while staying exact integer arithmetic mod p.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .finite_field import EnumerationTooLarge, Field, FieldElem

_CHUNK = 1 << 19  # rows per numpy block in span enumeration


def to_index_rows(rows: Sequence[Sequence[FieldElem]], field: Field) -> list[list[int]]:
    return [[field.index(x) for x in row] for row in rows]


def from_index_row(row: Sequence[int], field: Field) -> tuple[FieldElem, ...]:
    return tuple(field.from_index(i) for i in row)


def rref(rows: Sequence[Sequence[int]], field: Field) -> list[list[int]]:
    """Reduced row echelon form; returns the nonzero rows (canonical basis)."""
    t = field.tables()
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = t.inv[mat[pivot_row][col]]
        if inv != t.one:
            mul_inv = t.mul[inv]
            mat[pivot_row] = [mul_inv[x] for x in mat[pivot_row]]
        prow = mat[pivot_row]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                factor = mat[r][col]
                mul_f = t.mul[factor]
                sub = t.sub
                mat[r] = [sub[x][mul_f[y]] for x, y in zip(mat[r], prow)]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return [r for r in mat[:pivot_row]]


def rank(rows: Sequence[Sequence[int]], field: Field) -> int:
    return len(rref(rows, field))


def nullspace(
    rows: Sequence[Sequence[int]], field: Field, ncols: int | None = None
) -> list[list[int]]:
    """Canonical basis of {y : M y^T = 0} for the row matrix M.

    ``ncols`` is required when the matrix has no rows (the kernel is then
    the whole space).
    """
    t = field.tables()
    red = rref(rows, field)
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
    else:
        ncols = len(rows[0])
    pivots = []
    for r in red:
        for c, x in enumerate(r):
            if x != 0:
                pivots.append(c)
                break
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        y = [0] * ncols
        y[j] = t.one
        for r, pc in zip(red, pivots):
            y[pc] = t.neg[r[j]]
        basis.append(y)
    return rref(basis, field)


def canonical_subspace(rows: Sequence[Sequence[int]], field: Field) -> tuple:
    """A hashable canonical form of the row span (for subspace equality)."""
    return tuple(tuple(r) for r in rref(rows, field))


def span_vectors(
    rows: Sequence[Sequence[int]], field: Field, bound: int = 10**4
) -> set[tuple[int, ...]]:
    """The full row span as a set of index tuples (small spaces only)."""
    t = field.tables()
    basis = rref(rows, field)
    size = field.q ** len(basis)
    if size > bound:
        raise EnumerationTooLarge(f"span size {size} exceeds bound {bound}")
    ncols = len(rows[0]) if rows else 0
    scaled = [[[t.mul[c][x] for x in row] for c in range(field.q)] for row in basis]
    out = {tuple([0] * ncols)}
    words = [tuple([0] * ncols)]
    add = t.add
    for srow in scaled:
        new_words = []
        for w in words:
            for sc in srow[1:]:
                nw = tuple(add[a][b] for a, b in zip(w, sc))
                new_words.append(nw)
        words.extend(new_words)
        out.update(new_words)
    return out


def _digit_rows(basis: list[list[int]], field: Field) -> np.ndarray:
    """Expand an F_q basis into a Z_p basis of the same span, as digit rows.

    Row r becomes the m rows w^j * r, each flattened to its m base-p digits
    per coordinate, so the Z_p span of the result is the digit image of the
    F_q span.
    """
    m = field.m
    out = []
    for row in basis:
        elems = [field.from_index(i) for i in row]
        scale = field.one
        for _ in range(m):
            scaled = [scale * e for e in elems]
            out.append([d for e in scaled for d in e.coeffs])
            scale = scale * field.gen if m > 1 else scale
    return np.array(out, dtype=np.int64)


def span_min_weight(
    rows: Sequence[Sequence[int]], field: Field, bound: int = 10**6
) -> int | None:
    """Minimum Hamming weight over the nonzero vectors of the row span.

    Weight counts nonzero F_q coordinates. Returns None when the span is
    the zero space. Exhaustive and exact; raises when the span is larger
    than ``bound``.
    """
    basis = rref(rows, field)
    if not basis:
        return None
    size = field.q ** len(basis)
    if size > bound:
        raise EnumerationTooLarge(f"span size {size} exceeds bound {bound}")
    p, m = field.p, field.m
    ncoords = len(basis[0])
    zrows = _digit_rows(basis, field)
    k = len(zrows)
    # split scalar choices: outer rows iterated in python, inner block in numpy
    inner_k = k
    while p**inner_k > _CHUNK:
        inner_k -= 1
    inner = np.zeros((1, ncoords * m), dtype=np.int64)
    for row in zrows[k - inner_k :]:
        inner = (inner[:, None, :] + np.arange(p)[None, :, None] * row) % p
        inner = inner.reshape(-1, ncoords * m)
    best = None
    outer_rows = zrows[: k - inner_k]
    for combo in itertools.product(range(p), repeat=k - inner_k):
        offset = np.zeros(ncoords * m, dtype=np.int64)
        for c, row in zip(combo, outer_rows):
            if c:
                offset = (offset + c * row) % p
        words = (inner + offset) % p
        nz = words.reshape(len(words), ncoords, m).any(axis=2).sum(axis=1)
        nz = nz[nz > 0]
        if len(nz):
            w = int(nz.min())
            if best is None or w < best:
                best = w
    return best
