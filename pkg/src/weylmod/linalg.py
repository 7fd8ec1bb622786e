"""Exact rational Gaussian elimination: kernels, ranks, span comparisons.

All matrices are dense lists of lists of Fraction.  Pivoting is deterministic
(first nonzero entry in column scan order), so kernel bases and ranks are
reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Q, Vec, mono_key


def rref(rows):
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    m = [list(map(Q, r)) for r in rows if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows, ncols: int):
    """Exact basis of the common kernel of the given row functionals.

    Each row is a length-``ncols`` coefficient list.  The returned basis is
    canonical: one vector per free column, with entry 1 at that column, in
    increasing free-column order.
    """
    red, pivots = rref([r for r in rows])
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        vec = [Q(0)] * ncols
        vec[fc] = Q(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -red[ri][fc]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# spans of sparse vectors
# ---------------------------------------------------------------------------


def vec_matrix(vecs):
    """Common-coordinate matrix for a family of Vec: (monomial list, rows)."""
    monos = sorted({m for v in vecs for m in v.terms}, key=mono_key)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for v in vecs:
        row = [Q(0)] * len(monos)
        for m, c in v.terms.items():
            row[index[m]] = c
        rows.append(row)
    return monos, rows


def span_rank(vecs) -> int:
    _, rows = vec_matrix(vecs)
    return rank(rows)


def in_span(v: Vec, vecs) -> bool:
    if v.is_zero():
        return True
    base = span_rank(list(vecs))
    return span_rank(list(vecs) + [v]) == base


def spans_equal(avecs, bvecs) -> bool:
    ra = span_rank(list(avecs))
    rb = span_rank(list(bvecs))
    return ra == rb == span_rank(list(avecs) + list(bvecs))
