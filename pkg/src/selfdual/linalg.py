"""Matrix routines over arbitrary field objects.

Rows are tuples of elements.  Elimination uses deterministic pivoting:
leftmost column first, and among candidate rows the one whose entry has
the least canonical index.  For bulk determinant work over small fields
a discrete-log table turns every field operation into integer lookups.
"""
from __future__ import annotations

from .errors import ZeroElement
from .fields import Element, Field, find_primitive_element


def mat_transpose(rows):
    return tuple(zip(*rows))


def mat_mul(a, b_t, field: Field):
    """Product a @ b given b transposed (rows of b_t are columns of b)."""
    zero = field.zero
    out = []
    for row in a:
        out_row = []
        for col in b_t:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def row_reduce(rows, field: Field):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= len(mat):
            break
        candidates = [(field.index(mat[i][col]), i)
                      for i in range(r, len(mat)) if mat[i][col]]
        if not candidates:
            continue
        _, sel = min(candidates)
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [u - factor * v for u, v in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in mat[:r] if any(row)), tuple(pivots)


def matrix_rank(rows, field: Field) -> int:
    reduced, _ = row_reduce(rows, field)
    return len(reduced)


def null_space(rows, n: int, field: Field):
    """Basis of the right kernel of a k x n matrix, as rows."""
    reduced, pivots = row_reduce(rows, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    zero, one = field.zero, field.one
    basis = []
    for f in free_cols:
        vec = [zero] * n
        vec[f] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][f]
        basis.append(tuple(vec))
    return tuple(basis)


def det_nonzero(rows, field: Field) -> bool:
    """Whether a square matrix is nonsingular (generic, division-based)."""
    mat = [list(r) for r in rows]
    k = len(mat)
    for col in range(k):
        sel = None
        for i in range(col, k):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            return False
        if sel != col:
            mat[col], mat[sel] = mat[sel], mat[col]
        inv = mat[col][col].inverse()
        for i in range(col + 1, k):
            if mat[i][col]:
                factor = mat[i][col] * inv
                mat[i] = [u - factor * v for u, v in zip(mat[i], mat[col])]
    return True


class DlogTable:
    """Log-table arithmetic for a field of order at most a few million.

    Elements are encoded as the exponent of the canonical primitive
    element, with -1 for zero.  Addition goes through the table
    z[d] = log(1 + g**d), built once per field.
    """

    def __init__(self, field: Field):
        q = field.order
        g = find_primitive_element(field)
        pow_idx = [0] * (q - 1)  # exponent -> canonical element index
        log = [-1] * q           # canonical element index -> exponent
        acc = field.one
        for e in range(q - 1):
            idx = field.index(acc)
            pow_idx[e] = idx
            log[idx] = e
            acc = acc * g
        p = field.char
        zech = [-1] * (q - 1)
        for e in range(q - 1):
            idx = pow_idx[e]
            # adding one only touches the constant coefficient
            low = idx % p
            bumped = idx - low + (low + 1) % p
            zech[e] = log[bumped]
        self.field = field
        self.q = q
        self.log = log
        self.pow_idx = pow_idx
        self.zech = zech

    def encode(self, x: Element) -> int:
        if not x:
            return -1
        return self.log[self.field.index(x)]

    def decode(self, code: int) -> Element:
        if code == -1:
            return self.field.zero
        return self.field.from_int(self.pow_idx[code])

    def det_nonzero(self, rows: list[list[int]]) -> bool:
        """Nonsingularity of a square matrix of encoded entries."""
        k = len(rows)
        m = self.q - 1
        zech = self.zech
        mat = [row[:] for row in rows]
        for col in range(k):
            sel = None
            for i in range(col, k):
                if mat[i][col] != -1:
                    sel = i
                    break
            if sel is None:
                return False
            if sel != col:
                mat[col], mat[sel] = mat[sel], mat[col]
            pivot = mat[col][col]
            prow = mat[col]
            for i in range(col + 1, k):
                entry = mat[i][col]
                if entry == -1:
                    continue
                # row_i -= (entry/pivot) * row_col
                shift = (entry - pivot) % m
                row = mat[i]
                for j in range(col, k):
                    v = prow[j]
                    if v == -1:
                        continue
                    sub = (v + shift) % m
                    cur = row[j]
                    if cur == -1:
                        # 0 - g**sub
                        row[j] = self._neg(sub)
                    else:
                        row[j] = self._sub(cur, sub)
        return True

    def _neg(self, code: int) -> int:
        if self.field.char == 2:
            return code
        return (code + (self.q - 1) // 2) % (self.q - 1)

    def _sub(self, c1: int, c2: int) -> int:
        # g**c1 - g**c2
        return self._add(c1, self._neg(c2))

    def _add(self, c1: int, c2: int) -> int:
        if c1 == -1:
            return c2
        if c2 == -1:
            return c1
        m = self.q - 1
        d = (c2 - c1) % m
        z = self.zech[d]
        if z == -1:
            return -1
        return (c1 + z) % m


_DLOG_CACHE: dict = {}


def dlog_table(field: Field, limit: int) -> DlogTable | None:
    """Cached table for fields up to ``limit`` elements; None beyond."""
    if field.order > limit:
        return None
    table = _DLOG_CACHE.get(field)
    if table is None:
        table = DlogTable(field)
        _DLOG_CACHE[field] = table
    return table
