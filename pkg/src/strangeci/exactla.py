"""Exact dense linear algebra over GF(p^m).

Matrices carry integer-encoded entries (see :mod:`strangeci.gf`) and a
field reference.  Elimination uses deterministic pivoting: the first
nonzero entry scanning left-to-right, top-to-bottom.  Kernel bases and
span-membership witnesses are therefore reproducible across runs.
"""

from __future__ import annotations

from .errors import FieldMismatchError, InvalidInputError
from .gf import Field, FieldElement


class MatrixOverField:
    """Dense row-major matrix of integer-encoded field elements."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        self.field = field
        clean = []
        for row in rows:
            r = [e.val if isinstance(e, FieldElement) else int(e) % field.order for e in row]
            clean.append(r)
        if clean:
            ncols_found = len(clean[0])
            if any(len(r) != ncols_found for r in clean):
                raise InvalidInputError("ragged matrix rows")
            if ncols is not None and ncols != ncols_found:
                raise InvalidInputError("declared column count disagrees with rows")
            ncols = ncols_found
        elif ncols is None:
            ncols = 0
        self.rows = clean
        self.nrows = len(clean)
        self.ncols = ncols

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def transpose(self) -> "MatrixOverField":
        return MatrixOverField(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __repr__(self) -> str:
        return f"<{self.nrows}x{self.ncols} matrix over {self.field}>"


def rref(field: Field, rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (reduced rows, pivot columns)."""
    R = [list(r) for r in rows]
    m = len(R)
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        sel = -1
        for r in range(pr, m):
            if R[r][col]:
                sel = r
                break
        if sel < 0:
            continue
        R[pr], R[sel] = R[sel], R[pr]
        inv = field.inv(R[pr][col])
        if inv != 1:
            R[pr] = [field.mul(x, inv) for x in R[pr]]
        for r in range(m):
            if r != pr and R[r][col]:
                f = R[r][col]
                R[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(R[r], R[pr])]
        pivots.append(col)
        pr += 1
        if pr == m:
            break
    return R, pivots


def rank(M: MatrixOverField) -> int:
    _, pivots = rref(M.field, M.rows, M.ncols)
    return len(pivots)


def rank_and_kernel(M: MatrixOverField) -> tuple[int, list[list[int]]]:
    """Rank and a reduced-echelon basis of the right kernel.

    Kernel vectors are returned as lists of integer-encoded entries; each
    basis vector has a 1 in its free column and zeros in the free columns
    of the other basis vectors, so the basis is already reduced echelon.
    """
    F = M.field
    R, pivots = rref(F, M.rows, M.ncols)
    pivot_set = set(pivots)
    free = [j for j in range(M.ncols) if j not in pivot_set]
    basis = []
    for j in free:
        vec = [0] * M.ncols
        vec[j] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = F.neg(R[r][j])
        basis.append(vec)
    return len(pivots), basis


def invert(M: MatrixOverField) -> MatrixOverField:
    """Inverse of a square matrix; raises on singular input."""
    if M.nrows != M.ncols:
        raise InvalidInputError("matrix is not square")
    n = M.nrows
    aug = [list(M.rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref(M.field, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise InvalidInputError("matrix is singular")
    return MatrixOverField(M.field, [r[n:] for r in R], ncols=n)


def mat_vec(M: MatrixOverField, vec: list[int]) -> list[int]:
    F = M.field
    out = []
    for row in M.rows:
        acc = 0
        for a, b in zip(row, vec):
            acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def mat_mul(A: MatrixOverField, B: MatrixOverField) -> MatrixOverField:
    if A.field != B.field:
        raise FieldMismatchError("matrix product over mixed fields")
    if A.ncols != B.nrows:
        raise InvalidInputError("inner dimensions disagree")
    F = A.field
    rows = []
    for i in range(A.nrows):
        row = []
        for j in range(B.ncols):
            acc = 0
            for k in range(A.ncols):
                acc = F.add(acc, F.mul(A.rows[i][k], B.rows[k][j]))
            row.append(acc)
        rows.append(row)
    return MatrixOverField(F, rows, ncols=B.ncols)


def in_span(
    field: Field, target: list[int], generators: list[list[int]]
) -> tuple[bool, list[int] | None]:
    """Decide membership of a vector in the span of generator vectors.

    Returns (verdict, witness); on success the witness c satisfies
    target = sum_i c_i * generators[i] (free coefficients set to zero).
    """
    n = len(target)
    if any(len(g) != n for g in generators):
        raise InvalidInputError("generator length mismatch")
    if all(x == 0 for x in target):
        return True, [0] * len(generators)
    if not generators:
        return False, None
    # columns = generators, augmented with the target
    aug = [[g[i] for g in generators] + [target[i]] for i in range(n)]
    R, pivots = rref(field, aug, len(generators) + 1)
    if len(generators) in pivots:
        return False, None
    witness = [0] * len(generators)
    for r, pc in enumerate(pivots):
        witness[pc] = R[r][len(generators)]
    return True, witness
