"""Pointwise projective geometry over finite fields.

Projective points, Jacobian matrices, tangent spaces, the Gauss map, the
Jacobian singularity criterion, and exhaustive singular-point search over
bounded field extensions.

The search enumerates normalized projective representatives (first nonzero
coordinate 1) over GF(p^m) for m = 1..m_max.  Evaluation of the defining
polynomials is vectorized with numpy over blocks of points, using the
field's discrete-log tables; the Jacobian rank test runs only on the few
survivors of the zero-set filter.  Found points are reported at their
minimal field of definition, Galois orbits collapsed to the representative
least in enumeration order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    InvalidInputError,
    SingularPointError,
)
from .exactla import MatrixOverField, rank, rank_and_kernel, rref
from .gf import Field, FieldElement, make_field
from .hompoly import HomogeneousPolynomial, format_poly, parse_poly

DEFAULT_BUDGET = 100_000_000


def point_budget() -> int:
    """Point-evaluation budget; STRANGECI_BUDGET overrides the default."""
    raw = os.environ.get("STRANGECI_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidInputError(f"STRANGECI_BUDGET is not an integer: {raw!r}")
    return DEFAULT_BUDGET


class ProjectivePoint:
    """A point of P^N over GF(p^m), canonically normalized.

    Coordinates are integer-encoded field elements scaled so that the
    first nonzero coordinate equals 1.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords):
        vals = [c.val if isinstance(c, FieldElement) else int(c) % field.order for c in coords]
        pivot = next((i for i, v in enumerate(vals) if v), None)
        if pivot is None:
            raise InvalidInputError("projective point needs a nonzero coordinate")
        if vals[pivot] != 1:
            inv = field.inv(vals[pivot])
            vals = [field.mul(v, inv) for v in vals]
        self.field = field
        self.coords = tuple(vals)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProjectivePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def frobenius(self) -> "ProjectivePoint":
        F = self.field
        return ProjectivePoint(F, [F.frobenius(c) for c in self.coords])

    def minimal_subfield_degree(self) -> int:
        """Smallest d with all coordinates fixed by the d-fold Frobenius."""
        F = self.field
        cur = self.coords
        for d in range(1, F.m + 1):
            cur = tuple(F.frobenius(c) for c in cur)
            if cur == self.coords:
                return d
        return F.m

    def galois_canonical(self) -> "ProjectivePoint":
        """Least Frobenius-orbit representative in enumeration order."""
        F = self.field
        best = self.coords
        cur = self.coords
        for _ in range(F.m - 1):
            cur = tuple(F.frobenius(c) for c in cur)
            if cur < best:
                best = cur
        return ProjectivePoint(F, best)

    def __str__(self) -> str:
        body = ":".join(self.field.format(c) for c in self.coords)
        if self.field.m > 1:
            return f"@GF({self.field.p}^{self.field.m})({body})"
        return f"({body})"

    __repr__ = __str__


def parse_point(text: str, default_field: Field) -> ProjectivePoint:
    """Parse ``(c0:c1:...:cN)``, optionally prefixed ``@GF(p^m)``."""
    s = text.strip()
    fld = default_field
    if s.startswith("@"):
        head, _, rest = s.partition(")")
        spec = head[1:] + ")"
        s = rest.strip()
        inner = spec[spec.index("(") + 1 : -1]
        if "^" in inner:
            p_str, m_str = inner.split("^")
        else:
            p_str, m_str = inner, "1"
        fld = make_field(int(p_str), int(m_str))
    if not (s.startswith("(") and s.endswith(")")):
        raise InvalidInputError(f"bad point syntax: {text!r}")
    parts = s[1:-1].split(":")
    return ProjectivePoint(fld, [fld.parse(part) for part in parts])


class PolynomialSystem:
    """Ordered generators (f^1, ..., f^r) of degrees (e^1, ..., e^r) in P^N.

    Generators have prime-field coefficients; evaluation points may live in
    any extension GF(p^m).
    """

    __slots__ = ("field", "n", "r", "degrees", "gens")

    def __init__(self, gens: list[HomogeneousPolynomial]):
        if not gens:
            raise InvalidInputError("a system needs at least one generator")
        field = gens[0].field
        n_vars = gens[0].n_vars
        for g in gens:
            if g.field != field or g.n_vars != n_vars:
                raise FieldMismatchError("generators live in different rings")
            if g.is_zero():
                raise InvalidInputError("zero generator rejected")
            if g.degree < 1:
                raise InvalidInputError("generator degrees must be >= 1")
        if len(gens) > n_vars - 1:
            raise InvalidInputError(f"too many generators: r={len(gens)} > N={n_vars - 1}")
        self.field = field
        self.n = n_vars - 1
        self.r = len(gens)
        self.degrees = tuple(g.degree for g in gens)
        self.gens = tuple(gens)

    @classmethod
    def parse(cls, texts: list[str], field: Field, n_vars: int) -> "PolynomialSystem":
        return cls([parse_poly(t, field, n_vars) for t in texts])

    def linear_change(self, matrix) -> "PolynomialSystem":
        return PolynomialSystem([g.linear_change(matrix) for g in self.gens])

    def evaluate_all(self, coords, point_field: Field) -> list[int]:
        return [g.evaluate(coords, point_field) for g in self.gens]

    def on_zero_set(self, a: ProjectivePoint) -> bool:
        return all(v == 0 for v in self.evaluate_all(a.coords, a.field))

    def __str__(self) -> str:
        return "; ".join(format_poly(g) for g in self.gens)

    __repr__ = __str__


class LinearSubspace:
    """A vector subspace of K^(N+1), basis rows in reduced echelon form."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: Field, ambient_dim: int, basis):
        rows = [
            [e.val if isinstance(e, FieldElement) else int(e) % field.order for e in row]
            for row in basis
        ]
        if any(len(r) != ambient_dim for r in rows):
            raise InvalidInputError("basis vector length mismatch")
        R, pivots = rref(field, rows, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in R[: len(pivots)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        vals = [e.val if isinstance(e, FieldElement) else int(e) % self.field.order for e in vec]
        from .exactla import in_span

        ok, _ = in_span(self.field, vals, [list(b) for b in self.basis])
        return ok

    def contains_point(self, a: ProjectivePoint) -> bool:
        if a.field != self.field:
            raise FieldMismatchError("point and subspace over different fields")
        return self.contains(list(a.coords))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearSubspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self) -> str:
        return f"<subspace dim {self.dim} of K^{self.ambient_dim} over {self.field}>"


# -- Jacobians ------------------------------------------------------------


def jacobian_full(S: PolynomialSystem, a: ProjectivePoint) -> MatrixOverField:
    """The r x (N+1) matrix [f^k_{z_j}(a)], j = 0..N."""
    F = a.field
    rows = []
    for g in S.gens:
        rows.append([g.partial_derivative(j).evaluate(a.coords, F) for j in range(S.n + 1)])
    return MatrixOverField(F, rows, ncols=S.n + 1)


def jacobian_D(S: PolynomialSystem, a: ProjectivePoint) -> MatrixOverField:
    """Columns j = 1..N (drops the vanishing z_0-column of strange systems)."""
    full = jacobian_full(S, a)
    return MatrixOverField(full.field, [row[1:] for row in full.rows], ncols=S.n)


def jacobian_Dprime(S: PolynomialSystem, a: ProjectivePoint) -> MatrixOverField:
    """Columns j = 1..N-1."""
    full = jacobian_full(S, a)
    return MatrixOverField(full.field, [row[1:-1] for row in full.rows], ncols=S.n - 1)


def tangent_space(S: PolynomialSystem, x: ProjectivePoint) -> LinearSubspace:
    """Embedded tangent space at a smooth point, as the kernel of the Jacobian."""
    if not S.on_zero_set(x):
        raise InvalidInputError("point does not lie on the zero set")
    J = jacobian_full(S, x)
    rk, kernel = rank_and_kernel(J)
    if rk < S.r:
        raise SingularPointError(f"Jacobian rank {rk} < r = {S.r} at {x}")
    return LinearSubspace(x.field, S.n + 1, kernel)


def gauss_map(f: HomogeneousPolynomial, a: ProjectivePoint) -> ProjectivePoint:
    """Dual point of the tangent hyperplane of the hypersurface (f=0) at a."""
    F = a.field
    if f.evaluate(a.coords, F) != 0:
        raise InvalidInputError("point does not lie on the hypersurface")
    grad = [f.partial_derivative(j).evaluate(a.coords, F) for j in range(f.n_vars)]
    if all(v == 0 for v in grad):
        raise SingularPointError(f"all partials vanish at {a}")
    return ProjectivePoint(F, grad)


def is_singular_at(S: PolynomialSystem, a: ProjectivePoint) -> bool:
    """Jacobian criterion: on the zero set with full Jacobian rank < r."""
    if not S.on_zero_set(a):
        return False
    return rank(jacobian_full(S, a)) < S.r


# -- singular-point search ------------------------------------------------


@dataclass
class _Compiled:
    """A polynomial flattened for fast evaluation: (coeff, [(var, exp), ...])."""

    terms: list[tuple[int, list[tuple[int, int]]]] = dc_field(default_factory=list)


def _compile(f: HomogeneousPolynomial) -> _Compiled:
    out = _Compiled()
    for mono, c in f.sorted_terms():
        out.terms.append((c, [(i, e) for i, e in enumerate(mono) if e]))
    return out


class _VecField:
    """Vectorized arithmetic on integer-encoded GF(p^m) values."""

    def __init__(self, field: Field):
        self.field = field
        self.p = field.p
        self.m = field.m
        self.q = field.order
        if field.m > 1:
            self.exp = np.array(field._exp + field._exp, dtype=np.int64)
            self.log = np.array(field._log, dtype=np.int64)

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros_like(a)
        shift = 1
        x, y = a, b
        for _ in range(self.m):
            out += ((x + y) % self.p) * shift
            x = x // self.p
            y = y // self.p
            shift *= self.p
        return out

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        nz = (a != 0) & (b != 0)
        out = np.zeros_like(a)
        av = a[nz] if isinstance(a, np.ndarray) else a
        bv = b[nz]
        out[nz] = self.exp[self.log[av] + self.log[bv]]
        return out

    def pow_scalar_exp(self, a, e: int):
        """a**e elementwise for a fixed small integer exponent e >= 1."""
        if self.m == 1:
            return pow_mod_array(a, e, self.p)
        nz = a != 0
        out = np.zeros_like(a)
        out[nz] = self.exp[(self.log[a[nz]] * e) % (self.q - 1)]
        return out

    def eval_poly(self, comp: _Compiled, coords: np.ndarray) -> np.ndarray:
        """Evaluate at a block of points; coords has shape (n_pts, n_vars)."""
        n_pts = coords.shape[0]
        acc = np.zeros(n_pts, dtype=np.int64)
        for c, factors in comp.terms:
            t = np.full(n_pts, c, dtype=np.int64)
            for idx, e in factors:
                col = coords[:, idx]
                t = self.mul(t, col if e == 1 else self.pow_scalar_exp(col, e))
            acc = self.add(acc, t)
        return acc


def pow_mod_array(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = (out * base) % p
        base = (base * base) % p
        e >>= 1
    return out


def _point_blocks(q: int, n_plus_1: int, block: int = 1 << 16):
    """Yield blocks of normalized projective representatives over GF(q).

    For pivot position i the coordinates are (0,...,0,1,*,...,*) with the
    free tail enumerated in odometer order, last coordinate fastest.
    """
    for pivot in range(n_plus_1):
        free = n_plus_1 - 1 - pivot
        total = q**free
        start = 0
        while start < total:
            count = min(block, total - start)
            idx = np.arange(start, start + count, dtype=np.int64)
            coords = np.zeros((count, n_plus_1), dtype=np.int64)
            coords[:, pivot] = 1
            rem = idx
            for j in range(n_plus_1 - 1, pivot, -1):
                coords[:, j] = rem % q
                rem = rem // q
            yield coords
            start += count


def singular_search(
    S: PolynomialSystem,
    m_max: int = 3,
    budget: int | None = None,
    stop_early: bool = False,
) -> list[tuple[int, ProjectivePoint]]:
    """All singular points rational over GF(p^m), m = 1..m_max.

    Each point is reported once, at its minimal field of definition, with
    Galois-conjugate orbits collapsed to the representative least in
    enumeration order.  Raises BudgetExceededError (with partial results)
    when the point-evaluation budget runs out.  With ``stop_early`` the
    scan stops after the first extension degree that yields any point.
    """
    if m_max < 1:
        raise InvalidInputError("m_max must be >= 1")
    if budget is None:
        budget = point_budget()
    p = S.field.p
    found: list[tuple[int, ProjectivePoint]] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()
    used = 0
    for m in range(1, m_max + 1):
        F = make_field(p, m)
        vf = _VecField(F)
        comp_gens = [_compile(g.lift_to(F)) for g in S.gens]
        partials = [
            [_compile(g.partial_derivative(j).lift_to(F)) for j in range(S.n + 1)]
            for g in S.gens
        ]
        level_hits: list[ProjectivePoint] = []
        for coords in _point_blocks(F.order, S.n + 1):
            used += coords.shape[0]
            if used > budget:
                raise BudgetExceededError(
                    f"point budget {budget} exhausted at extension degree {m}",
                    partial=found,
                    completed_m=m - 1,
                )
            mask = np.ones(coords.shape[0], dtype=bool)
            for comp in comp_gens:
                vals = vf.eval_poly(comp, coords[mask]) if mask.any() else None
                if vals is None:
                    break
                sub = vals == 0
                idx = np.flatnonzero(mask)
                mask[idx[~sub]] = False
                if not mask.any():
                    break
            if not mask.any():
                continue
            survivors = coords[mask]
            for row in survivors:
                rows = [
                    [comp_eval_scalar(pt, row, F) for pt in prow] for prow in partials
                ]
                M = MatrixOverField(F, rows, ncols=S.n + 1)
                if rank(M) < S.r:
                    level_hits.append(ProjectivePoint(F, [int(v) for v in row]))
        for pt in level_hits:
            d = pt.minimal_subfield_degree()
            if d < m:
                continue  # already reported over the smaller field
            canon = pt.galois_canonical()
            key = (m, canon.coords)
            if key in seen:
                continue
            seen.add(key)
            found.append((m, canon))
        if stop_early and found:
            break
    return found


def comp_eval_scalar(comp: _Compiled, coords, F: Field) -> int:
    acc = 0
    for c, factors in comp.terms:
        t = c
        for idx, e in factors:
            v = int(coords[idx])
            if v == 0:
                t = 0
                break
            t = F.mul(t, F.pow(v, e))
        acc = F.add(acc, t)
    return acc


def enumerate_points(field: Field, n: int):
    """All points of P^n(GF(q)) in deterministic enumeration order."""
    for coords in _point_blocks(field.order, n + 1):
        for row in coords:
            yield ProjectivePoint(field, [int(v) for v in row])
