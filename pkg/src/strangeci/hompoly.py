"""Sparse homogeneous multivariate polynomial arithmetic.

A polynomial in N+1 variables z_0, ..., z_N of fixed degree e is a map
from exponent vectors (length N+1, summing to e) to nonzero coefficients.
Coefficients are integer-encoded elements of the polynomial's field (see
:mod:`strangeci.gf`).  The zero polynomial is an empty term map with a
declared degree.

Terms are kept in graded-lexicographic order with z_0 greatest; since all
monomials of a homogeneous polynomial share the total degree, that is
plain descending lexicographic order on exponent vectors.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from math import factorial

from .errors import (
    FieldMismatchError,
    HomogeneityError,
    InvalidInputError,
    ParseError,
)
from .gf import Field, FieldElement

Monomial = tuple[int, ...]


def monomials_of_degree(n_vars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of total degree ``degree``, descending grlex."""
    out = []
    for combo in combinations_with_replacement(range(n_vars), degree):
        exps = [0] * n_vars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


class HomogeneousPolynomial:
    """Immutable sparse homogeneous polynomial over a finite field."""

    __slots__ = ("field", "n_vars", "degree", "terms")

    def __init__(self, field: Field, n_vars: int, degree: int, terms: dict[Monomial, int]):
        if n_vars < 1:
            raise InvalidInputError("need at least one variable")
        if degree < 0:
            raise InvalidInputError("degree must be non-negative")
        clean: dict[Monomial, int] = {}
        for mono, c in terms.items():
            if not 0 <= c < field.order:
                # out-of-range integers are treated as prime-subfield values
                c %= field.p
            if c == 0:
                continue
            if len(mono) != n_vars:
                raise InvalidInputError(f"exponent vector {mono} has wrong length")
            if any(e < 0 for e in mono):
                raise InvalidInputError(f"negative exponent in {mono}")
            if sum(mono) != degree:
                raise HomogeneityError(
                    f"monomial {mono} has degree {sum(mono)}, expected {degree}"
                )
            clean[mono] = c
        self.field = field
        self.n_vars = n_vars
        self.degree = degree
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field: Field, n_vars: int, degree: int) -> "HomogeneousPolynomial":
        return cls(field, n_vars, degree, {})

    @classmethod
    def monomial(cls, field: Field, n_vars: int, exps: Monomial, coeff: int = 1) -> "HomogeneousPolynomial":
        return cls(field, n_vars, sum(exps), {tuple(exps): coeff})

    @classmethod
    def from_coeff_vector(
        cls, field: Field, n_vars: int, degree: int, basis: list[Monomial], vec
    ) -> "HomogeneousPolynomial":
        return cls(field, n_vars, degree, {m: c for m, c in zip(basis, vec) if c})

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomogeneousPolynomial)
            and self.field == other.field
            and self.n_vars == other.n_vars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n_vars, self.degree, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "HomogeneousPolynomial") -> None:
        if self.field != other.field or self.n_vars != other.n_vars:
            raise FieldMismatchError("polynomials live in different rings")

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._check_compatible(other)
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise HomogeneityError("cannot add homogeneous polynomials of different degrees")
        degree = other.degree if self.is_zero() and other.terms else self.degree
        F = self.field
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = F.add(terms.get(mono, 0), c)
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return HomogeneousPolynomial(F, self.n_vars, degree, terms)

    def __neg__(self) -> "HomogeneousPolynomial":
        F = self.field
        return HomogeneousPolynomial(
            F, self.n_vars, self.degree, {m: F.neg(c) for m, c in self.terms.items()}
        )

    def __sub__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "HomogeneousPolynomial":
        F = self.field
        c %= F.order
        return HomogeneousPolynomial(
            F, self.n_vars, self.degree, {m: F.mul(v, c) for m, v in self.terms.items()}
        )

    def __mul__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._check_compatible(other)
        F = self.field
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = F.add(terms.get(mono, 0), F.mul(c1, c2))
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return HomogeneousPolynomial(F, self.n_vars, self.degree + other.degree, terms)

    def multiply_monomial(self, exps: Monomial, coeff: int = 1) -> "HomogeneousPolynomial":
        F = self.field
        return HomogeneousPolynomial(
            F,
            self.n_vars,
            self.degree + sum(exps),
            {
                tuple(a + b for a, b in zip(m, exps)): F.mul(c, coeff)
                for m, c in self.terms.items()
            },
        )

    # -- calculus ---------------------------------------------------------

    def partial_derivative(self, i: int) -> "HomogeneousPolynomial":
        """Formal partial derivative with respect to z_i, reduced mod p."""
        if not 0 <= i < self.n_vars:
            raise InvalidInputError(f"variable index {i} out of range")
        F = self.field
        terms: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            e = mono[i]
            if e == 0:
                continue
            k = F.mul(c, e % F.p)
            if k == 0:
                continue
            new = list(mono)
            new[i] = e - 1
            nm = tuple(new)
            s = F.add(terms.get(nm, 0), k)
            if s:
                terms[nm] = s
            else:
                terms.pop(nm, None)
        return HomogeneousPolynomial(F, self.n_vars, max(self.degree - 1, 0), terms)

    def iterated_derivative_z0(self, j: int) -> "HomogeneousPolynomial":
        """j-fold formal derivative with respect to z_0."""
        g = self
        for _ in range(j):
            g = g.partial_derivative(0)
        return g

    def evaluate(self, coords, point_field: Field | None = None) -> int:
        """Evaluate at a coordinate vector of integer-encoded elements.

        The point may live in an extension of the coefficient field as long
        as the coefficients themselves are prime-subfield residues (which is
        the case for all stored system generators).
        """
        F = point_field if point_field is not None else self.field
        coords = list(coords)
        if len(coords) != self.n_vars:
            raise InvalidInputError("coordinate vector has wrong length")
        if F != self.field:
            if F.p != self.field.p or any(c >= self.field.p for c in self.terms.values()):
                raise FieldMismatchError(
                    "evaluation field is not an extension of the coefficient field"
                )
        acc = 0
        for mono, c in self.terms.items():
            t = c
            for idx, e in enumerate(mono):
                if e == 0:
                    continue
                if coords[idx] == 0:
                    t = 0
                    break
                t = F.mul(t, F.pow(coords[idx], e))
            acc = F.add(acc, t)
        return acc

    def euler_identity_check(self) -> bool:
        """Whether sum_j z_j * f_{z_j} equals (e mod p) * f.  Always true."""
        F = self.field
        lhs = HomogeneousPolynomial.zero(F, self.n_vars, self.degree)
        for j in range(self.n_vars):
            exps = tuple(1 if i == j else 0 for i in range(self.n_vars))
            lhs = lhs + self.partial_derivative(j).multiply_monomial(exps)
        return lhs == self.scale(self.degree % F.p)

    # -- coordinate changes ----------------------------------------------

    def lift_to(self, field: Field) -> "HomogeneousPolynomial":
        """Reinterpret over an extension field (prime-subfield coefficients)."""
        if field == self.field:
            return self
        if field.p != self.field.p or any(c >= self.field.p for c in self.terms.values()):
            raise FieldMismatchError("can only lift prime-subfield coefficients")
        return HomogeneousPolynomial(field, self.n_vars, self.degree, dict(self.terms))

    def linear_change(self, matrix) -> "HomogeneousPolynomial":
        """Substitute z_i <- sum_j M[i][j] z_j for an invertible matrix M.

        M is given as rows of integer-encoded entries over the polynomial's
        field (or an extension; the polynomial is lifted first).
        """
        from .exactla import MatrixOverField, rank_and_kernel

        rows = [list(r) for r in matrix]
        n = self.n_vars
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InvalidInputError("matrix has wrong shape")
        F = self.field
        M = MatrixOverField(F, rows)
        rank, _ = rank_and_kernel(M)
        if rank < n:
            raise InvalidInputError("matrix is singular")
        # degree-1 substitution polynomials L_i = sum_j M[i][j] z_j
        subs = [
            HomogeneousPolynomial(
                F,
                n,
                1,
                {
                    tuple(1 if k == j else 0 for k in range(n)): rows[i][j]
                    for j in range(n)
                    if rows[i][j]
                },
            )
            for i in range(n)
        ]
        one = HomogeneousPolynomial(F, n, 0, {tuple([0] * n): 1})
        # cache powers of each L_i up to the needed exponent
        pow_cache: dict[tuple[int, int], HomogeneousPolynomial] = {}

        def lpow(i: int, e: int) -> HomogeneousPolynomial:
            if e == 0:
                return one
            key = (i, e)
            if key not in pow_cache:
                pow_cache[key] = lpow(i, e - 1) * subs[i]
            return pow_cache[key]

        result = HomogeneousPolynomial.zero(F, n, self.degree)
        for mono, c in self.terms.items():
            term = one.scale(c)
            for i, e in enumerate(mono):
                if e:
                    term = term * lpow(i, e)
            result = result + term
        return result

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<{self.field} poly deg {self.degree}: {format_poly(self)}>"


def normalize_z0(g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """Kill the z_0-partial while preserving the ideal modulo z_0.

    Returns g + sum_{j=1}^{p-1} (-1)^j z_0^j / j! * d^j g / d z_0^j.  The
    result has zero z_0-partial and differs from g by a multiple of z_0.
    """
    F = g.field
    p = F.p
    out = g
    for j in range(1, p):
        dj = g.iterated_derivative_z0(j)
        if dj.is_zero():
            continue
        scalar = ((-1) ** j * pow(factorial(j) % p, p - 2, p)) % p
        exps = tuple(j if i == 0 else 0 for i in range(g.n_vars))
        out = out + dj.multiply_monomial(exps, scalar)
    return out


_TOKEN_RE = re.compile(r"z(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, field: Field, n_vars: int) -> HomogeneousPolynomial:
    """Parse the ASCII polynomial grammar.

    poly := term ('+' term)*; term := [coeff '*']? factor ('*' factor)*;
    factor := 'z' index ['^' exponent]; coeff := integer or parenthesized
    extension element.  '-' is interpreted as +(p-1)*.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return HomogeneousPolynomial.zero(field, n_vars, 0)
    # split into signed terms at top level (outside parentheses)
    raw_terms: list[tuple[int, str]] = []
    depth = 0
    cur = ""
    sign = 1
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        if ch in "+-" and depth == 0:
            if cur:
                raw_terms.append((sign, cur))
                cur = ""
                sign = 1
            if ch == "-":
                sign = -sign
            continue
        cur += ch
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    if cur:
        raw_terms.append((sign, cur))
    if not raw_terms:
        raise ParseError(f"cannot parse polynomial {text!r}")

    F = field
    degree: int | None = None
    terms: dict[Monomial, int] = {}
    for sgn, term in raw_terms:
        # split factors at top-level '*'
        factors = []
        depth = 0
        cur = ""
        for ch in term:
            if ch == "(":
                depth += 1
            if ch == ")":
                depth -= 1
            if ch == "*" and depth == 0:
                factors.append(cur)
                cur = ""
                continue
            cur += ch
        if cur:
            factors.append(cur)
        coeff = 1
        exps = [0] * n_vars
        for fac in factors:
            if not fac:
                raise ParseError(f"empty factor in term {term!r}")
            if fac[0] == "z":
                mt = _TOKEN_RE.match(fac)
                if not mt:
                    raise ParseError(f"bad factor {fac!r}")
                idx = int(mt.group(1))
                if idx >= n_vars:
                    raise InvalidInputError(
                        f"variable z{idx} out of range for {n_vars} variables"
                    )
                exps[idx] += int(mt.group(2)) if mt.group(2) else 1
            elif fac[0] == "(" and fac[-1] == ")":
                coeff = F.mul(coeff, F.parse(fac[1:-1]))
            else:
                try:
                    coeff = F.mul(coeff, int(fac) % F.p)
                except ValueError as exc:
                    raise ParseError(f"bad factor {fac!r}") from exc
        if sgn < 0:
            coeff = F.neg(coeff)
        d = sum(exps)
        if degree is None:
            degree = d
        elif d != degree:
            raise HomogeneityError(f"term {term!r} has degree {d}, expected {degree}")
        mono = tuple(exps)
        c = F.add(terms.get(mono, 0), coeff)
        if c:
            terms[mono] = c
        else:
            terms.pop(mono, None)
    assert degree is not None
    return HomogeneousPolynomial(field, n_vars, degree, terms)


def format_poly(f: HomogeneousPolynomial) -> str:
    if f.is_zero():
        return "0"
    F = f.field
    parts = []
    for mono, c in f.sorted_terms():
        factors = []
        if c != 1 or all(e == 0 for e in mono):
            cs = F.format(c)
            factors.append(f"({cs})" if F.m > 1 and ("+" in cs or "t" in cs) else cs)
        for i, e in enumerate(mono):
            if e == 0:
                continue
            factors.append(f"z{i}" if e == 1 else f"z{i}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)
