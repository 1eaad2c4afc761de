"""Skew cyclic codes over F_q and over R = F_q + vF_q + v^2F_q.

A component code of length n over F_q is the left module generated by a
monic right divisor g of x^n - 1 in F_q[x, theta_i]; its dimension is
n - deg g. A code over R is the direct sum eta1*C1 + eta2*C2 + eta3*C3 of
three component codes of equal length, generated over R by the single
combined polynomial eta1*g1 + eta2*g2 + eta3*g3.

Duals come from the reversed-and-twisted cofactor: if x^n - 1 = h*g with
deg g = r, the dual of <g> is generated by

    h~(x) = h_{n-r} + theta(h_{n-r-1}) x + ... + theta^{n-r}(h_0) x^{n-r},

normalized monic. Idempotent generators exist when n is coprime to both q
and the automorphism order, via the Bezout identity a*g + b*h = 1 in the
fixed subfield.

Code objects are immutable after construction.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from . import linalg
from .finite_field import Field, FieldElem
from .ring_r import (
    Idempotents,
    RingElem,
    crt_split,
    gray_map,
    make_idempotents,
)
from .skew_poly import (
    AutMismatch,
    SkewPoly,
    _twist,
    extended_gcd_commutative,
    factor_xn_minus_1,
    mod_xn_minus_1,
    monic_right_divisors,
    poly_from_string,
    poly_to_string,
    right_divide,
    ring_skew_poly_combine,
    project_components,
    skew_mul,
    xn_minus_1,
)

DISTANCE_LIMIT = 10**6


class CodeError(Exception):
    pass


class NotMonic(CodeError):
    pass


class NotRightDivisor(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class HypothesisViolated(CodeError):
    pass


class NotCoprime(CodeError):
    pass


class TableTooLarge(CodeError):
    pass


class MinDistance(NamedTuple):
    """Minimum nonzero weight; degenerate flags the zero code (reported as 0)."""

    value: int
    degenerate: bool


class GeneratorMatrix(NamedTuple):
    rows: tuple
    over: str  # "field" or "ring"


def skew_shift(word: Sequence, i: int):
    """sigma(c) = (theta_i(c_{n-1}), theta_i(c_0), ..., theta_i(c_{n-2}))."""
    if not word:
        return tuple(word)
    twisted = [_twist(c, i, 1) for c in word]
    return tuple([twisted[-1]] + twisted[:-1])


class ComponentCode:
    """A skew cyclic code over F_q: the left module <g> with g | x^n - 1."""

    __slots__ = ("n", "g", "h", "field", "aut")

    def __init__(self, n: int, g: SkewPoly, h: SkewPoly):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "field", g.field)
        object.__setattr__(self, "aut", g.aut)

    def __setattr__(self, name, value):
        raise AttributeError("ComponentCode is immutable")

    @property
    def dim(self) -> int:
        return self.n - self.g.degree

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    def is_zero_code(self) -> bool:
        return self.dim == 0

    def generator_rows(self) -> list[tuple[FieldElem, ...]]:
        """Row j is the coefficient vector of x^j * g, for j < dim."""
        rows = []
        zero = self.field.zero
        for j in range(self.dim):
            tw = self.g.twist_coeffs(j)
            row = [zero] * self.n
            for t, c in enumerate(tw.coeffs):
                row[j + t] = c
            rows.append(tuple(row))
        return rows

    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix(tuple(self.generator_rows()), "field")

    def _word_to_poly(self, word) -> SkewPoly:
        if isinstance(word, SkewPoly):
            if word.degree >= self.n:
                raise LengthMismatch(f"degree {word.degree} >= n = {self.n}")
            return word
        if len(word) != self.n:
            raise LengthMismatch(f"word length {len(word)} != n = {self.n}")
        return SkewPoly(self.field, list(word), self.aut)

    def contains(self, word) -> bool:
        """Membership: zero right remainder on division by g."""
        f = self._word_to_poly(word)
        if self.g.degree == 0:
            return True
        return right_divide(f, self.g).remainder.is_zero()

    def reciprocal_cofactor(self) -> SkewPoly:
        """h~ = h_{n-r} + theta(h_{n-r-1}) x + ... + theta^{n-r}(h_0) x^{n-r}.

        Built from the cofactor h with x^n - 1 = h*g; generates the dual
        once normalized monic.
        """
        nr = self.n - self.g.degree
        coeffs = [_twist(self.h.coeff(nr - j), self.aut, j) for j in range(nr + 1)]
        return SkewPoly(self.field, coeffs, self.aut)

    def dual(self) -> ComponentCode:
        """The orthogonal code, generated by the monic normalization of h~."""
        if self.g.degree == self.n:
            # zero code: h = 1 and the index formula degenerates, dual is everything
            return component_code_new(self.n, SkewPoly.one(self.field, self.aut))
        return component_code_new(self.n, self.reciprocal_cofactor().monic())

    def min_hamming_distance(self, bound: int = DISTANCE_LIMIT) -> MinDistance:
        if self.is_zero_code():
            return MinDistance(0, True)
        rows = linalg.to_index_rows(self.generator_rows(), self.field)
        w = linalg.span_min_weight(rows, self.field, bound)
        return MinDistance(w, False)

    def idempotent_generator(self) -> SkewPoly:
        """e with e*e = e mod x^n - 1 and <e> = <g>, via the Bezout identity.

        Requires n coprime to q and to the automorphism order. Both
        postconditions are re-verified before returning.
        """
        t_i = self.field.m // self.aut
        if math.gcd(self.n, self.field.q) != 1 or math.gcd(self.n, t_i) != 1:
            raise HypothesisViolated(
                f"requires gcd(n, q) = gcd(n, t_i) = 1; "
                f"got n = {self.n}, q = {self.field.q}, t_i = {t_i}"
            )
        d, a, _ = extended_gcd_commutative(self.g, self.h)
        if d.degree != 0:
            raise NotCoprime(f"g and h share the factor {d}")
        e = mod_xn_minus_1(skew_mul(a, self.g), self.n)
        if mod_xn_minus_1(skew_mul(e, e), self.n) != e:
            raise AssertionError("constructed generator is not idempotent")
        if not self.contains(mod_xn_minus_1(e, self.n)):
            raise AssertionError("idempotent lies outside the code")
        if not self._generates(e):
            raise AssertionError("idempotent does not generate the code")
        return e

    def _generates(self, e: SkewPoly) -> bool:
        """Does the left module spanned by e equal this code?"""
        rows = [_poly_to_row(mod_xn_minus_1(e, self.n), self.n)]
        for j in range(1, self.n):
            rows.append(skew_shift(rows[-1], self.aut))
        idx = linalg.to_index_rows(rows, self.field)
        if linalg.rank(idx, self.field) != self.dim:
            return False
        g_row = _poly_to_row(mod_xn_minus_1(self.g, self.n), self.n)
        idx.append([self.field.index(x) for x in g_row])
        return linalg.rank(idx, self.field) == self.dim and all(
            self.contains(row) for row in rows
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ComponentCode)
            and self.n == other.n
            and self.aut == other.aut
            and self.g == other.g
        )

    def __hash__(self):
        return hash((self.n, self.aut, self.g))

    def __repr__(self):
        return f"ComponentCode(n={self.n}, g={poly_to_string(self.g)}, aut={self.aut})"


def _poly_to_row(f: SkewPoly, n: int) -> tuple:
    zero = f.domain.zero
    return tuple(list(f.coeffs) + [zero] * (n - len(f.coeffs)))


def component_code_new(n: int, g: SkewPoly) -> ComponentCode:
    """Validated construction: g must be monic and right-divide x^n - 1."""
    if n < 1:
        raise LengthMismatch("length must be positive")
    if g.is_zero() or not g.is_monic():
        raise NotMonic(f"generator must be monic, got {poly_to_string(g)}")
    quo, rem = right_divide(xn_minus_1(g.domain, g.aut, n), g)
    if not rem.is_zero():
        raise NotRightDivisor(
            f"{poly_to_string(g)} does not right-divide x^{n} - 1"
        )
    return ComponentCode(n, g, quo)


def _unchecked_component_code(n: int, g: SkewPoly) -> ComponentCode:
    """Bypass divisor validation (negative controls in the verification suite)."""
    quo, _ = right_divide(xn_minus_1(g.domain, g.aut, n), g)
    return ComponentCode(n, g, quo)


class SkewCyclicCode:
    """A skew cyclic code over R, as eta1*C1 + eta2*C2 + eta3*C3."""

    __slots__ = ("n", "c1", "c2", "c3", "g_combined", "field", "aut")

    def __init__(self, c1: ComponentCode, c2: ComponentCode, c3: ComponentCode,
                 g_combined: SkewPoly):
        object.__setattr__(self, "n", c1.n)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "c3", c3)
        object.__setattr__(self, "g_combined", g_combined)
        object.__setattr__(self, "field", c1.field)
        object.__setattr__(self, "aut", c1.aut)

    def __setattr__(self, name, value):
        raise AttributeError("SkewCyclicCode is immutable")

    @property
    def components(self) -> tuple[ComponentCode, ComponentCode, ComponentCode]:
        return (self.c1, self.c2, self.c3)

    @property
    def dim(self) -> int:
        return self.c1.dim + self.c2.dim + self.c3.dim

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    def is_zero_code(self) -> bool:
        return self.dim == 0

    def idempotents(self) -> Idempotents:
        return make_idempotents(self.field)

    def generator_rows(self) -> list[tuple[RingElem, ...]]:
        """The stacked rows eta_j * (rows of C_j), as vectors over R."""
        etas = self.idempotents()
        rows = []
        for eta, comp in zip(etas, self.components):
            for row in comp.generator_rows():
                rows.append(tuple(eta.scale_field(x) for x in row))
        return rows

    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix(tuple(self.generator_rows()), "ring")

    def gray_generator_rows(self) -> list[tuple[FieldElem, ...]]:
        return [gray_map(row) for row in self.generator_rows()]

    def component_words(self, word: Sequence[RingElem]):
        """Split a word over R into its three coordinatewise field words."""
        triples = [crt_split(r) for r in word]
        return tuple(tuple(t[k] for t in triples) for k in range(3))

    def contains(self, word) -> bool:
        """Membership via the splitting: three right-remainder tests over F_q."""
        if isinstance(word, SkewPoly):
            word = _poly_to_row(word, self.n)
        if len(word) != self.n:
            raise LengthMismatch(f"word length {len(word)} != n = {self.n}")
        w1, w2, w3 = self.component_words(word)
        return (
            self.c1.contains(w1) and self.c2.contains(w2) and self.c3.contains(w3)
        )

    def dual(self) -> SkewCyclicCode:
        return code_from_components(
            self.c1.dual(), self.c2.dual(), self.c3.dual()
        )

    def is_self_dual(self) -> bool:
        return all(c == c.dual() for c in self.components)

    def min_lee_distance(self, bound: int = DISTANCE_LIMIT) -> MinDistance:
        """Minimum over the nonzero components of their Hamming distances."""
        best = None
        for comp in self.components:
            if comp.is_zero_code():
                continue
            d = comp.min_hamming_distance(bound).value
            if best is None or d < best:
                best = d
        if best is None:
            return MinDistance(0, True)
        return MinDistance(best, False)

    def idempotent_generator(self) -> SkewPoly:
        """Combined idempotent generator over R.

        Both postconditions are re-verified directly over R: e*e = e in the
        quotient, and the left module generated by e has the same Gray span
        as the code itself.
        """
        e1 = self.c1.idempotent_generator()
        e2 = self.c2.idempotent_generator()
        e3 = self.c3.idempotent_generator()
        e = ring_skew_poly_combine(e1, e2, e3)
        if mod_xn_minus_1(skew_mul(e, e), self.n) != mod_xn_minus_1(e, self.n):
            raise AssertionError("combined generator is not idempotent over R")
        if not self._ring_generates(e):
            raise AssertionError("combined idempotent does not generate the code")
        return e

    def _ring_generates(self, e: SkewPoly) -> bool:
        """Compare the Gray span of the R-orbit of e with the code's span."""
        etas = self.idempotents()
        orbit = [_poly_to_row(mod_xn_minus_1(e, self.n), self.n)]
        for _ in range(1, self.n):
            orbit.append(skew_shift(orbit[-1], self.aut))
        rows = [
            gray_map(tuple(eta * c for c in row)) for eta in etas for row in orbit
        ]
        lhs = linalg.canonical_subspace(
            linalg.to_index_rows(rows, self.field), self.field
        )
        rhs = linalg.canonical_subspace(
            linalg.to_index_rows(self.gray_generator_rows(), self.field), self.field
        )
        return lhs == rhs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewCyclicCode)
            and self.n == other.n
            and self.aut == other.aut
            and self.g_combined == other.g_combined
        )

    def __hash__(self):
        return hash((self.n, self.aut, self.g_combined))

    def __repr__(self):
        gs = ", ".join(poly_to_string(c.g) for c in self.components)
        return f"SkewCyclicCode(n={self.n}, g=({gs}), aut={self.aut})"


def code_from_components(
    c1: ComponentCode, c2: ComponentCode, c3: ComponentCode
) -> SkewCyclicCode:
    """The code eta1*C1 + eta2*C2 + eta3*C3 with its combined generator."""
    if not (c1.n == c2.n == c3.n):
        raise LengthMismatch("component lengths differ")
    if not (c1.aut == c2.aut == c3.aut):
        raise AutMismatch("component automorphisms differ")
    if not (c1.field == c2.field == c3.field):
        raise LengthMismatch("component fields differ")
    g = ring_skew_poly_combine(c1.g, c2.g, c3.g)
    h = ring_skew_poly_combine(c1.h, c2.h, c3.h)
    n = c1.n
    if skew_mul(h, g) != xn_minus_1(g.domain, g.aut, n):
        raise NotRightDivisor("combined generator does not right-divide x^n - 1")
    return SkewCyclicCode(c1, c2, c3, g)


def code_from_combined(g: SkewPoly, n: int) -> SkewCyclicCode:
    """Build a code from a single generator over R by splitting it."""
    g1, g2, g3 = project_components(g)
    return code_from_components(
        component_code_new(n, g1),
        component_code_new(n, g2),
        component_code_new(n, g3),
    )


def decompose(
    code: SkewCyclicCode,
) -> tuple[ComponentCode, ComponentCode, ComponentCode]:
    """Recover the component codes by splitting the combined generator."""
    g1, g2, g3 = project_components(code.g_combined)
    return (
        component_code_new(code.n, g1),
        component_code_new(code.n, g2),
        component_code_new(code.n, g3),
    )


def count_skew_cyclic_codes(n: int, field: Field, i: int) -> tuple[int, int]:
    """(count over F_q, count over R) from the fixed-subfield factorization.

    Only valid when n is coprime to the automorphism order t_i.
    """
    t_i = field.check_aut_exponent(i)
    if math.gcd(n, t_i) != 1:
        raise HypothesisViolated(
            f"gcd(n, t_i) = {math.gcd(n, t_i)} != 1 (n = {n}, t_i = {t_i})"
        )
    return factor_xn_minus_1(n, field, i).census_counts()


def census(
    n: int, field: Field, i: int, search_bound: int = 10**7
) -> list[SkewCyclicCode]:
    """Every skew cyclic code of length n over R, in deterministic order."""
    divisors = monic_right_divisors(n, field, i, search_bound)
    comps = [component_code_new(n, g) for g in divisors]
    return [
        code_from_components(a, b, c) for a in comps for b in comps for c in comps
    ]


# ---------------------------------------------------------------------------
# JSON description block (used by the CLI for reproducible output)


def code_to_json(code: SkewCyclicCode) -> dict:
    return {
        "field": {
            "p": code.field.p,
            "m": code.field.m,
            "mod": list(code.field.modulus),
        },
        "aut": code.aut,
        "n": code.n,
        "g1": poly_to_string(code.c1.g),
        "g2": poly_to_string(code.c2.g),
        "g3": poly_to_string(code.c3.g),
    }


def code_from_json(block: dict) -> SkewCyclicCode:
    field = Field(block["field"]["p"], block["field"]["m"], block["field"]["mod"])
    aut = block["aut"]
    n = block["n"]
    comps = [
        component_code_new(n, poly_from_string(block[key], field, aut))
        for key in ("g1", "g2", "g3")
    ]
    return code_from_components(*comps)
