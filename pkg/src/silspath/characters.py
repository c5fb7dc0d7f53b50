"""Graded characters, Macdonald t=0 specializations, and their oracles.

A graded character is a finite integer combination of terms x^mu q^k with
mu recorded in fundamental-weight coordinates.  The closed-form Demazure
characters multiply the degree-weighted QLS sum by the expanded inverse
product over the columns of lambda; the brute-force route sums the weights
of a truncated path enumeration instead, and the Weyl character formula
supplies an independent q=0 oracle.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .cartan import CartanDatum, Vec, vec_add, vec_neg, vec_sub
from .weyl import (
    FiniteWeylElt,
    affine_identity,
    bruhat_leq,
    longest_element,
    weyl_group,
)
from .peterson import ParabolicQuotient
from .qls import QLSCrystal
from .sils import SiLSCrystal

Term = tuple[Vec, int]


class GradedCharacter:
    """Finite map (weight, q-exponent) -> integer coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Term, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def unit(cls, rank: int) -> "GradedCharacter":
        return cls({(((0,) * rank), 0): 1})

    @classmethod
    def monomial(cls, fw: Vec, q: int = 0, coeff: int = 1) -> "GradedCharacter":
        return cls({(tuple(fw), q): coeff})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedCharacter) and self.terms == other.terms

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GradedCharacter(out)

    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return GradedCharacter(out)

    def __mul__(self, other: "GradedCharacter") -> "GradedCharacter":
        out: dict[Term, int] = {}
        for (fw1, q1), c1 in self.terms.items():
            for (fw2, q2), c2 in other.terms.items():
                key = (vec_add(fw1, fw2), q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return GradedCharacter(out)

    def invert_q(self) -> "GradedCharacter":
        return GradedCharacter({(fw, -q): c for (fw, q), c in self.terms.items()})

    def invert_x(self) -> "GradedCharacter":
        return GradedCharacter({(vec_neg(fw), q): c for (fw, q), c in self.terms.items()})

    def truncate(self, q_min: int | None = None, q_max: int | None = None) -> "GradedCharacter":
        return GradedCharacter(
            {
                (fw, q): c
                for (fw, q), c in self.terms.items()
                if (q_min is None or q >= q_min) and (q_max is None or q <= q_max)
            }
        )

    def q_slice(self, q: int) -> dict[Vec, int]:
        return {fw: c for (fw, qq), c in self.terms.items() if qq == q}

    def value_at_ones(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> tuple[tuple[Vec, int, int], ...]:
        return tuple(
            (fw, q, self.terms[(fw, q)])
            for fw, q in sorted(self.terms, key=lambda t: (-t[1], t[0]))
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "GradedCharacter(0)"
        bits = [f"{c}*x{list(fw)}q^{q}" for fw, q, c in self.sorted_terms()]
        return "GradedCharacter(" + " + ".join(bits) + ")"


# -- QLS degree route ----------------------------------------------------------


def qls_degree_sum(datum: CartanDatum, lam: Vec) -> GradedCharacter:
    """Sum of q^(tail degree) x^(weight) over the finite path crystal."""
    crystal = _qls(datum, tuple(lam))
    terms: dict[Term, int] = {}
    for psi in crystal.paths():
        key = (crystal.weight(psi), crystal.deg_tail(psi))
        terms[key] = terms.get(key, 0) + 1
    return GradedCharacter(terms)


def macdonald_t0(datum: CartanDatum, lam: Vec) -> GradedCharacter:
    """The symmetric Macdonald polynomial at t = 0, via the degree sum."""
    return qls_degree_sum(datum, lam).invert_q()


@functools.lru_cache(maxsize=None)
def _qls(datum: CartanDatum, lam: Vec) -> QLSCrystal:
    return QLSCrystal(datum, lam)


# -- column series and Demazure characters ---------------------------------------


def _column_series(rank: int, lam: Vec, depth: int, sign: int) -> GradedCharacter:
    """Expansion of prod_i prod_{r<=m_i} (1 - q^(sign*r))^(-1) to q-depth."""
    zero = (0,) * rank
    series = {(zero, 0): 1}
    for m in lam:
        for r in range(1, m + 1):
            out: dict[Term, int] = {}
            for (fw, q), c in series.items():
                k = abs(q)
                power = 0
                while k + power * r <= depth:
                    key = (fw, q + sign * power * r)
                    out[key] = out.get(key, 0) + c
                    power += 1
            series = out
    return GradedCharacter(series)


def gch_demazure_minus_e(datum: CartanDatum, lam: Vec, depth: int) -> GradedCharacter:
    """Closed form for the minus Demazure character, truncated to q >= -depth."""
    series = _column_series(datum.rank, lam, depth, -1)
    return (qls_degree_sum(datum, lam) * series).truncate(q_min=-depth)


def gch_demazure_plus_w0(datum: CartanDatum, lam: Vec, depth: int) -> GradedCharacter:
    """Closed form for the plus Demazure character, truncated to q <= depth."""
    series = _column_series(datum.rank, lam, depth, +1)
    return (macdonald_t0(datum, lam) * series).truncate(q_max=depth)


def brute_force_gch_minus_e(
    datum: CartanDatum, lam: Vec, depth: int, budget: int = 500_000
) -> GradedCharacter:
    """Independent route: sum x^wt over the truncated path enumeration."""
    crystal = SiLSCrystal(datum, tuple(lam))
    terms: dict[Term, int] = {}
    for eta in crystal.enumerate_demazure(affine_identity(datum), depth, budget):
        wt = crystal.weight(eta)
        key = (wt.fw, wt.delta)
        terms[key] = terms.get(key, 0) + 1
    return GradedCharacter(terms)


# -- quotient characters -----------------------------------------------------------


def _check_min_rep(datum: CartanDatum, lam: Vec, w: FiniteWeylElt) -> ParabolicQuotient:
    quotient = ParabolicQuotient.for_weight(datum, tuple(lam))
    if not quotient.is_min_rep(w):
        raise ValueError(f"{w!r} is not a minimal coset representative for J")
    return quotient


def gch_quotient_minus(datum: CartanDatum, lam: Vec, w: FiniteWeylElt) -> GradedCharacter:
    """Sum over paths whose distinguished final direction dominates w."""
    _check_min_rep(datum, lam, w)
    crystal = _qls(datum, tuple(lam))
    terms: dict[Term, int] = {}
    for psi in crystal.paths():
        if bruhat_leq(w, crystal.kappa_direction(psi)):
            key = (crystal.weight(psi), crystal.deg_tail(psi))
            terms[key] = terms.get(key, 0) + 1
    return GradedCharacter(terms)


def gch_quotient_plus(datum: CartanDatum, lam: Vec, w: FiniteWeylElt) -> GradedCharacter:
    """Sum over paths whose distinguished initial direction is below w."""
    _check_min_rep(datum, lam, w)
    crystal = _qls(datum, tuple(lam))
    terms: dict[Term, int] = {}
    for psi in crystal.paths():
        if bruhat_leq(crystal.iota_direction(psi), w):
            lift = crystal.eta_iota(psi)
            wt = crystal.sils.weight(lift)
            key = (wt.fw, wt.delta)
            terms[key] = terms.get(key, 0) + 1
    return GradedCharacter(terms)


# -- Weyl character oracle -----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _height_vector(datum: CartanDatum) -> tuple[Fraction, ...]:
    """h with h . mu = sum of the root coordinates of mu (exact)."""
    n = datum.rank
    # solve A^T h = (1,...,1) by Gaussian elimination over Q
    a = [[Fraction(datum.cartan[j][i]) for j in range(n)] + [Fraction(1)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def _laurent_divide(num: dict[Vec, int], den: dict[Vec, int], datum: CartanDatum) -> dict[Vec, int]:
    """Exact division of Laurent polynomials known to divide evenly."""
    h = _height_vector(datum)

    def order_key(mu: Vec):
        return (sum(x * c for x, c in zip(h, mu)), mu)

    lead_den = max(den, key=order_key)
    quot: dict[Vec, int] = {}
    work = dict(num)
    guard = 0
    while work:
        guard += 1
        assert guard < 1_000_000, "division does not terminate"
        lead = max(work, key=order_key)
        coeff = work[lead]
        assert coeff % den[lead_den] == 0
        c = coeff // den[lead_den]
        shift = vec_sub(lead, lead_den)
        quot[shift] = quot.get(shift, 0) + c
        for mu, d in den.items():
            key = vec_add(mu, shift)
            val = work.get(key, 0) - c * d
            if val:
                work[key] = val
            else:
                work.pop(key, None)
    return quot


def weyl_character(datum: CartanDatum, lam: Vec) -> GradedCharacter:
    """chi_lambda by the alternating sum over W, with exact Laurent division."""
    rho = datum.rho
    num: dict[Vec, int] = {}
    den: dict[Vec, int] = {}
    lam_rho = vec_add(tuple(lam), rho)
    for w in weyl_group(datum):
        sgn = -1 if w.length % 2 else 1
        for target, vec in ((num, lam_rho), (den, rho)):
            key = w.act_fw(vec)
            target[key] = target.get(key, 0) + sgn
    quot = _laurent_divide(num, den, datum)
    return GradedCharacter({(mu, 0): c for mu, c in quot.items()})


def minus_quotient_reps(datum: CartanDatum, lam: Vec) -> tuple[FiniteWeylElt, ...]:
    """All minimal coset representatives for the stabilizer of lambda."""
    quotient = ParabolicQuotient.for_weight(datum, tuple(lam))
    return tuple(
        w for w in weyl_group(datum) if quotient.is_min_rep(w)
    )


def floor_w0(datum: CartanDatum, lam: Vec) -> FiniteWeylElt:
    """The minimal representative of the longest element's coset."""
    quotient = ParabolicQuotient.for_weight(datum, tuple(lam))
    return quotient.min_rep(longest_element(datum))
