"""Finite and affine Weyl group arithmetic over exact integer matrices.

A finite element is stored as its action matrix on the root lattice plus the
matching action on fundamental-weight coordinates (and the inverses of both,
maintained under composition), so equality, hashing, and group operations
are exact without reduced words.  An affine element is the pair ``w · t_xi``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .cartan import (
    AffineRealRoot,
    CartanDatum,
    LevelZeroWeight,
    Mat,
    Vec,
    mat_id,
    mat_mul,
    mat_vec,
    vec_add,
    vec_neg,
)


class BudgetExceeded(Exception):
    """An enumeration outgrew its configured node budget."""


@dataclass(frozen=True, eq=False)
class FiniteWeylElt:
    datum: CartanDatum
    root_mat: Mat
    root_inv: Mat
    fw_mat: Mat
    fw_inv: Mat

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteWeylElt)
            and self.datum == other.datum
            and self.root_mat == other.root_mat
        )

    def __hash__(self) -> int:
        return hash(self.root_mat)

    def __repr__(self) -> str:
        word = self.reduced_word()
        return "W[e]" if not word else "W[" + "".join(map(str, word)) + "]"

    def mul(self, other: "FiniteWeylElt") -> "FiniteWeylElt":
        return FiniteWeylElt(
            self.datum,
            mat_mul(self.root_mat, other.root_mat),
            mat_mul(other.root_inv, self.root_inv),
            mat_mul(self.fw_mat, other.fw_mat),
            mat_mul(other.fw_inv, self.fw_inv),
        )

    def inverse(self) -> "FiniteWeylElt":
        return FiniteWeylElt(
            self.datum, self.root_inv, self.root_mat, self.fw_inv, self.fw_mat
        )

    @property
    def is_identity(self) -> bool:
        return self.root_mat == mat_id(self.datum.rank)

    def act_root(self, u: Vec) -> Vec:
        return mat_vec(self.root_mat, u)

    def inv_act_root(self, u: Vec) -> Vec:
        return mat_vec(self.root_inv, u)

    def act_fw(self, m: Vec) -> Vec:
        return mat_vec(self.fw_mat, m)

    def inv_act_fw(self, m: Vec) -> Vec:
        return mat_vec(self.fw_inv, m)

    def act_coweight(self, c: Vec) -> Vec:
        # <w xi, varpi_j> = <xi, w^{-1} varpi_j>
        n = self.datum.rank
        return tuple(
            sum(c[i] * self.fw_inv[i][j] for i in range(n)) for j in range(n)
        )

    def inv_act_coweight(self, c: Vec) -> Vec:
        n = self.datum.rank
        return tuple(
            sum(c[i] * self.fw_mat[i][j] for i in range(n)) for j in range(n)
        )

    @functools.cached_property
    def length(self) -> int:
        neg = 0
        for u in self.datum.pos_roots:
            if not self.datum.is_positive_root(self.act_root(u)):
                neg += 1
        return neg

    def reduced_word(self) -> tuple[int, ...]:
        """Node labels i_1..i_k with self = r_{i_1} ... r_{i_k}."""
        w = self
        rev: list[int] = []
        while not w.is_identity:
            for i in range(1, self.datum.rank + 1):
                if not self.datum.is_positive_root(
                    w.act_root(self.datum.simple_root(i))
                ):
                    rev.append(i)
                    w = w.mul(simple_reflection(self.datum, i))
                    break
        return tuple(reversed(rev))


def finite_identity(datum: CartanDatum) -> FiniteWeylElt:
    m = mat_id(datum.rank)
    return FiniteWeylElt(datum, m, m, m, m)


@functools.lru_cache(maxsize=None)
def simple_reflection(datum: CartanDatum, i: int) -> FiniteWeylElt:
    """The finite simple reflection r_i, i in 1..n."""
    n = datum.rank
    k = i - 1
    root = tuple(
        tuple((1 if r == c else 0) - (datum.cartan[k][c] if r == k else 0) for c in range(n))
        for r in range(n)
    )
    fw = tuple(
        tuple((1 if r == c else 0) - (datum.cartan[r][k] if c == k else 0) for c in range(n))
        for r in range(n)
    )
    return FiniteWeylElt(datum, root, root, fw, fw)


def finite_from_word(datum: CartanDatum, word: tuple[int, ...] | list[int]) -> FiniteWeylElt:
    w = finite_identity(datum)
    for i in word:
        w = w.mul(simple_reflection(datum, i))
    return w


def finite_reflection(datum: CartanDatum, u: Vec) -> FiniteWeylElt:
    """The reflection r_alpha for a finite root alpha given in root coords."""
    assert datum.is_root(u)
    n = datum.rank
    c = datum.coroot(u)
    pair_with_simple = [datum.pair_coweight_root(c, datum.simple_root(j + 1)) for j in range(n)]
    root = tuple(
        tuple((1 if r == col else 0) - pair_with_simple[col] * u[r] for col in range(n))
        for r in range(n)
    )
    fwu = datum.root_to_fw(u)
    fw = tuple(
        tuple((1 if r == col else 0) - c[col] * fwu[r] for col in range(n))
        for r in range(n)
    )
    return FiniteWeylElt(datum, root, root, fw, fw)


@functools.lru_cache(maxsize=None)
def longest_element(datum: CartanDatum, nodes: tuple[int, ...] | None = None) -> FiniteWeylElt:
    """Longest element of W (or of the parabolic W_K for the given nodes)."""
    if nodes is None:
        nodes = tuple(range(1, datum.rank + 1))
    w = finite_identity(datum)
    while True:
        for i in nodes:
            if datum.is_positive_root(w.act_root(datum.simple_root(i))):
                w = w.mul(simple_reflection(datum, i))
                break
        else:
            return w


@functools.lru_cache(maxsize=None)
def all_reflections(datum: CartanDatum) -> tuple[FiniteWeylElt, ...]:
    return tuple(finite_reflection(datum, u) for u in datum.pos_roots)


@functools.lru_cache(maxsize=None)
def weyl_group(datum: CartanDatum, budget: int = 100_000) -> tuple[FiniteWeylElt, ...]:
    """All of W by closure under the simple reflections."""
    gens = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
    seen = {finite_identity(datum)}
    frontier = list(seen)
    while frontier:
        w = frontier.pop()
        for g in gens:
            v = w.mul(g)
            if v not in seen:
                if len(seen) >= budget:
                    raise BudgetExceeded(f"|W| exceeds budget {budget}")
                seen.add(v)
                frontier.append(v)
    return tuple(sorted(seen, key=lambda w: (w.length, w.root_mat)))


def bruhat_leq(u: FiniteWeylElt, v: FiniteWeylElt) -> bool:
    """Ordinary Bruhat order, decided by upward BFS over reflection covers."""
    return _bruhat_leq_cached(u, v)


@functools.lru_cache(maxsize=None)
def _bruhat_leq_cached(u: FiniteWeylElt, v: FiniteWeylElt) -> bool:
    if u.length > v.length:
        return False
    if u.length == v.length:
        return u == v
    datum = u.datum
    frontier = {u}
    level = u.length
    while frontier and level < v.length:
        nxt = set()
        for w in frontier:
            for r in all_reflections(datum):
                w2 = w.mul(r)
                if w2.length == level + 1:
                    nxt.add(w2)
        frontier = nxt
        level += 1
    return v in frontier


@dataclass(frozen=True, eq=False)
class AffineWeylElt:
    """The element w * t_xi of W_af = W x Q^vee."""

    w: FiniteWeylElt
    xi: Vec

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AffineWeylElt)
            and self.xi == other.xi
            and self.w == other.w
        )

    def __hash__(self) -> int:
        return hash((self.w.root_mat, self.xi))

    def __repr__(self) -> str:
        return f"{self.w!r}t{list(self.xi)}"

    @property
    def datum(self) -> CartanDatum:
        return self.w.datum

    def mul(self, other: "AffineWeylElt") -> "AffineWeylElt":
        # (w1 t_a)(w2 t_b) = w1 w2 t_{w2^{-1} a + b}
        return AffineWeylElt(
            self.w.mul(other.w),
            vec_add(other.w.inv_act_coweight(self.xi), other.xi),
        )

    def inverse(self) -> "AffineWeylElt":
        return AffineWeylElt(self.w.inverse(), vec_neg(self.w.act_coweight(self.xi)))

    @property
    def is_identity(self) -> bool:
        return self.w.is_identity and not any(self.xi)

    def act_root(self, beta: AffineRealRoot) -> AffineRealRoot:
        n = beta.n - self.datum.pair_coweight_root(self.xi, beta.finite)
        return AffineRealRoot(self.w.act_root(beta.finite), n)

    def act_weight(self, mu: LevelZeroWeight) -> LevelZeroWeight:
        shift = self.datum.pair_coweight_weight(self.xi, mu)
        return LevelZeroWeight(self.w.act_fw(mu.fw), mu.delta - shift)

    @property
    def si_length(self) -> int:
        # <xi, rho> = sum of the coweight coordinates
        return self.w.length + 2 * sum(self.xi)

    @functools.cached_property
    def affine_length(self) -> int:
        total = 0
        datum = self.datum
        for u in datum.pos_roots:
            c = datum.pair_coweight_root(self.xi, u)
            w_pos = datum.is_positive_root(self.w.act_root(u))
            total += max(c, 0) + (1 if c >= 0 and not w_pos else 0)
            if c <= -1:
                total += (-c - 1) + (1 if w_pos else 0)
        return total

    def reduced_word(self) -> tuple[int, ...]:
        """Labels in I_af with self equal to the product of the r_j."""
        x = self
        datum = self.datum
        rev: list[int] = []
        while not x.is_identity:
            for j in range(datum.rank + 1):
                img = x.act_root(datum.affine_simple_root(j))
                if not datum.is_positive_affine(img):
                    rev.append(j)
                    x = x.mul(affine_simple(datum, j))
                    break
            else:  # pragma: no cover
                raise AssertionError("no descent found")
        return tuple(reversed(rev))


def affine_identity(datum: CartanDatum) -> AffineWeylElt:
    return AffineWeylElt(finite_identity(datum), (0,) * datum.rank)


def translation(datum: CartanDatum, xi: Vec) -> AffineWeylElt:
    return AffineWeylElt(finite_identity(datum), tuple(xi))


def from_finite(w: FiniteWeylElt) -> AffineWeylElt:
    return AffineWeylElt(w, (0,) * w.datum.rank)


def affine_reflection(datum: CartanDatum, beta: AffineRealRoot) -> AffineWeylElt:
    """r_beta = r_alpha t_{n alpha^vee} for beta = alpha + n delta."""
    r = finite_reflection(datum, beta.finite)
    c = datum.coroot(beta.finite)
    return AffineWeylElt(r, tuple(beta.n * x for x in c))


@functools.lru_cache(maxsize=None)
def affine_simple(datum: CartanDatum, j: int) -> AffineWeylElt:
    """r_j for j in I_af; r_0 is the reflection in -theta + delta."""
    return affine_reflection(datum, datum.affine_simple_root(j))
