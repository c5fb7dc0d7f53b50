"""Peterson coset representatives and the semi-infinite Bruhat order.

For a subset J of the finite nodes, ``(W_J)_af = W_J x t_{Q_J^vee}`` acts on
the right and every coset has a unique representative sending all of
``(Delta_J)_af^+`` to positive affine roots.  This module computes those
representatives, the J-adjustment of coweights, the duality x -> x^vee, and
the cover/order structure of the parabolic semi-infinite Bruhat graph,
including its rational-level subgraphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .cartan import (
    AffineRealRoot,
    CartanDatum,
    LevelZeroWeight,
    Vec,
    vec_neg,
    vec_sub,
)
from .weyl import (
    AffineWeylElt,
    FiniteWeylElt,
    affine_identity,
    affine_reflection,
    from_finite,
    longest_element,
    simple_reflection,
    translation,
)


class Decomposition(NamedTuple):
    """x = w * z_xi * t_xi with w in W^J and xi a J-adjusted coweight."""

    w: FiniteWeylElt
    z: FiniteWeylElt
    xi: Vec


def _component_split(datum: CartanDatum, nodes: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in remaining - comp:
                if datum.cartan[i - 1][j - 1] != 0:
                    comp.add(j)
                    frontier.append(j)
        comps.append(tuple(sorted(comp)))
        remaining -= comp
    return tuple(comps)


@dataclass(frozen=True, eq=False)
class ParabolicQuotient:
    """Tables for one subset J, optionally bound to a dominant weight."""

    datum: CartanDatum
    j_nodes: tuple[int, ...]
    lam: Vec | None = None
    _si_leq_cache: dict = field(default_factory=dict, repr=False)
    _cover_cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def for_weight(cls, datum: CartanDatum, lam: Vec) -> "ParabolicQuotient":
        if len(lam) != datum.rank or any(m < 0 for m in lam):
            raise ValueError(f"weight {lam} is not dominant for rank {datum.rank}")
        j = tuple(i for i in range(1, datum.rank + 1) if lam[i - 1] == 0)
        return cls(datum, j, tuple(lam))

    @classmethod
    def for_subset(cls, datum: CartanDatum, nodes) -> "ParabolicQuotient":
        return cls(datum, tuple(sorted(nodes)), None)

    @property
    def lam_weight(self) -> LevelZeroWeight:
        assert self.lam is not None
        return LevelZeroWeight(self.lam, 0)

    @property
    def delta_j_plus(self) -> tuple[Vec, ...]:
        return self._tables[0]

    @property
    def reduction_gens(self) -> tuple[tuple[AffineRealRoot, AffineWeylElt], ...]:
        return self._tables[1]

    @property
    def w_j0(self) -> FiniteWeylElt:
        return self._tables[2]

    @property
    def _tables(self):
        cached = self.__dict__.get("_tables_value")
        if cached is None:
            datum = self.datum
            jset = set(self.j_nodes)
            dj = tuple(
                u
                for u in datum.pos_roots
                if all(u[i] == 0 for i in range(datum.rank) if (i + 1) not in jset)
            )
            gens: list[tuple[AffineRealRoot, AffineWeylElt]] = []
            for i in self.j_nodes:
                beta = AffineRealRoot(datum.simple_root(i), 0)
                gens.append((beta, from_finite(simple_reflection(datum, i))))
            for comp in _component_split(datum, self.j_nodes):
                sub_roots = [
                    u
                    for u in dj
                    if all(u[i - 1] == 0 for i in jset if i not in comp)
                ]
                theta_c = max(sub_roots, key=lambda u: (sum(u), u))
                beta = AffineRealRoot(vec_neg(theta_c), 1)
                gens.append((beta, affine_reflection(datum, beta)))
            wj0 = longest_element(datum, self.j_nodes)
            value = (dj, tuple(gens), wj0)
            self.__dict__["_tables_value"] = value
            cached = value
        return cached

    # -- membership and projection ------------------------------------------

    def is_rep(self, x: AffineWeylElt) -> bool:
        """Peterson membership, reduced to the finitely many critical roots."""
        for u in self.delta_j_plus:
            if not self.datum.is_positive_affine(x.act_root(AffineRealRoot(u, 0))):
                return False
            if not self.datum.is_positive_affine(
                x.act_root(AffineRealRoot(vec_neg(u), 1))
            ):
                return False
        return True

    def project(self, x: AffineWeylElt) -> AffineWeylElt:
        """Pi^J(x): right-descent reduction by the simple generators of (W_J)_af."""
        while True:
            for beta, refl in self.reduction_gens:
                if not self.datum.is_positive_affine(x.act_root(beta)):
                    x = x.mul(refl)
                    break
            else:
                return x

    def j_adjust(self, xi: Vec) -> tuple[Vec, FiniteWeylElt]:
        """(phi_J(xi), z_xi) with Pi^J(t_xi) = z_xi t_{xi + phi_J(xi)}."""
        p = self.project(translation(self.datum, xi))
        return vec_sub(p.xi, xi), p.w

    def is_adjusted(self, xi: Vec) -> bool:
        return all(
            self.datum.pair_coweight_root(xi, u) in (-1, 0) for u in self.delta_j_plus
        )

    def is_min_rep(self, w: FiniteWeylElt) -> bool:
        return all(
            self.datum.is_positive_root(w.act_root(self.datum.simple_root(i)))
            for i in self.j_nodes
        )

    def min_rep(self, w: FiniteWeylElt) -> FiniteWeylElt:
        while True:
            for i in self.j_nodes:
                if not self.datum.is_positive_root(
                    w.act_root(self.datum.simple_root(i))
                ):
                    w = w.mul(simple_reflection(self.datum, i))
                    break
            else:
                return w

    def decompose(self, x: AffineWeylElt) -> Decomposition:
        phi, z = self.j_adjust(x.xi)
        assert not any(phi), f"{x} is not a Peterson representative"
        w = x.w.mul(z.inverse())
        assert self.is_min_rep(w)
        return Decomposition(w, z, x.xi)

    def cl_direction(self, x: AffineWeylElt) -> FiniteWeylElt:
        """cl(x) = w for x = w z_xi t_xi."""
        return self.decompose(x).w

    # -- duality --------------------------------------------------------------

    @property
    def sigma_nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.datum.sigma[i - 1] for i in self.j_nodes))

    def dual_quotient(self) -> "ParabolicQuotient":
        if self.lam is None:
            return ParabolicQuotient.for_subset(self.datum, self.sigma_nodes)
        dual_lam = tuple(
            self.lam[self.datum.sigma[i] - 1] for i in range(self.datum.rank)
        )
        return ParabolicQuotient.for_weight(self.datum, dual_lam)

    def vee(self, x: AffineWeylElt) -> AffineWeylElt:
        """x^vee = x * w_0 * w_{sigma(J),0}, a representative for sigma(J)."""
        w0 = longest_element(self.datum)
        wsj0 = longest_element(self.datum, self.sigma_nodes)
        return x.mul(from_finite(w0.mul(wsj0)))

    # -- semi-infinite covers and order ----------------------------------------

    def edge_pairing(self, beta: AffineRealRoot, x: AffineWeylElt) -> int:
        """<beta^vee, x lambda>, the level used by the subgraph condition."""
        c = self.datum.coroot(beta.finite)
        return self.datum.pair_coweight_weight(c, x.act_weight(self.lam_weight))

    def _admits(self, a: Fraction | None, beta: AffineRealRoot, x: AffineWeylElt) -> bool:
        if a is None:
            return True
        return (a * self.edge_pairing(beta, x)).denominator == 1

    def _cover_candidates(self, w: FiniteWeylElt) -> list[AffineRealRoot]:
        # labels are w(u) or w(u) + delta for u in Delta^+ \ Delta_J^+,
        # with the delta shift exactly when w(u) is negative
        datum = self.datum
        jset = set(self.j_nodes)
        out = []
        for u in datum.pos_roots:
            if all(u[i - 1] == 0 for i in range(1, datum.rank + 1) if i not in jset):
                continue
            wu = w.act_root(u)
            if datum.is_positive_root(wu):
                out.append(AffineRealRoot(wu, 0))
            else:
                out.append(AffineRealRoot(wu, 1))
        return out

    def si_covers(
        self, x: AffineWeylElt, a: Fraction | None = None
    ) -> tuple[tuple[AffineRealRoot, AffineWeylElt], ...]:
        """All edges x -> r_beta x of the graph (restricted to level a if given)."""
        cached = self._cover_cache.get(x)
        if cached is None:
            out = []
            target = x.si_length + 1
            for beta in self._cover_candidates(self.decompose(x).w):
                if not self.datum.is_positive_affine(beta):
                    continue
                y = affine_reflection(self.datum, beta).mul(x)
                if y.si_length == target and self.is_rep(y):
                    out.append((beta, y))
            cached = tuple(out)
            self._cover_cache[x] = cached
        if a is None:
            return cached
        return tuple((beta, y) for beta, y in cached if self._admits(a, beta, x))

    def si_lower_covers(
        self, x: AffineWeylElt, a: Fraction | None = None
    ) -> tuple[tuple[AffineRealRoot, AffineWeylElt], ...]:
        """All edges z -> x, listed as (beta, z)."""
        out = []
        datum = self.datum
        for u in datum.pos_roots:
            for beta in (AffineRealRoot(u, 0), AffineRealRoot(vec_neg(u), 1)):
                z = affine_reflection(datum, beta).mul(x)
                if z.si_length == x.si_length - 1 and self.is_rep(z):
                    if self._admits(a, beta, z):
                        out.append((beta, z))
        return tuple(out)

    def si_leq(
        self,
        x: AffineWeylElt,
        y: AffineWeylElt,
        a: Fraction | None = None,
    ) -> bool:
        """True iff a directed path from x to y exists in the (sub)graph."""
        if x == y:
            return True
        key = (x, y, a)
        cached = self._si_leq_cache.get(key)
        if cached is not None:
            return cached
        result = self._si_leq_search(x, y, a)
        self._si_leq_cache[key] = result
        return result

    def _box_ok(self, z: AffineWeylElt, y: AffineWeylElt) -> bool:
        # the I\J translation coordinates only grow along covers
        jset = set(self.j_nodes)
        return all(
            z.xi[i - 1] <= y.xi[i - 1]
            for i in range(1, self.datum.rank + 1)
            if i not in jset
        )

    def _si_leq_search(self, x, y, a) -> bool:
        steps = y.si_length - x.si_length
        if steps <= 0 or not self._box_ok(x, y):
            return False
        frontier = {x}
        for _ in range(steps):
            nxt = set()
            for z in frontier:
                for _beta, z2 in self.si_covers(z, a):
                    if z2 == y:
                        return True
                    if self._box_ok(z2, y):
                        nxt.add(z2)
            frontier = nxt
            if not frontier:
                return False
        return False

    def si_ball(self, radius: int) -> tuple[AffineWeylElt, ...]:
        """Everything within `radius` cover steps (up or down) of the identity."""
        seen = {affine_identity(self.datum)}
        frontier = set(seen)
        for _ in range(radius):
            nxt = set()
            for x in frontier:
                for _beta, y in self.si_covers(x):
                    if y not in seen:
                        nxt.add(y)
                for _beta, z in self.si_lower_covers(x):
                    if z not in seen:
                        nxt.add(z)
            seen |= nxt
            frontier = nxt
        return tuple(sorted(seen, key=lambda v: (v.si_length, v.xi, v.w.root_mat)))

    def pairing_values(self) -> tuple[int, ...]:
        """The positive pairings <gamma^vee, lambda> over gamma outside Delta_J."""
        vals = set()
        jset = set(self.j_nodes)
        for u in self.datum.pos_roots:
            if all(u[i - 1] == 0 for i in range(1, self.datum.rank + 1) if i not in jset):
                continue
            vals.add(
                self.datum.pair_coweight_weight(self.datum.coroot(u), self.lam_weight)
            )
        return tuple(sorted(vals))

    def cut_grid(self) -> tuple[Fraction, ...]:
        """All rationals in (0,1) that can occur as cut points of a valid path."""
        vals = self.pairing_values()
        lcm = 1
        for v in vals:
            lcm = lcm * v // math.gcd(lcm, v)
        out = sorted(
            {Fraction(p, q) for q in range(2, lcm + 1) if any(v % q == 0 for v in vals) for p in range(1, q)}
        )
        return tuple(out)
