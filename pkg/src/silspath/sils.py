"""Semi-infinite LS path crystals: validity, root operators, enumeration.

A path is a strictly decreasing chain of Peterson representatives together
with rational cut points; consecutive directions must be connected inside
the level-`a` subgraph of the semi-infinite Bruhat graph, where `a` is the
cut between them.  The root operators reflect the portion of the path
between the times t0 and t1 read off the height function of the node, and
splice the result back with the two standard drop rules.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, LevelZeroWeight, Vec
from .weyl import (
    AffineWeylElt,
    BudgetExceeded,
    affine_identity,
    affine_simple,
    longest_element,
    simple_reflection,
)
from .peterson import ParabolicQuotient


@dataclass(frozen=True, eq=False)
class SiLSPath:
    directions: tuple[AffineWeylElt, ...]
    cuts: tuple[Fraction, ...]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SiLSPath)
            and self.cuts == other.cuts
            and self.directions == other.directions
        )

    def __hash__(self) -> int:
        return hash((self.directions, self.cuts))

    def __repr__(self) -> str:
        dirs = ",".join(repr(x) for x in self.directions)
        cuts = ",".join(str(a) for a in self.cuts)
        return f"Path({dirs}; {cuts})"

    @property
    def iota(self) -> AffineWeylElt:
        return self.directions[0]

    @property
    def kappa(self) -> AffineWeylElt:
        return self.directions[-1]

    def sort_key(self):
        return (
            len(self.directions),
            self.cuts,
            tuple((x.xi, x.w.root_mat) for x in self.directions),
        )


def _normalize_segments(
    segments: list[tuple[AffineWeylElt, Fraction, Fraction]]
) -> SiLSPath:
    """Drop empty segments and merge adjacent equal directions."""
    dirs: list[AffineWeylElt] = []
    cuts: list[Fraction] = [Fraction(0)]
    for x, left, right in segments:
        if left == right:
            continue
        if dirs and dirs[-1] == x:
            cuts[-1] = right
            continue
        dirs.append(x)
        cuts.append(right)
    assert cuts[0] == 0 and cuts[-1] == 1
    return SiLSPath(tuple(dirs), tuple(cuts))


class SiLSCrystal:
    """All shape-lambda machinery for one Cartan datum and dominant weight."""

    def __init__(self, datum: CartanDatum, lam: Vec):
        self.datum = datum
        self.lam = tuple(lam)
        self.quotient = ParabolicQuotient.for_weight(datum, self.lam)
        self.lam_weight = LevelZeroWeight(self.lam, 0)

    # -- basic paths ----------------------------------------------------------

    def unit_path(self) -> SiLSPath:
        return SiLSPath((affine_identity(self.datum),), (Fraction(0), Fraction(1)))

    def invalid_reason(self, eta: SiLSPath) -> str | None:
        if not eta.directions or len(eta.cuts) != len(eta.directions) + 1:
            return "mismatched direction/cut lengths"
        if eta.cuts[0] != 0 or eta.cuts[-1] != 1:
            return "cuts must start at 0 and end at 1"
        if any(b <= a for a, b in zip(eta.cuts, eta.cuts[1:])):
            return "cuts must strictly increase"
        for x in eta.directions:
            if not self.quotient.is_rep(x):
                return f"direction {x!r} is not a Peterson representative"
        for u in range(len(eta.directions) - 1):
            lower, upper = eta.directions[u + 1], eta.directions[u]
            if lower == upper:
                return f"adjacent equal directions at segment {u + 1}"
            if not self.quotient.si_leq(lower, upper, eta.cuts[u + 1]):
                return (
                    f"no directed path from {lower!r} to {upper!r} "
                    f"at level {eta.cuts[u + 1]}"
                )
        return None

    def validate(self, eta: SiLSPath) -> bool:
        return self.invalid_reason(eta) is None

    def direction_weight(self, x: AffineWeylElt) -> LevelZeroWeight:
        return x.act_weight(self.lam_weight)

    def weight(self, eta: SiLSPath) -> LevelZeroWeight:
        fw = [Fraction(0)] * self.datum.rank
        delta = Fraction(0)
        for u, x in enumerate(eta.directions):
            span = eta.cuts[u + 1] - eta.cuts[u]
            xl = self.direction_weight(x)
            for k in range(self.datum.rank):
                fw[k] += span * xl.fw[k]
            delta += span * xl.delta
        assert all(c.denominator == 1 for c in fw) and delta.denominator == 1
        return LevelZeroWeight(tuple(int(c) for c in fw), int(delta))

    # -- height functions and root operators -----------------------------------

    def _heights(self, eta: SiLSPath, j: int) -> tuple[list[int], list[Fraction]]:
        slopes = [
            self.datum.acoroot_pairing(j, self.direction_weight(x))
            for x in eta.directions
        ]
        h = [Fraction(0)]
        for u, slope in enumerate(slopes):
            h.append(h[-1] + (eta.cuts[u + 1] - eta.cuts[u]) * slope)
        return slopes, h

    def string_eps(self, eta: SiLSPath, j: int) -> int:
        _, h = self._heights(eta, j)
        m = min(h)
        assert m.denominator == 1
        return -int(m)

    def string_phi(self, eta: SiLSPath, j: int) -> int:
        _, h = self._heights(eta, j)
        m = min(h)
        assert (h[-1] - m).denominator == 1
        return int(h[-1] - m)

    def root_e(self, eta: SiLSPath, j: int) -> SiLSPath | None:
        slopes, h = self._heights(eta, j)
        m = min(h)
        if m == 0:
            return None
        assert m.denominator == 1
        cuts, dirs = eta.cuts, eta.directions
        s = len(dirs)
        q = next(u for u in range(s + 1) if h[u] == m)
        t1 = cuts[q]
        t0 = None
        for u in range(q, 0, -1):
            lo, hi = min(h[u - 1], h[u]), max(h[u - 1], h[u])
            if lo <= m + 1 <= hi:
                if slopes[u - 1] == 0:
                    t0 = cuts[u]
                else:
                    t0 = cuts[u - 1] + (m + 1 - h[u - 1]) / slopes[u - 1]
                break
        assert t0 is not None and t0 < t1
        p = next(u for u in range(1, s + 1) if cuts[u - 1] <= t0 < cuts[u])
        rj = affine_simple(self.datum, j)
        segments: list[tuple[AffineWeylElt, Fraction, Fraction]] = []
        for u in range(1, p):
            segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        segments.append((dirs[p - 1], cuts[p - 1], t0))
        segments.append((rj.mul(dirs[p - 1]), t0, cuts[p]))
        for u in range(p + 1, q + 1):
            segments.append((rj.mul(dirs[u - 1]), cuts[u - 1], cuts[u]))
        for u in range(q + 1, s + 1):
            segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        return _normalize_segments(segments)

    def root_f(self, eta: SiLSPath, j: int) -> SiLSPath | None:
        slopes, h = self._heights(eta, j)
        m = min(h)
        if h[-1] - m == 0:
            return None
        assert m.denominator == 1
        cuts, dirs = eta.cuts, eta.directions
        s = len(dirs)
        p = max(u for u in range(s + 1) if h[u] == m)
        t0 = cuts[p]
        t1 = None
        q = None
        for u in range(p + 1, s + 1):
            if h[u] >= m + 1:
                t1 = cuts[u - 1] + (m + 1 - h[u - 1]) / slopes[u - 1]
                q = u - 1
                break
        assert t1 is not None and q is not None and t0 < t1
        rj = affine_simple(self.datum, j)
        segments: list[tuple[AffineWeylElt, Fraction, Fraction]] = []
        for u in range(1, p + 1):
            segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        for u in range(p + 1, q + 1):
            segments.append((rj.mul(dirs[u - 1]), cuts[u - 1], cuts[u]))
        segments.append((rj.mul(dirs[q]), cuts[q], t1))
        segments.append((dirs[q], t1, cuts[q + 1]))
        for u in range(q + 2, s + 1):
            segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        return _normalize_segments(segments)

    def apply(self, eta: SiLSPath, ops: tuple[tuple[str, int], ...]) -> SiLSPath:
        """Replay a monomial of root operators given as (tag, node) pairs."""
        for tag, j in ops:
            nxt = self.root_e(eta, j) if tag == "e" else self.root_f(eta, j)
            assert nxt is not None, f"operator {tag}_{j} vanished during replay"
            eta = nxt
        return eta

    def f_max(self, eta: SiLSPath, j: int) -> tuple[SiLSPath, int]:
        count = 0
        while True:
            nxt = self.root_f(eta, j)
            if nxt is None:
                return eta, count
            eta = nxt
            count += 1

    def e_max(self, eta: SiLSPath, j: int) -> tuple[SiLSPath, int]:
        count = 0
        while True:
            nxt = self.root_e(eta, j)
            if nxt is None:
                return eta, count
            eta = nxt
            count += 1

    # -- Weyl group action ------------------------------------------------------

    def is_translation_type(self, eta: SiLSPath) -> bool:
        return all(
            self.quotient.cl_direction(x).is_identity for x in eta.directions
        )

    def _s_translation_form(self, x: AffineWeylElt, eta: SiLSPath) -> SiLSPath:
        dirs = tuple(self.quotient.project(x.mul(y)) for y in eta.directions)
        return SiLSPath(dirs, eta.cuts)

    def weyl_action(self, x: AffineWeylElt, eta: SiLSPath) -> SiLSPath:
        """S_x eta via a reduced word, or the projection form on translates."""
        if self.is_translation_type(eta):
            return self._s_translation_form(x, eta)
        for j in reversed(x.reduced_word()):
            eta = self._s_simple(j, eta)
        return eta

    def _s_simple(self, j: int, eta: SiLSPath) -> SiLSPath:
        n = self.datum.acoroot_pairing(j, self.weight(eta))
        if n >= 0:
            for _ in range(n):
                nxt = self.root_f(eta, j)
                assert nxt is not None
                eta = nxt
        else:
            for _ in range(-n):
                nxt = self.root_e(eta, j)
                assert nxt is not None
                eta = nxt
        return eta

    # -- duality ---------------------------------------------------------------

    @functools.cached_property
    def dual(self) -> "SiLSCrystal":
        dual_lam = tuple(
            self.lam[self.datum.sigma[i] - 1] for i in range(self.datum.rank)
        )
        return SiLSCrystal(self.datum, dual_lam)

    def dual_path(self, eta: SiLSPath) -> SiLSPath:
        dirs = tuple(self.quotient.vee(x) for x in reversed(eta.directions))
        cuts = tuple(1 - a for a in reversed(eta.cuts))
        return SiLSPath(dirs, cuts)

    # -- Demazure subsets --------------------------------------------------------

    def in_demazure_final(self, eta: SiLSPath, x: AffineWeylElt) -> bool:
        """kappa(eta) >= x in the semi-infinite order."""
        return self.quotient.si_leq(x, eta.kappa)

    def in_demazure_initial(self, eta: SiLSPath, x: AffineWeylElt) -> bool:
        """x >= iota(eta) in the semi-infinite order."""
        return self.quotient.si_leq(eta.iota, x)

    # -- canonicalization ---------------------------------------------------------

    @functools.cached_property
    def _orbit_raising_walk(self) -> tuple[int, ...]:
        """Node labels climbing the finite orbit from w_0(lambda) back to lambda."""
        datum = self.datum
        start = longest_element(datum).act_fw(self.lam)
        if start == self.lam:
            return ()
        parent: dict[Vec, tuple[Vec, int]] = {start: (start, -1)}
        frontier = [start]
        while frontier:
            nxt = []
            for nu in frontier:
                mu = LevelZeroWeight(nu, 0)
                for j in range(datum.rank + 1):
                    if datum.acoroot_pairing(j, mu) <= 0:
                        continue
                    if j == 0:
                        pair = -datum.acoroot_pairing(0, mu)
                        theta_fw = datum.root_to_fw(datum.theta)
                        nu2 = tuple(
                            c - pair * t for c, t in zip(nu, theta_fw)
                        )
                    else:
                        nu2 = simple_reflection(datum, j).act_fw(nu)
                    if nu2 not in parent:
                        parent[nu2] = (nu, j)
                        if nu2 == self.lam:
                            walk = []
                            cur = nu2
                            while parent[cur][1] != -1:
                                prev, jj = parent[cur]
                                walk.append(jj)
                                cur = prev
                            return tuple(reversed(walk))
                        nxt.append(nu2)
            frontier = nxt
        raise AssertionError("orbit walk did not reach the dominant weight")

    def canonicalize(self, eta: SiLSPath) -> tuple[tuple[tuple[int, int], ...], SiLSPath]:
        """Lower to a translation-type element of the component.

        Returns the applied monomial as (node, power) pairs and the terminal
        path, whose directions are all of the form z_xi t_xi.  Each round
        lowers to an I-lowest element and then climbs the finite orbit of the
        final direction back to lambda; rounds repeat until every direction
        straightens (empirically at most two are needed, guarded here).
        """
        ops: list[tuple[int, int]] = []
        rounds = 0
        while not self.is_translation_type(eta):
            rounds += 1
            assert rounds <= 64, "canonicalization failed to converge"
            progress = True
            while progress:
                progress = False
                for j in range(1, self.datum.rank + 1):
                    eta2, count = self.f_max(eta, j)
                    if count:
                        ops.append((j, count))
                        eta = eta2
                        progress = True
            if self.is_translation_type(eta):
                break
            for j in self._orbit_raising_walk:
                eta, count = self.f_max(eta, j)
                assert count >= 1
                ops.append((j, count))
        return tuple(ops), eta

    def component_base(self, eta: SiLSPath) -> SiLSPath:
        """The unique translation-type path with final direction e reachable
        from eta; two paths lie in one component iff these agree."""
        _, terminal = self.canonicalize(eta)
        base = self.weyl_action(terminal.kappa.inverse(), terminal)
        assert base.kappa == affine_identity(self.datum)
        return base

    # -- truncated enumeration -----------------------------------------------------

    def enumerate_demazure(
        self, x: AffineWeylElt, depth: int, budget: int = 500_000
    ) -> tuple[SiLSPath, ...]:
        """All paths with kappa >= x whose weight delta is >= -depth."""
        assert depth >= 0
        quotient = self.quotient
        lam = self.lam_weight
        p_of = lambda z: self.datum.pair_coweight_weight(z.xi, lam)
        grid = quotient.cut_grid()
        lcm = max((f.denominator for f in grid), default=1)
        p_x = p_of(x)
        bound = lcm * (depth + max(0, -p_x)) + max(0, p_x)

        # reachable direction pool: everything >= x with bounded pairing
        pool: set[AffineWeylElt] = {x}
        frontier = [x]
        while frontier:
            z = frontier.pop()
            for _beta, y in quotient.si_covers(z):
                if y not in pool and p_of(y) <= bound:
                    if len(pool) >= budget:
                        raise BudgetExceeded("direction pool exceeded budget")
                    pool.add(y)
                    frontier.append(y)

        @functools.lru_cache(maxsize=None)
        def upward(z: AffineWeylElt, a: Fraction) -> tuple[AffineWeylElt, ...]:
            seen = {z}
            queue = [z]
            while queue:
                cur = queue.pop()
                for _beta, y in quotient.si_covers(cur, a):
                    if y not in seen and p_of(y) <= bound:
                        seen.add(y)
                        queue.append(y)
            seen.discard(z)
            return tuple(seen)

        results: list[SiLSPath] = []

        def settle(chain: list[AffineWeylElt], cuts_desc: list[Fraction], settled: Fraction):
            top = chain[-1]
            right = cuts_desc[-1] if cuts_desc else Fraction(1)
            # closing now puts `top` on [0, right]
            total = settled + right * p_of(top)
            if -total >= -depth:
                dirs = tuple(reversed(chain))
                cuts = (Fraction(0),) + tuple(reversed(cuts_desc)) + (Fraction(1),)
                results.append(SiLSPath(dirs, cuts))
            if len(results) > budget:
                raise BudgetExceeded("path enumeration exceeded budget")
            for a in grid:
                if a >= right:
                    continue
                new_settled = settled + (right - a) * p_of(top)
                # every remaining direction pairs at least as high as `top`
                if new_settled + a * p_of(top) > depth:
                    continue
                for y in upward(top, a):
                    if new_settled + a * p_of(y) > depth:
                        continue
                    chain.append(y)
                    cuts_desc.append(a)
                    settle(chain, cuts_desc, new_settled)
                    chain.pop()
                    cuts_desc.pop()

        for kappa in sorted(pool, key=lambda z: (z.si_length, z.xi, z.w.root_mat)):
            settle([kappa], [], Fraction(0))
        results.sort(key=SiLSPath.sort_key)
        return tuple(results)


def multipartitions(lam: Vec, max_total: int, strict: bool) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Tuples of partitions, one per node, of total size <= max_total.

    With ``strict`` the partition at node i has length < lam[i], otherwise
    length <= lam[i].
    """

    def partitions_bounded(max_len: int, total: int):
        if max_len <= 0:
            yield ()
            return
        def gen(remaining, max_part, slots):
            yield ()
            if not slots or not remaining:
                return
            for first in range(min(remaining, max_part), 0, -1):
                for rest in gen(remaining - first, first, slots - 1):
                    yield (first,) + rest
        yield from gen(total, total, max_len)

    per_node = []
    for m in lam:
        bound = (m - 1) if strict else m
        per_node.append(list(partitions_bounded(bound, max_total)))
    out = []
    for combo in itertools.product(*per_node):
        if sum(sum(p) for p in combo) <= max_total:
            out.append(tuple(combo))
    return tuple(out)

