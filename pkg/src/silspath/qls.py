"""Quantum LS paths as projections of the semi-infinite crystal.

The finite crystal of shape lambda is generated from the straight-line path
by root operators applied through recorded lifts in the component of the
unit path; the projection cl forgets the translation data of each direction
and merges equal neighbours.  The distinguished lifts with final (resp.
initial) direction inside the finite quotient W^J supply the tail degree
used by the graded characters.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cartan import CartanDatum, LevelZeroWeight, Vec
from .weyl import (
    BudgetExceeded,
    FiniteWeylElt,
    finite_reflection,
    simple_reflection,
    translation,
)
from .sils import SiLSCrystal, SiLSPath


@dataclass(frozen=True, eq=False)
class QLSPath:
    directions: tuple[FiniteWeylElt, ...]
    cuts: tuple[Fraction, ...]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QLSPath)
            and self.cuts == other.cuts
            and self.directions == other.directions
        )

    def __hash__(self) -> int:
        return hash((self.directions, self.cuts))

    def __repr__(self) -> str:
        dirs = ",".join(repr(w) for w in self.directions)
        cuts = ",".join(str(a) for a in self.cuts)
        return f"QLS({dirs}; {cuts})"

    def sort_key(self):
        return (
            len(self.directions),
            self.cuts,
            tuple(w.root_mat for w in self.directions),
        )


class LiftRecord(NamedTuple):
    path: QLSPath
    lift: SiLSPath
    ops: tuple[tuple[str, int], ...]


class QLSCrystal:
    def __init__(self, datum: CartanDatum, lam: Vec):
        self.datum = datum
        self.lam = tuple(lam)
        self.sils = SiLSCrystal(datum, self.lam)

    def cl(self, eta: SiLSPath) -> QLSPath:
        """Project directions to W^J and merge equal neighbours."""
        dirs: list[FiniteWeylElt] = []
        cuts: list[Fraction] = [Fraction(0)]
        for u, x in enumerate(eta.directions):
            w = self.sils.quotient.cl_direction(x)
            if dirs and dirs[-1] == w:
                cuts[-1] = eta.cuts[u + 1]
            else:
                dirs.append(w)
                cuts.append(eta.cuts[u + 1])
        return QLSPath(tuple(dirs), tuple(cuts))

    def weight(self, psi: QLSPath) -> Vec:
        fw = [Fraction(0)] * self.datum.rank
        for u, w in enumerate(psi.directions):
            span = psi.cuts[u + 1] - psi.cuts[u]
            img = w.act_fw(self.lam)
            for k in range(self.datum.rank):
                fw[k] += span * img[k]
        assert all(c.denominator == 1 for c in fw)
        return tuple(int(c) for c in fw)

    @functools.cached_property
    def table(self) -> dict[QLSPath, LiftRecord]:
        """Generate the full finite crystal with one lift per element."""
        budget = 200_000
        start_lift = self.sils.unit_path()
        start = LiftRecord(self.cl(start_lift), start_lift, ())
        table = {start.path: start}
        queue = [start]
        while queue:
            rec = queue.pop()
            for j in range(self.datum.rank + 1):
                for tag, op in (("e", self.sils.root_e), ("f", self.sils.root_f)):
                    lift2 = op(rec.lift, j)
                    if lift2 is None:
                        continue
                    psi2 = self.cl(lift2)
                    if psi2 not in table:
                        if len(table) >= budget:
                            raise BudgetExceeded("QLS generation exceeded budget")
                        rec2 = LiftRecord(psi2, lift2, rec.ops + ((tag, j),))
                        table[psi2] = rec2
                        queue.append(rec2)
        return table

    def paths(self) -> tuple[QLSPath, ...]:
        return tuple(sorted(self.table, key=QLSPath.sort_key))

    # -- distinguished lifts ----------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def eta_kappa(self, psi: QLSPath) -> SiLSPath:
        """The unique lift in the unit component with final direction in W^J."""
        rec = self.table[psi]
        xi = self.sils.quotient.decompose(rec.lift.kappa).xi
        start = SiLSPath(
            (self.sils.quotient.project(translation(self.datum, tuple(-c for c in xi))),),
            (Fraction(0), Fraction(1)),
        )
        lift = self.sils.apply(start, rec.ops)
        kappa = lift.kappa
        assert not any(kappa.xi) and self.sils.quotient.is_min_rep(kappa.w)
        assert self.cl(lift) == psi
        return lift

    def deg_tail(self, psi: QLSPath) -> int:
        """The delta coefficient of the distinguished lift's weight."""
        k = self.sils.weight(self.eta_kappa(psi)).delta
        assert k <= 0
        return k

    @functools.cached_property
    def dual(self) -> "QLSCrystal":
        return QLSCrystal(self.datum, self.sils.dual.lam)

    @functools.lru_cache(maxsize=None)
    def star_dual(self, psi: QLSPath) -> QLSPath:
        """The image of psi under the weight-negating bijection to the dual shape."""
        rec = self.table[psi]
        image = self.dual.cl(self.sils.dual_path(rec.lift))
        assert image in self.dual.table
        return image

    @functools.lru_cache(maxsize=None)
    def eta_iota(self, psi: QLSPath) -> SiLSPath:
        """The unique lift in the unit component with initial direction in W^J."""
        star = self.star_dual(psi)
        lift = self.dual.sils.dual_path(self.dual.eta_kappa(star))
        iota = lift.iota
        assert not any(iota.xi) and self.sils.quotient.is_min_rep(iota.w)
        assert self.cl(lift) == psi
        return lift

    def kappa_direction(self, psi: QLSPath) -> FiniteWeylElt:
        return self.eta_kappa(psi).kappa.w

    def iota_direction(self, psi: QLSPath) -> FiniteWeylElt:
        return self.eta_iota(psi).iota.w

    # -- intrinsic root operators -------------------------------------------------

    def _cl_reflect(self, j: int, w: FiniteWeylElt) -> FiniteWeylElt:
        if j == 0:
            refl = finite_reflection(self.datum, self.datum.theta)
        else:
            refl = simple_reflection(self.datum, j)
        return self.sils.quotient.min_rep(refl.mul(w))

    def qls_op(self, psi: QLSPath, tag: str, j: int) -> QLSPath | None:
        """Root operator computed on the projected path itself."""
        slopes = [
            self.datum.acoroot_pairing(j, LevelZeroWeight(w.act_fw(self.lam), 0))
            for w in psi.directions
        ]
        h = [Fraction(0)]
        for u, slope in enumerate(slopes):
            h.append(h[-1] + (psi.cuts[u + 1] - psi.cuts[u]) * slope)
        m = min(h)
        cuts, dirs = psi.cuts, psi.directions
        s = len(dirs)
        segments: list[tuple[FiniteWeylElt, Fraction, Fraction]] = []
        if tag == "e":
            if m == 0:
                return None
            qq = next(u for u in range(s + 1) if h[u] == m)
            t0 = None
            for u in range(qq, 0, -1):
                lo, hi = min(h[u - 1], h[u]), max(h[u - 1], h[u])
                if lo <= m + 1 <= hi:
                    if slopes[u - 1] == 0:
                        t0 = cuts[u]
                    else:
                        t0 = cuts[u - 1] + (m + 1 - h[u - 1]) / slopes[u - 1]
                    break
            p = next(u for u in range(1, s + 1) if cuts[u - 1] <= t0 < cuts[u])
            for u in range(1, p):
                segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
            segments.append((dirs[p - 1], cuts[p - 1], t0))
            segments.append((self._cl_reflect(j, dirs[p - 1]), t0, cuts[p]))
            for u in range(p + 1, qq + 1):
                segments.append((self._cl_reflect(j, dirs[u - 1]), cuts[u - 1], cuts[u]))
            for u in range(qq + 1, s + 1):
                segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        else:
            if h[-1] - m == 0:
                return None
            p = max(u for u in range(s + 1) if h[u] == m)
            t1 = None
            qq = None
            for u in range(p + 1, s + 1):
                if h[u] >= m + 1:
                    t1 = cuts[u - 1] + (m + 1 - h[u - 1]) / slopes[u - 1]
                    qq = u - 1
                    break
            for u in range(1, p + 1):
                segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
            for u in range(p + 1, qq + 1):
                segments.append((self._cl_reflect(j, dirs[u - 1]), cuts[u - 1], cuts[u]))
            segments.append((self._cl_reflect(j, dirs[qq]), cuts[qq], t1))
            segments.append((dirs[qq], t1, cuts[qq + 1]))
            for u in range(qq + 2, s + 1):
                segments.append((dirs[u - 1], cuts[u - 1], cuts[u]))
        out_dirs: list[FiniteWeylElt] = []
        out_cuts: list[Fraction] = [Fraction(0)]
        for w, left, right in segments:
            if left == right:
                continue
            if out_dirs and out_dirs[-1] == w:
                out_cuts[-1] = right
            else:
                out_dirs.append(w)
                out_cuts.append(right)
        return QLSPath(tuple(out_dirs), tuple(out_cuts))
