"""Exact root-system tables for the nine untwisted affine families.

A :class:`CartanDatum` holds the finite Cartan matrix in the convention
``cartan[i][j] = <alpha_i^vee, alpha_j>`` together with every derived table
the rest of the library reads: positive roots (generated by reflection
closure, not hard-coded), the highest root, marks and comarks of the
affinization at the distinguished node 0, the symmetrizer, and the diagram
involution induced by the longest Weyl element.

Coordinate conventions used throughout the package:

* roots are integer tuples over the simple-root basis ``alpha_1..alpha_n``;
* coweights are integer tuples over the simple-coroot basis;
* weights are integer tuples over the level-zero fundamental weights
  ``varpi_1..varpi_n``, plus an integer multiple of the null root delta;
* finite Dynkin nodes are labelled 1..n, the affine node is 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 9),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


class AffineRealRoot(NamedTuple):
    """A real affine root ``alpha + n*delta`` with nonzero finite part."""

    finite: Vec
    n: int


class LevelZeroWeight(NamedTuple):
    """An element of the level-zero weight lattice ``P + Z*delta``."""

    fw: Vec
    delta: int

    def __add__(self, other: "LevelZeroWeight") -> "LevelZeroWeight":
        return LevelZeroWeight(
            tuple(a + b for a, b in zip(self.fw, other.fw)),
            self.delta + other.delta,
        )

    def __neg__(self) -> "LevelZeroWeight":
        return LevelZeroWeight(tuple(-a for a in self.fw), -self.delta)


def mat_id(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def vec_mat(v: Vec, a: Mat) -> Vec:
    n = len(v)
    return tuple(sum(v[i] * a[i][j] for i in range(n)) for j in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def _cartan_matrix(type_label: str, rank: int) -> Mat:
    """Finite Cartan matrix, rows indexed by coroots (Bourbaki numbering)."""
    n = rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if type_label == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif type_label == "B":
        # alpha_n is the short root
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -1, -2)
    elif type_label == "C":
        # alpha_n is the long root
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, -2, -1)
    elif type_label == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif type_label == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif type_label == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif type_label == "G":
        # alpha_1 short, alpha_2 long
        bond(1, 2, -3, -1)
    else:  # pragma: no cover - guarded by build()
        raise ValueError(type_label)
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Mat) -> Vec:
    """Positive integers d with d_i * a_ij = d_j * a_ji, normalized to min 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    assert all(x is not None for x in d), "Cartan matrix must be connected"
    scale = min(x for x in d)  # type: ignore[type-var]
    out = tuple(x / scale for x in d)  # type: ignore[operator]
    assert all(x.denominator == 1 and x > 0 for x in out)
    return tuple(int(x) for x in out)


def _positive_roots(cartan: Mat) -> tuple[Vec, ...]:
    """All roots via reflection closure of the simple roots; positives only."""
    n = len(cartan)
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen: set[Vec] = set(simples)
    frontier = list(simples)
    while frontier:
        u = frontier.pop()
        for i in range(n):
            c = sum(cartan[i][j] * u[j] for j in range(n))
            v = tuple(u[k] - (c if k == i else 0) for k in range(n))
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    pos = [u for u in seen if all(c >= 0 for c in u)]
    pos.sort(key=lambda u: (sum(u), u))
    assert 2 * len(pos) == len(seen)
    return tuple(pos)


def _longest_root_matrix(cartan: Mat, pos_roots: tuple[Vec, ...]) -> Mat:
    """Root-coordinate action matrix of the longest element w_0."""
    n = len(cartan)
    m = mat_id(n)
    # multiply simple reflections on the right while some simple image stays
    # positive; w_0 is the unique element with no such index left
    while True:
        img_cols = tuple(zip(*m))
        for i in range(n):
            if all(c >= 0 for c in img_cols[i]) and any(img_cols[i]):
                refl = tuple(
                    tuple(
                        (1 if r == k else 0) - (cartan[i][k] if r == i else 0)
                        for k in range(n)
                    )
                    for r in range(n)
                )
                m = mat_mul(m, refl)
                break
        else:
            return m


@dataclass(frozen=True, eq=False)
class CartanDatum:
    type_label: str
    rank: int
    cartan: Mat
    sym: Vec
    pos_roots: tuple[Vec, ...]
    theta: Vec
    theta_coroot: Vec
    marks: Vec
    comarks: Vec
    sigma: Vec  # sigma[i-1] is the node label paired with node i by -w_0
    w0_root_mat: Mat

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CartanDatum)
            and self.type_label == other.type_label
            and self.rank == other.rank
        )

    def __hash__(self) -> int:
        return hash((self.type_label, self.rank))

    def __repr__(self) -> str:
        return f"CartanDatum({self.type_label}{self.rank})"

    @functools.cached_property
    def root_set(self) -> frozenset[Vec]:
        return frozenset(self.pos_roots) | frozenset(
            vec_neg(u) for u in self.pos_roots
        )

    @functools.cached_property
    def pos_root_set(self) -> frozenset[Vec]:
        return frozenset(self.pos_roots)

    @property
    def rho(self) -> Vec:
        """rho in fundamental-weight coordinates: the all-ones vector."""
        return (1,) * self.rank

    def simple_root(self, i: int) -> Vec:
        """Root coordinates of alpha_i for a finite node label i in 1..n."""
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_root(self, u: Vec) -> bool:
        return u in self.root_set

    def is_positive_root(self, u: Vec) -> bool:
        return u in self.pos_root_set

    def pair_coweight_root(self, c: Vec, u: Vec) -> int:
        """<xi, alpha> for a coweight xi and an element alpha of Q."""
        n = self.rank
        return sum(c[i] * self.cartan[i][j] * u[j] for i in range(n) for j in range(n))

    def pair_coweight_weight(self, c: Vec, mu: LevelZeroWeight) -> int:
        """<xi, mu>; the delta part of mu pairs to zero with Q^vee."""
        return sum(a * b for a, b in zip(c, mu.fw))

    def root_norm_half(self, u: Vec) -> Fraction:
        """(alpha, alpha)/2 in the normalization (alpha_i, alpha_j) = d_i a_ij."""
        n = self.rank
        s = sum(
            u[i] * u[j] * self.sym[i] * self.cartan[i][j]
            for i in range(n)
            for j in range(n)
        )
        return Fraction(s, 2)

    def coroot(self, u: Vec) -> Vec:
        """Coweight coordinates of the dual root alpha^vee."""
        du = self.root_norm_half(u)
        out = tuple(Fraction(u[j] * self.sym[j]) / du for j in range(self.rank))
        assert all(x.denominator == 1 for x in out), u
        return tuple(int(x) for x in out)

    def root_to_fw(self, u: Vec) -> Vec:
        """Fundamental-weight coordinates of an element of Q."""
        return tuple(
            sum(self.cartan[i][j] * u[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def root_weight(self, u: Vec, delta: int = 0) -> LevelZeroWeight:
        return LevelZeroWeight(self.root_to_fw(u), delta)

    def is_positive_affine(self, beta: AffineRealRoot) -> bool:
        if beta.n != 0:
            return beta.n > 0
        return self.is_positive_root(beta.finite)

    def affine_simple_root(self, j: int) -> AffineRealRoot:
        """alpha_j for j in I_af; node 0 gives -theta + delta."""
        if j == 0:
            return AffineRealRoot(vec_neg(self.theta), 1)
        return AffineRealRoot(self.simple_root(j), 0)

    def acoroot_pairing(self, j: int, mu: LevelZeroWeight) -> int:
        """<alpha_j^vee, mu> for j in I_af and a level-zero weight mu."""
        if j == 0:
            return -sum(a * b for a, b in zip(self.theta_coroot, mu.fw))
        return mu.fw[j - 1]


def sigma_involution(datum: CartanDatum) -> Vec:
    """The map with w_0(alpha_j) = -alpha_{sigma(j)}, as a tuple over 1..n."""
    return datum.sigma


@functools.lru_cache(maxsize=None)
def build(type_label: str, rank: int) -> CartanDatum:
    """Construct (and cache) the full datum for one untwisted family member."""
    if type_label not in _RANK_RANGE or rank not in _RANK_RANGE[type_label]:
        raise ValueError(f"unsupported type/rank combination {type_label}{rank}")
    cartan = _cartan_matrix(type_label, rank)
    sym = _symmetrizer(cartan)
    pos = _positive_roots(cartan)
    theta = pos[-1]
    assert all(all(t >= u for t, u in zip(theta, v)) for v in pos)

    # temporary datum to reuse coroot machinery for theta
    tmp = CartanDatum(
        type_label, rank, cartan, sym, pos, theta, (), (), (), (), ()
    )
    theta_coroot = tmp.coroot(theta)
    marks = theta
    comarks = theta_coroot

    w0_mat = _longest_root_matrix(cartan, pos)
    sigma = []
    for i in range(rank):
        col = tuple(w0_mat[r][i] for r in range(rank))
        neg = vec_neg(col)
        assert sum(neg) == 1 and all(c in (0, 1) for c in neg)
        sigma.append(neg.index(1) + 1)

    datum = CartanDatum(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        sym=sym,
        pos_roots=pos,
        theta=theta,
        theta_coroot=theta_coroot,
        marks=marks,
        comarks=comarks,
        sigma=tuple(sigma),
        w0_root_mat=w0_mat,
    )
    _check_affinization(datum)
    return datum


def _check_affinization(datum: CartanDatum) -> None:
    """The (n+1) x (n+1) affine matrix must kill the mark vector."""
    n = datum.rank
    marks_aff = (1,) + datum.marks
    # row 0: <alpha_0^vee, alpha_j> = 2*delta_{j0} - <theta^vee, alpha_j>
    row0 = [2] + [
        -datum.pair_coweight_root(datum.theta_coroot, datum.simple_root(j))
        for j in range(1, n + 1)
    ]
    rows = [tuple(row0)]
    for i in range(1, n + 1):
        ci = tuple(1 if k == i - 1 else 0 for k in range(n))
        ri = [-datum.pair_coweight_root(ci, datum.theta)]
        ri += [datum.cartan[i - 1][j - 1] for j in range(1, n + 1)]
        rows.append(tuple(ri))
    for row in rows:
        assert sum(a * m for a, m in zip(row, marks_aff)) == 0
