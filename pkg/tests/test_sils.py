import itertools
from fractions import Fraction as F

import pytest

from silspath.cartan import LevelZeroWeight, build
from silspath.peterson import ParabolicQuotient
from silspath.sils import SiLSCrystal, SiLSPath, multipartitions
from silspath.weyl import (
    AffineWeylElt,
    affine_identity,
    affine_simple,
    bruhat_leq,
    from_finite,
    simple_reflection,
    translation,
    weyl_group,
)

ENUM_CASES = [
    (("A", 1), (1,), 3),
    (("A", 1), (2,), 2),
    (("A", 1), (3,), 2),
    (("A", 2), (1, 0), 2),
    (("A", 2), (1, 1), 1),
    (("C", 2), (1, 0), 2),
]


def crystal(fam, lam):
    return SiLSCrystal(build(*fam), lam)


def a1_paths(datum):
    e = affine_identity(datum)
    s1 = from_finite(simple_reflection(datum, 1))
    t1 = translation(datum, (1,))
    return e, s1, t1


# -- validation and weights -------------------------------------------------


def test_validate_examples(a1):
    two = SiLSCrystal(a1, (2,))
    one = SiLSCrystal(a1, (1,))
    e, s1, t1 = a1_paths(a1)
    assert two.validate(two.unit_path())
    good = SiLSPath((s1, e), (F(0), F(1, 2), F(1)))
    assert two.validate(good)
    assert not one.validate(good)
    assert "level" in one.invalid_reason(good)


def test_weight_examples(a1):
    two = SiLSCrystal(a1, (2,))
    e, s1, t1 = a1_paths(a1)
    assert two.weight(two.unit_path()) == LevelZeroWeight((2,), 0)
    assert two.weight(SiLSPath((s1, e), (F(0), F(1, 2), F(1)))) == LevelZeroWeight((0,), 0)
    assert two.weight(SiLSPath((t1, s1), (F(0), F(1, 2), F(1)))) == LevelZeroWeight((0,), -1)


# -- root operators -----------------------------------------------------------


def test_root_operator_examples(a1):
    two = SiLSCrystal(a1, (2,))
    e, s1, t1 = a1_paths(a1)
    eta = two.unit_path()
    f1 = two.root_f(eta, 1)
    assert f1 == SiLSPath((s1, e), (F(0), F(1, 2), F(1)))
    f11 = two.root_f(f1, 1)
    assert f11 == SiLSPath((s1,), (F(0), F(1)))
    assert two.root_f(f11, 1) is None
    e0 = two.root_e(eta, 0)
    assert e0 == SiLSPath((e, AffineWeylElt(s1.w, (-1,))), (F(0), F(1, 2), F(1)))
    for j in (1,):
        assert two.root_e(eta, j) is None


def test_string_examples(a1):
    two = SiLSCrystal(a1, (2,))
    eta = two.unit_path()
    assert two.string_phi(eta, 1) == 2
    assert two.string_eps(eta, 0) == 2
    assert two.string_eps(eta, 1) == 0


def test_iota_kappa(a1):
    two = SiLSCrystal(a1, (2,))
    e, s1, t1 = a1_paths(a1)
    eta = two.unit_path()
    assert eta.iota == eta.kappa == e
    assert SiLSPath((t1, s1), (F(0), F(1, 2), F(1))).kappa == s1


def _component_sample(crystal, depth):
    """Enumerated truncated Demazure set at the identity, a reusable sample."""
    return crystal.enumerate_demazure(affine_identity(crystal.datum), depth)


@pytest.mark.parametrize("fam,lam,depth", ENUM_CASES)
def test_crystal_axioms_on_enumerated_sets(fam, lam, depth):
    c = crystal(fam, lam)
    datum = c.datum
    for eta in _component_sample(c, depth):
        wt = c.weight(eta)
        for j in range(datum.rank + 1):
            aj = datum.affine_simple_root(j)
            alpha_fw = datum.root_to_fw(aj.finite)
            f = c.root_f(eta, j)
            if f is not None:
                assert c.validate(f)
                back = c.root_e(f, j)
                assert back == eta
                wtf = c.weight(f)
                assert wtf.fw == tuple(a - b for a, b in zip(wt.fw, alpha_fw))
                assert wtf.delta == wt.delta - aj.n
            ee = c.root_e(eta, j)
            if ee is not None:
                assert c.validate(ee)
                assert c.root_f(ee, j) == eta
            # string lengths match iterated operator counts
            _, eps_count = c.e_max(eta, j)
            _, phi_count = c.f_max(eta, j)
            assert eps_count == c.string_eps(eta, j)
            assert phi_count == c.string_phi(eta, j)
            # regularity of the j-string
            pairing = datum.acoroot_pairing(j, wt)
            assert c.string_phi(eta, j) - c.string_eps(eta, j) == pairing


def test_kappa_flip_criterion(a1):
    # the final direction flips under f^max exactly when its pairing is positive
    two = SiLSCrystal(a1, (2,))
    sample = _component_sample(two, 2)
    for eta in sample:
        for j in range(2):
            pairing = two.datum.acoroot_pairing(
                j, eta.kappa.act_weight(two.lam_weight)
            )
            fmax, count = two.f_max(eta, j)
            if pairing > 0:
                assert count >= 1
                assert fmax.kappa == affine_simple(a1, j).mul(eta.kappa)
            else:
                assert fmax.kappa == eta.kappa


# -- Weyl action ---------------------------------------------------------------


def test_weyl_action_examples(a1):
    two = SiLSCrystal(a1, (2,))
    e, s1, t1 = a1_paths(a1)
    eta = two.unit_path()
    assert two.weyl_action(affine_identity(a1), eta) == eta
    assert two.weyl_action(t1, eta) == SiLSPath((t1,), (F(0), F(1)))
    f1 = two.root_f(eta, 1)
    for j in range(2):
        rj = affine_simple(a1, j)
        assert two.weyl_action(rj, two.weyl_action(rj, f1)) == f1


def test_weyl_action_translation_form_consistent(a2):
    # the projection form and the reduced-word form agree on translates
    c = SiLSCrystal(a2, (1, 1))
    eta = c.unit_path()
    for xi in [(1, 0), (0, 1), (1, 1)]:
        x = translation(a2, xi)
        closed = c.weyl_action(x, eta)
        by_word = eta
        for j in reversed(x.reduced_word()):
            by_word = c._s_simple(j, by_word)
        assert closed == by_word
        assert c.validate(closed)


# -- duality --------------------------------------------------------------------


def test_dual_examples(a1):
    one = SiLSCrystal(a1, (1,))
    e, s1, t1 = a1_paths(a1)
    assert one.dual_path(one.unit_path()) == SiLSPath((s1,), (F(0), F(1)))
    assert one.dual.lam == (1,)


@pytest.mark.parametrize("fam,lam,depth", [(("A", 1), (2,), 2), (("A", 2), (1, 0), 1), (("C", 2), (1, 0), 1)])
def test_dual_properties(fam, lam, depth):
    c = crystal(fam, lam)
    dual = c.dual
    for eta in _component_sample(c, depth):
        im = c.dual_path(eta)
        assert dual.validate(im)
        assert dual.dual_path(im) == eta
        assert dual.weight(im) == -c.weight(eta)
        for j in range(c.datum.rank + 1):
            f = c.root_f(eta, j)
            fim = dual.root_e(im, j)
            assert (f is None) == (fim is None)
            if f is not None:
                assert c.dual_path(f) == fim
            e_ = c.root_e(eta, j)
            eim = dual.root_f(im, j)
            assert (e_ is None) == (eim is None)
            if e_ is not None:
                assert c.dual_path(e_) == eim


# -- Demazure membership -----------------------------------------------------------


def test_demazure_membership_examples(a1):
    one = SiLSCrystal(a1, (1,))
    e, s1, t1 = a1_paths(a1)
    eta = one.unit_path()
    assert one.in_demazure_final(eta, e)
    low = SiLSPath((AffineWeylElt(s1.w, (-1,)),), (F(0), F(1)))
    assert not one.in_demazure_final(low, e)
    assert one.in_demazure_initial(eta, e)


def test_demazure_nesting(a1):
    one = SiLSCrystal(a1, (1,))
    quotient = one.quotient
    ball = quotient.si_ball(3)
    sample = _component_sample(one, 3)
    for x in ball:
        for y in ball:
            sub = all(
                one.in_demazure_final(eta, x)
                for eta in sample
                if one.in_demazure_final(eta, y)
            )
            if quotient.si_leq(x, y):
                assert sub
    # and the converse on the witnessing single-direction paths
    for x in ball:
        for y in ball:
            if not quotient.si_leq(x, y):
                wit = SiLSPath((y,), (F(0), F(1)))
                assert not one.in_demazure_final(wit, x)


# -- stability of the Demazure subsets under operators ------------------------------


@pytest.mark.parametrize("fam,lam,depth", [(("A", 1), (2,), 2), (("A", 2), (1, 1), 1), (("C", 2), (1, 0), 1)])
def test_demazure_stability(fam, lam, depth):
    c = crystal(fam, lam)
    datum = c.datum
    quotient = c.quotient
    lamw = c.lam_weight
    xs = [x for x in quotient.si_ball(2)]
    sample = _component_sample(c, depth)
    for x in xs:
        members = [eta for eta in sample if c.in_demazure_final(eta, x)]
        for eta in members:
            for j in range(datum.rank + 1):
                f = c.root_f(eta, j)
                if f is not None:
                    assert c.in_demazure_final(f, x)
                pairing = datum.acoroot_pairing(j, x.act_weight(lamw))
                if pairing >= 0:
                    e_ = c.root_e(eta, j)
                    if e_ is not None:
                        assert c.in_demazure_final(e_, x)
                if pairing != 0:
                    rjx = affine_simple(datum, j).mul(x)
                    fmax, _ = c.f_max(eta, j)
                    assert c.in_demazure_final(fmax, rjx)


@pytest.mark.parametrize("fam,lam,depth", [(("A", 1), (2,), 2), (("A", 2), (1, 1), 1)])
def test_demazure_string_generation(fam, lam, depth):
    # for positive pairing, the set at x is swept out from the set at r_j x
    # by raising operators
    c = crystal(fam, lam)
    datum = c.datum
    quotient = c.quotient
    lamw = c.lam_weight
    sample = _component_sample(c, depth)
    for x in quotient.si_ball(2):
        for j in range(datum.rank + 1):
            if datum.acoroot_pairing(j, x.act_weight(lamw)) <= 0:
                continue
            rjx = affine_simple(datum, j).mul(x)
            for eta in sample:
                if c.in_demazure_final(eta, x):
                    fmax, _ = c.f_max(eta, j)
                    assert c.in_demazure_final(fmax, rjx)
                    back, count = c.e_max(fmax, j)
                    # eta appears along the raising string from fmax
                    cur, found = fmax, fmax == eta
                    for _ in range(count):
                        cur = c.root_e(cur, j)
                        if cur == eta:
                            found = True
                    assert found
                if c.in_demazure_final(eta, rjx):
                    cur = eta
                    while cur is not None:
                        assert c.in_demazure_final(cur, x)
                        cur = c.root_e(cur, j)


# -- canonicalization ------------------------------------------------------------


def test_canonicalize_trivial(a1):
    one = SiLSCrystal(a1, (1,))
    ops, term = one.canonicalize(one.unit_path())
    assert ops == () and term == one.unit_path()


def test_canonicalize_s1(a1):
    one = SiLSCrystal(a1, (1,))
    s1 = from_finite(simple_reflection(a1, 1))
    ops, term = one.canonicalize(SiLSPath((s1,), (F(0), F(1))))
    assert term == SiLSPath((translation(a1, (1,)),), (F(0), F(1)))
    assert one.is_translation_type(term)


@pytest.mark.parametrize("fam,lam,depth", [(("A", 1), (2,), 2), (("A", 2), (1, 1), 1), (("C", 2), (1, 0), 1)])
def test_canonicalize_properties(fam, lam, depth):
    c = crystal(fam, lam)
    for eta in _component_sample(c, depth):
        ops, term = c.canonicalize(eta)
        assert c.is_translation_type(term)
        assert c.validate(term)
        # replaying the monomial reaches the terminal
        cur = eta
        for j, count in ops:
            for _ in range(count):
                cur = c.root_f(cur, j)
                assert cur is not None
        assert cur == term
        # idempotent on its own output
        ops2, term2 = c.canonicalize(term)
        assert ops2 == () and term2 == term


@pytest.mark.parametrize("fam,lam,depth", [(("A", 1), (2,), 2), (("A", 2), (1, 1), 1)])
def test_component_base_unique_per_component(fam, lam, depth):
    # grouping the truncated set by its component base, each group holds at
    # most one element of the distinguished translation form ending at e
    c = crystal(fam, lam)
    e = affine_identity(c.datum)
    groups: dict[SiLSPath, list[SiLSPath]] = {}
    for eta in _component_sample(c, depth):
        groups.setdefault(c.component_base(eta), []).append(eta)
    for base, members in groups.items():
        assert base.kappa == e
        distinguished = [
            eta
            for eta in members
            if c.is_translation_type(eta) and eta.kappa == e
        ]
        assert len(distinguished) <= 1
        if base in members:
            assert distinguished == [base]
        # weight relation: the base sits at lambda minus a nonnegative
        # multiple of delta
        wt = c.weight(base)
        assert wt.fw == c.lam and wt.delta <= 0


# -- truncated enumeration ----------------------------------------------------------


def test_enumerate_a1_fundamental(a1):
    one = SiLSCrystal(a1, (1,))
    e, s1, t1 = a1_paths(a1)
    paths = one.enumerate_demazure(e, 3)
    expected = {
        SiLSPath((AffineWeylElt(w.w, (k,)),), (F(0), F(1)))
        for w in (e, s1)
        for k in range(4)
    }
    assert set(paths) == expected
    assert one.enumerate_demazure(s1, 0) == (SiLSPath((s1,), (F(0), F(1))),)


@pytest.mark.parametrize("fam,lam,depth", ENUM_CASES)
def test_enumeration_is_demazure_and_bounded(fam, lam, depth):
    c = crystal(fam, lam)
    e = affine_identity(c.datum)
    paths = c.enumerate_demazure(e, depth)
    assert len(set(paths)) == len(paths)
    for eta in paths:
        assert c.validate(eta)
        assert c.in_demazure_final(eta, e)
        assert -depth <= c.weight(eta).delta <= 0


@pytest.mark.parametrize("fam,lam,depth", ENUM_CASES)
def test_enumeration_closed_under_operators_within_window(fam, lam, depth):
    # completeness: applying any operator to a member stays in the set
    # whenever the result still satisfies the defining conditions
    c = crystal(fam, lam)
    e = affine_identity(c.datum)
    paths = set(c.enumerate_demazure(e, depth))
    for eta in paths:
        for j in range(c.datum.rank + 1):
            for img in (c.root_f(eta, j), c.root_e(eta, j)):
                if img is None:
                    continue
                if c.in_demazure_final(img, e) and c.weight(img).delta >= -depth:
                    assert img in paths


def test_enumeration_at_translated_base(a2):
    # bounding below by an element with a nontrivial translation part
    c = SiLSCrystal(a2, (1, 1))
    x = c.quotient.project(
        translation(a2, (1, 0)).mul(from_finite(simple_reflection(a2, 1)))
    )
    assert any(x.xi)
    p_x = c.datum.pair_coweight_weight(x.xi, c.lam_weight)
    assert p_x < 0  # weights above the base can carry positive delta
    paths = c.enumerate_demazure(x, 1)
    assert paths
    for eta in paths:
        assert c.validate(eta)
        assert c.quotient.si_leq(x, eta.kappa)
        assert -1 <= c.weight(eta).delta <= -p_x
    # window closure under the operators
    pset = set(paths)
    for eta in paths:
        for j in range(3):
            for img in (c.root_f(eta, j), c.root_e(eta, j)):
                if img is None:
                    continue
                if c.quotient.si_leq(x, img.kappa) and c.weight(img).delta >= -1:
                    assert img in pset


def test_enumeration_depth_zero_is_classical(a2):
    # the delta-degree-0 slice is the classical LS crystal: all translation
    # parts vanish and the weights sum to the Weyl character
    c = SiLSCrystal(a2, (1, 1))
    paths = c.enumerate_demazure(affine_identity(a2), 0)
    for eta in paths:
        assert all(not any(x.xi) for x in eta.directions)
    from silspath.characters import GradedCharacter, weyl_character

    total = {}
    for eta in paths:
        wt = c.weight(eta)
        key = (wt.fw, 0)
        total[key] = total.get(key, 0) + 1
    assert GradedCharacter(total) == weyl_character(a2, (1, 1))


def classical_ls_paths(datum, lam):
    """Independent enumeration of classical LS paths over W^J chains."""
    quotient = ParabolicQuotient.for_weight(datum, lam)
    reps = [w for w in weyl_group(datum) if quotient.is_min_rep(w)]
    lamw = LevelZeroWeight(tuple(lam), 0)

    def covers(w, a):
        out = []
        for u in datum.pos_roots:
            from silspath.weyl import finite_reflection

            v = finite_reflection(datum, u).mul(w)
            if (
                quotient.is_min_rep(v)
                and v.length == w.length + 1
                and (a * datum.pair_coweight_weight(datum.coroot(u), LevelZeroWeight(w.act_fw(lam), 0))).denominator == 1
            ):
                out.append(v)
        return out

    def chain_exists(lower, upper, a):
        frontier = {lower}
        while frontier:
            if upper in frontier:
                return True
            frontier = {
                v for w in frontier for v in covers(w, a) if v.length <= upper.length
            }
        return False

    grid = quotient.cut_grid()
    results = []
    for size in range(1, len(reps) + 1):
        for dirs in itertools.permutations(reps, size):
            if any(not bruhat_leq(b, a) or a == b for a, b in zip(dirs, dirs[1:])):
                continue
            for cuts in itertools.combinations(grid, size - 1):
                if all(
                    chain_exists(dirs[u + 1], dirs[u], cuts[u])
                    for u in range(size - 1)
                ):
                    results.append((dirs, cuts))
    return results


@pytest.mark.parametrize("fam,lam", [(("A", 1), (2,)), (("A", 2), (1, 1)), (("C", 2), (1, 0))])
def test_depth_zero_matches_classical_enumerator(fam, lam):
    datum = build(*fam)
    c = SiLSCrystal(datum, lam)
    paths = c.enumerate_demazure(affine_identity(datum), 0)
    got = {
        (tuple(x.w for x in eta.directions), eta.cuts[1:-1]) for eta in paths
    }
    expected = {
        (dirs, cuts) for dirs, cuts in classical_ls_paths(datum, lam)
    }
    assert got == expected


# -- deep random walks ---------------------------------------------------------


from hypothesis import given, settings
from hypothesis import strategies as st


@settings(max_examples=50, deadline=None)
@given(
    case=st.sampled_from([(("A", 2), (1, 1)), (("C", 2), (1, 0)), (("A", 2), (2, 1))]),
    word=st.lists(
        st.tuples(st.sampled_from("ef"), st.integers(0, 2)), max_size=12
    ),
)
def test_random_operator_walks(case, word):
    # walks wander far outside the truncation windows used elsewhere;
    # every intermediate path must validate with exact weight bookkeeping
    fam, lam = case
    c = crystal(fam, lam)
    datum = c.datum
    eta = c.unit_path()
    wt = c.weight(eta)
    for tag, j in word:
        if j > datum.rank:
            continue
        op = c.root_e if tag == "e" else c.root_f
        nxt = op(eta, j)
        if nxt is None:
            continue
        aj = datum.affine_simple_root(j)
        fw_shift = datum.root_to_fw(aj.finite)
        sign = 1 if tag == "e" else -1
        eta, prev = nxt, wt
        wt = c.weight(eta)
        assert wt.fw == tuple(
            a + sign * b for a, b in zip(prev.fw, fw_shift)
        )
        assert wt.delta == prev.delta + sign * aj.n
        assert c.validate(eta)
    # the walk stays inside one connected component
    assert c.weight(c.component_base(eta)).fw == c.lam


# -- multipartitions ------------------------------------------------------------------


def test_multipartitions_counts():
    # node with m=1 allows columns of height one only in the relaxed variant
    assert multipartitions((1,), 3, strict=True) == (((),),)
    relaxed = multipartitions((1,), 3, strict=False)
    assert sorted(p[0] for p in relaxed) == [(), (1,), (2,), (3,)]
    strict2 = multipartitions((2,), 2, strict=True)
    assert sorted(p[0] for p in strict2) == [(), (1,), (2,)]
    relaxed2 = multipartitions((2,), 2, strict=False)
    assert sorted(p[0] for p in relaxed2) == [(), (1,), (1, 1), (2,)]
