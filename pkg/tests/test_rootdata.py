import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bggkit.errors import DomainError, NotARootError, NotFiniteTypeError
from bggkit.rootdata import (STRICT, WIDE, CartanMatrixInput, Weight,
                             build_root_system, cached_root_system)

settings.register_profile("suite", deadline=None, derandomize=True,
                          max_examples=60)
settings.load_profile("suite")


# -- construction -------------------------------------------------------------

def test_closure_counts_and_highest_roots():
    assert build_root_system("A1").num_positive == 1
    a2 = build_root_system("A2")
    assert a2.num_positive == 3
    assert set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    g2 = build_root_system("G2")
    assert g2.num_positive == 6
    assert g2.positive_roots[-1] == (3, 2)


def test_roots_come_in_opposite_pairs(rs_b2):
    for r in rs_b2.roots:
        assert tuple(-c for c in r) in rs_b2.roots
    positives = set(rs_b2.positive_roots)
    negatives = {tuple(-c for c in r) for r in positives}
    assert positives | negatives == set(rs_b2.roots)
    assert not positives & negatives


def test_coroot_pairing_is_two_on_own_root():
    for label in ("A2", "B2", "G2"):
        rs = cached_root_system(label)
        for alpha in rs.positive_roots:
            assert rs.pairing_root(rs.root_to_weight(alpha), alpha) == 2


def test_non_finite_type_rejected():
    with pytest.raises(NotFiniteTypeError):
        build_root_system([[2, -2], [-2, 2]])
    with pytest.raises(NotFiniteTypeError):
        build_root_system([[2, -1, 0], [-1, 2, -2], [0, -2, 2]])


def test_cartan_validation():
    with pytest.raises(DomainError):
        CartanMatrixInput(((1, 0), (0, 2)))
    with pytest.raises(DomainError):
        CartanMatrixInput(((2, 1), (1, 2)))
    with pytest.raises(DomainError):
        CartanMatrixInput(((2, -1), (0, 2)))
    with pytest.raises(DomainError):
        CartanMatrixInput.from_label("Z9")


def test_custom_cartan_matrix_equals_label():
    via_label = build_root_system("B2")
    via_matrix = build_root_system([[2, -1], [-2, 2]])
    assert via_matrix.positive_roots == via_label.positive_roots


# -- rho and pairings ----------------------------------------------------------

def test_rho_examples():
    for label, rank in (("A1", 1), ("A2", 2), ("B2", 2)):
        rs = cached_root_system(label)
        assert rs.rho() == Weight([1] * rank)


def test_rho_is_half_sum_of_positive_roots():
    for label in ("A2", "B2", "G2"):
        rs = cached_root_system(label)
        total = Weight([0] * rs.rank)
        for alpha in rs.positive_roots:
            total = total + rs.root_to_weight(alpha)
        assert F(1, 2) * total == rs.rho()


def test_pairing_examples(rs_a2):
    rho = rs_a2.rho()
    assert rs_a2.pairing_root(rho, (1, 0)) == 1
    assert rs_a2.pairing_root(rho, (1, 1)) == 2
    assert rs_a2.pairing_root(Weight([0, 0]), (1, 1)) == 0
    with pytest.raises(NotARootError):
        rs_a2.pairing_root(rho, (2, 0))


# -- Weyl group and the dot action ---------------------------------------------

def test_dot_action_examples(rs_a1):
    w = rs_a1.weyl_group()
    s = w.simple_reflection(0)
    assert rs_a1.dot_action(w.identity, Weight([3])) == Weight([3])
    assert rs_a1.dot_action(s, Weight([3])) == Weight([-5])
    assert rs_a1.dot_action(s, Weight([-1])) == Weight([-1])


def test_dot_orbit_examples(rs_a1, rs_a2):
    assert [w.coords for w in rs_a1.dot_orbit(Weight([0]))] == [(0,), (-2,)]
    assert [w.coords for w in rs_a1.dot_orbit(Weight([-1]))] == [(-1,)]
    assert len(rs_a2.dot_orbit(Weight([0, 0]))) == 6


def test_dot_orbit_sizes(rs_a2, rs_b2):
    # regular integral weights get the full group, -rho is a fixed point
    assert len(rs_a2.dot_orbit(Weight([1, 2]))) == len(rs_a2.weyl_group())
    assert len(rs_b2.dot_orbit(Weight([-1, -1]))) == 1
    assert rs_b2.dot_orbit(Weight([-1, -1]))[0] == Weight([-1, -1])


@given(st.lists(st.integers(0, 1), min_size=1, max_size=6),
       st.lists(st.fractions(F(-9), F(9), max_denominator=4),
                min_size=2, max_size=2))
def test_dot_action_respects_composition(word, coords):
    rs = cached_root_system("A2")
    weyl = rs.weyl_group()
    lam = Weight(coords)
    step = lam
    for i in word:
        step = rs.dot_action(weyl.simple_reflection(i), step)
    combined = weyl.identity
    for i in word:  # later reflections act on the left
        combined = weyl.simple_reflection(i) * combined
    assert rs.dot_action(combined, lam) == step


@given(st.lists(st.integers(0, 1), min_size=0, max_size=6),
       st.lists(st.fractions(F(-9), F(9), max_denominator=4),
                min_size=2, max_size=2))
def test_dot_action_inverse(word, coords):
    rs = cached_root_system("A2")
    weyl = rs.weyl_group()
    w = weyl.from_word(word)
    lam = Weight(coords)
    assert rs.dot_action(w, rs.dot_action(w.inverse(), lam)) == lam


def test_simple_reflection_permutes_other_positives():
    for label in ("A2", "B2", "G2"):
        rs = cached_root_system(label)
        weyl = rs.weyl_group()
        for i in range(rs.rank):
            s = weyl.simple_reflection(i)
            alpha_i = rs.simple_roots()[i]
            others = [r for r in rs.positive_roots if r != alpha_i]
            images = set()
            for r in others:
                img = rs.weight_root_coords(s.act(rs.root_to_weight(r)))
                img = tuple(int(c) for c in img)
                assert all(c >= 0 for c in img)
                images.add(img)
            assert images == set(others)
            img_i = rs.weight_root_coords(s.act(rs.root_to_weight(alpha_i)))
            assert tuple(int(c) for c in img_i) == tuple(-c for c in alpha_i)


def test_weyl_group_sizes():
    assert len(cached_root_system("A1").weyl_group()) == 2
    assert len(cached_root_system("A2").weyl_group()) == 6
    assert len(cached_root_system("B2").weyl_group()) == 8
    assert len(cached_root_system("G2").weyl_group()) == 12


def test_bruhat_order_on_a2(rs_a2):
    weyl = rs_a2.weyl_group()
    w0 = weyl.longest_element
    assert w0.length == 3
    for u in weyl:
        assert weyl.bruhat_leq(weyl.identity, u)
        assert weyl.bruhat_leq(u, w0)
        assert weyl.bruhat_leq(u, u)
    s0, s1 = weyl.simple_reflection(0), weyl.simple_reflection(1)
    assert not weyl.bruhat_leq(s0, s1)
    assert not weyl.bruhat_leq(s1, s0)
    assert weyl.bruhat_leq(s0, s0 * s1)
    assert weyl.bruhat_leq(s1, s0 * s1)


# -- orders ---------------------------------------------------------------------

def test_leq_examples(rs_a1, rs_a2):
    lam = Weight([2, -3])
    assert rs_a2.leq(lam, lam)
    assert rs_a1.leq(Weight([-5]), Weight([3]))
    assert not rs_a2.leq(Weight([1, -1]), Weight([0, 0]))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=2),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_leq_partial_order(a, b, c):
    rs = cached_root_system("A2")
    wa, wb, wc = Weight(a), Weight(b), Weight(c)
    assert rs.leq(wa, wa)
    if rs.leq(wa, wb) and rs.leq(wb, wa):
        assert wa == wb
    if rs.leq(wa, wb) and rs.leq(wb, wc):
        assert rs.leq(wa, wc)


def test_block_ordering_examples(rs_a1, rs_a2):
    out = rs_a1.block_ordering([Weight([-2]), Weight([0])])
    assert [w.coords for w in out] == [(0,), (-2,)]
    assert rs_a1.block_ordering([Weight([5])]) == [Weight([5])]
    orbit = rs_a2.dot_orbit(Weight([1, 0]))
    assert orbit[0] == Weight([1, 0])  # dominant first
    w0 = rs_a2.weyl_group().longest_element
    assert orbit[-1] == rs_a2.dot_action(w0, Weight([1, 0]))


def test_block_ordering_refines_reverse_leq(rs_b2):
    weights = [Weight([a, b]) for a in range(-2, 3) for b in range(-2, 3)]
    out = rs_b2.block_ordering(weights)
    for i, wi in enumerate(out):
        for j in range(i + 1, len(out)):
            assert not (rs_b2.leq(wi, out[j]) and wi != out[j])


# -- antidominance ----------------------------------------------------------------

def test_antidominance_examples(rs_a1):
    assert rs_a1.is_antidominant(Weight([-1]), STRICT)
    assert not rs_a1.is_antidominant(Weight([-1]), WIDE)
    assert rs_a1.is_antidominant(Weight([-5]), STRICT)
    assert rs_a1.is_antidominant(Weight([-5]), WIDE)
    assert not rs_a1.is_antidominant(Weight([0]), STRICT)
    assert rs_a1.is_antidominant(Weight([F(-1, 2)]), STRICT)
    with pytest.raises(DomainError):
        rs_a1.is_antidominant(Weight([0]), "other")


# -- Kostant function and Weyl dimension -------------------------------------------

def test_kostant_examples(rs_a2):
    assert rs_a2.kostant_p((0, 0)) == 1
    assert rs_a2.kostant_p((1, 1)) == 2
    assert rs_a2.kostant_p((2, 2)) == 3
    assert rs_a2.kostant_p((-1, 0)) == 0


def test_kostant_brute_force_small():
    for label in ("A1", "A2", "B2"):
        rs = cached_root_system(label)
        l = rs.rank
        for nu in itertools.product(range(6), repeat=l):
            if sum(nu) > 5:
                continue
            count = 0
            bounds = [min(nu[i] // b[i] for i in range(l) if b[i])
                      for b in rs.positive_roots]
            for combo in itertools.product(*(range(x + 1) for x in bounds)):
                total = [0] * l
                for c, beta in zip(combo, rs.positive_roots):
                    for i in range(l):
                        total[i] += c * beta[i]
                if tuple(total) == nu:
                    count += 1
            assert rs.kostant_p(nu) == count


def test_weyl_dimension_examples(rs_a1, rs_a2):
    assert rs_a1.weyl_dimension(Weight([0])) == 1
    assert rs_a1.weyl_dimension(Weight([3])) == 4
    assert rs_a2.weyl_dimension(Weight([1, 1])) == 8
    with pytest.raises(DomainError):
        rs_a1.weyl_dimension(Weight([-2]))
    with pytest.raises(DomainError):
        rs_a2.weyl_dimension(Weight([F(1, 2), 0]))


def test_weight_arithmetic():
    a = Weight([1, F(1, 2)])
    b = Weight([0, F(3, 2)])
    assert (a + b).coords == (F(1), F(2))
    assert (a - b).coords == (F(1), F(-1))
    assert (2 * a).coords == (F(2), F(1))
    assert (-a).coords == (F(-1), F(-1, 2))
    assert a.is_integral is False
    assert Weight([2, 0]).is_dominant_integral
    with pytest.raises(AttributeError):
        a.coords = (F(0),)
