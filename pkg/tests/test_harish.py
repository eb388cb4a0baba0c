import random
from fractions import Fraction as F

import pytest

from bggkit.category import verma_slice
from bggkit.errors import DomainError
from bggkit.harish import (CentralCharacter, central_character, gamma_twist,
                           hc_psi, is_central, is_linked)
from bggkit.liealg import casimir
from bggkit.rootdata import Weight


def test_gamma_twist_examples(a1, a2):
    h = a1.h(0)
    assert gamma_twist(h) == h - a1.one()
    assert gamma_twist(3 * a1.one()) == 3 * a1.one()
    assert gamma_twist(h * h + 2 * h) == h * h - a1.one()
    h1 = a2.h(0)
    assert gamma_twist(h1) == h1 - a2.one()


def test_hc_psi_examples(a1):
    h = a1.h(0)
    z = h * h + 2 * h + 4 * (a1.y(0) * a1.x(0))  # normalized Casimir
    assert hc_psi(z) == h * h - a1.one()
    p = h * h - 3 * h
    assert hc_psi(p) == gamma_twist(p)
    assert hc_psi(a1.one()) == a1.one()
    with pytest.raises(DomainError):
        hc_psi(a1.x(0))


def test_central_character_examples(a1):
    h = a1.h(0)
    z = h * h + 2 * h + 4 * (a1.y(0) * a1.x(0))
    assert central_character(Weight([3]), z) == 15
    assert central_character(Weight([3]), a1.one()) == 1
    # twist identity at -rho: chi_{-rho}(z) equals psi(z) at the origin
    assert central_character(Weight([-1]), z) == \
        hc_psi(z).evaluate_at(Weight([0]))
    with pytest.raises(DomainError):
        central_character(Weight([3]), a1.x(0))


def test_is_central(a1):
    assert is_central(casimir(a1))
    assert is_central(a1.one())
    assert not is_central(a1.x(0))
    assert not is_central(a1.h(0))


def test_linkage_examples(a1):
    rs = a1.rs
    assert is_linked(rs, Weight([3]), Weight([3]))
    assert is_linked(rs, Weight([3]), Weight([-5]))
    assert not is_linked(rs, Weight([3]), Weight([-4]))


def test_linkage_is_equivalence(a2):
    rs = a2.rs
    rng = random.Random(13)
    sample = [Weight([F(rng.randint(-6, 6), rng.choice((1, 2))) for _ in range(2)])
              for _ in range(8)]
    for u in sample:
        assert is_linked(rs, u, u)
        for v in sample:
            assert is_linked(rs, u, v) == is_linked(rs, v, u)
            for w in sample:
                if is_linked(rs, u, v) and is_linked(rs, v, w):
                    assert is_linked(rs, u, w)


def test_character_invariance_small(b2):
    omega = casimir(b2)
    rng = random.Random(19)
    weyl = b2.rs.weyl_group()
    for _ in range(5):
        lam = Weight([F(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(2)])
        base = central_character(lam, omega)
        for w in weyl:
            assert central_character(b2.rs.dot_action(w, lam), omega) == base


def test_psi_invariant_under_plain_action(a2):
    omega = casimir(a2)
    psi = hc_psi(omega)
    rng = random.Random(21)
    weyl = a2.rs.weyl_group()
    for _ in range(10):
        mu = Weight([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(2)])
        base = psi.evaluate_at(mu)
        for w in weyl:
            assert psi.evaluate_at(w.act(mu)) == base


def test_casimir_acts_by_central_character(a2):
    """z . v_lambda = chi_lambda(z) v_lambda on the canonical generator."""
    omega = casimir(a2)
    for coords in ((0, 0), (2, 1), (-1, 3)):
        lam = Weight(coords)
        vslice = verma_slice(a2, lam, 2)
        v = vslice.highest_vector()
        action = vslice.act(omega, v)
        scalar = central_character(lam, omega)
        expected = {} if scalar == 0 else {(0,) * a2.m: scalar}
        assert action.terms == expected


def test_central_character_objects(a1):
    c1 = CentralCharacter(a1, Weight([3]))
    c2 = CentralCharacter(a1, Weight([-5]))
    c3 = CentralCharacter(a1, Weight([-4]))
    assert c1 == c2
    assert hash(c1) == hash(c2)
    assert c1 != c3
    assert c1.casimir_value == c2.casimir_value
    assert c1.canonical_representative == Weight([3])
