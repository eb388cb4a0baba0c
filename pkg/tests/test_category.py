import random
from fractions import Fraction as F

import pytest

from bggkit import category
from bggkit.category import (block_report, cartan_matrix, decomposition_matrix,
                             maximal_vectors, projective_filtration_matrix,
                             shapovalov_matrix, simple_weight_mult,
                             standard_filtration_mult, verma_is_simple,
                             verma_slice)
from bggkit.errors import ConsistencyError, DepthOverflowError, DomainError
from bggkit.rootdata import Weight


# -- Verma slices and the action ------------------------------------------------

def test_slice_dimensions(a1, a2):
    s = verma_slice(a1, Weight([7]), 6)
    assert s.dimension((0,)) == 1
    for k in range(1, 7):
        assert s.dimension((k,)) == 1
    s2 = verma_slice(a2, Weight([0, 0]), 3)
    assert s2.dimension((1, 1)) == 2
    assert s2.dimension((2, 1)) == 2
    assert s2.dimension((5, 5)) == 0


def test_act_examples(a1):
    lam = Weight([3])
    s = verma_slice(a1, lam, 4)
    v = s.highest_vector()
    assert s.act(a1.h(0), v).terms == {(0,): F(3)}
    assert s.act(a1.x(0), v).is_zero()
    yv = s.act(a1.y(0), v)
    assert s.act(a1.x(0), yv).terms == {(0,): F(3)}


def test_act_is_linear_and_compatible(a2):
    lam = Weight([1, 2])
    s = verma_slice(a2, lam, 4)
    v = s.highest_vector()
    u1 = a2.simple_y(0) * a2.simple_y(1)
    u2 = a2.simple_y(1) * a2.simple_y(0)
    left = s.act(u1, v)
    right = s.act(a2.simple_y(0), s.act(a2.simple_y(1), v))
    assert left == right
    assert s.act(u1 + u2, v).terms == {
        k: left.terms.get(k, F(0)) + s.act(u2, v).terms.get(k, F(0))
        for k in set(left.terms) | set(s.act(u2, v).terms)}


def test_act_depth_overflow(a1):
    s = verma_slice(a1, Weight([0]), 2)
    v = s.highest_vector()
    deep = a1.monomial((3, 0, 0))
    with pytest.raises(DepthOverflowError):
        s.act(deep, v)


# -- maximal vectors --------------------------------------------------------------

def test_maximal_vector_examples(a1):
    # lam with <lam, alpha-check> = n in Z_{>=0}: y^(n+1) v is maximal
    for n in range(4):
        lam = Weight([n])
        found = maximal_vectors(a1, lam, ((n + 1),))
        assert len(found) == 1
        ((mono, coef),) = found[0].terms.items()
        assert mono == (n + 1,)
    # antidominant: no maximal vectors anywhere
    for nu in range(1, 5):
        assert maximal_vectors(a1, Weight([-1]), (nu,)) == []
        assert maximal_vectors(a1, Weight([F(1, 2)]), (nu,)) == []
    # nu landing off the linkage class: empty
    assert maximal_vectors(a1, Weight([3]), (2,)) == []


def test_maximal_vector_a2_nontrivial(a2):
    # lam = 0: maximal vector in depth alpha1 + alpha2? None (only at
    # reflection positions alpha_i and the w0 position)
    assert maximal_vectors(a2, Weight([0, 0]), (1, 0)) != []
    assert maximal_vectors(a2, Weight([0, 0]), (0, 1)) != []
    assert maximal_vectors(a2, Weight([0, 0]), (1, 1)) == []
    assert maximal_vectors(a2, Weight([0, 0]), (2, 1)) != []


# -- Shapovalov oracle ------------------------------------------------------------

def test_shapovalov_examples(a1):
    assert shapovalov_matrix(a1, Weight([5]), (0,)) == [[F(1)]]
    for lam in (0, 1, 3, -2):
        assert shapovalov_matrix(a1, Weight([lam]), (1,)) == [[F(lam)]]
        expected = 2 * F(lam) * (F(lam) - 1)
        assert shapovalov_matrix(a1, Weight([lam]), (2,)) == [[expected]]


def test_shapovalov_symmetric(a2, b2):
    rng = random.Random(37)
    for alg in (a2, b2):
        for _ in range(6):
            lam = Weight([F(rng.randint(-5, 5), rng.randint(1, 3))
                          for _ in range(alg.l)])
            nu = tuple(rng.randint(0, 2) for _ in range(alg.l))
            mat = shapovalov_matrix(alg, lam, nu)
            n = len(mat)
            assert all(mat[i][j] == mat[j][i]
                       for i in range(n) for j in range(n))


def test_simple_weight_mult_examples(a1):
    assert simple_weight_mult(a1, Weight([3]), (0,)) == 1
    assert simple_weight_mult(a1, Weight([3]), (3,)) == 1
    assert simple_weight_mult(a1, Weight([3]), (4,)) == 0
    assert simple_weight_mult(a1, Weight([3]), (7,)) == 0
    # antidominant weights keep full rank
    for k in range(1, 7):
        assert simple_weight_mult(a1, Weight([-1]), (k,)) == 1


def test_simple_weight_mult_sums_to_weyl_dimension(a2):
    lam = Weight([1, 1])
    total = sum(simple_weight_mult(a2, lam, nu)
                for nu in category.gamma_elements(a2, 4))
    assert total == 8


# -- simplicity -------------------------------------------------------------------

def test_verma_is_simple_examples(a1):
    rep = verma_is_simple(a1, Weight([-1]), 6)
    assert rep.verdict and rep.nondegenerate
    rep0 = verma_is_simple(a1, Weight([0]), 6)
    assert not rep0.verdict
    assert rep0.first_degenerate() == (1,)
    rep_rho = verma_is_simple(a1, Weight([-1]), 4)
    assert rep_rho.verdict  # -rho is singular antidominant


def test_verma_is_simple_rank_profile(a2):
    # L(0) is the trivial module, so every positive depth has rank 0
    rep = verma_is_simple(a2, Weight([0, 0]), 3)
    ranks = dict((nu, (rank, dim)) for nu, rank, dim in rep.ranks)
    assert ranks[(1, 0)] == (0, 1)
    assert ranks[(0, 1)] == (0, 1)
    assert ranks[(1, 1)] == (0, 2)
    # the adjoint module: simple-root weights have multiplicity 1, the
    # zero weight multiplicity 2, and nothing degenerates this shallow
    rep2 = verma_is_simple(a2, Weight([1, 1]), 2)
    ranks2 = dict((nu, (rank, dim)) for nu, rank, dim in rep2.ranks)
    assert ranks2[(1, 0)] == (1, 1)
    assert ranks2[(1, 1)] == (2, 2)
    assert ranks2[(2, 0)] == (0, 1)  # rho - 2*alpha1 is not an adjoint weight


# -- blocks -----------------------------------------------------------------------

def test_decomposition_a1(a1):
    dec = decomposition_matrix(a1, Weight([0]))
    assert [w.coords for w in dec.class_weights] == [(0,), (-2,)]
    assert dec.entries == ((1, 1), (0, 1))
    assert cartan_matrix(dec) == ((1, 1), (1, 2))
    assert projective_filtration_matrix(dec) == ((1, 0), (1, 1))
    sing = decomposition_matrix(a1, Weight([-1]))
    assert sing.entries == ((1,),)
    assert cartan_matrix(sing) == ((1,),)
    assert projective_filtration_matrix(sing) == ((1,),)


def test_decomposition_a2_bruhat(a2):
    lam = Weight([0, 0])
    dec = decomposition_matrix(a2, lam)
    assert dec.size == 6
    weyl = a2.rs.weyl_group()
    by_weight = {a2.rs.dot_action(w, lam).coords: w for w in weyl}
    elements = [by_weight[w.coords] for w in dec.class_weights]
    for i in range(6):
        for j in range(6):
            expected = 1 if weyl.bruhat_leq(elements[i], elements[j]) else 0
            assert dec.entries[i][j] == expected


def test_decomposition_rejects_non_integral(a2):
    with pytest.raises(DomainError):
        decomposition_matrix(a2, Weight([F(1, 2), 0]))


def test_antidominant_row_is_unit(a2):
    dec = decomposition_matrix(a2, Weight([0, 0]))
    last = dec.entries[-1]
    assert last == (0,) * (dec.size - 1) + (1,)
    # every simple occurs in its own Verma: column sums are positive
    for j in range(dec.size):
        assert sum(dec.entries[i][j] for i in range(dec.size)) >= 1


def test_standard_filtration_mult(a1, a2):
    lam = Weight([2, 3])
    assert standard_filtration_mult(a2, 5, lam, lam) == 1
    mu = lam - a2.rs.root_to_weight((1, 1))
    assert standard_filtration_mult(a2, 3, mu, lam) == 2
    assert standard_filtration_mult(a2, 3, lam, mu) == 0  # off Gamma
    with pytest.raises(DomainError):
        standard_filtration_mult(a2, 2, mu, lam)  # height 2 >= n = 2
    assert standard_filtration_mult(a1, 2, Weight([1]), Weight([3])) == 1


def test_block_report_assembly(a1, a2):
    rep = block_report(a1, Weight([0]))
    assert rep.decomposition == ((1, 1), (0, 1))
    assert rep.cartan == ((1, 1), (1, 2))
    assert rep.projective_filtration == ((1, 0), (1, 1))
    assert rep.finite_dimensional == (True, False)
    assert rep.weyl_dimension_checks == ((0, 1, 1),)
    for i in range(2):
        for j in range(2):
            assert rep.projective_filtration[j][i] == rep.decomposition[i][j]

    rep2 = block_report(a2, Weight([1, 1]))
    assert len(rep2.class_weights) == 6
    k, dim, total = rep2.weyl_dimension_checks[0]
    assert rep2.class_weights[k] == Weight([1, 1])
    assert dim == 8 and total == 8


def test_block_report_trivial(a1):
    rep = block_report(a1, Weight([-1]))
    assert rep.decomposition == ((1,),)
    assert rep.cartan == ((1,),)
    assert rep.finite_dimensional == (False,)


def test_parallel_workers_match_sequential(a2, monkeypatch):
    seq = decomposition_matrix(a2, Weight([0, 0]))
    monkeypatch.setenv("BGGKIT_WORKERS", "4")
    par = decomposition_matrix(a2, Weight([0, 0]))
    assert seq == par


def test_depth_override_extends(a1):
    dec = decomposition_matrix(a1, Weight([0]), depth=5)
    assert dec.depth == 5
    assert dec.entries == ((1, 1), (0, 1))
