"""Harish-Chandra homomorphism, central characters and linkage.

The untwisted projection phi (hc_project) evaluated at lambda gives the
scalar by which a central element acts on a highest weight module of
weight lambda; the rho-twisted psi = gamma o phi is the version that is
invariant under the ordinary Weyl action.  Linkage classes are Weyl dot
orbits, and CentralCharacter equality is decided by orbit membership of
the representatives.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .liealg import LieAlgebraData, UEAElement, casimir, h_substitute
from .rootdata import RootSystem, Weight


def gamma_twist(p: UEAElement) -> UEAElement:
    """Shift a polynomial on h* to the -rho origin: h_i -> h_i - 1."""
    return h_substitute(p, [-1] * p.alg.l)


def hc_psi(z: UEAElement) -> UEAElement:
    """Twisted Harish-Chandra image of a weight-zero element."""
    if not z.is_weight_zero():
        raise DomainError("psi is defined on weight-zero elements only")
    return gamma_twist(z.hc_project())


def is_central(z: UEAElement) -> bool:
    """Commutes with every basis vector (hence with all of U(g)).

    Verdicts are cached on the algebra; entries are idempotent, so the
    cache is safe under concurrent use.
    """
    alg = z.alg
    cache = getattr(alg, "_central_cache", None)
    if cache is None:
        cache = {}
        alg._central_cache = cache
    cached = cache.get(z)
    if cached is not None:
        return cached
    verdict = True
    for i in range(alg.d):
        b = alg.basis_element(i)
        if z * b != b * z:
            verdict = False
            break
    cache[z] = verdict
    return verdict


def central_character(lam: Weight, z: UEAElement) -> Fraction:
    """chi_lambda(z): the scalar action of a central z at highest weight lambda."""
    if not is_central(z):
        raise DomainError("argument is not central")
    return z.hc_project().evaluate_at(lam)


def is_linked(rs: RootSystem, lam: Weight, mu: Weight) -> bool:
    return rs.is_linked(lam, mu)


class CentralCharacter:
    """chi_lambda, represented by a weight; equal iff representatives are linked.

    Caches the Casimir evaluation, the one central generator bggkit
    constructs explicitly.  (A full topological generating set of the
    center is not built; orbit membership decides equality exactly.)
    """

    def __init__(self, alg: LieAlgebraData, lam: Weight):
        self.alg = alg
        self.rs = alg.rs
        self.representative = lam
        self.orbit = tuple(self.rs.dot_orbit(lam))
        self.casimir_value = central_character(lam, casimir(alg))

    @property
    def canonical_representative(self) -> Weight:
        return self.orbit[0]

    def __eq__(self, other):
        return (isinstance(other, CentralCharacter)
                and self.rs is other.rs
                and other.representative in self.orbit)

    def __hash__(self):
        return hash((id(self.rs), self.canonical_representative.coords))

    def __repr__(self):
        rep = ",".join(str(c) for c in self.representative.coords)
        return f"CentralCharacter({rep})"
