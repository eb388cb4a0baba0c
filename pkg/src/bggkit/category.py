"""Truncated Verma modules, the Shapovalov rank oracle, and block data.

Simple multiplicities come from exact ranks of the contravariant form on
weight spaces (the radical of the form is the maximal submodule, so the
rank at depth nu is dim L(lambda)_{lambda-nu}).  Block decomposition
matrices are then solved from the unitriangular character system

    dim M(lam_i)_{mu_j} = sum_k D[i][k] * dim L(mu_k)_{mu_j}

in the deterministic block ordering, and the projective/Cartan data
follows by reciprocity: (P(mu) : M(lam)) = D[lam][mu] and C = D^T D.

Shapovalov entries are cached per algebra as polynomials in U(h), so
scanning many highest weights only costs evaluations and small exact
rank computations.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactla
from .errors import ConsistencyError, DepthOverflowError, DomainError
from .liealg import LieAlgebraData, UEAElement
from .rootdata import STRICT, Weight

RootVec = Tuple[int, ...]
YMono = Tuple[int, ...]


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("BGGKIT_WORKERS", "1")))
    except ValueError:
        return 1


def _parallel_map(fn, items):
    """Map preserving input order; fans out when BGGKIT_WORKERS > 1."""
    items = list(items)
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _gamma_coords(alg: LieAlgebraData, diff: Weight) -> Optional[RootVec]:
    """Integer simple-root coordinates of a weight, or None if outside Gamma."""
    coords = alg.rs.weight_root_coords(diff)
    if any(c.denominator != 1 or c < 0 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def weight_space_basis(alg: LieAlgebraData, nu: RootVec) -> Tuple[YMono, ...]:
    """Monomials y^A of weight -nu, lexicographically sorted; cached."""
    cache = getattr(alg, "_wspace_cache", None)
    if cache is None:
        cache = {}
        alg._wspace_cache = cache
    nu = tuple(int(c) for c in nu)
    got = cache.get(nu)
    if got is not None:
        return got
    m, l = alg.m, alg.l
    slot_roots = [alg.rs.positive_roots[m - 1 - k] for k in range(m)]
    out: List[YMono] = []

    def rec(slot, remaining, acc):
        if slot == m:
            if not any(remaining):
                out.append(tuple(acc))
            return
        beta = slot_roots[slot]
        e = 0
        rest = remaining
        while all(c >= 0 for c in rest):
            rec(slot + 1, rest, acc + [e])
            e += 1
            rest = tuple(a - b for a, b in zip(rest, beta))

    rec(0, nu, [])
    result = tuple(sorted(out))
    cache[nu] = result
    return result


class VermaVector:
    """Element of a truncated Verma module: map from y-monomials to scalars."""

    __slots__ = ("slice", "terms")

    def __init__(self, vslice: "VermaSlice", terms):
        self.slice = vslice
        self.terms = {tuple(k): Fraction(v) for k, v in terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.slice.alg
        bits = []
        for mono, c in sorted(self.terms.items()):
            body = "*".join(alg.basis_label(i) + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(mono) if e) or "1"
            bits.append(f"{c}*{body}.v")
        return " + ".join(bits)


class VermaSlice:
    """Weight spaces of the Verma module at lambda down to depth N.

    Bases are indexed by nu in Gamma with height(nu) <= N; the stored
    basis size at each nu is checked against the Kostant number.
    """

    def __init__(self, alg: LieAlgebraData, lam: Weight, depth: int):
        if depth < 0:
            raise DomainError("depth must be nonnegative")
        self.alg = alg
        self.lam = lam
        self.depth = depth
        self.bases: Dict[RootVec, Tuple[YMono, ...]] = {}
        for nu in gamma_elements(alg, depth):
            basis = weight_space_basis(alg, nu)
            if len(basis) != alg.rs.kostant_p(nu):
                raise ConsistencyError(
                    f"weight space at {nu} has size {len(basis)}, "
                    f"expected P = {alg.rs.kostant_p(nu)}")
            self.bases[nu] = basis

    def dimension(self, nu) -> int:
        return len(self.bases.get(tuple(nu), ()))

    def highest_vector(self) -> VermaVector:
        return VermaVector(self, {(0,) * self.alg.m: 1})

    def vector(self, terms) -> VermaVector:
        return VermaVector(self, terms)

    def mono_depth(self, mono: YMono) -> int:
        m = self.alg.m
        roots = self.alg.rs.positive_roots
        return sum(e * sum(roots[m - 1 - k]) for k, e in enumerate(mono))

    def act(self, u: UEAElement, vec: VermaVector) -> VermaVector:
        """u . vec through the quotient presentation: x kills the top
        vector, h acts by lambda there, y's multiply.  Raises on depth
        overflow past the truncation."""
        if u.alg is not self.alg:
            raise DomainError("element belongs to a different algebra")
        alg = self.alg
        m, l = alg.m, alg.l
        lam = self.lam
        kernel = alg.kernel
        out: Dict[YMono, Fraction] = {}
        for ymono, cv in vec.terms.items():
            vec_exps = ymono + (0,) * (l + m)
            for ea, ca in u.terms.items():
                scale = ca * cv
                for mono, c in kernel.multiply_monomials(ea, vec_exps).items():
                    if any(mono[m + l:]):
                        continue  # x-factors annihilate the maximal vector
                    val = scale * c
                    for i in range(l):
                        e = mono[m + i]
                        if e:
                            val *= lam.coords[i] ** e
                    if not val:
                        continue
                    ypart = mono[:m]
                    if self.mono_depth(ypart) > self.depth:
                        raise DepthOverflowError(
                            "action leaves the truncated slice; extend depth")
                    out[ypart] = out.get(ypart, Fraction(0)) + val
        return VermaVector(self, out)


def gamma_elements(alg: LieAlgebraData, max_height: int):
    """All nu in Gamma with 0 <= height(nu) <= max_height, by height then lex."""
    l = alg.l
    out = []

    def rec(i, budget, acc):
        if i == l:
            out.append(tuple(acc))
            return
        for c in range(budget + 1):
            rec(i + 1, budget - c, acc + [c])

    rec(0, max_height, [])
    return sorted(out, key=lambda v: (sum(v), v))


def verma_slice(alg: LieAlgebraData, lam: Weight, depth: int) -> VermaSlice:
    return VermaSlice(alg, lam, depth)


def maximal_vectors(alg: LieAlgebraData, lam: Weight, nu, depth: Optional[int] = None
                    ) -> List[VermaVector]:
    """Basis of {v in M(lam)_{lam-nu} : n . v = 0} by exact linear algebra.

    Killing the simple generators x_i suffices since they generate n.
    """
    nu = tuple(int(c) for c in nu)
    height = sum(nu)
    if depth is None:
        depth = height
    if height > depth:
        raise DomainError("nu lies below the requested truncation depth")
    vslice = VermaSlice(alg, lam, depth)
    basis = vslice.bases.get(nu, ())
    if not basis:
        return []
    rows: List[List[Fraction]] = []
    for i in range(alg.l):
        alpha = alg.rs.simple_roots()[i]
        target = tuple(a - b for a, b in zip(nu, alpha))
        if any(c < 0 for c in target):
            target_basis: Sequence[YMono] = ()
        else:
            target_basis = vslice.bases.get(target, ())
        index = {mono: r for r, mono in enumerate(target_basis)}
        xi = alg.simple_x(i)
        images = []
        for mono in basis:
            img = vslice.act(xi, vslice.vector({mono: 1}))
            for key in img.terms:
                if key not in index:
                    raise ConsistencyError("action left the expected weight space")
            images.append(img)
        for r in range(len(target_basis)):
            row = [img.terms.get(target_basis[r], Fraction(0)) for img in images]
            rows.append(row)
    if not rows:
        return [vslice.vector({mono: 1}) for mono in basis]
    kernel = exactla.nullspace(rows, width=len(basis))
    return [vslice.vector({mono: coef for mono, coef in zip(basis, vec)})
            for vec in kernel]


# -- Shapovalov form ---------------------------------------------------------


def shapovalov_polynomial_matrix(alg: LieAlgebraData, nu: RootVec):
    """Entries <y^A v, y^B v> as elements of U(h); cached per algebra.

    Entry (A, B) is the Harish-Chandra projection of sigma(y^A) y^B; its
    evaluation at lambda is the contravariant form on M(lambda).
    """
    cache = getattr(alg, "_shap_cache", None)
    if cache is None:
        cache = {}
        alg._shap_cache = cache
    nu = tuple(int(c) for c in nu)
    got = cache.get(nu)
    if got is not None:
        return got
    basis = weight_space_basis(alg, nu)
    m, l = alg.m, alg.l
    elements = [alg.monomial(mono + (0,) * (l + m)) for mono in basis]
    transposed = [e.transpose() for e in elements]
    matrix = tuple(
        tuple((ta * eb).hc_project() for eb in elements)
        for ta in transposed)
    cache[nu] = (basis, matrix)
    return basis, matrix


def shapovalov_matrix(alg: LieAlgebraData, lam: Weight, nu) -> List[List[Fraction]]:
    """The contravariant form on the weight space at depth nu, evaluated."""
    _, polys = shapovalov_polynomial_matrix(alg, tuple(int(c) for c in nu))
    return [[p.evaluate_at(lam) for p in row] for row in polys]


def simple_weight_mult(alg: LieAlgebraData, lam: Weight, nu) -> int:
    """dim L(lam)_{lam-nu} = rank of the Shapovalov form at nu."""
    nu = tuple(int(c) for c in nu)
    if any(c < 0 for c in nu):
        return 0
    if not any(nu):
        return 1
    return exactla.rank(shapovalov_matrix(alg, lam, nu))


@dataclass(frozen=True)
class SimplicityReport:
    verdict: bool
    depth: int
    ranks: Tuple[Tuple[RootVec, int, int], ...]  # (nu, rank, full dimension)

    @property
    def nondegenerate(self) -> bool:
        return all(rank == dim for _, rank, dim in self.ranks)

    def first_degenerate(self) -> Optional[RootVec]:
        for nu, rank, dim in self.ranks:
            if rank < dim:
                return nu
        return None


def verma_is_simple(alg: LieAlgebraData, lam: Weight, depth: int) -> SimplicityReport:
    """Antidominance verdict plus a depth-limited nondegeneracy audit.

    The verdict is the STRICT antidominance test; the audit records the
    Shapovalov rank at every nu up to the depth.  An antidominant
    verdict with a rank drop is impossible and raises ConsistencyError.
    """
    verdict = alg.rs.is_antidominant(lam, STRICT)
    ranks = []
    for nu in gamma_elements(alg, depth):
        if not any(nu):
            continue
        dim = alg.rs.kostant_p(nu)
        rank = simple_weight_mult(alg, lam, nu)
        ranks.append((nu, rank, dim))
    report = SimplicityReport(verdict, depth, tuple(ranks))
    if verdict and not report.nondegenerate:
        raise ConsistencyError(
            "antidominant weight with degenerate contravariant form at "
            f"{report.first_degenerate()}")
    return report


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionMatrix:
    """[M(lam) : L(mu)] over a linkage class, rows and columns in block order."""

    class_weights: Tuple[Weight, ...]
    entries: Tuple[Tuple[int, ...], ...]
    depth: int

    @property
    def size(self) -> int:
        return len(self.class_weights)


def _class_difference(alg, lam, mu) -> Optional[RootVec]:
    return _gamma_coords(alg, lam - mu)


def decomposition_matrix(alg: LieAlgebraData, lam: Weight,
                         depth: Optional[int] = None) -> DecompositionMatrix:
    """Solve the block's character system for [M(lam_i) : L(mu_j)].

    Only integral weights are accepted: comparability inside a
    non-integral orbit is not resolved here, so D is refused (the orbit
    itself is still available through the linkage operations).
    """
    if not lam.is_integral:
        raise DomainError("decomposition matrices are computed for integral "
                          "weights only; use linkage/orbit reporting instead")
    rs = alg.rs
    cls = tuple(rs.dot_orbit(lam))
    s = len(cls)
    auto_depth = int(rs.weight_height(cls[0] - cls[-1]))
    n = auto_depth if depth is None else max(depth, auto_depth)

    # dim L(mu_k)_{mu_j}: Shapovalov ranks at the pairwise differences
    pairs = [(k, j) for k in range(s) for j in range(s)]

    def rank_for(pair):
        k, j = pair
        diff = _class_difference(alg, cls[k], cls[j])
        if diff is None:
            return 0
        return simple_weight_mult(alg, cls[k], diff)

    sm = {}
    for pair, value in zip(pairs, _parallel_map(rank_for, pairs)):
        sm[pair] = value

    kostant = {}
    for i in range(s):
        for j in range(s):
            diff = _class_difference(alg, cls[i], cls[j])
            kostant[(i, j)] = rs.kostant_p(diff) if diff is not None else 0

    rows = []
    for i in range(s):
        row = [0] * s
        for j in range(s):
            acc = kostant[(i, j)]
            for k in range(j):
                if row[k]:
                    acc -= row[k] * sm[(k, j)]
            row[j] = acc
        rows.append(tuple(row))

    for i in range(s):
        if rows[i][i] != 1:
            raise ConsistencyError("decomposition matrix is not unitriangular")
        for j in range(s):
            if rows[i][j] < 0 or (j < i and rows[i][j] != 0):
                raise ConsistencyError("decomposition matrix violates the order")
    # re-check the defining character identity after the solve
    for i in range(s):
        for j in range(s):
            lhs = kostant[(i, j)]
            rhs = sum(rows[i][k] * sm[(k, j)] for k in range(s))
            if lhs != rhs:
                raise ConsistencyError("character identity fails after solve")

    return DecompositionMatrix(cls, tuple(rows), n)


def standard_filtration_mult(alg: LieAlgebraData, n: int, mu: Weight,
                             lam: Weight) -> int:
    """(Fil M_{n,mu} : M(lam)) = P(lam - mu), valid for height < n.

    The length-n relations in the presentation kill everything at depth
    >= n, and the multiplicity statement beyond that range is an open
    question; such calls are refused rather than guessed.
    """
    diff = _gamma_coords(alg, lam - mu)
    if diff is None:
        return 0
    if sum(diff) >= n:
        raise DomainError(
            f"height(lam-mu) = {sum(diff)} >= n = {n}: the multiplicity is "
            "only established below the presentation length (open question)")
    return alg.rs.kostant_p(diff)


def projective_filtration_matrix(dec: DecompositionMatrix) -> Tuple[Tuple[int, ...], ...]:
    """(P(mu) : M(lam)) = D[lam][mu] by reciprocity; returned as the
    matrix indexed [mu][lam], i.e. the transpose of D."""
    s = dec.size
    out = tuple(tuple(dec.entries[i][j] for i in range(s)) for j in range(s))
    for j in range(s):
        if out[j][j] != 1:
            raise ConsistencyError("reciprocity matrix is not unitriangular")
        for i in range(s):
            if out[j][i] != 0 and i > j:
                raise ConsistencyError("projective filtration violates the order")
    return out


def cartan_matrix(dec: DecompositionMatrix) -> Tuple[Tuple[int, ...], ...]:
    """C = D^T D: composition multiplicities of the projectives."""
    s = dec.size
    d = dec.entries
    c = tuple(tuple(sum(d[k][i] * d[k][j] for k in range(s)) for j in range(s))
              for i in range(s))
    for i in range(s):
        if c[i][i] <= 0:
            raise ConsistencyError("Cartan matrix has nonpositive diagonal")
        for j in range(s):
            if c[i][j] != c[j][i]:
                raise ConsistencyError("Cartan matrix is not symmetric")
    return c


@dataclass(frozen=True)
class BlockReport:
    """Everything finitely checkable about one block."""

    representative: Weight
    class_weights: Tuple[Weight, ...]
    depth: int
    decomposition: Tuple[Tuple[int, ...], ...]
    projective_filtration: Tuple[Tuple[int, ...], ...]
    cartan: Tuple[Tuple[int, ...], ...]
    simple_weight_tables: Tuple[Tuple[RootVec, Tuple[int, ...]], ...]
    finite_dimensional: Tuple[bool, ...]
    weyl_dimension_checks: Tuple[Tuple[int, int, int], ...]  # (index, dim, rank sum)


def block_report(alg: LieAlgebraData, lam: Weight,
                 depth: Optional[int] = None) -> BlockReport:
    """Assemble the full per-block report for an integral weight."""
    dec = decomposition_matrix(alg, lam, depth)
    cls = dec.class_weights
    s = len(cls)
    proj = projective_filtration_matrix(dec)
    cart = cartan_matrix(dec)
    for i in range(s):
        for j in range(s):
            if proj[j][i] != dec.entries[i][j]:
                raise ConsistencyError("reciprocity identity broken in report")

    # table rows: for each nu among the pairwise differences, the rank
    # dim L(mu_k)_{mu_k - nu} for every class member k
    nus = sorted({d for d in (
        _class_difference(alg, cls[k], cls[j])
        for k in range(s) for j in range(s)) if d is not None},
        key=lambda v: (sum(v), v))
    tables = tuple(
        (nu, tuple(simple_weight_mult(alg, cls[k], nu) for k in range(s)))
        for nu in nus)

    findim = tuple(w.is_dominant_integral for w in cls)
    checks = []
    w0 = alg.rs.weyl_group().longest_element
    for k, w in enumerate(cls):
        if not findim[k]:
            continue
        span = _gamma_coords(alg, w - w0.act(w))
        if span is None:
            raise ConsistencyError("support of a finite-dimensional simple "
                                   "is not in the root lattice")
        total = sum(simple_weight_mult(alg, w, nu)
                    for nu in gamma_elements(alg, sum(span)))
        expected = alg.rs.weyl_dimension(w)
        if total != expected:
            raise ConsistencyError(
                f"rank sum {total} disagrees with Weyl dimension {expected}")
        checks.append((k, expected, total))

    return BlockReport(
        representative=lam,
        class_weights=cls,
        depth=dec.depth,
        decomposition=dec.entries,
        projective_filtration=proj,
        cartan=cart,
        simple_weight_tables=tables,
        finite_dimensional=findim,
        weyl_dimension_checks=tuple(checks),
    )
