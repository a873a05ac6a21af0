"""Multigraded Betti numbers of monomial ideals over the rationals.

The route is the standard one through upper Koszul simplicial complexes on
the lcm lattice: for a monomial ideal I and a lattice degree a,

    beta_{i,a}(I) = dim_Q  H~_{i-1}( K^a(I) ),
    K^a(I) = { squarefree F <= supp(a) : x^(a - e_F) in I }.

The table is stored for the module I (so the homological index 0 row lists
the generators); quotient-ring numbers are the same data shifted by one,
beta_i(S/I) = beta_{i-1}(I) for i >= 1.

All homology is computed by exact integer elimination; a resource cap keeps
the 2^mu lattice enumeration at desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .errors import DomainError, InvariantViolationError, ResourceCapError
from .monomials import Monomial, MonomialIdeal, height

MU_CAP = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets, as vertex bitmasks.

    ``facets == (0,)`` is the complex whose only face is the empty set;
    ``facets == ()`` is the void complex with no faces at all.
    """

    n_vertices: int
    facets: tuple[int, ...]

    @staticmethod
    def from_faces(n_vertices: int, faces) -> "SimplicialComplex":
        faces = set(faces)
        maximal = [F for F in faces if not any(F != G and F & G == F for G in faces)]
        return SimplicialComplex(n_vertices, tuple(sorted(maximal)))

    def all_faces(self) -> set[int]:
        out: set[int] = set()
        for F in self.facets:
            sub = F
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return out

    def is_cone(self) -> bool:
        """True when some vertex belongs to every facet (then H~ vanishes)."""
        if not self.facets:
            return False
        common = self.facets[0]
        for F in self.facets[1:]:
            common &= F
        return common != 0

    def reduced_homology_dims(self) -> dict[int, int]:
        """Dimensions of reduced rational homology, indexed from -1."""
        faces = self.all_faces()
        if not faces:
            return {}
        by_card: dict[int, list[int]] = {}
        for F in faces:
            by_card.setdefault(bin(F).count("1"), []).append(F)
        for lst in by_card.values():
            lst.sort()
        top = max(by_card)
        ranks: dict[int, int] = {}  # rank of boundary C_k -> C_{k-1}, k = dim
        for k in range(0, top):  # dimension k faces have k+1 vertices
            ranks[k] = self._boundary_rank(by_card.get(k + 1, []), by_card.get(k, []))
        dims: dict[int, int] = {}
        for k in range(-1, top):
            ck = len(by_card.get(k + 1, []))
            dims[k] = ck - ranks.get(k, 0) - ranks.get(k + 1, 0)
        return {k: d for k, d in dims.items() if d}

    @staticmethod
    def _boundary_rank(faces_k: list[int], faces_km1: list[int]) -> int:
        if not faces_k or not faces_km1:
            return 0
        index = {F: i for i, F in enumerate(faces_km1)}
        rows = [[0] * len(faces_k) for _ in faces_km1]
        for j, F in enumerate(faces_k):
            sign = 1
            rem = F
            while rem:
                v = rem & (-rem)
                rows[index[F ^ v]][j] = sign
                sign = -sign
                rem ^= v
        return linalg.rank(rows)


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of the ideal I as a module.

    ``entries[(i, degree)]`` is beta_{i, degree}(I); the quotient-ring
    numbers are obtained by ``quotient_total``.
    """

    entries: tuple[tuple[tuple[int, tuple[int, ...]], int], ...]

    def as_dict(self) -> dict[tuple[int, tuple[int, ...]], int]:
        return dict(self.entries)

    def ideal_total(self, i: int) -> int:
        return sum(v for (j, _), v in self.entries if j == i)

    def quotient_total(self, i: int) -> int:
        """beta_i(S/I): 1 in homological degree 0, then the shifted row."""
        if i == 0:
            return 1
        return self.ideal_total(i - 1)

    def max_index(self) -> int:
        return max((i for (i, _), _ in self.entries), default=-1)


def lcm_lattice_degrees(I: MonomialIdeal) -> set[Monomial]:
    """All lcms of nonempty subsets of the generators (closure under joins)."""
    if I.is_zero():
        raise DomainError("zero ideal has no lcm lattice")
    if I.mu > MU_CAP:
        raise ResourceCapError(f"mu(I) = {I.mu} exceeds the cap {MU_CAP}")
    lattice = set(I.generators)
    frontier = set(I.generators)
    while frontier:
        new = set()
        for u in frontier:
            for g in I.generators:
                w = u.lcm(g)
                if w not in lattice:
                    new.add(w)
        lattice |= new
        frontier = new
    return lattice


def _upper_koszul_faces(I: MonomialIdeal, a: Monomial) -> tuple[list[int], set[int]]:
    """Vertex list (variable indices) and face masks of K^a(I)."""
    supp = sorted(a.support())
    faces = set()
    for mask in range(1 << len(supp)):
        exps = list(a.exponents)
        ok = True
        m = mask
        pos = 0
        while m:
            if m & 1:
                exps[supp[pos]] -= 1
                if exps[supp[pos]] < 0:
                    ok = False
                    break
            m >>= 1
            pos += 1
        if ok and I.contains_monomial(Monomial(I.ring, tuple(exps))):
            faces.add(mask)
    return supp, faces


@lru_cache(maxsize=4096)
def betti_numbers(I: MonomialIdeal) -> BettiTable:
    """Full multigraded Betti table of the module I."""
    if I.is_zero() or I.is_unit():
        raise DomainError("Betti numbers are computed for proper nonzero ideals")
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for a in sorted(lcm_lattice_degrees(I), key=Monomial.sort_key):
        supp, faces = _upper_koszul_faces(I, a)
        full = (1 << len(supp)) - 1
        if full in faces:  # K^a is the full simplex: contractible
            continue
        complex_ = SimplicialComplex.from_faces(len(supp), faces)
        if complex_.is_cone():
            continue
        for j, d in complex_.reduced_homology_dims().items():
            entries[(j + 1, a.exponents)] = d
    table = BettiTable(tuple(sorted(entries.items())))
    if table.ideal_total(0) != I.mu:
        raise InvariantViolationError(
            f"beta_0 = {table.ideal_total(0)} but mu(I) = {I.mu}"
        )
    return table


def projective_dimension(I: MonomialIdeal) -> int:
    """Projective dimension of the quotient S/I."""
    return betti_numbers(I).max_index() + 1


def is_cohen_macaulay_h2(I: MonomialIdeal) -> bool:
    """Cohen-Macaulay test for height-two ideals: pd(S/I) = 2."""
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    return projective_dimension(I) == 2


def cm_type(I: MonomialIdeal) -> int:
    """Last total Betti number of S/I; defined for Cohen-Macaulay quotients."""
    h = height(I)
    pd = projective_dimension(I)
    if pd != h:
        raise DomainError(f"S/I is not Cohen-Macaulay (pd {pd} != height {h})")
    return betti_numbers(I).quotient_total(pd)


def taylor_strand_betti(I: MonomialIdeal) -> dict[tuple[int, tuple[int, ...]], int]:
    """Independent Betti oracle: minimalize the Taylor complex degreewise.

    In each multidegree a, the degree-a strand of the Taylor complex (tensored
    with the residue field) has basis the generator subsets with lcm exactly a,
    and the differential keeps the signed unit entries where dropping a
    generator does not change the lcm. Its homology gives beta_{i,a}(S/I);
    the returned dict is shifted to index the module I, matching
    :func:`betti_numbers`.
    """
    if I.is_zero() or I.is_unit():
        raise DomainError("Betti numbers are computed for proper nonzero ideals")
    if I.mu > MU_CAP:
        raise ResourceCapError(f"mu(I) = {I.mu} exceeds the cap {MU_CAP}")
    gens = I.generators
    m = len(gens)
    lcms: dict[int, Monomial] = {0: I.ring.one()}
    for mask in range(1, 1 << m):
        low = mask & (-mask)
        lcms[mask] = lcms[mask ^ low].lcm(gens[low.bit_length() - 1])
    by_degree: dict[Monomial, list[int]] = {}
    for mask, w in lcms.items():
        by_degree.setdefault(w, []).append(mask)
    out: dict[tuple[int, tuple[int, ...]], int] = {}
    for a, masks in by_degree.items():
        by_card: dict[int, list[int]] = {}
        for mask in masks:
            by_card.setdefault(bin(mask).count("1"), []).append(mask)
        for lst in by_card.values():
            lst.sort()
        top = max(by_card)
        ranks: dict[int, int] = {}
        for k in range(1, top + 1):
            upper = by_card.get(k, [])
            lower = by_card.get(k - 1, [])
            if not upper or not lower:
                ranks[k] = 0
                continue
            index = {F: i for i, F in enumerate(lower)}
            rows = [[0] * len(upper) for _ in lower]
            for j, F in enumerate(upper):
                sign = 1
                rem = F
                while rem:
                    v = rem & (-rem)
                    sub = F ^ v
                    if lcms[sub] == a and sub in index:
                        rows[index[sub]][j] = sign
                    sign = -sign
                    rem ^= v
            ranks[k] = linalg.rank(rows)
        for k in range(1, top + 1):
            ck = len(by_card.get(k, []))
            hk = ck - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if hk:
                # Taylor strand homology H_k computes beta_{k,a}(S/I);
                # shift down by one to index the module I.
                out[(k - 1, a.exponents)] = hk
    return out
