"""Exact monomial and monomial-ideal arithmetic.

Everything here is immutable and pure: rings, monomials and ideals are
value objects, exponents are arbitrary-precision integers, and every
ideal is kept in canonical form (minimal generating set, sorted by total
degree then lexicographically on exponent vectors).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import AmbientMismatchError, DomainError, InvariantViolationError


@dataclass(frozen=True)
class AmbientRing:
    """A polynomial ring over the rationals, identified by its variable names."""

    variable_names: tuple[str, ...]

    def __post_init__(self):
        if len(self.variable_names) < 1:
            raise DomainError("ambient ring needs at least one variable")
        if len(set(self.variable_names)) != len(self.variable_names):
            raise DomainError("ambient variable names must be distinct")

    @property
    def n(self) -> int:
        return len(self.variable_names)

    def monomial(self, exponents) -> Monomial:
        return Monomial(self, tuple(int(e) for e in exponents))

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.n)

    def variable(self, index: int) -> Monomial:
        exps = [0] * self.n
        exps[index] = 1
        return Monomial(self, tuple(exps))

    def __repr__(self):
        return f"AmbientRing({','.join(self.variable_names)})"


def ring(*names: str) -> AmbientRing:
    return AmbientRing(tuple(names))


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a, stored as the exponent vector a ∈ Z^n, a ≥ 0."""

    ring: AmbientRing
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.ring.n:
            raise AmbientMismatchError(
                f"exponent vector of length {len(self.exponents)} in a "
                f"{self.ring.n}-variable ring"
            )
        if any(e < 0 for e in self.exponents):
            raise DomainError(f"negative exponent in {self.exponents}")

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        _check_same_ring(self.ring, other.ring)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        _check_same_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        return (self.degree(), self.exponents)

    def __str__(self):
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(self.ring.variable_names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return str(self)


def _check_same_ring(a: AmbientRing, b: AmbientRing):
    if a != b:
        raise AmbientMismatchError(f"ambient rings differ: {a} vs {b}")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held as its unique minimal generating set.

    The empty generating set is the zero ideal, {1} is the unit ideal.
    Construct through :func:`minimalize` (or the ``ideal`` helper) so the
    canonical form invariants hold.
    """

    ring: AmbientRing
    generators: tuple[Monomial, ...]

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains_monomial(self, w: Monomial) -> bool:
        """Membership oracle: w ∈ I iff some generator divides w."""
        _check_same_ring(self.ring, w.ring)
        return any(g.divides(w) for g in self.generators)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        _check_same_ring(self.ring, other.ring)
        return all(self.contains_monomial(g) for g in other.generators)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.generators:
            out |= g.support()
        return frozenset(out)

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return str(self)


def minimalize(gens, ambient: AmbientRing) -> MonomialIdeal:
    """Build the ideal with the unique minimal generating set of ``gens``.

    Divisible generators are dropped and the canonical (degree, lex) order
    is applied, so equal ideals compare equal as values.
    """
    mons = []
    for g in gens:
        if not isinstance(g, Monomial):
            g = ambient.monomial(g)
        _check_same_ring(g.ring, ambient)
        mons.append(g)
    mons = sorted(set(mons), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for m in mons:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal(ambient, tuple(kept))


def ideal(ambient: AmbientRing, *exponent_vectors) -> MonomialIdeal:
    return minimalize([ambient.monomial(e) for e in exponent_vectors], ambient)


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal (I : u) = ({ v / gcd(v, u) : v generator of I })."""
    _check_same_ring(I.ring, u.ring)
    return minimalize([v / v.gcd(u) for v in I.generators], I.ring)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of generators."""
    _check_same_ring(I.ring, J.ring)
    return minimalize([u.lcm(v) for u in I.generators for v in J.generators], I.ring)


def intersect_all(ideals) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise DomainError("empty intersection has no defining ring")
    # smaller generating sets first keeps intermediate products small
    ideals.sort(key=lambda J: J.mu)
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers (x_i^{e_i} : i), e_i ≥ 1."""

    ring: AmbientRing
    powers: tuple[tuple[int, int], ...]  # sorted (variable index, exponent) pairs

    def __post_init__(self):
        if not self.powers:
            raise DomainError("irreducible component must be nonempty")

    @property
    def radical(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.powers)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, e in self.powers:
            exps = [0] * self.ring.n
            exps[i] = e
            gens.append(Monomial(self.ring, tuple(exps)))
        return minimalize(gens, self.ring)

    def __str__(self):
        return str(self.as_ideal())


@dataclass(frozen=True)
class StandardPrimaryDecomposition:
    """Irreducible components grouped by radical; one primary ideal per radical."""

    components: tuple[tuple[frozenset[int], MonomialIdeal], ...]
    irreducible: tuple[IrreducibleComponent, ...] = field(default=())

    def radicals(self) -> list[frozenset[int]]:
        return [r for r, _ in self.components]


def _guard_decomposable(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("zero ideal has no decomposition")
    if I.is_unit():
        raise DomainError("unit ideal has no decomposition")


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """The unique irredundant decomposition into pure-power ideals.

    Recursive splitting on the first generator with support size > 1,
    followed by pruning of redundant components.
    """
    _guard_decomposable(I)
    raw: list[tuple[tuple[int, int], ...]] = []
    _split_into_pure_power_sets(I, raw)
    # dedupe
    comps = [IrreducibleComponent(I.ring, p) for p in dict.fromkeys(raw)]
    comps = _prune_redundant(comps)
    comps.sort(key=lambda c: (len(c.powers), c.powers))
    return comps


def _split_into_pure_power_sets(I: MonomialIdeal, out: list):
    split_gen = None
    for g in I.generators:
        if len(g.support()) > 1:
            split_gen = g
            break
    if split_gen is None:
        powers = []
        for g in I.generators:
            (i,) = g.support()
            powers.append((i, g.exponents[i]))
        out.append(tuple(sorted(powers)))
        return
    rest = [g for g in I.generators if g != split_gen]
    i = min(split_gen.support())
    exps_power = [0] * I.ring.n
    exps_power[i] = split_gen.exponents[i]
    pure = Monomial(I.ring, tuple(exps_power))
    _split_into_pure_power_sets(minimalize(rest + [pure], I.ring), out)
    _split_into_pure_power_sets(minimalize(rest + [split_gen / pure], I.ring), out)


def _prune_redundant(comps: list[IrreducibleComponent]) -> list[IrreducibleComponent]:
    ideals = [c.as_ideal() for c in comps]
    alive = list(range(len(comps)))
    changed = True
    while changed and len(alive) > 1:
        changed = False
        for k in list(alive):
            others = [ideals[j] for j in alive if j != k]
            if ideals[k].contains_ideal(intersect_all(others)):
                alive.remove(k)
                changed = True
                break
    return [comps[k] for k in alive]


def standard_primary_decomposition(I: MonomialIdeal) -> StandardPrimaryDecomposition:
    """Group the irreducible components by radical and intersect each group."""
    comps = irreducible_decomposition(I)
    groups: dict[frozenset[int], list[IrreducibleComponent]] = {}
    for c in comps:
        groups.setdefault(c.radical, []).append(c)
    entries = []
    for rad, group in groups.items():
        entries.append((rad, intersect_all([c.as_ideal() for c in group])))
    entries.sort(key=lambda e: (len(e[0]), sorted(e[0])))
    return StandardPrimaryDecomposition(tuple(entries), tuple(comps))


def minimal_primes(I: MonomialIdeal) -> list[frozenset[int]]:
    """Minimal elements, under inclusion, of the radicals of the components."""
    rads = {c.radical for c in irreducible_decomposition(I)}
    return sorted(
        (r for r in rads if not any(s < r for s in rads)),
        key=lambda r: (len(r), sorted(r)),
    )


def height(I: MonomialIdeal) -> int:
    _guard_decomposable(I)
    return min(len(p) for p in minimal_primes(I))


def is_unmixed_height(I: MonomialIdeal, h: int) -> bool:
    """All associated primes (radicals of irreducible components) have size h."""
    return all(len(c.radical) == h for c in irreducible_decomposition(I))


def monomial_localization(I: MonomialIdeal, P) -> MonomialIdeal:
    """Substitute x_i -> 1 for variables outside P, then minimalize.

    The result is kept in the full ambient ring, with exponents outside P
    zeroed, so it can be compared directly with primary components.
    """
    P = frozenset(P)
    if not P:
        raise DomainError("localization needs a nonempty variable set")
    if not P <= set(range(I.ring.n)):
        raise DomainError("localization set contains unknown variable indices")
    gens = []
    for g in I.generators:
        gens.append(Monomial(I.ring, tuple(e if i in P else 0 for i, e in enumerate(g.exponents))))
    return minimalize(gens, I.ring)


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, dict[tuple[int, int], int]]:
    """Polarization: split x_i^a into x_{i,1} x_{i,2} ... x_{i,a}.

    Returns the squarefree ideal in the extended ring together with the map
    (original index, copy number >= 1) -> new variable index. Copy j of
    variable i is named "<name>_<j>".
    """
    if I.is_zero():
        raise DomainError("zero ideal has no polarization")
    max_exp = [0] * I.ring.n
    for g in I.generators:
        for i, e in enumerate(g.exponents):
            max_exp[i] = max(max_exp[i], e)
    names: list[str] = []
    var_map: dict[tuple[int, int], int] = {}
    for i, name in enumerate(I.ring.variable_names):
        for j in range(1, max_exp[i] + 1):
            var_map[(i, j)] = len(names)
            names.append(f"{name}_{j}")
    if not names:  # unit ideal: nothing to polarize, keep a one-variable ring
        names = [f"{I.ring.variable_names[0]}_1"]
    if len(set(names)) != len(names):
        raise InvariantViolationError("polarized variable names collide")
    pring = AmbientRing(tuple(names))
    gens = []
    for g in I.generators:
        exps = [0] * pring.n
        for i, e in enumerate(g.exponents):
            for j in range(1, e + 1):
                exps[var_map[(i, j)]] = 1
        gens.append(Monomial(pring, tuple(exps)))
    return minimalize(gens, pring), var_map


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a squarefree ideal: intersect, over the generators,
    the primes generated by each generator's support."""
    _guard_decomposable(I)
    if not I.is_squarefree():
        raise DomainError("Alexander dual requires a squarefree ideal")
    primes = []
    for g in I.generators:
        primes.append(minimalize([I.ring.variable(i) for i in sorted(g.support())], I.ring))
    return intersect_all(primes)


def monomials_up_to(ambient: AmbientRing, bound: tuple[int, ...]):
    """Iterate all monomials with exponents <= bound, in graded-lex order."""
    ranges = [range(b + 1) for b in bound]
    pts = sorted(itertools.product(*ranges), key=lambda e: (sum(e), e))
    for e in pts:
        yield Monomial(ambient, e)
