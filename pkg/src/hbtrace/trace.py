"""Canonical trace of height-two Cohen-Macaulay monomial quotients, and the
Gorenstein / nearly-Gorenstein decision procedures built on it.

The trace is computed as the submaximal-minor ideal of a Hilbert-Burch
matrix, modulo the ideal. That formula is a theorem for two-variable ideals
and for generically Gorenstein ideals; otherwise it is conjectural and every
report says so explicitly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .betti import cm_type, is_cohen_macaulay_h2
from .errors import ConjecturalTraceError, DomainError, InvariantViolationError
from .matrices import (
    SignedMonomialMatrix,
    hb_matrix_general,
    hb_matrix_xy,
    minors_ideal,
    normalized_xy_sequences,
)
from .monomials import (
    MonomialIdeal,
    height,
    is_unmixed_height,
    minimal_primes,
    minimalize,
    monomial_localization,
)


class TraceBasis(Enum):
    """Which theorem backs the minors formula for this ideal."""

    TWO_VARIABLES = "TwoVariables"
    GENERICALLY_GORENSTEIN = "GenericallyGorenstein"
    CONJECTURAL_ONLY = "ConjecturalOnly"


@dataclass(frozen=True)
class GenGorObstruction:
    """Witness that an ideal is not generically Gorenstein: a minimal prime
    whose monomial localization is not a two-generated complete intersection."""

    prime: frozenset[int]
    localization: MonomialIdeal

    def describe(self, ring) -> str:
        names = ", ".join(ring.variable_names[i] for i in sorted(self.prime))
        return (
            f"localization at ({names}) is {self.localization} with "
            f"{self.localization.mu} generators"
        )


def is_generically_gorenstein(I: MonomialIdeal) -> tuple[bool, GenGorObstruction | None]:
    """Generic Gorensteinness of a height-two unmixed monomial ideal.

    True iff the monomial localization at every minimal prime has exactly two
    generators with disjoint supports (a complete intersection).
    """
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    if not is_unmixed_height(I, 2):
        raise DomainError("ideal is not unmixed")
    for P in minimal_primes(I):
        loc = monomial_localization(I, P)
        if loc.mu != 2:
            return False, GenGorObstruction(P, loc)
        g1, g2 = loc.generators
        if g1.support() & g2.support():
            return False, GenGorObstruction(P, loc)
    return True, None


@dataclass(frozen=True)
class TraceReport:
    """Result of a canonical trace computation."""

    ideal: MonomialIdeal
    m: int
    hb_matrix: SignedMonomialMatrix
    trace_gens_in_S: MonomialIdeal
    basis: TraceBasis
    is_cm: bool
    is_gorenstein: bool
    is_nearly_gorenstein: bool
    is_generically_gorenstein: bool

    def to_json(self) -> dict:
        return {
            "ideal": ", ".join(str(g) for g in self.ideal.generators),
            "mu": self.m,
            "hb_matrix": self.hb_matrix.to_json_entries(),
            "trace_generators": [str(g) for g in self.trace_gens_in_S.generators],
            "basis": self.basis.value,
            "proven": self.basis is not TraceBasis.CONJECTURAL_ONLY,
            "is_cohen_macaulay": self.is_cm,
            "is_gorenstein": self.is_gorenstein,
            "is_nearly_gorenstein": self.is_nearly_gorenstein,
            "is_generically_gorenstein": self.is_generically_gorenstein,
        }


def canonical_trace(I: MonomialIdeal) -> TraceReport:
    """Canonical trace of S/I as an ideal of S: I_(m-2)(X) + I.

    Uses the closed-form Hilbert-Burch matrix when the ambient ring has two
    variables, the syzygy-based one otherwise. The report's ``basis`` field
    records whether the answer is proven or rests on the open conjecture.
    """
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    if not is_cohen_macaulay_h2(I):
        raise DomainError("S/I is not Cohen-Macaulay")
    gen_gor, _ = is_generically_gorenstein(I)
    if I.ring.n == 2:
        X = hb_matrix_xy(I)
        basis = TraceBasis.TWO_VARIABLES
    else:
        X = hb_matrix_general(I)
        basis = (
            TraceBasis.GENERICALLY_GORENSTEIN if gen_gor else TraceBasis.CONJECTURAL_ONLY
        )
    m = I.mu
    sub = minors_ideal(X, m - 2)
    trace = minimalize(list(sub.generators) + list(I.generators), I.ring)
    if not trace.contains_ideal(I):
        raise InvariantViolationError("trace does not contain the ideal")
    gorenstein = trace.is_unit()
    nearly = gorenstein or all(
        trace.contains_monomial(I.ring.variable(i)) for i in range(I.ring.n)
    )
    return TraceReport(
        ideal=I,
        m=m,
        hb_matrix=X,
        trace_gens_in_S=trace,
        basis=basis,
        is_cm=True,
        is_gorenstein=gorenstein,
        is_nearly_gorenstein=nearly,
        is_generically_gorenstein=gen_gor,
    )


def is_gorenstein_h2(I: MonomialIdeal) -> bool:
    """Gorenstein test: trace is the unit ideal. Cross-checked against
    mu(I) = 2 and Cohen-Macaulay type 1; disagreement is a bug."""
    report = canonical_trace(I)
    g = report.is_gorenstein
    if (I.mu == 2) != g or (cm_type(I) == 1) != g:
        raise InvariantViolationError(
            f"Gorenstein three-way disagreement for {I}: trace unit={g}, "
            f"mu={I.mu}, type={cm_type(I)}"
        )
    return g


def is_nearly_gorenstein_h2(I: MonomialIdeal) -> bool:
    """Nearly Gorenstein test, only on the proven trace basis.

    Refuses (raises ConjecturalTraceError) when the ideal is neither in two
    variables nor generically Gorenstein; a boolean either way would rest on
    the open conjecture.
    """
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    if not is_cohen_macaulay_h2(I):
        raise DomainError("S/I is not Cohen-Macaulay")
    if I.ring.n != 2 and not is_generically_gorenstein(I)[0]:
        raise ConjecturalTraceError(
            "trace formula is conjectural here (not two variables, not "
            "generically Gorenstein); refusing to decide"
        )
    if I.mu >= 4:
        # trace sits inside m^(mu-2), so it cannot contain the variables
        return False
    return canonical_trace(I).is_nearly_gorenstein


class NGCase(Enum):
    A_TWO_GENS = "A_two_gens"
    B_TWO_VARS = "B_two_vars"
    C = "C"
    D = "D"
    E = "E"
    NOT_NG = "NotNearlyGorenstein"


@dataclass(frozen=True)
class NGClassification:
    """Outcome of matching an ideal against the height-two nearly-Gorenstein
    patterns, up to relabeling of the support variables.

    ``ambient_excess_vars`` lists ambient variables outside the support; the
    patterns with an ambient-size clause are matched on the support subring,
    and excess variables block near-Gorensteinness unless the quotient is
    Gorenstein (the trace cannot reach them otherwise).
    """

    case: NGCase
    witness: dict | None
    ambient_excess_vars: tuple[str, ...] = ()

    def effective_nearly_gorenstein(self) -> bool:
        if self.case is NGCase.NOT_NG:
            return False
        if self.ambient_excess_vars:
            return self.case is NGCase.A_TWO_GENS
        return True

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "witness": self.witness,
            "ambient_excess_vars": list(self.ambient_excess_vars),
            "nearly_gorenstein": self.effective_nearly_gorenstein(),
        }


def _xy_conditions(a: int, b: int, c: int, d: int) -> bool:
    return (a - b == 1 or b == 1) and (d - c == 1 or c == 1) and (b + c >= 1)


def classify_ng_two_vars(I: MonomialIdeal) -> NGClassification:
    """Nearly-Gorenstein classification of a Cohen-Macaulay two-variable
    monomial ideal: mu <= 2 is the Gorenstein bucket, mu = 3 is tested
    against the closed-form conditions, mu >= 4 never qualifies."""
    if I.ring.n != 2:
        raise DomainError("two-variable classifier needs a two-variable ring")
    if I.is_zero() or I.is_unit():
        raise DomainError("classification needs a proper nonzero ideal")
    a, b = normalized_xy_sequences(I)
    m = len(a)
    if m > 1 and (a[-1] != 0 or b[0] != 0):
        raise DomainError("S/I is not Cohen-Macaulay")
    x, y = I.ring.variable_names
    if m == 1:
        return NGClassification(NGCase.A_TWO_GENS, {"principal": str(I.generators[0])})
    if m == 2:
        return NGClassification(NGCase.A_TWO_GENS, {"u": str(I.generators[0]), "v": str(I.generators[1])})
    if m == 3:
        pa, pb, pc, pd = a[0], a[1], b[1], b[2]
        if _xy_conditions(pa, pb, pc, pd):
            return NGClassification(
                NGCase.B_TWO_VARS,
                {"vars": {"x1": x, "x2": y}, "params": {"a": pa, "b": pb, "c": pc, "d": pd}},
            )
    return NGClassification(NGCase.NOT_NG, None)


def classify_ng_height2(I: MonomialIdeal) -> NGClassification:
    """Match a height-two monomial ideal against the nearly-Gorenstein
    patterns, over all relabelings of its support variables."""
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    support = sorted(I.support())
    names = I.ring.variable_names
    excess = tuple(names[i] for i in range(I.ring.n) if i not in support)

    if I.mu == 2:
        g1, g2 = I.generators
        if not (g1.support() & g2.support()):
            return NGClassification(
                NGCase.A_TWO_GENS, {"u": str(g1), "v": str(g2)}, excess
            )

    if I.mu == 3:
        for case, cls in (
            (2, _match_two_support),
            (3, _match_three_support),
            (4, _match_four_support),
        ):
            if len(support) == case:
                result = cls(I, support)
                if result is not None:
                    kind, witness = result
                    return NGClassification(kind, witness, excess)
    return NGClassification(NGCase.NOT_NG, None, excess)


def _gen_exponent_sets(I: MonomialIdeal, support: list[int]):
    return {tuple(g.exponents[i] for i in support) for g in I.generators}


def _match_two_support(I: MonomialIdeal, support: list[int]):
    names = I.ring.variable_names
    gens = _gen_exponent_sets(I, support)
    for perm in itertools.permutations(range(2)):
        pairs = sorted((e[perm[0]], e[perm[1]]) for e in gens)
        # staircase normal form on the permuted pair of variables
        pairs.sort(key=lambda p: -p[0])
        a = [p[0] for p in pairs]
        b = [p[1] for p in pairs]
        if a[-1] != 0 or b[0] != 0:
            continue
        pa, pb, pc, pd = a[0], a[1], b[1], b[2]
        if _xy_conditions(pa, pb, pc, pd):
            return NGCase.B_TWO_VARS, {
                "vars": {"x1": names[support[perm[0]]], "x2": names[support[perm[1]]]},
                "params": {"a": pa, "b": pb, "c": pc, "d": pd},
            }
    return None


def _match_three_support(I: MonomialIdeal, support: list[int]):
    names = I.ring.variable_names
    gens = _gen_exponent_sets(I, support)
    for perm in itertools.permutations(range(3)):
        relabeled = {tuple(e[p] for p in perm) for e in gens}
        mapping = {f"x{k + 1}": names[support[perm[k]]] for k in range(3)}
        # case (c): (x1^a x2^b, x1 x3, x2 x3), a >= 1, b >= 0, a + b >= 2
        if (1, 0, 1) in relabeled and (0, 1, 1) in relabeled:
            (rest,) = relabeled - {(1, 0, 1), (0, 1, 1)}
            a, b, c3 = rest
            if c3 == 0 and a >= 1 and a + b >= 2:
                return NGCase.C, {"vars": mapping, "params": {"a": a, "b": b}}
        # case (d): (x1 x2^b, x2^(b+1), x1 x3), b >= 1
        if (1, 0, 1) in relabeled:
            others = relabeled - {(1, 0, 1)}
            for e1, e2 in itertools.permutations(others):
                if e1[2] != 0 or e2[2] != 0:
                    continue
                if e1[0] == 1 and e2[0] == 0 and e1[1] >= 1 and e2[1] == e1[1] + 1:
                    return NGCase.D, {"vars": mapping, "params": {"b": e1[1]}}
    return None


def _match_four_support(I: MonomialIdeal, support: list[int]):
    names = I.ring.variable_names
    gens = _gen_exponent_sets(I, support)
    target = {(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)}
    for perm in itertools.permutations(range(4)):
        relabeled = {tuple(e[p] for p in perm) for e in gens}
        if relabeled == target:
            mapping = {f"x{k + 1}": names[support[perm[k]]] for k in range(4)}
            return NGCase.E, {"vars": mapping, "params": {}}
    return None


@dataclass(frozen=True)
class ConsistencyReport:
    """Trace decision versus pattern classification for one ideal."""

    ideal: MonomialIdeal
    ng_from_trace: bool
    classification: NGClassification
    consistent: bool

    def to_json(self) -> dict:
        return {
            "ideal": str(self.ideal),
            "nearly_gorenstein_from_trace": self.ng_from_trace,
            "classification": self.classification.to_json(),
            "consistent": self.consistent,
        }


def verify_classification_consistency(I: MonomialIdeal) -> ConsistencyReport:
    """Assert that the trace-computed nearly-Gorenstein decision matches the
    pattern classification. A mismatch is reported, not raised: it would be
    a counterexample to the classification theorem (or a bug)."""
    ng = is_nearly_gorenstein_h2(I)
    cls = classify_ng_height2(I)
    return ConsistencyReport(I, ng, cls, ng == cls.effective_nearly_gorenstein())
