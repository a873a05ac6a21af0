"""Enumeration harnesses and random instance generators.

The sweep families reproduce the closed-form classifications exhaustively;
the samplers produce the random instance streams the verification suite
runs on. Everything is driven by an explicit random.Random so runs are
reproducible from a seed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .graphs import EdgeSequenceData, build_ideal, edge_data, intersection_graph, is_cochordal
from .monomials import AmbientRing, MonomialIdeal, ideal, minimalize
from .trace import (
    NGCase,
    canonical_trace,
    classify_ng_height2,
    classify_ng_two_vars,
    is_gorenstein_h2,
    is_nearly_gorenstein_h2,
)

XY = AmbientRing(("x", "y"))


def xy_tuples(max_exp: int):
    """All (a, b, c, d) with 0 <= b < a <= max_exp, 0 <= c < d <= max_exp,
    b + c >= 1."""
    for a in range(1, max_exp + 1):
        for b in range(0, a):
            for d in range(1, max_exp + 1):
                for c in range(0, d):
                    if b + c >= 1:
                        yield (a, b, c, d)


def xy_ideal(a: int, b: int, c: int, d: int) -> MonomialIdeal:
    return ideal(XY, (a, 0), (b, c), (0, d))


def xy_closed_form_ng(a: int, b: int, c: int, d: int) -> bool:
    """The closed-form decision: nearly Gorenstein iff mu <= 2, or mu = 3 and
    (i) a-b=1 or b=1, (ii) d-c=1 or c=1, (iii) b+c>=1."""
    I = xy_ideal(a, b, c, d)
    if I.mu <= 2:
        return True
    return (a - b == 1 or b == 1) and (d - c == 1 or c == 1) and (b + c >= 1)


@dataclass
class SweepResult:
    family: str
    count: int = 0
    mismatches: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "count": self.count,
            "mismatch_count": len(self.mismatches),
            "mismatches": self.mismatches,
            "rows": self.rows,
        }


def sweep_xy(max_exp: int = 5, collect_rows: bool = True) -> SweepResult:
    """Exhaustive two-variable sweep: trace decision vs closed form vs the
    pattern classifier, for every staircase tuple up to max_exp."""
    result = SweepResult("xy")
    for a, b, c, d in xy_tuples(max_exp):
        I = xy_ideal(a, b, c, d)
        ng_trace = is_nearly_gorenstein_h2(I)
        ng_closed = xy_closed_form_ng(a, b, c, d)
        cls = classify_ng_two_vars(I)
        # raises on any trace/mu/type disagreement, so the whole sweep also
        # exercises the Gorenstein three-way identity
        is_gorenstein_h2(I)
        ng_pattern = cls.case is not NGCase.NOT_NG
        result.count += 1
        row = {
            "a": a,
            "b": b,
            "c": c,
            "d": d,
            "mu": I.mu,
            "ng_trace": ng_trace,
            "ng_closed_form": ng_closed,
            "case": cls.case.value,
        }
        if collect_rows:
            result.rows.append(row)
        if not (ng_trace == ng_closed == ng_pattern):
            result.mismatches.append(row)
    return result


def ng_pattern_instances(max_param: int = 3):
    """All ideals matching the height-two nearly-Gorenstein patterns with
    parameters up to max_param, as (label, ideal) pairs."""
    seen: set = set()

    def emit(label, I):
        key = (I.ring.variable_names, I.generators)
        if key not in seen:
            seen.add(key)
            yield label, I

    # (a) two generators with disjoint supports, in 2..4 variables
    for n in range(2, 5):
        ring = AmbientRing(tuple(f"x{i}" for i in range(1, n + 1)))
        idxs = list(range(n))
        for ka in range(1, 3):
            for kb in range(1, 3):
                for sa in itertools.combinations(idxs, ka):
                    rest = [i for i in idxs if i not in sa]
                    for sb in itertools.combinations(rest, kb):
                        for ea in itertools.product(range(1, max_param + 1), repeat=ka):
                            for eb in itertools.product(range(1, max_param + 1), repeat=kb):
                                u = [0] * n
                                for i, e in zip(sa, ea):
                                    u[i] = e
                                v = [0] * n
                                for i, e in zip(sb, eb):
                                    v[i] = e
                                yield from emit("a", ideal(ring, tuple(u), tuple(v)))
    # (b) two-variable triples satisfying the closed-form conditions
    for a in range(1, max_param + 1):
        for b in range(0, a):
            for d in range(1, max_param + 1):
                for c in range(0, d):
                    I = xy_ideal(a, b, c, d)
                    if I.mu == 3 and xy_closed_form_ng(a, b, c, d):
                        yield from emit("b", I)
    # (c) (x1^a x2^b, x1 x3, x2 x3), a >= 1, a + b >= 2, n = 3
    r3 = AmbientRing(("x1", "x2", "x3"))
    for a in range(1, max_param + 1):
        for b in range(0, max_param + 1):
            if a + b >= 2:
                yield from emit("c", ideal(r3, (a, b, 0), (1, 0, 1), (0, 1, 1)))
    # (d) (x1 x2^b, x2^(b+1), x1 x3), b >= 1, n = 3
    for b in range(1, max_param + 1):
        yield from emit("d", ideal(r3, (1, b, 0), (0, b + 1, 0), (1, 0, 1)))
    # (e) (x1 x3, x1 x4, x2 x4), n = 4
    r4 = AmbientRing(("x1", "x2", "x3", "x4"))
    yield from emit("e", ideal(r4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)))


def sweep_patterns(max_param: int = 3, collect_rows: bool = False) -> SweepResult:
    """Confirm near-Gorensteinness by trace for every pattern instance, and
    agreement with the pattern classifier."""
    result = SweepResult("patterns")
    for label, I in ng_pattern_instances(max_param):
        report = canonical_trace(I)
        cls = classify_ng_height2(I)
        result.count += 1
        row = {
            "pattern": label,
            "ideal": str(I),
            "ng_trace": report.is_nearly_gorenstein,
            "case": cls.case.value,
            "basis": report.basis.value,
        }
        if collect_rows:
            result.rows.append(row)
        ok = report.is_nearly_gorenstein and cls.effective_nearly_gorenstein()
        if not ok:
            result.mismatches.append(row)
    return result


# ---------------------------------------------------------------------------
# random instance generators


def random_edge_sequence_data(
    rng: random.Random,
    max_t: int = 4,
    max_vertices: int = 6,
    max_exp: int = 3,
    require_cochordal: bool = False,
    max_tries: int = 200,
) -> EdgeSequenceData:
    """Random (G, a, b) data with t <= max_t distinct edges."""
    for _ in range(max_tries):
        nv = rng.randint(2, max_vertices)
        labels = [f"x{i}" for i in range(1, nv + 1)]
        possible = list(itertools.combinations(labels, 2))
        t = rng.randint(1, min(max_t, len(possible)))
        edges = rng.sample(possible, t)
        a = [rng.randint(1, max_exp) for _ in range(t)]
        b = [rng.randint(1, max_exp) for _ in range(t)]
        data = edge_data(edges, a, b, vertices=labels)
        if require_cochordal and not is_cochordal(intersection_graph(data)):
            continue
        return data
    raise RuntimeError("sampler failed to find an instance within max_tries")


def random_two_variable_ideal(
    rng: random.Random, max_m: int = 5, max_exp: int = 6, cohen_macaulay: bool = False
) -> MonomialIdeal:
    """Random staircase ideal in K[x, y] with 2 <= mu <= max_m."""
    m = rng.randint(2, max_m)
    a = sorted(rng.sample(range(0, max_exp + 1), m), reverse=True)
    b = sorted(rng.sample(range(0, max_exp + 1), m))
    if cohen_macaulay:
        a[-1] = 0
        b[0] = 0
    return ideal(XY, *[(ai, bi) for ai, bi in zip(a, b)])


def random_squarefree_ideal(
    rng: random.Random, n: int = 5, max_gens: int = 5
) -> MonomialIdeal:
    ring = AmbientRing(tuple(f"x{i}" for i in range(1, n + 1)))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, n)
        supp = rng.sample(range(n), size)
        e = [0] * n
        for i in supp:
            e[i] = 1
        gens.append(tuple(e))
    I = ideal(ring, *gens)
    return I


def random_monomial_ideal(
    rng: random.Random, n: int = 4, max_gens: int = 5, max_exp: int = 4
) -> MonomialIdeal:
    ring = AmbientRing(tuple(f"x{i}" for i in range(1, n + 1)))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = [rng.randint(0, max_exp) for _ in range(n)]
        if all(x == 0 for x in e):
            e[rng.randrange(n)] = 1
        gens.append(tuple(e))
    return ideal(ring, *gens)


def random_gen_gor_cm_off_pattern(
    rng: random.Random, max_tries: int = 500
) -> MonomialIdeal:
    """Random generically Gorenstein Cohen-Macaulay height-two ideal on at
    most 4 variables, mu <= 4, exponents <= 3, matching none of the
    nearly-Gorenstein patterns (ambient-size clauses included)."""
    for _ in range(max_tries):
        data = random_edge_sequence_data(
            rng, max_t=4, max_vertices=4, max_exp=3, require_cochordal=True
        )
        I = build_ideal(data)
        if I.mu > 4:
            continue
        if classify_ng_height2(I).effective_nearly_gorenstein():
            continue
        return I
    raise RuntimeError("sampler failed to find an off-pattern instance")


def random_non_gen_gor_cm(
    rng: random.Random, n: int, max_tries: int = 500
) -> MonomialIdeal:
    """Random Cohen-Macaulay height-two ideal in n variables that is NOT
    generically Gorenstein: a fat primary staircase piece on a random
    variable pair, optionally intersected with simple distinct-radical
    components, filtered for Cohen-Macaulayness."""
    from .betti import is_cohen_macaulay_h2
    from .monomials import Monomial, height, intersect_all
    from .trace import is_generically_gorenstein

    ring = AmbientRing(tuple(f"x{i}" for i in range(1, n + 1)))

    def fat_piece(i, j):
        m = rng.randint(3, 4)
        a = sorted(rng.sample(range(0, 4), m), reverse=True)
        b = sorted(rng.sample(range(0, 4), m))
        a[-1] = 0
        b[0] = 0
        gens = []
        for ai, bi in zip(a, b):
            e = [0] * n
            e[i], e[j] = ai, bi
            gens.append(Monomial(ring, tuple(e)))
        return minimalize(gens, ring)

    for _ in range(max_tries):
        i, j = sorted(rng.sample(range(n), 2))
        pieces = [fat_piece(i, j)]
        if rng.random() < 0.3:
            k, l = sorted(rng.sample(range(n), 2))
            if {k, l} != {i, j}:
                pieces.append(fat_piece(k, l))
        for _ in range(rng.randint(0, 2)):
            k, l = sorted(rng.sample(range(n), 2))
            if {k, l} == {i, j}:
                continue
            ek = [0] * n
            ek[k] = rng.randint(1, 3)
            el = [0] * n
            el[l] = rng.randint(1, 3)
            pieces.append(minimalize([Monomial(ring, tuple(ek)), Monomial(ring, tuple(el))], ring))
        I = intersect_all(pieces)
        if I.mu > 6 or height(I) != 2:
            continue
        if not is_cohen_macaulay_h2(I):
            continue
        if is_generically_gorenstein(I)[0]:
            continue
        return I
    raise RuntimeError("sampler failed to find a non-generically-Gorenstein CM instance")


def random_labeled_graph(rng: random.Random, n: int, edge_prob: float = 0.5):
    from .graphs import graph

    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = [e for e in itertools.combinations(labels, 2) if rng.random() < edge_prob]
    return graph(labels, edges)
