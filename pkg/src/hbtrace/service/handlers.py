"""Command handlers shared by the HTTP endpoints and the CLI.

Each handler takes a request model and returns a response model; library
exceptions propagate to the caller, which maps them to HTTP statuses or
process exit codes.
"""
from __future__ import annotations

from .. import betti as betti_mod
from ..errors import ConjecturalTraceError, DomainError
from ..graphs import build_ideal, complement, intersection_graph, is_chordal
from ..matrices import hb_matrix_general, hb_matrix_xy
from ..monomials import (
    alexander_dual,
    height,
    irreducible_decomposition,
    monomial_localization,
    polarize,
    standard_primary_decomposition,
)
from ..oracle import (
    verify_conjecture,
    verify_inclusion,
    verify_kernel_theorem_xy,
)
from ..parsing import parse_ideal, parse_graph_spec, print_ideal
from ..sweeps import sweep_patterns, sweep_xy
from ..trace import canonical_trace, classify_ng_height2, is_nearly_gorenstein_h2
from . import models


def _parse(req: models.IdealRequest):
    return parse_ideal(req.ideal, variables=req.vars)


def decompose(req: models.IdealRequest) -> models.DecomposeResponse:
    I = _parse(req)
    decomp = standard_primary_decomposition(I)
    names = I.ring.variable_names
    comps = [
        models.ComponentOut(
            radical=[names[i] for i in sorted(rad)],
            primary=[str(g) for g in primary.generators],
        )
        for rad, primary in decomp.components
    ]
    irr = [[str(g) for g in c.as_ideal().generators] for c in irreducible_decomposition(I)]
    return models.DecomposeResponse(ideal=print_ideal(I), components=comps, irreducible=irr)


def height_of(req: models.IdealRequest) -> models.HeightResponse:
    I = _parse(req)
    return models.HeightResponse(ideal=print_ideal(I), height=height(I))


def polarize_ideal(req: models.IdealRequest) -> models.PolarizeResponse:
    I = _parse(req)
    P, var_map = polarize(I)
    mapping = {
        f"{I.ring.variable_names[i]},{j}": P.ring.variable_names[k]
        for (i, j), k in var_map.items()
    }
    return models.PolarizeResponse(
        ideal=print_ideal(I),
        polarized=print_ideal(P),
        polarized_vars=list(P.ring.variable_names),
        var_map=mapping,
    )


def dual_ideal(req: models.IdealRequest) -> models.DualResponse:
    I = _parse(req)
    return models.DualResponse(ideal=print_ideal(I), dual=print_ideal(alexander_dual(I)))


def localize_ideal(req: models.LocalizeRequest) -> models.LocalizeResponse:
    I = _parse(req)
    names = list(I.ring.variable_names)
    unknown = [v for v in req.at if v not in names]
    if unknown:
        raise DomainError(f"unknown variables in localization set: {unknown}")
    P = frozenset(names.index(v) for v in req.at)
    loc = monomial_localization(I, P)
    return models.LocalizeResponse(ideal=print_ideal(I), at=list(req.at), localization=print_ideal(loc))


def graph_report(req: models.GraphRequest) -> models.GraphResponse:
    data = parse_graph_spec(req.graph)
    I = build_ideal(data)
    H = intersection_graph(data)
    chordal, certificate = is_chordal(complement(H))
    return models.GraphResponse(
        ideal=print_ideal(I),
        graph_vertices=list(data.graph.vertices),
        graph_edges=[sorted(e) for e in data.edge_order],
        intersection_graph_vertices=list(H.vertices),
        intersection_graph_edges=sorted(sorted(e) for e in H.edges),
        cochordal=chordal,
        certificate=certificate,
        predicted_cohen_macaulay=chordal,
        dot=H.to_dot() if req.dot else None,
    )


def is_cm(req: models.IdealRequest) -> models.IsCmResponse:
    I = _parse(req)
    h = height(I)
    pd = betti_mod.projective_dimension(I)
    if h != 2:
        raise DomainError(f"expected height 2, got {h}")
    return models.IsCmResponse(
        ideal=print_ideal(I), height=h, projective_dimension=pd, cohen_macaulay=pd == 2
    )


def betti_table(req: models.IdealRequest) -> models.BettiResponse:
    I = _parse(req)
    table = betti_mod.betti_numbers(I)
    entries = [
        models.BettiEntryOut(i=i, multidegree=list(deg), value=v)
        for (i, deg), v in table.entries
    ]
    top = table.max_index()
    return models.BettiResponse(
        ideal=print_ideal(I),
        module_entries=entries,
        ideal_totals=[table.ideal_total(i) for i in range(top + 1)],
        quotient_totals=[table.quotient_total(i) for i in range(top + 2)],
        projective_dimension=betti_mod.projective_dimension(I),
    )


def hb_matrix(req: models.IdealRequest) -> models.HbMatrixResponse:
    I = _parse(req)
    X = hb_matrix_xy(I) if I.ring.n == 2 else hb_matrix_general(I)
    return models.HbMatrixResponse(
        ideal=print_ideal(I),
        rows=X.nrows,
        cols=X.ncols,
        entries=[models.MatrixEntryOut(**e) for e in X.to_json_entries()],
        row_degrees=[str(d) for d in X.row_degrees],
        col_degrees=[str(d) for d in X.col_degrees],
        pretty=X.pretty(),
    )


def trace(req: models.IdealRequest) -> models.TraceResponse:
    I = _parse(req)
    report = canonical_trace(I)
    return models.TraceResponse(**report.to_json())


def classify(req: models.IdealRequest) -> models.ClassifyResponse:
    I = _parse(req)
    cls = classify_ng_height2(I)
    out = models.ClassifyResponse(
        ideal=print_ideal(I),
        classification=models.ClassificationOut(**cls.to_json()),
    )
    try:
        ng = is_nearly_gorenstein_h2(I)
    except ConjecturalTraceError as exc:
        out.note = f"trace cross-check unavailable: {exc}"
        return out
    report = canonical_trace(I)
    out.trace_nearly_gorenstein = ng
    out.trace_basis = report.basis.value
    out.consistent = ng == cls.effective_nearly_gorenstein()
    return out


def _verify_common(req: models.VerifyRequest, fn) -> models.VerifyResponse:
    I = _parse(req)
    bound = tuple(req.bound) if req.bound else None
    report = fn(I, bound, req.cap)
    return models.VerifyResponse(**report.to_json())


def verify_kernel_xy(req: models.VerifyRequest) -> models.VerifyResponse:
    return _verify_common(req, verify_kernel_theorem_xy)


def verify_inclusion_cmd(req: models.VerifyRequest) -> models.VerifyResponse:
    return _verify_common(req, verify_inclusion)


def verify_conjecture_cmd(req: models.VerifyRequest) -> models.VerifyResponse:
    return _verify_common(req, verify_conjecture)


def sweep(req: models.SweepRequest) -> models.SweepResponse:
    if req.family == "xy":
        result = sweep_xy(max_exp=req.max_exp, collect_rows=req.rows)
    else:
        result = sweep_patterns(max_param=req.max_param, collect_rows=req.rows)
    payload = result.to_json()
    if not req.rows:
        payload["rows"] = []
    return models.SweepResponse(**payload)
