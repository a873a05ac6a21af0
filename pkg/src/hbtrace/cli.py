"""Thin command-line client.

By default every command runs in-process against the same handlers the HTTP
service exposes; with ``--server URL`` the request is sent to a running
service instead. Exit codes: 0 success, 1 domain error, 2 parse error,
3 resource cap exceeded, 4 conjecture refutation found.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .errors import (
    DomainError,
    HbTraceError,
    InvariantViolationError,
    ParseError,
    ResourceCapError,
)
from .service import handlers, models

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_REFUTED = 4

EXIT_BY_KIND = {"parse": EXIT_PARSE, "resource": EXIT_RESOURCE, "domain": EXIT_DOMAIN, "invariant": EXIT_DOMAIN}


@dataclass
class RunConfig:
    command: str
    input_text: str = ""
    output_format: str = "text"
    vars: list[str] | None = None
    at: list[str] = field(default_factory=list)
    bound: list[int] | None = None
    cap: int = 10**6
    seed: int = 0
    max_exp: int = 5
    max_param: int = 3
    family: str = "xy"
    dot: bool = False
    rows: bool = True
    server: str | None = None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hbtrace",
        description="Canonical traces of height-two Cohen-Macaulay monomial quotients",
    )
    p.add_argument("--version", action="version", version=f"hbtrace {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, ideal_arg=True):
        if ideal_arg:
            sp.add_argument("input", help="ideal literal, e.g. \"x^3, x^2*y, y^2\" ('-' for stdin)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--vars", help="comma-separated ambient variables (fixes the ring)")
        sp.add_argument("--server", help="base URL of a running hbtrace service")
        return sp

    for name, doc in (
        ("decompose", "standard primary decomposition"),
        ("height", "height of the ideal"),
        ("polarize", "polarization and its variable map"),
        ("dual", "Alexander dual of a squarefree ideal"),
        ("is-cm", "Cohen-Macaulay test for height-two ideals"),
        ("betti", "multigraded Betti numbers"),
        ("hb-matrix", "Hilbert-Burch matrix"),
        ("trace", "canonical trace report"),
        ("classify", "nearly-Gorenstein pattern classification"),
    ):
        add_common(sub.add_parser(name, help=doc))

    sp = add_common(sub.add_parser("localize", help="monomial localization at a variable set"))
    sp.add_argument("--at", required=True, help="comma-separated variables to keep")

    sp = add_common(sub.add_parser("graph", help="G(a,b) construction and cochordality"), ideal_arg=False)
    sp.add_argument("input", help="edge lines 'i j a b' ('-' for stdin)")
    sp.add_argument("--dot", action="store_true", help="include DOT export of G(a,b)")

    for name, doc in (
        ("verify-kernel-xy", "oracle check of the two-variable kernel theorem"),
        ("verify-inclusion", "oracle check of the minors inclusion and its witnesses"),
        ("verify-conjecture", "oracle check of the trace conjecture (exit 4 on refutation)"),
    ):
        sp = add_common(sub.add_parser(name, help=doc))
        sp.add_argument("--bound", help="comma-separated degree bound E1,...,En")
        sp.add_argument("--cap", type=int, default=10**6, help="lattice point cap")

    sp = sub.add_parser("sweep", help="enumeration harness for the classifications")
    sp.add_argument("--family", choices=("xy", "patterns"), default="xy")
    sp.add_argument("--max-exp", type=int, default=5)
    sp.add_argument("--max-param", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-rows", action="store_true", help="omit the per-instance table")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--server", help="base URL of a running hbtrace service")

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if hasattr(args, "input"):
        cfg.input_text = sys.stdin.read() if args.input == "-" else args.input
    if hasattr(args, "format"):
        cfg.output_format = args.format
    if getattr(args, "vars", None):
        cfg.vars = [v.strip() for v in args.vars.split(",") if v.strip()]
    if getattr(args, "at", None):
        cfg.at = [v.strip() for v in args.at.split(",") if v.strip()]
    if getattr(args, "bound", None):
        try:
            cfg.bound = [int(v) for v in args.bound.split(",")]
        except ValueError:
            raise ParseError(f"bad bound {args.bound!r}") from None
    for attr in ("cap", "seed", "max_exp", "max_param", "family", "dot", "server"):
        if hasattr(args, attr):
            val = getattr(args, attr)
            if val is not None:
                setattr(cfg, attr, val)
    if getattr(args, "no_rows", False):
        cfg.rows = False
    return cfg


def _request_for(cfg: RunConfig):
    if cfg.command == "graph":
        return models.GraphRequest(graph=cfg.input_text, dot=cfg.dot)
    if cfg.command == "localize":
        return models.LocalizeRequest(ideal=cfg.input_text, vars=cfg.vars, at=cfg.at)
    if cfg.command.startswith("verify-"):
        return models.VerifyRequest(ideal=cfg.input_text, vars=cfg.vars, bound=cfg.bound, cap=cfg.cap)
    if cfg.command == "sweep":
        return models.SweepRequest(
            family=cfg.family,
            max_exp=cfg.max_exp,
            max_param=cfg.max_param,
            seed=cfg.seed,
            rows=cfg.rows,
        )
    return models.IdealRequest(ideal=cfg.input_text, vars=cfg.vars)


HANDLERS = {
    "decompose": handlers.decompose,
    "height": handlers.height_of,
    "polarize": handlers.polarize_ideal,
    "dual": handlers.dual_ideal,
    "localize": handlers.localize_ideal,
    "graph": handlers.graph_report,
    "is-cm": handlers.is_cm,
    "betti": handlers.betti_table,
    "hb-matrix": handlers.hb_matrix,
    "trace": handlers.trace,
    "classify": handlers.classify,
    "verify-kernel-xy": handlers.verify_kernel_xy,
    "verify-inclusion": handlers.verify_inclusion_cmd,
    "verify-conjecture": handlers.verify_conjecture_cmd,
    "sweep": handlers.sweep,
}


def _call_remote(cfg: RunConfig, request) -> tuple[dict, int]:
    import httpx

    url = cfg.server.rstrip("/") + "/v1/" + cfg.command
    resp = httpx.post(url, json=request.model_dump(), timeout=600.0)
    payload = resp.json()
    if resp.status_code >= 400:
        kind = payload.get("error", {}).get("kind", "domain")
        return payload, EXIT_BY_KIND.get(kind, EXIT_DOMAIN)
    return payload, EXIT_OK


def dispatch(cfg: RunConfig) -> tuple[int, str]:
    """Run one command; returns (exit code, rendered output)."""
    if cfg.command == "serve":
        raise RuntimeError("serve is handled in main()")
    request = _request_for(cfg)
    if cfg.server:
        payload, code = _call_remote(cfg, request)
        if code != EXIT_OK:
            return code, json.dumps(payload, indent=2)
    else:
        try:
            response = HANDLERS[cfg.command](request)
        except HbTraceError as exc:
            return _error_exit(exc)
        payload = response.model_dump(by_alias=True)
    if cfg.command == "verify-conjecture" and payload.get("verdict") == "REFUTED":
        code = EXIT_REFUTED
    else:
        code = EXIT_OK
    if cfg.output_format == "json":
        return code, json.dumps(payload, indent=2, default=str)
    return code, render_text(cfg.command, payload)


def _error_exit(exc: HbTraceError) -> tuple[int, str]:
    if isinstance(exc, ParseError):
        return EXIT_PARSE, f"parse error: {exc}"
    if isinstance(exc, ResourceCapError):
        return EXIT_RESOURCE, f"resource cap: {exc}"
    if isinstance(exc, InvariantViolationError):
        return EXIT_DOMAIN, f"invariant violation (bug): {exc}"
    if isinstance(exc, DomainError):
        return EXIT_DOMAIN, f"domain error: {exc}"
    return EXIT_DOMAIN, f"error: {exc}"


def render_text(command: str, p: dict) -> str:
    lines: list[str] = []
    if command == "decompose":
        lines.append(f"ideal: ({p['ideal']})")
        for comp in p["components"]:
            rad = ", ".join(comp["radical"])
            prim = ", ".join(comp["primary"])
            lines.append(f"  radical ({rad}): primary ({prim})")
    elif command == "height":
        lines.append(f"height(({p['ideal']})) = {p['height']}")
    elif command == "polarize":
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"polarization: ({p['polarized']})")
        lines.append(f"ring: {', '.join(p['polarized_vars'])}")
    elif command == "dual":
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"alexander dual: ({p['dual']})")
    elif command == "localize":
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"localization at ({', '.join(p['at'])}): ({p['localization']})")
    elif command == "graph":
        lines.append(f"ideal I_(G,a,b): ({p['ideal']})")
        lines.append(
            f"G(a,b): {len(p['intersection_graph_vertices'])} vertices, "
            f"{len(p['intersection_graph_edges'])} edges"
        )
        lines.append(f"cochordal: {p['cochordal']}")
        lines.append(
            f"predicted Cohen-Macaulay (CM iff cochordal): {p['predicted_cohen_macaulay']}"
        )
        if p.get("dot"):
            lines.append(p["dot"])
    elif command == "is-cm":
        lines.append(
            f"({p['ideal']}): height {p['height']}, pd(S/I) = {p['projective_dimension']}, "
            f"Cohen-Macaulay: {p['cohen_macaulay']}"
        )
    elif command == "betti":
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"pd(S/I) = {p['projective_dimension']}")
        lines.append(f"total Betti numbers of S/I: {p['quotient_totals']}")
        for e in p["module_entries"]:
            lines.append(f"  beta_{e['i']}(I) at {tuple(e['multidegree'])}: {e['value']}")
    elif command == "hb-matrix":
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"Hilbert-Burch matrix ({p['rows']} x {p['cols']}):")
        lines.append(p["pretty"])
    elif command == "trace":
        lines.append(f"ideal: ({p['ideal']}), mu = {p['mu']}")
        lines.append(f"trace generators: ({', '.join(p['trace_generators'])})")
        lines.append(f"basis: {p['basis']} ({'proven' if p['proven'] else 'CONJECTURAL'})")
        lines.append(f"Cohen-Macaulay: {p['is_cohen_macaulay']}")
        lines.append(f"generically Gorenstein: {p['is_generically_gorenstein']}")
        lines.append(f"Gorenstein: {p['is_gorenstein']}")
        lines.append(f"nearly Gorenstein: {p['is_nearly_gorenstein']}")
    elif command == "classify":
        cls = p["classification"]
        lines.append(f"ideal: ({p['ideal']})")
        lines.append(f"case: {cls['case']}")
        if cls.get("witness"):
            lines.append(f"witness: {json.dumps(cls['witness'])}")
        if cls.get("ambient_excess_vars"):
            lines.append(f"ambient excess variables: {', '.join(cls['ambient_excess_vars'])}")
        lines.append(f"nearly Gorenstein (by classification): {cls['nearly_gorenstein']}")
        if p.get("trace_basis") is not None:
            lines.append(
                f"trace cross-check (basis {p['trace_basis']}, proven): "
                f"nearly Gorenstein = {p['trace_nearly_gorenstein']}, consistent = {p['consistent']}"
            )
        elif p.get("note"):
            lines.append(p["note"])
    elif command.startswith("verify-"):
        lines.append(f"statement: {p['statement']}")
        lines.append(f"bound: {p['bound']}")
        lines.append(f"verdict: {p['verdict']}")
        if p.get("witness"):
            lines.append(f"witness: {json.dumps(p['witness'])}")
        if p.get("details"):
            lines.append(f"details: {json.dumps(p['details'])}")
    elif command == "sweep":
        lines.append(f"family: {p['family']}")
        lines.append(f"instances: {p['count']}")
        lines.append(f"classification mismatches: {p['mismatch_count']}")
        for row in p.get("rows", []):
            lines.append("  " + json.dumps(row))
        for row in p["mismatches"]:
            lines.append("MISMATCH " + json.dumps(row))
    else:
        lines.append(json.dumps(p, indent=2))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK
    try:
        cfg = config_from_args(args)
        code, output = dispatch(cfg)
    except HbTraceError as exc:
        code, output = _error_exit(exc)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
