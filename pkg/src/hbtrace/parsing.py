"""Text grammar for ideals and graph data.

Ideal grammar (whitespace insignificant):

    ideal    = monomial (',' monomial)*
    monomial = factor ('*' factor)*
    factor   = var ('^' uint)?
    var      = letter (letter | digit | '_')*

Variables are collected in first-appearance order unless an explicit list is
given, in which case unknown names are rejected. Graph data is one edge per
line: ``i j a b`` with 1-based vertex indices and positive exponents.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .graphs import EdgeSequenceData, edge_data
from .monomials import AmbientRing, MonomialIdeal, minimalize

_TOKEN = re.compile(r"\s*(?:(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\^*,]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        if text[pos] == "\n":
            line += 1
            line_start = pos + 1
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + len(text[pos:]) - len(stripped) - line_start + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), line, m.start(kind) - line_start + 1))
        pos = m.end()
    tokens.append(("end", "", line, pos - line_start + 1))
    return tokens


def parse_ideal(text: str, variables: list[str] | None = None) -> MonomialIdeal:
    """Parse an ideal literal like ``"x^3, x^2*y, y^2"``.

    With ``variables`` given, the ambient ring is fixed and unknown names are
    a parse error; otherwise variables are collected in first-appearance
    order. The empty string and the literal ``"0"`` give the zero ideal.
    """
    declared = variables is not None
    if declared and len(set(variables)) != len(variables):
        raise ParseError("declared variables are not distinct")
    names: list[str] = list(variables) if declared else []
    stripped = text.strip()
    if stripped in ("", "0"):
        if not names:
            raise ParseError("zero ideal needs an explicit variable list")
        return MonomialIdeal(AmbientRing(tuple(names)), ())

    neg = re.search(r"\^\s*-", text)
    if neg:
        line = text.count("\n", 0, neg.start()) + 1
        col = neg.start() - (text.rfind("\n", 0, neg.start()) + 1) + 1
        raise ParseError("negative exponent", line, col)

    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take(kind):
        nonlocal k
        tok = tokens[k]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2], tok[3])
        k += 1
        return tok

    raw: list[dict[str, int]] = []
    while True:
        exps: dict[str, int] = {}
        while True:
            var = take("var")
            name = var[1]
            if declared and name not in names:
                raise ParseError(f"unknown variable {name!r}", var[2], var[3])
            if not declared and name not in names:
                names.append(name)
            e = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take("op")
                e = int(take("int")[1])
            exps[name] = exps.get(name, 0) + e
            tok = peek()
            if tok[0] == "op" and tok[1] == "*":
                take("op")
                continue
            break
        raw.append(exps)
        tok = peek()
        if tok[0] == "op" and tok[1] == ",":
            take("op")
            continue
        if tok[0] == "end":
            break
        raise ParseError(f"expected ',' or end of input, found {tok[1]!r}", tok[2], tok[3])

    ambient = AmbientRing(tuple(names))
    gens = []
    for exps in raw:
        gens.append(ambient.monomial([exps.get(nm, 0) for nm in names]))
    return minimalize(gens, ambient)


def print_ideal(I: MonomialIdeal) -> str:
    """Inverse of :func:`parse_ideal` on the canonical form."""
    if I.is_zero():
        return "0"
    return ", ".join(str(g) for g in I.generators)


@dataclass(frozen=True)
class IdealExpression:
    """An ideal literal together with its parse; parse(print(I)) == I."""

    source: str
    parsed: MonomialIdeal

    @classmethod
    def parse(cls, text: str, variables: list[str] | None = None) -> "IdealExpression":
        return cls(text, parse_ideal(text, variables=variables))

    def canonical_source(self) -> str:
        return print_ideal(self.parsed)


def parse_graph_spec(text: str) -> EdgeSequenceData:
    """Parse edge-sequence data, one ``i j a b`` line per edge.

    Vertices are named x1..xN with N the largest index seen; blank lines and
    ``#`` comments are ignored.
    """
    edges: list[tuple[str, str]] = []
    a: list[int] = []
    b: list[int] = []
    max_index = 0
    seen: set[frozenset[int]] = set()
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ParseError(f"expected 'i j a b', found {line!r}", lineno)
        try:
            i, j, ae, be = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if i < 1 or j < 1:
            raise ParseError("vertex indices are 1-based", lineno)
        if i == j:
            raise ParseError(f"loop at vertex {i}", lineno)
        if ae < 1 or be < 1:
            raise ParseError("exponents a and b must be positive", lineno)
        key = frozenset((i, j))
        if key in seen:
            raise ParseError(f"duplicate edge ({i},{j})", lineno)
        seen.add(key)
        edges.append((f"x{i}", f"x{j}"))
        a.append(ae)
        b.append(be)
        max_index = max(max_index, i, j)
    if not edges:
        raise ParseError("no edges given")
    vertices = [f"x{k}" for k in range(1, max_index + 1)]
    return edge_data(edges, a, b, vertices=vertices)
