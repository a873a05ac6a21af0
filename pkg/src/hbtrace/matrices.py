"""Hilbert-Burch matrices and their minor ideals.

Two construction paths are provided: the explicit bidiagonal matrix for
two-variable ideals, and multigraded minimalization of Taylor syzygies in
general. Entries are (integer coefficient, monomial) pairs and every matrix
carries row/column multidegrees, so fine-graded homogeneity can be checked
at construction and exploited when expanding minors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .betti import betti_numbers, is_cohen_macaulay_h2
from .errors import DomainError, InvariantViolationError, ResourceCapError
from .monomials import Monomial, MonomialIdeal, height, minimalize

SYZYGY_MU_CAP = 12


@dataclass(frozen=True)
class SignedMonomialEntry:
    """A matrix entry c * x^e; coefficient 0 is the zero entry."""

    coefficient: int
    monomial: Monomial

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __str__(self):
        if self.coefficient == 0:
            return "0"
        sign = "-" if self.coefficient < 0 else ""
        c = abs(self.coefficient)
        if self.monomial.is_one():
            return f"{sign}{c}"
        if c == 1:
            return f"{sign}{self.monomial}"
        return f"{sign}{c}*{self.monomial}"


@dataclass(frozen=True)
class SignedMonomialMatrix:
    """A matrix of signed monomials representing a fine-graded map.

    For every nonzero entry (i, j) the homogeneity contract
    row_degrees[i] * entry == col_degrees[j] holds.
    """

    entries: tuple[tuple[SignedMonomialEntry, ...], ...]
    row_degrees: tuple[Monomial, ...]
    col_degrees: tuple[Monomial, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.row_degrees):
            raise InvariantViolationError("row count does not match row degrees")
        for row in self.entries:
            if len(row) != len(self.col_degrees):
                raise InvariantViolationError("column count does not match col degrees")
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                if self.row_degrees[i] * e.monomial != self.col_degrees[j]:
                    raise InvariantViolationError(
                        f"entry ({i},{j}) = {e} violates multihomogeneity"
                    )

    @property
    def nrows(self) -> int:
        return len(self.row_degrees)

    @property
    def ncols(self) -> int:
        return len(self.col_degrees)

    @property
    def ring(self):
        return self.row_degrees[0].ring

    def entry(self, i: int, j: int) -> SignedMonomialEntry:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[SignedMonomialEntry, ...]:
        return tuple(row[j] for row in self.entries)

    def pretty(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        widths = [max(len(cells[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        lines = []
        for row in cells:
            lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
        return "\n".join(lines)

    def to_json_entries(self) -> list[dict]:
        out = []
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if not e.is_zero():
                    out.append(
                        {"row": i + 1, "col": j + 1, "coeff": e.coefficient, "monomial": str(e.monomial)}
                    )
        return out


@dataclass(frozen=True)
class MinorValue:
    """An exact minor of a signed monomial matrix: one coefficient and one
    monomial (fine-graded homogeneity forces all expansion terms to agree)."""

    coefficient: int
    monomial: Monomial
    row_set: tuple[int, ...]
    col_set: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.coefficient == 0


def normalized_xy_sequences(I: MonomialIdeal) -> tuple[list[int], list[int]]:
    """Generator exponents of a two-variable ideal in the normal form
    a_1 > a_2 > ... > a_m >= 0, b_1 < b_2 < ... < b_m."""
    if I.ring.n != 2:
        raise DomainError("normal form requires a two-variable ambient ring")
    if I.is_zero() or I.is_unit():
        raise DomainError("normal form requires a proper nonzero ideal")
    pairs = sorted((g.exponents for g in I.generators), key=lambda e: -e[0])
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    if not all(x > y for x, y in zip(a, a[1:])) or not all(x < y for x, y in zip(b, b[1:])):
        raise InvariantViolationError("minimal generators violate the staircase shape")
    return a, b


def hb_matrix_xy(I: MonomialIdeal) -> SignedMonomialMatrix:
    """The bidiagonal Hilbert-Burch matrix of a two-variable monomial ideal:
    (j, j) entry y^(b_{j+1}-b_j), (j+1, j) entry -x^(a_j-a_{j+1})."""
    a, b = normalized_xy_sequences(I)
    m = len(a)
    if m < 2:
        raise DomainError("need at least two generators")
    ring = I.ring
    zero = SignedMonomialEntry(0, ring.one())
    rows = [[zero] * (m - 1) for _ in range(m)]
    for j in range(m - 1):
        rows[j][j] = SignedMonomialEntry(1, ring.monomial((0, b[j + 1] - b[j])))
        rows[j + 1][j] = SignedMonomialEntry(-1, ring.monomial((a[j] - a[j + 1], 0)))
    row_degrees = tuple(ring.monomial((a[i], b[i])) for i in range(m))
    col_degrees = tuple(ring.monomial((a[j], b[j + 1])) for j in range(m - 1))
    return SignedMonomialMatrix(tuple(tuple(r) for r in rows), row_degrees, col_degrees)


def taylor_syzygies(I: MonomialIdeal) -> SignedMonomialMatrix:
    """All pairwise Koszul syzygies, one column per generator pair i < j:
    +lcm/u_i at row i and -lcm/u_j at row j."""
    m = I.mu
    if m < 2:
        raise DomainError("need at least two generators")
    ring = I.ring
    zero = SignedMonomialEntry(0, ring.one())
    cols = []
    col_degrees = []
    for i, j in itertools.combinations(range(m), 2):
        u, v = I.generators[i], I.generators[j]
        w = u.lcm(v)
        col = [zero] * m
        col[i] = SignedMonomialEntry(1, w / u)
        col[j] = SignedMonomialEntry(-1, w / v)
        cols.append(col)
        col_degrees.append(w)
    entries = tuple(tuple(cols[c][r] for c in range(len(cols))) for r in range(m))
    row_degrees = tuple(I.generators)
    return SignedMonomialMatrix(entries, row_degrees, tuple(col_degrees))


def _column_vector_in_degree(
    col: tuple[SignedMonomialEntry, ...],
    col_degree: Monomial,
    d: Monomial,
    alive_rows: list[int],
) -> list[int] | None:
    """Coefficient vector of x^(d - col_degree) * column in the fine degree-d
    piece of the free module, or None when the shift does not exist."""
    if not col_degree.divides(d):
        return None
    return [col[i].coefficient for i in alive_rows]


def minimal_first_syzygies(I: MonomialIdeal) -> SignedMonomialMatrix:
    """A minimal generating set of the first syzygy module, chosen greedily
    among Taylor columns in increasing multidegree order.

    Membership of a candidate in the span of the already selected columns is
    decided by exact linear algebra in the candidate's fine degree. The
    selected column count is cross-checked against beta_1(I).
    """
    m = I.mu
    if m > SYZYGY_MU_CAP:
        raise ResourceCapError(f"mu(I) = {m} exceeds the syzygy cap {SYZYGY_MU_CAP}")
    taylor = taylor_syzygies(I)
    order = sorted(
        range(taylor.ncols),
        key=lambda c: (taylor.col_degrees[c].degree(), taylor.col_degrees[c].exponents, c),
    )
    selected: list[int] = []
    for c in order:
        d = taylor.col_degrees[c]
        alive_rows = [i for i in range(m) if I.generators[i].divides(d)]
        candidate = _column_vector_in_degree(taylor.column(c), d, d, alive_rows)
        prior = []
        for s in selected:
            v = _column_vector_in_degree(taylor.column(s), taylor.col_degrees[s], d, alive_rows)
            if v is not None and any(v):
                prior.append(v)
        if not linalg.in_rational_span(prior, candidate):
            selected.append(c)
    expected = betti_numbers(I).ideal_total(1)
    if len(selected) != expected:
        raise InvariantViolationError(
            f"selected {len(selected)} minimal syzygies but beta_1(I) = {expected}"
        )
    entries = tuple(tuple(taylor.entry(i, c) for c in selected) for i in range(m))
    col_degrees = tuple(taylor.col_degrees[c] for c in selected)
    return SignedMonomialMatrix(entries, taylor.row_degrees, col_degrees)


def hb_matrix_general(I: MonomialIdeal) -> SignedMonomialMatrix:
    """Hilbert-Burch matrix of a height-two Cohen-Macaulay monomial ideal,
    via minimal first syzygies; validated by I_(m-1)(X) = I."""
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    if not is_cohen_macaulay_h2(I):
        raise DomainError("S/I is not Cohen-Macaulay")
    X = minimal_first_syzygies(I)
    if X.ncols != I.mu - 1:
        raise DomainError(
            f"ideal is not Cohen-Macaulay: {X.ncols} first syzygies for {I.mu} generators"
        )
    maximal = minors_ideal(X, I.mu - 1)
    if maximal != I:
        raise InvariantViolationError(
            f"maximal minors {maximal} do not recover the ideal {I}"
        )
    return X


def minor(X: SignedMonomialMatrix, rows, cols, _memo: dict | None = None) -> MinorValue:
    """Exact signed-monomial determinant of the (rows, cols) submatrix,
    by Laplace expansion with memoization on the index sets.

    The empty minor is the unit: coefficient 1, monomial 1."""
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    if len(rows) != len(cols):
        raise DomainError("minor needs equally many rows and columns")
    if rows and (rows[0] < 0 or rows[-1] >= X.nrows):
        raise DomainError("row index out of range")
    if cols and (cols[0] < 0 or cols[-1] >= X.ncols):
        raise DomainError("column index out of range")
    memo = {} if _memo is None else _memo
    coeff, mono = _minor_rec(X, rows, cols, memo)
    return MinorValue(coeff, mono if mono is not None else X.ring.one(), rows, cols)


def _minor_rec(X, rows, cols, memo) -> tuple[int, Monomial | None]:
    """Returns (coefficient, monomial); monomial is None for an identically
    zero expansion (no nonzero term)."""
    if not rows:
        return 1, X.ring.one()
    key = (rows, cols)
    if key in memo:
        return memo[key]
    r0 = rows[0]
    rest = rows[1:]
    total = 0
    common: Monomial | None = None
    for k, c in enumerate(cols):
        e = X.entry(r0, c)
        if e.is_zero():
            continue
        sub_coeff, sub_mono = _minor_rec(X, rest, cols[:k] + cols[k + 1 :], memo)
        if sub_mono is None:
            continue
        term_mono = e.monomial * sub_mono
        if common is None:
            common = term_mono
        elif common != term_mono:
            raise InvariantViolationError(
                f"minor expansion terms disagree in degree: {common} vs {term_mono}"
            )
        total += (-1) ** k * e.coefficient * sub_coeff
    result = (total, common)
    memo[key] = result
    return result


def minors_ideal(X: SignedMonomialMatrix, j: int, _memo: dict | None = None) -> MonomialIdeal:
    """Monomial ideal generated by the monomials of all nonzero j-minors;
    j = 0 gives the unit ideal."""
    if j < 0 or j > min(X.nrows, X.ncols):
        raise DomainError(f"minor size {j} out of range for {X.nrows}x{X.ncols}")
    ring = X.ring
    if j == 0:
        return minimalize([ring.one()], ring)
    memo = {} if _memo is None else _memo
    gens = []
    for rows in itertools.combinations(range(X.nrows), j):
        for cols in itertools.combinations(range(X.ncols), j):
            mv = minor(X, rows, cols, _memo=memo)
            if not mv.is_zero():
                gens.append(mv.monomial)
    return minimalize(gens, ring)
