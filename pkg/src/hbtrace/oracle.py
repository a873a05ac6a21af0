"""Independent brute-force verification in the fine (Z^n) grading.

The kernel of the reduced presentation map psi is computed degree by degree
by exact integer linear algebra, with no reference to the minors formulas it
is checked against. Each graded piece of a monomial quotient has dimension
at most one, so the degree-d component of psi is a small integer matrix.

Every verdict is relative to a degree box ("up to bound"); completeness
beyond the bound is never claimed and the bound is embedded in each report.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .betti import is_cohen_macaulay_h2
from .errors import DomainError, ResourceCapError, InvariantViolationError
from .matrices import (
    SignedMonomialEntry,
    SignedMonomialMatrix,
    hb_matrix_general,
    hb_matrix_xy,
    minor,
    minors_ideal,
    normalized_xy_sequences,
)
from .monomials import Monomial, MonomialIdeal, height, minimalize

LATTICE_CAP = 10**6

FineDegree = tuple[int, ...]


def quotient_dim(I: MonomialIdeal, d: FineDegree) -> int:
    """Dimension of the degree-d piece of S/I: 1 iff x^d is not in I."""
    return 0 if I.contains_monomial(Monomial(I.ring, tuple(d))) else 1


@dataclass(frozen=True)
class QuotientBasis:
    """Standard-monomial basis of one fine-graded piece of S/I.

    In the fine grading every piece has dimension 0 or 1, so the basis is
    empty or the single monomial x^d.
    """

    degree: FineDegree
    standard_monomials: tuple[Monomial, ...]


def quotient_basis(I: MonomialIdeal, d: FineDegree) -> QuotientBasis:
    w = Monomial(I.ring, tuple(d))
    mons = () if I.contains_monomial(w) else (w,)
    return QuotientBasis(tuple(d), mons)


def default_bound(I: MonomialIdeal) -> FineDegree:
    """Componentwise lcm of the generators, doubled."""
    exps = [0] * I.ring.n
    for g in I.generators:
        for i, e in enumerate(g.exponents):
            exps[i] = max(exps[i], e)
    return tuple(2 * e for e in exps)


def psi_component(
    X: SignedMonomialMatrix, I: MonomialIdeal, d: FineDegree
) -> tuple[list[list[int]], list[int], list[int]]:
    """The degree-d component of psi as an integer matrix.

    Returns (rows, alive_row_indices, alive_col_indices): the matrix maps the
    surviving standard-monomial coordinates of the source free module to
    those of the target.
    """
    dm = Monomial(I.ring, tuple(d))
    alive_cols = [
        j
        for j, cd in enumerate(X.col_degrees)
        if cd.divides(dm) and not I.contains_monomial(dm / cd)
    ]
    alive_rows = [
        i
        for i, rd in enumerate(X.row_degrees)
        if rd.divides(dm) and not I.contains_monomial(dm / rd)
    ]
    rows = [[X.entry(i, j).coefficient for j in alive_cols] for i in alive_rows]
    return rows, alive_rows, alive_cols


@dataclass(frozen=True)
class KernelGenerator:
    """One minimal generator of ker(psi): its fine degree and its coordinates
    over the source free module (one signed monomial per column)."""

    degree: FineDegree
    coords: tuple[SignedMonomialEntry, ...]

    def coefficient_vector(self) -> list[int]:
        return [e.coefficient for e in self.coords]


@dataclass(frozen=True)
class KernelGenerators:
    matrix: SignedMonomialMatrix
    ideal: MonomialIdeal
    bound: FineDegree
    generators: tuple[KernelGenerator, ...] = field(default=())


def check_kernel_member(X: SignedMonomialMatrix, I: MonomialIdeal, coords) -> bool:
    """Symbolic re-check, outside the linear-algebra path: psi applied to the
    vector is zero in S/I (each row sums to coefficient zero or lands in I)."""
    for i in range(X.nrows):
        total = 0
        common = None
        for j in range(X.ncols):
            e = X.entry(i, j)
            c = coords[j]
            if e.is_zero() or c.coefficient == 0:
                continue
            mono = e.monomial * c.monomial
            if common is None:
                common = mono
            elif common != mono:
                return False
            total += e.coefficient * c.coefficient
        if total != 0 and not I.contains_monomial(common):
            return False
    return True


def _box_points(bound: FineDegree, cap: int):
    size = 1
    for b in bound:
        size *= b + 1
        if size > cap:
            raise ResourceCapError(
                f"degree box has more than {cap} lattice points; "
                "lower the bound or raise the cap"
            )
    pts = sorted(itertools.product(*[range(b + 1) for b in bound]), key=lambda e: (sum(e), e))
    return pts


def kernel_generators(
    X: SignedMonomialMatrix,
    I: MonomialIdeal,
    bound: FineDegree | None = None,
    cap: int = LATTICE_CAP,
) -> KernelGenerators:
    """Minimal generators of ker(psi) up to the degree bound.

    Degrees are swept in graded-lex order; in each degree the kernel of the
    component matrix is computed exactly and reduced modulo the shifts of the
    generators already found, so no generator is an R-combination of lower
    ones within the bound.
    """
    if bound is None:
        bound = default_bound(I)
    bound = tuple(int(b) for b in bound)
    ring = I.ring
    n = ring.n
    gen_exps = [g.exponents for g in I.generators]

    def member(e):  # monomial-ideal membership on raw exponent tuples
        for ge in gen_exps:
            for k in range(n):
                if ge[k] > e[k]:
                    break
            else:
                return True
        return False

    col_exps = [c.exponents for c in X.col_degrees]
    row_exps = [r.exponents for r in X.row_degrees]
    coeffs = [[X.entry(i, j).coefficient for j in range(X.ncols)] for i in range(X.nrows)]
    found: list[KernelGenerator] = []
    for d in _box_points(bound, cap):
        alive_cols = []
        for j, ce in enumerate(col_exps):
            diff = tuple(a - b for a, b in zip(d, ce))
            if min(diff) >= 0 and not member(diff):
                alive_cols.append(j)
        if not alive_cols:
            continue
        rows = []
        for i, re_ in enumerate(row_exps):
            diff = tuple(a - b for a, b in zip(d, re_))
            if min(diff) >= 0 and not member(diff):
                row = [coeffs[i][j] for j in alive_cols]
                if any(row):
                    rows.append(row)
        kernel = linalg.kernel_basis(rows, ncols=len(alive_cols))
        if not kernel:
            continue
        current: list[list[int]] = []
        for g in found:
            if all(a <= b for a, b in zip(g.degree, d)):
                v = [g.coords[j].coefficient for j in alive_cols]
                if any(v):
                    current.append(v)
        dm = Monomial(ring, d)
        for vec in kernel:
            if linalg.in_rational_span(current, vec):
                continue
            pos = {j: k for k, j in enumerate(alive_cols)}
            coords = []
            for j in range(X.ncols):
                if j in pos and vec[pos[j]] != 0:
                    coords.append(SignedMonomialEntry(vec[pos[j]], dm / X.col_degrees[j]))
                else:
                    coords.append(SignedMonomialEntry(0, ring.one()))
            gen = KernelGenerator(d, tuple(coords))
            if not check_kernel_member(X, I, gen.coords):
                raise InvariantViolationError(
                    f"linear algebra produced a non-kernel vector at degree {d}"
                )
            found.append(gen)
            current.append(vec)
    return KernelGenerators(X, I, bound, tuple(found))


def entries_ideal(K: KernelGenerators) -> MonomialIdeal:
    """I_1(alpha) realized in S: the coordinate monomials of all kernel
    generators, together with the ideal itself."""
    gens = list(K.ideal.generators)
    for g in K.generators:
        for e in g.coords:
            if e.coefficient != 0:
                gens.append(e.monomial)
    return minimalize(gens, K.ideal.ring)


def _gens_within(J: MonomialIdeal, bound: FineDegree) -> set[Monomial]:
    return {g for g in J.generators if all(a <= b for a, b in zip(g.exponents, bound))}


def _first_membership_discrepancy(
    lhs: MonomialIdeal, rhs: MonomialIdeal, bound: FineDegree
) -> tuple[FineDegree, str] | None:
    for d in sorted(
        itertools.product(*[range(b + 1) for b in bound]), key=lambda e: (sum(e), e)
    ):
        w = Monomial(lhs.ring, d)
        a = lhs.contains_monomial(w)
        b = rhs.contains_monomial(w)
        if a != b:
            return d, ("kernel-side only" if a else "minors-side only")
    return None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one oracle comparison, always relative to its bound."""

    statement: str
    bound: FineDegree
    verdict: str
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def refuted(self) -> bool:
        return self.verdict == "REFUTED"

    def to_json(self) -> dict:
        out = {
            "statement": self.statement,
            "bound": list(self.bound),
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


def _compare_up_to_bound(
    statement: str,
    lhs: MonomialIdeal,
    rhs: MonomialIdeal,
    bound: FineDegree,
    equal_verdict: str,
    unequal_verdict: str,
    details: dict,
) -> VerificationReport:
    if _gens_within(lhs, bound) == _gens_within(rhs, bound):
        return VerificationReport(statement, bound, equal_verdict, None, details)
    disc = _first_membership_discrepancy(lhs, rhs, bound)
    witness = None
    if disc is not None:
        d, side = disc
        witness = {
            "degree": list(d),
            "monomial": str(Monomial(lhs.ring, d)),
            "side": side,
        }
    return VerificationReport(statement, bound, unequal_verdict, witness, details)


def verify_kernel_theorem_xy(
    I: MonomialIdeal, bound: FineDegree | None = None, cap: int = LATTICE_CAP
) -> VerificationReport:
    """Check I_1(alpha) = x^(a_m) y^(b_1) I_(m-2)(X) + I for a two-variable
    monomial ideal (Cohen-Macaulay or not), up to the bound."""
    if I.ring.n != 2:
        raise DomainError("kernel theorem check needs a two-variable ring")
    if I.mu < 2:
        raise DomainError("need at least two generators")
    a, b = normalized_xy_sequences(I)
    X = hb_matrix_xy(I)
    K = kernel_generators(X, I, bound, cap)
    lhs = entries_ideal(K)
    scale = I.ring.monomial((a[-1], b[0]))
    sub = minors_ideal(X, I.mu - 2)
    rhs = minimalize(
        [scale * g for g in sub.generators] + list(I.generators), I.ring
    )
    return _compare_up_to_bound(
        "I_1(alpha) = x^a_m y^b_1 I_(m-2)(X) + I",
        lhs,
        rhs,
        K.bound,
        "equal",
        "discrepancy",
        {
            "ideal": str(I),
            "scale": str(scale),
            "kernel_generators": len(K.generators),
        },
    )


def verify_inclusion(
    I: MonomialIdeal, bound: FineDegree | None = None, cap: int = LATTICE_CAP
) -> VerificationReport:
    """Check the always-true inclusion a*I_(m-2)(X) in I_1(alpha), plus the
    constructive witnesses: psi(c_A) = 0 in S/I for every (m-2)-subset A.

    The scale a is 1 in the Cohen-Macaulay case; for a two-variable non-CM
    ideal it is the content x^(a_m) y^(b_1) split off by the normal form.
    """
    if I.ring.n == 2:
        a, b = normalized_xy_sequences(I)
        if I.mu < 2:
            raise DomainError("need at least two generators")
        X = hb_matrix_xy(I)
        scale = I.ring.monomial((a[-1], b[0]))
    else:
        if height(I) != 2:
            raise DomainError(f"expected height 2, got {height(I)}")
        if not is_cohen_macaulay_h2(I):
            raise DomainError("S/I is not Cohen-Macaulay")
        X = hb_matrix_general(I)
        scale = I.ring.one()
    m = I.mu
    K = kernel_generators(X, I, bound, cap)
    kernel_ideal = entries_ideal(K)
    sub = minors_ideal(X, m - 2)
    missing = []
    for g in sub.generators:
        sg = scale * g
        if all(e <= bb for e, bb in zip(sg.exponents, K.bound)):
            if not kernel_ideal.contains_monomial(sg):
                missing.append(str(sg))
    bad_columns = []
    memo: dict = {}
    cols = tuple(range(m - 1))
    for A in itertools.combinations(range(m), m - 2):
        coords = []
        for j in range(m - 1):
            mv = minor(X, A, cols[:j] + cols[j + 1 :], _memo=memo)
            sign = (-1) ** j  # (-1)^(j+1) with 1-based j
            coords.append(
                SignedMonomialEntry(sign * mv.coefficient, mv.monomial * scale)
            )
        if all(e.coefficient == 0 for e in coords):
            continue  # all minors vanish; c_A is the zero vector
        if not check_kernel_member(X, I, coords):
            bad_columns.append(list(A))
    verdict = "holds" if not missing and not bad_columns else "VIOLATED"
    witness = None
    if missing or bad_columns:
        witness = {"missing_minors": missing, "bad_subsets": bad_columns}
    return VerificationReport(
        "a I_(m-2)(X) contained in I_1(alpha), with kernel witnesses c_A",
        K.bound,
        verdict,
        witness,
        {"ideal": str(I), "scale": str(scale), "subsets_checked": m * (m - 1) // 2 if m >= 2 else 0},
    )


def verify_conjecture(
    I: MonomialIdeal, bound: FineDegree | None = None, cap: int = LATTICE_CAP
) -> VerificationReport:
    """Compare the brute-force trace I_1(alpha) against the conjectured
    minors formula I_(m-2)(X) + I, up to the bound.

    Verdicts: "confirmed-to-bound" or "REFUTED" with the first witness
    degree. A refutation is the most interesting possible outcome and is
    reported as data, not as an error.
    """
    if height(I) != 2:
        raise DomainError(f"expected height 2, got {height(I)}")
    if not is_cohen_macaulay_h2(I):
        raise DomainError("S/I is not Cohen-Macaulay")
    X = hb_matrix_xy(I) if I.ring.n == 2 else hb_matrix_general(I)
    K = kernel_generators(X, I, bound, cap)
    lhs = entries_ideal(K)
    sub = minors_ideal(X, I.mu - 2)
    rhs = minimalize(list(sub.generators) + list(I.generators), I.ring)
    return _compare_up_to_bound(
        "tr(omega_R) = I_(mu-2)(X) + I",
        lhs,
        rhs,
        K.bound,
        "confirmed-to-bound",
        "REFUTED",
        {"ideal": str(I), "kernel_generators": len(K.generators)},
    )
