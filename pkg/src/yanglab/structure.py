"""Case descriptors, invariant metric, fundamental R-matrix, YBE checker.

Index conventions used everywhere in this package: the fundamental space
of so(2m) / sp(2m) carries indices (-m, ..., -1, +1, ..., +m) and so(2m+1)
additionally the index 0.  Basis order is (-m, ..., -1, 0, 1, ..., m) and
every tensor flattening is row-major in that order.

The metric is eps_{ab} = eps_a delta_{a,-b} with eps_i = 1 for i > 0,
eps_{-i} = eps (the orthogonal/symplectic sign) and eps_0 = 1.  Raising
uses the inverse metric eps^{ab} = eps_{-a} delta_{a,-b}, which satisfies
eps_{ac} eps^{cb} = delta_a^b.  Note K^2 = eps * n * K under these
conventions (the sign matters in the symplectic case).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .exact import ONE, ZERO, BiPoly, Scalar, SparseOp, UniPoly

FAMILIES = ("so_even", "so_odd", "sp")


@dataclass(frozen=True)
class CaseDescriptor:
    """Algebra family, rank, dimension, sign and the constant beta."""

    family: str
    m: int
    n: int
    eps: int
    beta: Scalar
    indices: tuple = field(default_factory=tuple)

    @property
    def has_zero(self) -> bool:
        return self.family == "so_odd"

    def pos(self, a: int) -> int:
        return self.indices.index(a)

    def sign(self, a: int) -> int:
        """Metric sign eps_a (eps_i = 1, eps_{-i} = eps, eps_0 = 1)."""
        return 1 if a >= 0 else self.eps

    def metric_lower(self, a: int, b: int) -> Scalar:
        if a != -b:
            return ZERO
        return Scalar.of(self.sign(a))

    def metric_upper(self, a: int, b: int) -> Scalar:
        if a != -b:
            return ZERO
        return Scalar.of(self.sign(-a))

    def label(self) -> str:
        stem = {"so_even": "so", "so_odd": "so", "sp": "sp"}[self.family]
        return f"{stem}({self.n})"


def make_case(family: str, m: int) -> CaseDescriptor:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if m < 1:
        raise ValueError("rank m must be >= 1")
    if family == "sp":
        n, eps = 2 * m, -1
    elif family == "so_even":
        n, eps = 2 * m, 1
    else:
        n, eps = 2 * m + 1, 1
    beta = Scalar(n, 0, 2) - eps
    idx = list(range(-m, 0)) + ([0] if family == "so_odd" else []) + list(range(1, m + 1))
    return CaseDescriptor(family, m, n, eps, beta, tuple(idx))


# ---------------------------------------------------------------------------
# I, P, K on the tensor square of the fundamental space


def _flat2(case: CaseDescriptor, a1: int, a2: int) -> int:
    return case.pos(a1) * case.n + case.pos(a2)


def tensor_i(case: CaseDescriptor) -> SparseOp:
    return SparseOp.identity(case.n * case.n)


def tensor_p(case: CaseDescriptor) -> SparseOp:
    """Permutation P: (b1, b2) -> (b2, b1)."""
    data = {}
    for a1 in case.indices:
        for a2 in case.indices:
            data[(_flat2(case, a1, a2), _flat2(case, a2, a1))] = ONE
    return SparseOp(case.n ** 2, case.n ** 2, data)


def tensor_k(case: CaseDescriptor) -> SparseOp:
    """K = eps^{a1 a2} eps_{b1 b2}, the metric rank-one projector times n."""
    data = {}
    for a in case.indices:
        for b in case.indices:
            val = case.metric_upper(a, -a) * case.metric_lower(b, -b)
            data[(_flat2(case, a, -a), _flat2(case, b, -b))] = val
    return SparseOp(case.n ** 2, case.n ** 2, data)


class RMatrix:
    """Fundamental R-matrix R(u) = u(u+beta) I + (u+beta) P - eps u K.

    Stored as coefficient SparseOps by power of u; `entry` exposes the
    UniPoly at a single multi-index.
    """

    __slots__ = ("case", "coeffs")

    def __init__(self, case: CaseDescriptor, coeffs):
        self.case = case
        self.coeffs = tuple(coeffs)

    def entry(self, a_pair, b_pair) -> UniPoly:
        row = _flat2(self.case, *a_pair)
        col = _flat2(self.case, *b_pair)
        return UniPoly([c.data.get((row, col), ZERO) for c in self.coeffs])

    def eval(self, u) -> SparseOp:
        u = Scalar.of(u)
        acc = SparseOp.zeros(self.case.n ** 2, self.case.n ** 2)
        upow = ONE
        for c in self.coeffs:
            acc = acc + c.scale(upow)
            upow = upow * u
        return acc


def fundamental_r(case: CaseDescriptor, flip_k: bool = False) -> RMatrix:
    """The fundamental R-matrix; flip_k flips the K-term sign (a knowingly
    broken variant used as the YBE negative control)."""
    i_op, p_op, k_op = tensor_i(case), tensor_p(case), tensor_k(case)
    k_sign = Scalar.of(case.eps if flip_k else -case.eps)
    lin = i_op.scale(case.beta) + p_op + k_op.scale(k_sign)
    return RMatrix(case, [p_op.scale(case.beta), lin, i_op])


# ---------------------------------------------------------------------------
# Yang-Baxter check


def _embed(case: CaseDescriptor, op: SparseOp, slots) -> SparseOp:
    """Embed an operator on V x V into slots of V x V x V."""
    n = case.n
    data = {}
    for (row, col), val in op.data.items():
        i, j = divmod(row, n)
        k, l = divmod(col, n)
        for c in range(n):
            if slots == (1, 2):
                r = (i * n + j) * n + c
                s = (k * n + l) * n + c
            elif slots == (2, 3):
                r = (c * n + i) * n + j
                s = (c * n + k) * n + l
            else:  # (1, 3)
                r = (i * n + c) * n + j
                s = (k * n + c) * n + l
            data[(r, s)] = val
    return SparseOp(n ** 3, n ** 3, data)


def _difference_expansion(coeffs):
    """Coefficients of R(u - v) as {(pow_u, pow_v): (sign*binom, t)} terms."""
    out = []
    for t in range(len(coeffs)):
        for p in range(t + 1):
            q = t - p
            out.append((p, q, Scalar.of((-1) ** q * comb(t, p)), t))
    return out


@dataclass
class YbeReport:
    """Outcome of the symbolic Yang-Baxter check."""

    case: CaseDescriptor
    passed: bool
    violation: tuple | None = None  # ((a1,a2,a3),(b1,b2,b3), BiPoly residual)

    def __bool__(self):
        return self.passed


def check_ybe(case: CaseDescriptor, rmat: RMatrix | None = None) -> YbeReport:
    """Verify R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) exactly.

    Both sides are expanded coefficient-by-coefficient in (u, v); the test
    is full polynomial identity, not sampling.  On failure the report
    carries the first violating entry (sorted index order) together with
    its residual polynomial.
    """
    if rmat is None:
        rmat = fundamental_r(case)
    r12 = [_embed(case, c, (1, 2)) for c in rmat.coeffs]
    r13 = [_embed(case, c, (1, 3)) for c in rmat.coeffs]
    r23 = [_embed(case, c, (2, 3)) for c in rmat.coeffs]

    lhs: dict[tuple, SparseOp] = {}
    rhs: dict[tuple, SparseOp] = {}
    dim = case.n ** 3

    for p, q, coeff, t in _difference_expansion(rmat.coeffs):
        r12_term = r12[t].scale(coeff)
        for pu, a_op in enumerate(r13):
            if a_op.is_zero:
                continue
            for qv, b_op in enumerate(r23):
                if b_op.is_zero:
                    continue
                key = (p + pu, q + qv)
                left = r12_term @ a_op @ b_op
                right = b_op @ a_op @ r12_term
                lhs[key] = lhs.get(key, SparseOp.zeros(dim, dim)) + left
                rhs[key] = rhs.get(key, SparseOp.zeros(dim, dim)) + right

    residuals: dict[tuple, SparseOp] = {}
    for key in sorted(set(lhs) | set(rhs)):
        diff = lhs.get(key, SparseOp.zeros(dim, dim)) - rhs.get(key, SparseOp.zeros(dim, dim))
        if not diff.is_zero:
            residuals[key] = diff
    if not residuals:
        return YbeReport(case, True)

    first = min(min(diff.data) for diff in residuals.values())
    res_terms = {key: diff.data[first] for key, diff in residuals.items() if first in diff.data}
    n = case.n
    row, col = first

    def unflat(x):
        ab, c3 = divmod(x, n)
        c1, c2 = divmod(ab, n)
        return (case.indices[c1], case.indices[c2], case.indices[c3])

    return YbeReport(case, False, (unflat(row), unflat(col), BiPoly(res_terms)))


# ---------------------------------------------------------------------------
# gl(2) comparison


def yang_r_gl2() -> list[SparseOp]:
    """Coefficients of Yang's gl(2) R-matrix R(u) = u I + P on C^2 x C^2."""
    perm = {}
    for a in range(2):
        for b in range(2):
            perm[(a * 2 + b, b * 2 + a)] = ONE
    return [SparseOp(4, 4, perm), SparseOp.identity(4)]


def sp2_gl2_comparison():
    """Entrywise relation between the sp(2) R-matrix and Yang's gl(2) one.

    Returns (scalar, passed): the exact polynomial scalar s(u) such that
    R_sp2(u) = s(u) * R_gl2(u/2), with passed true iff the relation holds
    in every entry.  The scalar is recovered by exact division of the
    corner entries.
    """
    case = make_case("sp", 1)
    r_sp = fundamental_r(case)
    p_gl, i_gl = yang_r_gl2()

    def gl_entry(row, col):
        # R_gl2(u/2) entry as a UniPoly in u
        c0 = p_gl.data.get((row, col), ZERO)
        c1 = i_gl.data.get((row, col), ZERO) * Scalar(1, 0, 2)
        return UniPoly([c0, c1])

    def sp_entry(row, col):
        return UniPoly([c.data.get((row, col), ZERO) for c in r_sp.coeffs])

    corner_sp, corner_gl = sp_entry(0, 0), gl_entry(0, 0)
    scalar, rem = corner_sp.divmod(corner_gl)
    if not rem.is_zero:
        return scalar, False
    for row in range(4):
        for col in range(4):
            if sp_entry(row, col) != scalar * gl_entry(row, col):
                return scalar, False
    return scalar, True
