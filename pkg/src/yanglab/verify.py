"""Exact symbolic verification of the L-operator algebra identities.

Every check expands its identity coefficient-by-coefficient in the
spectral parameters and compares operators entry by entry; there is no
sampling and no tolerance.  On truncated spaces a check compares only on
the safe subspace for its composition budget (see spaces module).  A
`sample` mode exists for the two expensive checks as a fast smoke test;
it evaluates at seeded rational points and is documented as
non-authoritative.

Reports are deterministic: index tuples are scanned in sorted order and
the first violation is recorded together with its residual polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exact import ONE, ZERO, BiPoly, Scalar, SparseOp, UniPoly, VectorSpan
from .lops import (
    LOperator,
    cyclic_span,
    metric_opmat,
    opmat_add,
    opmat_entry,
    opmat_mul,
    opmat_mul_tt,
    opmat_poly_shift,
    opmat_scale,
    opmat_sub,
    opmat_transpose,
)
from .structure import CaseDescriptor, _difference_expansion, fundamental_r


@dataclass
class CheckReport:
    """Verdict of one identity check."""

    name: str
    passed: bool
    scalars: dict = field(default_factory=dict)
    counterexample: tuple | None = None  # (description, residual)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        def ser(value):
            if isinstance(value, Scalar):
                return value.to_string()
            if isinstance(value, UniPoly):
                return value.to_strings()
            if isinstance(value, BiPoly):
                return value.to_strings()
            return value

        out = {
            "check": self.name,
            "passed": self.passed,
            "scalars": {k: ser(v) for k, v in self.scalars.items()},
            "details": {k: ser(v) for k, v in self.details.items()},
        }
        if self.counterexample is not None:
            desc, residual = self.counterexample
            out["counterexample"] = {"at": repr(desc), "residual": ser(residual)}
        return out


def _zero(dim):
    return SparseOp.zeros(dim, dim)


def _opmat_zero_on_cols(mat: dict, cols) -> bool:
    return all(op.is_zero_on_cols(cols) for op in mat.values())


def _first_opmat_violation(mat: dict, cols):
    best = None
    for key in sorted(mat):
        entry = mat[key].first_entry_on_cols(cols)
        if entry is not None:
            val = mat[key].data[entry]
            cand = (key, entry, val)
            if best is None or (cand[0], cand[1]) < (best[0], best[1]):
                best = cand
    return best


def opmat_is_scalar(case: CaseDescriptor, mat: dict, dim: int, cols):
    """Decide mat == c * eps_ab * Id on the given columns; return (ok, c, bad)."""
    candidate = ZERO
    for a in sorted(case.indices):
        op = mat.get((a, -a))
        if op is None:
            continue
        for j in cols:
            val = op.data.get((j, j))
            if val is not None:
                candidate = val * case.metric_lower(a, -a).inv()
                break
        else:
            continue
        break
    diff = opmat_sub(mat, metric_opmat(case, dim, candidate))
    bad = _first_opmat_violation(diff, cols)
    return bad is None, candidate, bad


def opmat_is_scalar_on_span(case: CaseDescriptor, mat: dict, vectors):
    """Decide mat == c * eps_ab * Id on an invariant span of vectors."""
    candidate = None
    for a in sorted(case.indices):
        op = mat.get((a, -a))
        if op is None:
            continue
        sign_inv = case.metric_lower(a, -a).inv()
        for vec in vectors:
            out = op.apply(vec)
            if out:
                anchor = next(iter(vec))
                av = vec.get(anchor, ZERO)
                if av.is_zero:
                    continue
                candidate = out.get(anchor, ZERO) * av.inv() * sign_inv
                break
        if candidate is not None:
            break
    if candidate is None:
        candidate = ZERO
    for key in sorted(mat):
        a, b = key
        op = mat[key]
        want = candidate * case.metric_lower(a, b)
        for k, vec in enumerate(vectors):
            out = op.apply(vec)
            expect = {} if want.is_zero else {
                j: v * want for j, v in vec.items() if not (v * want).is_zero}
            if out != expect:
                diff_keys = set(out) | set(expect)
                j0 = min(diff_keys)
                residual = out.get(j0, ZERO) - expect.get(j0, ZERO)
                return False, candidate, (key, ("span_vector", k, j0), residual)
    return True, candidate, None


# ---------------------------------------------------------------------------
# Lie-algebra and adjoint relations


def _relation_rhs(case, mat, a, b, c, d, dim):
    """-eps_cb M_ad + eps_ad M_cb + eps_ac M_bd - eps_db M_ca."""
    out = _zero(dim)
    for sign, (r, s) in (
        (-case.metric_lower(c, b), (a, d)),
        (case.metric_lower(a, d), (c, b)),
        (case.metric_lower(a, c), (b, d)),
        (-case.metric_lower(d, b), (c, a)),
    ):
        if not sign.is_zero:
            op = mat.get((r, s))
            if op is not None:
                out = out + op.scale(sign)
    return out


def _pairwise_check(case, g, target, dim, cols, name):
    """[G_ab, X_cd] = adjoint combination of X, for all index tuples."""
    idx = sorted(case.indices)
    cache: dict = {}

    def prod(key1, key2):
        got = cache.get((key1, key2))
        if got is None:
            op1, op2 = g.get(key1), target.get(key2)
            got = _zero(dim) if (op1 is None or op2 is None) else op1 @ op2
            cache[(key1, key2)] = got
        return got

    cache_t: dict = {}

    def prod_t(key1, key2):
        got = cache_t.get((key1, key2))
        if got is None:
            op1, op2 = target.get(key1), g.get(key2)
            got = _zero(dim) if (op1 is None or op2 is None) else op1 @ op2
            cache_t[(key1, key2)] = got
        return got

    for a in idx:
        for b in idx:
            for c in idx:
                for d in idx:
                    lhs = prod((a, b), (c, d)) - prod_t((c, d), (a, b))
                    rhs = _relation_rhs(case, target, a, b, c, d, dim)
                    diff = lhs - rhs
                    entry = diff.first_entry_on_cols(cols)
                    if entry is not None:
                        residual = BiPoly({(0, 0): diff.data[entry]})
                        return CheckReport(name, False,
                                           counterexample=((a, b, c, d), residual))
    return CheckReport(name, True)


def check_lie(lop: LOperator, g: dict | None = None) -> CheckReport:
    """[G_ab, G_cd] equals the structure-constant combination, exactly."""
    g = lop.g_mat if g is None else g
    cols = lop.space.safe_indices(2 * lop.entry_budget)
    report = _pairwise_check(lop.case, g, g, lop.dim, cols, "lie")
    report.details["safe_columns"] = len(cols)
    return report


def check_adjoint(lop: LOperator, g: dict | None = None, h: dict | None = None) -> CheckReport:
    """[G_ab, H_cd] equals the adjoint-action combination of H."""
    g = lop.g_mat if g is None else g
    h = lop.h_mat if h is None else h
    cols = lop.space.safe_indices(3 * lop.entry_budget)
    report = _pairwise_check(lop.case, g, h, lop.dim, cols, "adjoint")
    report.details["safe_columns"] = len(cols)
    return report


# ---------------------------------------------------------------------------
# the RLL relation


def _mixed_coeffs(lop: LOperator):
    """Raise the first index: (C_k)^a_b = eps_{-a} C_k[-a, b]."""
    out = []
    for mat in lop.coeffs:
        mixed = {}
        for (a, b), op in mat.items():
            sign = lop.case.sign(a)  # eps_{-(-a)} = eps_a ... see below
            mixed[(-a, b)] = op.scale(Scalar.of(lop.case.sign(-(-a))))
        out.append(mixed)
    return out


def _big_slot(case, mixed: dict, dim_w: int, slot: int) -> SparseOp:
    n = case.n
    big = {}
    for (a, b), op in mixed.items():
        pa, pb = case.pos(a), case.pos(b)
        for (i, j), val in op.data.items():
            if slot == 1:
                for c in range(n):
                    big[((pa * n + c) * dim_w + i, (pb * n + c) * dim_w + j)] = val
            else:
                for c in range(n):
                    big[((c * n + pa) * dim_w + i, (c * n + pb) * dim_w + j)] = val
    return SparseOp(n * n * dim_w, n * n * dim_w, big)


def _p_left(case, mat: SparseOp, dim_w: int) -> SparseOp:
    n = case.n
    data = {}
    for (r, c), v in mat.data.items():
        pair, w = divmod(r, dim_w)
        p1, p2 = divmod(pair, n)
        data[((p2 * n + p1) * dim_w + w, c)] = v
    out = SparseOp(mat.nrows, mat.ncols)
    out.data = data
    return out


def _p_right(case, mat: SparseOp, dim_w: int) -> SparseOp:
    n = case.n
    data = {}
    for (r, c), v in mat.data.items():
        pair, w = divmod(c, dim_w)
        p1, p2 = divmod(pair, n)
        data[(r, (p2 * n + p1) * dim_w + w)] = v
    out = SparseOp(mat.nrows, mat.ncols)
    out.data = data
    return out


def _k_left(case, mat: SparseOp, dim_w: int) -> SparseOp:
    n = case.n
    signs = [Scalar.of(case.sign(a)) for a in case.indices]
    inv = {case.pos(a): case.pos(-a) for a in case.indices}
    acc: dict = {}
    for (r, c), v in mat.data.items():
        pair, w = divmod(r, dim_w)
        p1, p2 = divmod(pair, n)
        if inv[p1] != p2:
            continue
        key = (w, c)
        add = signs[p1] * v
        cur = acc.get(key)
        tot = add if cur is None else cur + add
        if tot.is_zero:
            acc.pop(key, None)
        else:
            acc[key] = tot
    data = {}
    for (w, c), s in acc.items():
        for a in case.indices:
            pa = case.pos(a)
            val = Scalar.of(case.sign(-a)) * s
            data[((pa * n + inv[pa]) * dim_w + w, c)] = val
    out = SparseOp(mat.nrows, mat.ncols)
    out.data = data
    return out


def _k_right(case, mat: SparseOp, dim_w: int) -> SparseOp:
    n = case.n
    inv = {case.pos(a): case.pos(-a) for a in case.indices}
    acc: dict = {}
    for (r, c), v in mat.data.items():
        pair, w = divmod(c, dim_w)
        p1, p2 = divmod(pair, n)
        if inv[p1] != p2:
            continue
        key = (r, w)
        add = Scalar.of(case.sign(-case.indices[p1])) * v
        cur = acc.get(key)
        tot = add if cur is None else cur + add
        if tot.is_zero:
            acc.pop(key, None)
        else:
            acc[key] = tot
    data = {}
    for (r, w), s in acc.items():
        for b in case.indices:
            pb = case.pos(b)
            data[(r, (pb * n + inv[pb]) * dim_w + w)] = Scalar.of(case.sign(b)) * s
    out = SparseOp(mat.nrows, mat.ncols)
    out.data = data
    return out


def _r_term_left(case, t, mat, dim_w):
    """R_t * mat for R(w) = w^2 I + w (beta I + P - eps K) + beta P."""
    if t == 2:
        return mat
    if t == 1:
        out = mat.scale(case.beta) + _p_left(case, mat, dim_w)
        k_part = _k_left(case, mat, dim_w)
        return out - k_part.scale(Scalar.of(case.eps))
    return _p_left(case, mat, dim_w).scale(case.beta)


def _r_term_right(case, t, mat, dim_w):
    if t == 2:
        return mat
    if t == 1:
        out = mat.scale(case.beta) + _p_right(case, mat, dim_w)
        k_part = _k_right(case, mat, dim_w)
        return out - k_part.scale(Scalar.of(case.eps))
    return _p_right(case, mat, dim_w).scale(case.beta)


def _describe_big(case, space, flat, dim_w):
    pair, w = divmod(flat, dim_w)
    p1, p2 = divmod(pair, case.n)
    return (case.indices[p1], case.indices[p2], space.labels[w])


def check_rll(lop: LOperator, mode: str = "exact", points: int = 3,
              seed: int = 0) -> CheckReport:
    """R12(u-v) L1(u) L2(v) = L2(v) L1(u) R12(u-v), coefficient-exact.

    The u^0 v^0 coefficient covers the H-H commutation relation of the
    quadratic evaluation automatically.  In `sample` mode both sides are
    instead evaluated at seeded rational points (smoke test only).
    """
    case, space = lop.case, lop.space
    dim_w = space.dim
    mixed = _mixed_coeffs(lop)
    budget = 2 * lop.entry_budget
    safe_w = set(space.safe_indices(budget))
    col_keep = [pair * dim_w + w
                for pair in range(case.n ** 2) for w in sorted(safe_w)]

    if mode == "sample":
        return _check_rll_sampled(lop, mixed, col_keep, points, seed)

    c1 = [_big_slot(case, m, dim_w, 1) for m in mixed]
    c2 = [_big_slot(case, m, dim_w, 2) for m in mixed]
    keep = set(col_keep)
    c1r = [m.restrict_cols(keep) for m in c1]
    c2r = [m.restrict_cols(keep) for m in c2]

    lhs: dict = {}
    rhs: dict = {}
    expansion = _difference_expansion([None, None, None])  # degree-2 R
    for i in range(len(mixed)):
        for j in range(len(mixed)):
            p_ij = c1[i] @ c2r[j]
            q_ij = c2[j] @ c1r[i]
            for p, q, coeff, t in expansion:
                key = (p + i, q + j)
                left = _r_term_left(case, t, p_ij, dim_w).scale(coeff)
                right = _r_term_right(case, t, q_ij, dim_w).scale(coeff)
                lhs[key] = lhs.get(key, _zero(left.nrows)) + left
                rhs[key] = rhs.get(key, _zero(right.nrows)) + right

    residuals = {}
    for key in sorted(set(lhs) | set(rhs)):
        diff = lhs.get(key, _zero(c1[0].nrows)) - rhs.get(key, _zero(c1[0].nrows))
        if not diff.is_zero:
            residuals[key] = diff
    if not residuals:
        return CheckReport("rll", True, details={"safe_columns": len(safe_w)})
    first = min(min(d.data) for d in residuals.values())
    res = BiPoly({key: d.data[first] for key, d in residuals.items() if first in d.data})
    where = (_describe_big(case, space, first[0], dim_w),
             _describe_big(case, space, first[1], dim_w))
    return CheckReport("rll", False, counterexample=(where, res),
                       details={"safe_columns": len(safe_w)})


def _check_rll_sampled(lop, mixed, col_keep, points, seed):
    case, space = lop.case, lop.space
    dim_w = space.dim
    rng = random.Random(seed)
    rmat = fundamental_r(case)
    keep = set(col_keep)
    for _ in range(points):
        u0 = Scalar.rational(rng.randint(-9, 9), rng.randint(1, 4))
        v0 = Scalar.rational(rng.randint(-9, 9), rng.randint(1, 4))
        l1 = _zero(case.n ** 2 * dim_w)
        l2 = _zero(case.n ** 2 * dim_w)
        upow = ONE
        for m in mixed:
            l1 = l1 + _big_slot(case, m, dim_w, 1).scale(upow)
            upow = upow * u0
        vpow = ONE
        for m in mixed:
            l2 = l2 + _big_slot(case, m, dim_w, 2).scale(vpow)
            vpow = vpow * v0
        id_w = SparseOp.identity(dim_w)
        r_eval = rmat.eval(u0 - v0).kron(id_w)
        diff = r_eval @ (l1 @ l2.restrict_cols(keep)) - (l2 @ l1.restrict_cols(keep)) @ r_eval
        entry = diff.first_entry_on_cols(keep)
        if entry is not None:
            where = (_describe_big(case, space, entry[0], dim_w),
                     _describe_big(case, space, entry[1], dim_w))
            res = BiPoly({(0, 0): diff.data[entry]})
            return CheckReport("rll(sampled)", False, counterexample=(where, res),
                               details={"points": points, "authoritative": False})
    return CheckReport("rll(sampled)", True,
                       details={"points": points, "authoritative": False})


def check_gl2_rll(coeffs, dim, safe_cols=None, name="gl2_rll") -> CheckReport:
    """RLL with Yang's R(u) = u I + P for a gl(2) operator polynomial.

    `coeffs` lists, per power of u, maps {(alpha, beta): SparseOp} with
    alpha, beta in {1, 2}.  Used as the oracle for oscillator chains and
    for the gl(2) subalgebras embedded in the orthogonal/symplectic case.
    """
    if safe_cols is None:
        safe_cols = range(dim)
    big = 4 * dim
    keep = set()
    for pair in range(4):
        for w in safe_cols:
            keep.add(pair * dim + w)

    def slot(mat, which):
        data = {}
        for (alpha, beta), op in mat.items():
            pa, pb = alpha - 1, beta - 1
            for (i, j), val in op.data.items():
                for c in range(2):
                    if which == 1:
                        data[((pa * 2 + c) * dim + i, (pb * 2 + c) * dim + j)] = val
                    else:
                        data[((c * 2 + pa) * dim + i, (c * 2 + pb) * dim + j)] = val
        return SparseOp(big, big, data)

    def perm(mat, left):
        data = {}
        for (r, c), v in mat.data.items():
            if left:
                pair, w = divmod(r, dim)
                p1, p2 = divmod(pair, 2)
                data[((p2 * 2 + p1) * dim + w, c)] = v
            else:
                pair, w = divmod(c, dim)
                p1, p2 = divmod(pair, 2)
                data[(r, (p2 * 2 + p1) * dim + w)] = v
        out = SparseOp(big, big)
        out.data = data
        return out

    c1 = [slot(m, 1) for m in coeffs]
    c2 = [slot(m, 2) for m in coeffs]
    c1r = [m.restrict_cols(keep) for m in c1]
    c2r = [m.restrict_cols(keep) for m in c2]
    lhs: dict = {}
    rhs: dict = {}
    # R(u - v) = (u - v) I + P: terms (1,0,+I), (0,1,-I), (0,0,P)
    for i in range(len(coeffs)):
        for j in range(len(coeffs)):
            p_ij = c1[i] @ c2r[j]
            q_ij = c2[j] @ c1r[i]
            for (p, q, is_perm, sign) in ((1, 0, False, ONE), (0, 1, False, -ONE),
                                          (0, 0, True, ONE)):
                key = (p + i, q + j)
                left = perm(p_ij, True) if is_perm else p_ij.scale(sign)
                right = perm(q_ij, False) if is_perm else q_ij.scale(sign)
                lhs[key] = lhs.get(key, SparseOp.zeros(big, big)) + left
                rhs[key] = rhs.get(key, SparseOp.zeros(big, big)) + right
    for key in sorted(set(lhs) | set(rhs)):
        diff = lhs.get(key, SparseOp.zeros(big, big)) - rhs.get(key, SparseOp.zeros(big, big))
        if not diff.is_zero:
            entry = min(diff.data)
            return CheckReport(name, False,
                               counterexample=((key,) + entry,
                                               BiPoly({key: diff.data[entry]})))
    return CheckReport(name, True)


# ---------------------------------------------------------------------------
# truncation constraints of the quadratic and linear evaluations


def check_symmetric_constraints(lop: LOperator, span=None) -> CheckReport:
    """The four scalar constraints tying G, H and the center together.

      G + eps G^t                                    = c21 I
      H + eps H^t + eps G^t G - beta G               = c23 I
      eps H^t G + eps G^t H - beta (H - eps H^t)     = c26 I
      eps (H - beta G)^t H + beta^2 H                = c28 I

    (written here on lowered matrices, the transposed contractions being
    the tt-product).  Fails if any left side is not a scalar multiple of
    the identity pattern.

    The four values are central elements; on a reducible module they act
    blockwise, so `span` may supply a basis of an invariant submodule
    (typically the cyclic module of the highest weight vector) on which
    genuine scalars are asserted.  c21 and c23 are scalar on any module.
    """
    case, dim = lop.case, lop.dim
    g, h = lop.g_mat, lop.h_mat
    eps = Scalar.of(case.eps)
    beta = case.beta
    gt = opmat_transpose(g)
    ht = opmat_transpose(h)

    lhs1 = opmat_add(g, opmat_scale(gt, eps))
    lhs2 = opmat_add(opmat_add(h, opmat_scale(ht, eps)),
                     opmat_sub(opmat_mul_tt(case, g, g, dim), opmat_scale(g, beta)))
    lhs3 = opmat_add(opmat_add(opmat_mul_tt(case, h, g, dim), opmat_mul_tt(case, g, h, dim)),
                     opmat_scale(opmat_sub(h, opmat_scale(ht, eps)), -beta))
    lhs4 = opmat_add(opmat_sub(opmat_mul_tt(case, h, h, dim),
                               opmat_scale(opmat_mul_tt(case, g, h, dim), beta)),
                     opmat_scale(h, beta * beta))

    b = lop.entry_budget
    names = ("c21", "c23", "c26", "c28")
    budgets = (b, 2 * b, 2 * b, 2 * b)
    scalars = {}
    for name, mat, budget in zip(names, (lhs1, lhs2, lhs3, lhs4), budgets):
        if span is not None:
            ok, value, bad = opmat_is_scalar_on_span(case, mat, span)
        else:
            cols = lop.space.safe_indices(budget)
            ok, value, bad = opmat_is_scalar(case, mat, dim, cols)
        if not ok:
            key, entry, val = bad
            return CheckReport("symmetric_constraints", False, scalars=scalars,
                               counterexample=((name,) + key, BiPoly({(0, 0): val})))
        scalars[name] = value
    details = {} if span is None else {"span_dimension": len(span)}
    return CheckReport("symmetric_constraints", True, scalars=scalars, details=details)


def check_linear_constraint(lop: LOperator, g: dict | None = None) -> CheckReport:
    """G^2 + beta G = c2 I with n c2 = tr G^2 (lowered product)."""
    case, dim = lop.case, lop.dim
    g = lop.g_mat if g is None else g
    gg = opmat_mul(case, g, g, dim)
    lhs = opmat_add(gg, opmat_scale(g, case.beta))
    cols = lop.space.safe_indices(2 * lop.entry_budget)
    ok, value, bad = opmat_is_scalar(case, lhs, dim, cols)
    if not ok:
        key, entry, val = bad
        return CheckReport("linear_constraint", False,
                           counterexample=(key, BiPoly({(0, 0): val})))
    # cross-check the trace formula n c2 = tr G^2
    trace = _zero(dim)
    for a in case.indices:
        op = gg.get((-a, a))
        if op is not None:
            trace = trace + op.scale(Scalar.of(case.sign(-a)))
    tr_check = trace - SparseOp.identity(dim, value * case.n)
    if not tr_check.is_zero_on_cols(cols):
        entry = tr_check.first_entry_on_cols(cols)
        return CheckReport("linear_constraint", False, scalars={"c2": value},
                           counterexample=(("trace",), BiPoly({(0, 0): tr_check.data[entry]})))
    return CheckReport("linear_constraint", True, scalars={"c2": value})


# ---------------------------------------------------------------------------
# W-tensor and the cubic characteristic identity


def check_w_tensor(lop: LOperator, g: dict | None = None) -> CheckReport:
    """Six-term symmetrized product W_{ab,cd} vanishes for all indices."""
    case, dim = lop.case, lop.dim
    g = lop.g_mat if g is None else g
    cols = lop.space.safe_indices(2 * lop.entry_budget)
    idx = sorted(case.indices)
    cache: dict = {}

    def prod(k1, k2):
        got = cache.get((k1, k2))
        if got is None:
            op1, op2 = g.get(k1), g.get(k2)
            got = _zero(dim) if (op1 is None or op2 is None) else op1 @ op2
            cache[(k1, k2)] = got
        return got

    for a in idx:
        for b in idx:
            for c in idx:
                for d in idx:
                    w = (prod((a, b), (c, d)) + prod((a, c), (d, b))
                         + prod((a, d), (b, c)) + prod((c, d), (a, b))
                         + prod((d, b), (a, c)) + prod((b, c), (a, d)))
                    entry = w.first_entry_on_cols(cols)
                    if entry is not None:
                        return CheckReport("w_tensor", False,
                                           counterexample=((a, b, c, d),
                                                           BiPoly({(0, 0): w.data[entry]})))
    return CheckReport("w_tensor", True)


def casimir_operator(lop: LOperator, g: dict | None = None) -> SparseOp:
    """tr G^2 as an operator on the representation space."""
    case, dim = lop.case, lop.dim
    g = lop.g_mat if g is None else g
    gg = opmat_mul(case, g, g, dim)
    out = _zero(dim)
    for a in case.indices:
        op = gg.get((-a, a))
        if op is not None:
            out = out + op.scale(Scalar.of(case.sign(-a)))
    return out


def check_chi3(lop: LOperator, g: dict | None = None) -> CheckReport:
    """G^3 + (eps+2beta) G^2 + (2 eps beta - eps s) G - s = 0, s = tr G^2 / 2.

    s is inserted as the (central) operator it is, so the identity is
    exact on the whole safe subspace, not just on highest weight
    vectors; the half-trace normalization is the one that the bilinear
    construction actually satisfies (verified by exact fit).
    """
    case, dim = lop.case, lop.dim
    g = lop.g_mat if g is None else g
    eps = Scalar.of(case.eps)
    beta = case.beta
    gg = opmat_mul(case, g, g, dim)
    ggg = opmat_mul(case, gg, g, dim)
    sigma = casimir_operator(lop, g).scale(Scalar(1, 0, 2))
    chi = opmat_add(ggg, opmat_scale(gg, eps + beta + beta))
    chi = opmat_add(chi, opmat_scale(g, eps * beta * Scalar(2)))
    chi = opmat_sub(chi, {key: (sigma @ op).scale(eps) for key, op in g.items()})
    sigma_metric = {}
    for a in case.indices:
        sigma_metric[(a, -a)] = sigma.scale(case.metric_lower(a, -a))
    chi = opmat_sub(chi, sigma_metric)
    cols = lop.space.safe_indices(3 * lop.entry_budget)
    bad = _first_opmat_violation(chi, cols)
    if bad is not None:
        key, entry, val = bad
        return CheckReport("chi3", False, counterexample=(key, BiPoly({(0, 0): val})))
    return CheckReport("chi3", True)


# ---------------------------------------------------------------------------
# the center generating function


def center_function(lop: LOperator, span=None):
    """C_ab(u) = sum_d eps_d L_da(u - beta) L_{-d,b}(u) = c(u) eps_ab.

    Returns (c, report).  The report asserts that every coefficient of
    C(u) is a scalar multiple of the metric and that C(u) commutes with
    L(v) (checked symbolically, before scalarity is used anywhere).

    The coefficients of c(u) are central elements; like the constraint
    scalars they are genuine numbers only on an irreducible module, so
    `span` may restrict the scalarity assertion to an invariant
    submodule.  The commutation check always runs on the whole safe
    subspace.
    """
    case, dim = lop.case, lop.dim
    shifted = opmat_poly_shift(lop.coeffs, -case.beta)
    c_poly: list[dict] = [dict() for _ in range(2 * lop.order + 1)]
    for i, am in enumerate(shifted):
        for j, bm in enumerate(lop.coeffs):
            c_poly[i + j] = opmat_add(c_poly[i + j], opmat_mul_tt(case, am, bm, dim))
    while c_poly and not c_poly[-1]:
        c_poly.pop()

    b = lop.entry_budget
    comm_cols = lop.space.safe_indices(3 * b)
    for k1, cm in enumerate(c_poly):
        for k2, lm in enumerate(lop.coeffs):
            comm = opmat_sub(opmat_mul(case, cm, lm, dim), opmat_mul(case, lm, cm, dim))
            bad = _first_opmat_violation(comm, comm_cols)
            if bad is not None:
                key, entry, val = bad
                return UniPoly(), CheckReport(
                    "center", False,
                    counterexample=(("commutator", k1, k2) + key,
                                    BiPoly({(0, 0): val})))

    cols = lop.space.safe_indices(2 * b)
    values = []
    for k, cm in enumerate(c_poly):
        if span is not None:
            ok, value, bad = opmat_is_scalar_on_span(case, cm, span)
        else:
            ok, value, bad = opmat_is_scalar(case, cm, dim, cols)
        if not ok:
            key, entry, val = bad
            return UniPoly(), CheckReport("center", False,
                                          counterexample=(("coeff", k) + key,
                                                          BiPoly({(0, 0): val})))
        values.append(value)
    c = UniPoly(values)
    return c, CheckReport("center", True, scalars={"c(u)": c})


def center_decomposition(case: CaseDescriptor, c: UniPoly, scalars: dict) -> bool:
    """c(u) = u^2(u-b)^2 + u^2(u-b) c21 + u(u-b) c23 + u c26 + c28 exactly."""
    u = UniPoly.u()
    shifted = u - case.beta
    expected = (u * u * shifted * shifted
                + u * u * shifted * scalars["c21"]
                + u * shifted * scalars["c23"]
                + u * scalars["c26"]
                + UniPoly.const(scalars["c28"]))
    return expected == c
