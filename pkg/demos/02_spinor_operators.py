"""Clifford-algebra L-operators and their highest-weight data.

The linear evaluation L(u) = u*eps + G with G built from Clifford (or,
symplectically, oscillator) generators: RLL holds exactly, the quadratic
constraint pins c2 = eps(n - eps)/4, and the finiteness criterion
separates the orthogonal families (finite) from the symplectic one.
"""

from yanglab.lops import build_spinorial_linear, spinor_flipped_vacuum, spinor_vacuum
from yanglab.spaces import spinor_space
from yanglab.structure import make_case
from yanglab.verify import check_linear_constraint, check_rll
from yanglab.weights import weight_report

for family, m in [("so_odd", 2), ("so_even", 2), ("sp", 2)]:
    case = make_case(family, m)
    lop = build_spinorial_linear(case, trunc=6)
    print(f"\n=== {case.label()} spinor L on {lop.space.name}, dim {lop.dim} ===")
    print("  RLL relation:", "pass" if check_rll(lop).passed else "FAIL")
    c2 = check_linear_constraint(lop)
    print(f"  G^2 + beta G = c2 I with c2 = {c2.scalars['c2']}  (expect eps(n-eps)/4)")

    report = weight_report(lop, spinor_vacuum(lop.space))
    lams = [str(report.wf.eig[i].coeff(0)) for i in range(1, m + 1)]
    print("  weights on |0>:", lams)
    for (num, den), ratio in zip(report.reduced, report.drinfeld.ratios):
        print(f"  ratio {num} / {den}  shift {ratio.shift}  ->",
              f"P roots {ratio.roots}" if ratio.exists else f"no P ({ratio.witness})")
    print("  finite-dimensional criterion:", report.drinfeld.exists)

    if family != "so_odd":
        space, gens = spinor_space(case, trunc=6)
        tilted = weight_report(lop, spinor_flipped_vacuum(case, space, gens))
        lams = [str(tilted.wf.eig[i].coeff(0)) for i in range(1, m + 1)]
        print("  weights on c_m|0>:", lams,
              " conditions:", tilted.condition_report.passed)
