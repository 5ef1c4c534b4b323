"""The one-parameter matrix-Heisenberg family of linear L-operators.

Works for so(2m) and sp(2m): polynomials in an (anti)symmetric matrix
variable carry G in block form, c2 = l(l+beta) exactly, the ratio
sequence ends in (u+l)/(u-l), and under the symplectic shift Delta = 2
the Drinfeld polynomial exists precisely when 2l is even.
"""

from yanglab.exact import Scalar
from yanglab.lops import build_heisenberg_linear
from yanglab.structure import make_case
from yanglab.verify import check_linear_constraint, check_rll
from yanglab.weights import weight_report

so4 = make_case("so_even", 2)
print("so(4), degree cut D=3, sweep of l (3 points certify the degree-2 identity):")
for ell in (0, 1, 2):
    lop = build_heisenberg_linear(so4, ell, max_degree=3)
    c2 = check_linear_constraint(lop).scalars["c2"]
    rll = check_rll(lop).passed
    print(f"  l={ell}:  c2 = {c2} (= l(l+beta))   RLL on safe subspace: {rll}")

print("\nsp(2): the shift-two criterion tells even from odd 2l:")
sp2 = make_case("sp", 1)
for two_ell in (1, 2, 3, 4):
    lop = build_heisenberg_linear(sp2, Scalar(two_ell, 0, 2), max_degree=3)
    report = weight_report(lop, lop.hw_vector)
    num, den = report.reduced[-1]
    ratio = report.drinfeld.ratios[-1]
    verdict = f"P roots {ratio.roots}" if ratio.exists else f"none ({ratio.witness})"
    print(f"  2l={two_ell}:  f_m = {num} / {den}   -> {verdict}")

print("\nso(4), l=2: the classical string of roots l, l-1, ..., 1-l:")
lop = build_heisenberg_linear(so4, 2, max_degree=3)
report = weight_report(lop, lop.hw_vector)
print("  P_m roots:", report.drinfeld.ratios[-1].roots)
