"""Composite operators: products of linear factors and the so(3) fusion.

A product of two linear L-operators, centered by a half-shift of the
spectral parameter, is a quadratic evaluation whose ratios multiply with
shifted arguments.  A gl(2) oscillator chain fuses to an so(3) operator
whose first ratio doubles its argument, f_1(u) = f(2u).
"""

from yanglab.exact import ONE, Scalar, UniPoly, ZERO
from yanglab.lops import (
    build_gl2_js_chain,
    build_heisenberg_linear,
    build_product,
    fuse_so3_from_gl2,
)
from yanglab.structure import make_case
from yanglab.verify import check_rll
from yanglab.weights import ratios, weight_functions, weight_report

HALF = Scalar(1, 0, 2)

case = make_case("so_even", 2)
delta = Scalar(3)
f1 = build_heisenberg_linear(case, 1, max_degree=4)
f2 = build_heisenberg_linear(case, 2, max_degree=4)
prod = build_product(f1, f2, delta)
print(f"product of so(4) Heisenberg factors (l1, l2, delta) = (1, 2, 3), dim {prod.dim}")

wf = weight_functions(prod, prod.hw_vector)
r12 = ratios(wf, case)
r1 = ratios(weight_functions(f1, f1.hw_vector), case)
r2 = ratios(weight_functions(f2, f2.hw_vector), case)
print("ratio multiplicativity f'_i(u) = f_1i(u + d/2) f_2i(u - d/2):")
for i in range(2):
    n1, d1 = r1[i]
    n2, d2 = r2[i]
    num = n1.shift(delta * HALF) * n2.shift(-delta * HALF)
    den = d1.shift(delta * HALF) * d2.shift(-delta * HALF)
    holds = r12[i][0] * den == num * r12[i][1]
    print(f"  i={i + 1}: {holds}")

print("\ngl(2) oscillator chain with shifts/excitations [(0,1), (1/2,1)]:")
gl2 = build_gl2_js_chain([(ZERO, 1), (HALF, 1)])
num, den = gl2.ratio()
print("  gl(2) ratio f(u) =", num, "/", den)

lop, qdet = fuse_so3_from_gl2(gl2)
print("  fused so(3) operator: entries of degree", lop.order, " qdet =", qdet)
print("  RLL for the fused operator:", check_rll(lop).passed)

report = weight_report(lop, lop.hw_vector)
fn, fd = report.reduced[0]
doubled_num = num.compose_linear(Scalar(2), ZERO)
doubled_den = den.compose_linear(Scalar(2), ZERO)
print("  f_1(u) = f(2u):", fn * doubled_den == doubled_num * fd)
print("  Lambda identity and finiteness:", report.condition_report.passed,
      report.drinfeld.exists)
