"""Quadratic evaluation from oscillator bilinears.

G_ab = -eps(x_a d_b - eps x_b d_a) with H = (G^2 + beta G + k)/2: the
symmetric constraints produce the central value k, the W-tensor and the
cubic identity vanish, and the center generating function decomposes
coefficient-by-coefficient into the four constraint scalars.
"""

from yanglab.lops import build_js_quadratic, cyclic_span, default_js_central_value
from yanglab.structure import make_case
from yanglab.verify import (
    center_decomposition,
    center_function,
    check_chi3,
    check_rll,
    check_symmetric_constraints,
    check_w_tensor,
)
from yanglab.weights import weight_report

so5 = make_case("so_odd", 2)
lop = build_js_quadratic(so5, 2)
print(f"so(5), 2l = 2 on {lop.space.name} (dim {lop.dim})")
print("  default central value k =", default_js_central_value(so5, 2))
print("  RLL:", check_rll(lop).passed,
      "  W = 0:", check_w_tensor(lop).passed,
      "  cubic identity:", check_chi3(lop).passed)

span = cyclic_span(lop, [lop.hw_vector])
print(f"  cyclic module of x_-1^2 has dimension {len(span)} inside the layer;")
sym = check_symmetric_constraints(lop, span=span)
print("  constraint scalars:", {k: str(v) for k, v in sym.scalars.items()})
whole = check_symmetric_constraints(lop)
print("  on the full (reducible) layer the quartic scalar is blockwise:",
      "fails as expected" if not whole.passed else "unexpectedly scalar")

c, rep = center_function(lop, span=span)
print("  center c(u) coefficients:", c.to_strings())
print("  c(u) decomposes into the four scalars:",
      center_decomposition(so5, c, sym.scalars))

report = weight_report(lop, lop.hw_vector)
print("  weight components lam1:",
      {i: str(v) for i, v in report.components["lam1"].items() if i > 0})
num, den = report.reduced[0]
print(f"  f_1 = {num} / {den}   finite:", report.drinfeld.exists)

print("\n2l = 3 restricts to the cyclic module automatically:")
lop3 = build_js_quadratic(so5, 3)
print(f"  space: {lop3.space.name} (dim {lop3.dim});  RLL:", check_rll(lop3).passed)
