#!/usr/bin/env python3
"""Regenerates include/biharm/gen/example1_forms.hpp.

The L-shape benchmark solution is the clamped corner singularity

    u(r,theta) = (r^2 cos^2 th - 1)^2 (r^2 sin^2 th - 1)^2 r^(1+A) g(theta)

for the corner opening 3*pi/2. The exponent A is the root of the clamped
eigencondition sin^2(A*w) = A^2 sin^2(w) near 0.5444837; it is frozen below
to full double precision so that u and grad(u) vanish on the reentrant legs
to machine accuracy. The right-hand side f = Lap^2 u and the Cartesian
derivatives are produced symbolically here and emitted as CSE'd C++.

Run from the repository root:  python3 scripts/generate_example1_forms.py
"""
import sympy as sp

x, y = sp.symbols("x y", real=True)

A = sp.Float("0.5444837367824639291408769", 30)
w = 3 * sp.pi / 2

r2 = x * x + y * y
r = sp.sqrt(r2)
th = sp.atan2(y, x)  # patched to the [0, 2*pi) branch in the emitted code


def s_pm(sign, z):
    return sp.sin((A + sign) * z)


def c_pm(sign, z):
    return sp.cos((A + sign) * z)


coef_a = s_pm(-1, w) / (A - 1) - s_pm(+1, w) / (A + 1)
coef_b = c_pm(-1, w) - c_pm(+1, w)
g = coef_a * (c_pm(-1, th) - c_pm(+1, th)) - coef_b * (
    s_pm(-1, th) / (A - 1) - s_pm(+1, th) / (A + 1)
)

cutoff = (x * x - 1) ** 2 * (y * y - 1) ** 2
u = cutoff * r ** (1 + A) * g

print("differentiating ...")
ux = sp.diff(u, x)
uy = sp.diff(u, y)
uxx = sp.diff(ux, x)
uxy = sp.diff(ux, y)
uyy = sp.diff(uy, y)
print("fourth order ...")
f = sp.diff(u, x, 4) + 2 * sp.diff(u, x, 2, y, 2) + sp.diff(u, y, 4)


def emit(name, exprs, outs):
    repl, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    for sym, expr in repl:
        lines.append(
            "    const double %s = %s;" % (sym, sp.cxxcode(expr, standard="c++17"))
        )
    for out, expr in zip(outs, reduced):
        lines.append("    %s = %s;" % (out, sp.cxxcode(expr, standard="c++17")))
    body = "\n".join(lines)
    # route atan2 through the [0, 2*pi) branch helper
    body = body.replace("std::atan2(y, x)", "lshape_angle(x, y)")
    return body


hdr = []
hdr.append("// Generated by scripts/generate_example1_forms.py -- do not edit.")
hdr.append("#pragma once")
hdr.append("#include <cmath>")
hdr.append("")
hdr.append("namespace biharm::gen {")
hdr.append("")
hdr.append("// polar angle measured from the positive x axis, range [0, 2*pi)")
hdr.append("inline double lshape_angle(double x, double y) {")
hdr.append("    double t = std::atan2(y, x);")
hdr.append("    return t < 0 ? t + 2.0 * M_PI : t;")
hdr.append("}")
hdr.append("")
hdr.append("inline double example1_value(double x, double y) {")
hdr.append("    if (x * x + y * y < 1e-28) return 0.0;")
hdr.append("    double u;")
hdr.append(emit("value", [u], ["u"]))
hdr.append("    return u;")
hdr.append("}")
hdr.append("")
hdr.append("inline void example1_grad(double x, double y, double& gx, double& gy) {")
hdr.append("    if (x * x + y * y < 1e-28) { gx = gy = 0.0; return; }")
hdr.append(emit("grad", [ux, uy], ["gx", "gy"]))
hdr.append("}")
hdr.append("")
hdr.append(
    "inline void example1_hess(double x, double y, double& hxx, double& hxy, double& hyy) {"
)
hdr.append("    if (x * x + y * y < 1e-28) { hxx = hxy = hyy = 0.0; return; }")
hdr.append(emit("hess", [uxx, uxy, uyy], ["hxx", "hxy", "hyy"]))
hdr.append("}")
hdr.append("")
hdr.append("inline double example1_rhs(double x, double y) {")
hdr.append("    if (x * x + y * y < 1e-28) return 0.0;")
hdr.append("    double f;")
hdr.append(emit("rhs", [f], ["f"]))
hdr.append("    return f;")
hdr.append("}")
hdr.append("")
hdr.append("} // namespace biharm::gen")
hdr.append("")

with open("include/biharm/gen/example1_forms.hpp", "w") as fh:
    fh.write("\n".join(hdr))
print("wrote include/biharm/gen/example1_forms.hpp")
