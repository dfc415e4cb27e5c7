"""Emit src/closed_form_horner.cpp: the closed-form steady-state polynomials
expanded and re-nested in Horner order (eta outermost, then alpha, then j).

The input expressions below are a separate transcription of the closed-form
polynomials; the generated C++ is compared against the hand-written C++ in
the unit tests.
"""
import re

import sympy as sp

a, n, J = sp.symbols("al n J")
A2, J2 = sp.symbols("al2 J2")

COMMON = dict(
    D=24*a**6+J**4*(1+2*n)**2*(1+6*n)+4*a**4*(15+82*n+144*n**2)+2*(a+2*a*n)**2*(21+184*n+432*n**2)
      +(1+2*n)**2*(9+150*n+880*n**2+2080*n**3+1536*n**4)
      +2*J**2*(1+6*n)*(2*a**4+(1+2*n)**2*(5+16*n+8*n**2)+a**2*(5+18*n+16*n**2)),
    a=6*a**6+a**4*(9+66*n+144*n**2+J**2*(1+6*n))+3*n**2*(1+2*n)*(9+J**4+96*n+304*n**2+256*n**3+2*J**2*(5+16*n+8*n**2))
      +2*a**2*n*(J**2*(7+23*n+24*n**2)+3*(9+63*n+152*n**2+144*n**3)),
    b1=a*(6*a**4+a**2*(9+48*n+120*n**2+J**2*(1+6*n))+n*(1+2*n)*(J**2*(11+12*n)+3*(9+60*n+64*n**2))),
    b2=J*a*n*(3-10*a**2+22*n+32*n**2+J**2*(3+6*n)),
    d1=a**4*(6+8*n)+a**2*(9+48*n+120*n**2+160*n**3+J**2*(1+4*n+8*n**2))
      +n*(1+2*n)*(9+J**4+96*n+304*n**2+256*n**3+2*J**2*(5+16*n+8*n**2)),
    d2=-J*a**2*(9+6*a**2+66*n+96*n**2+J**2*(1+6*n)),
    e=6*a**6+a**4*(15+74*n+144*n**2+J**2*(1+6*n))+n*(1+5*n+6*n**2)*(9+J**4+96*n+304*n**2+256*n**3+2*J**2*(5+16*n+8*n**2))
      +a**2*(9+102*n+498*n**2+1072*n**3+864*n**4+J**2*(1+18*n+54*n**2+48*n**3)),
    g1=a*(9+6*a**4+105*n+418*n**2+680*n**3+384*n**4+5*a**2*(3+16*n+24*n**2))+a*J**2*(1+13*n+34*n**2+24*n**3+a**2*(1+6*n)),
    g2=-J*a*(9+81*n+206*n**2+160*n**3+a**2*(6+22*n)+J**2*(1+5*n+6*n**2)),
)

INDEPENDENT = dict(
    D=J**4*(1+2*n)**3*(1+4*n)+(3+8*n)*(1+2*a**2+6*n+8*n**2)**2*(3+2*a**2+10*n+8*n**2)
      +2*J**2*(1+2*n)*(a**4*(2+8*n)+(1+2*n)**2*(5+32*n+56*n**2+32*n**3)+a**2*(5+38*n+96*n**2+64*n**3)),
    a=2*a**6*(3+8*n)+a**4*(9+66*n+184*n**2+192*n**3+J**2*(1+6*n+8*n**2))
      +n**2*(1+6*n+8*n**2)*(9+J**4+72*n+176*n**2+128*n**3+2*J**2*(5+12*n+8*n**2))
      +2*a**2*n*(9+93*n+352*n**2+592*n**3+384*n**4+J**2*(3+23*n+48*n**2+32*n**3)),
    b1=a*(2*a**4*(3+8*n)+n*(1+6*n+8*n**2)*(9+36*n+32*n**2+J**2*(5+4*n)))
      +a**3*(9+60*n+144*n**2+128*n**3+J**2*(1+6*n+8*n**2)),
    b2=J*a*n*(J**2*(1+6*n+8*n**2)-(3+8*n)*(1+2*a**2+6*n+8*n**2)),
    d1=a**2*(J**2*(1+2*n)+(3+8*n)*(3+2*a**2+10*n+8*n**2)),
    d2=-(J*a**2*(J**2*(1+6*n+8*n**2)+(3+8*n)*(3+2*a**2+14*n+8*n**2))),
    e=2*a**6*(3+8*n)+a**4*(1+2*n)*(15+76*n+96*n**2+J**2*(1+4*n))
      +n*(1+7*n+14*n**2+8*n**3)*(9+J**4+72*n+176*n**2+128*n**3+2*J**2*(5+12*n+8*n**2))
      +a**2*(9+114*n+570*n**2+1408*n**3+1696*n**4+768*n**5+J**2*(1+18*n+78*n**2+128*n**3+64*n**4)),
    g1=a*(1+a**2+5*n+4*n**2)*(J**2*(1+6*n+8*n**2)+(3+8*n)*(3+2*a**2+10*n+8*n**2)),
    g2=-(J*a*(J**2*(1+7*n+14*n**2+8*n**3)+(3+8*n)*(a**2*(2+6*n)+3*(1+7*n+14*n**2+8*n**3)))),
)


def emit(expr):
    expr = sp.expand(expr)
    prefix = ""
    for sym in (a, J):
        if sp.expand(expr.subs(sym, -sym) + expr) == 0:
            expr = sp.expand(expr / sym)
            prefix += f"{sym} * "
    reduced = sp.expand(expr.subs({a**2: A2, J**2: J2}))
    assert not reduced.has(a) and not reduced.has(J), reduced
    code = sp.ccode(sp.polys.polyfuncs.horner(reduced, n, A2, J2))
    code = re.sub(r"pow\((\w+), (\d+)\)",
                  lambda m: "(" + "*".join([m.group(1)] * int(m.group(2))) + ")", code)
    assert "pow" not in code, code
    return prefix + "(" + code + ")"


def emit_function(name, exprs):
    out = [f"ClosedFormSolution {name}(double al, double n, double J) {{",
           "    const double al2 = al * al;",
           "    const double J2 = J * J;",
           "    ClosedFormSolution s;",
           f"    s.denom = {emit(exprs['D'])};",
           "    DensityParameters& x = s.numerators;"]
    for key in ("a", "b1", "b2", "d1", "d2", "e", "g1", "g2"):
        out.append(f"    x.{key} = {emit(exprs[key])};")
    out += ["    x.c1 = x.b1;", "    x.c2 = x.b2;", "    x.f1 = x.d1;", "    x.f2 = 0.0;",
            "    x.h = x.e;", "    x.i1 = x.g1;", "    x.i2 = x.g2;", "    return s;", "}"]
    return "\n".join(out)


if __name__ == "__main__":
    body = [
        "// Generated by tools/codegen/horner_closed_form.py. Do not edit.",
        "",
        '#include "dimerss/closed_form.hpp"',
        "",
        "namespace dimerss::horner {",
        "",
        emit_function("appendix_a", COMMON),
        "",
        emit_function("appendix_b", INDEPENDENT),
        "",
        "}  // namespace dimerss::horner",
        "",
    ]
    print("\n".join(body), end="")
