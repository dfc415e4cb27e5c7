// Generated by tools/codegen/horner_closed_form.py. Do not edit.

#include "dimerss/closed_form.hpp"

namespace dimerss::horner {

ClosedFormSolution appendix_a(double al, double n, double J) {
    const double al2 = al * al;
    const double J2 = J * J;
    ClosedFormSolution s;
    s.denom = (J2*(J2 + 10) + al2*(10*J2 + al2*(4*J2 + 24*al2 + 60) + 42) + n*(J2*(10*J2 + 132) + al2*(96*J2 + al2*(24*J2 + 328) + 536) + n*(J2*(28*J2 + 616) + al2*(248*J2 + 576*al2 + 2504) + n*(J2*(24*J2 + 1296) + al2*(192*J2 + 4928) + n*(1216*J2 + 3456*al2 + n*(384*J2 + 6144*n + 14464) + 13376) + 6200) + 1516) + 186) + 9);
    DensityParameters& x = s.numerators;
    x.a = ((al2*al2)*(J2 + 6*al2 + 9) + n*(al2*(14*J2 + al2*(6*J2 + 66) + 54) + n*(J2*(3*J2 + 30) + al2*(46*J2 + 144*al2 + 378) + n*(J2*(6*J2 + 156) + al2*(48*J2 + 912) + n*(240*J2 + 864*al2 + n*(96*J2 + 1536*n + 2592) + 1488) + 342) + 27)));
    x.b1 = al * (al2*(J2 + 6*al2 + 9) + n*(11*J2 + al2*(6*J2 + 48) + n*(34*J2 + 120*al2 + n*(24*J2 + 384*n + 552) + 234) + 27));
    x.b2 = al * J * (n*(3*J2 - 10*al2 + n*(6*J2 + 32*n + 22) + 3));
    x.d1 = (al2*(J2 + 6*al2 + 9) + n*(J2*(J2 + 10) + al2*(4*J2 + 8*al2 + 48) + n*(J2*(2*J2 + 52) + al2*(8*J2 + 120) + n*(80*J2 + 160*al2 + n*(32*J2 + 512*n + 864) + 496) + 114) + 9));
    x.d2 = J * (al2*(-J2 - 6*al2 - 9) + n*(-96*al2*n + al2*(-6*J2 - 66)));
    x.e = (al2*(J2 + al2*(J2 + 6*al2 + 15) + 9) + n*(J2*(J2 + 10) + al2*(18*J2 + al2*(6*J2 + 74) + 102) + n*(J2*(5*J2 + 82) + al2*(54*J2 + 144*al2 + 498) + n*(J2*(6*J2 + 236) + al2*(48*J2 + 1072) + n*(272*J2 + 864*al2 + n*(96*J2 + 1536*n + 3104) + 2352) + 838) + 141) + 9));
    x.g1 = al * (J2 + al2*(J2 + 6*al2 + 15) + n*(13*J2 + al2*(6*J2 + 80) + n*(34*J2 + 120*al2 + n*(24*J2 + 384*n + 680) + 418) + 105) + 9);
    x.g2 = al * J * (-J2 - 6*al2 + n*(-5*J2 - 22*al2 + n*(-6*J2 - 160*n - 206) - 81) - 9);
    x.c1 = x.b1;
    x.c2 = x.b2;
    x.f1 = x.d1;
    x.f2 = 0.0;
    x.h = x.e;
    x.i1 = x.g1;
    x.i2 = x.g2;
    return s;
}

ClosedFormSolution appendix_b(double al, double n, double J) {
    const double al2 = al * al;
    const double J2 = J * J;
    ClosedFormSolution s;
    s.denom = (J2*(J2 + 10) + al2*(10*J2 + al2*(4*J2 + 24*al2 + 60) + 42) + n*(J2*(10*J2 + 124) + al2*(96*J2 + al2*(24*J2 + 64*al2 + 424) + 520) + n*(J2*(36*J2 + 616) + al2*(344*J2 + al2*(32*J2 + 992) + 2504) + n*(J2*(56*J2 + 1584) + al2*(512*J2 + 768*al2 + 5888) + n*(J2*(32*J2 + 2240) + al2*(256*J2 + 6784) + n*(1664*J2 + 3072*al2 + n*(512*J2 + 4096*n + 12800) + 16768) + 11936) + 4984) + 1220) + 162) + 9);
    DensityParameters& x = s.numerators;
    x.a = ((al2*al2)*(J2 + 6*al2 + 9) + n*(al2*(6*J2 + al2*(6*J2 + 16*al2 + 66) + 18) + n*(J2*(J2 + 10) + al2*(46*J2 + al2*(8*J2 + 184) + 186) + n*(J2*(6*J2 + 84) + al2*(96*J2 + 192*al2 + 704) + n*(J2*(8*J2 + 240) + al2*(64*J2 + 1184) + n*(288*J2 + 768*al2 + n*(128*J2 + 1024*n + 2176) + 1760) + 680) + 126) + 9)));
    x.b1 = al * (al2*(J2 + 6*al2 + 9) + n*(5*J2 + al2*(6*J2 + 16*al2 + 60) + n*(34*J2 + al2*(8*J2 + 144) + n*(64*J2 + 128*al2 + n*(32*J2 + 256*n + 480) + 320) + 90) + 9));
    x.b2 = al * J * (n*(J2 - 6*al2 + n*(6*J2 - 16*al2 + n*(8*J2 - 64*n - 72) - 26) - 3));
    x.d1 = (al2*(J2 + 6*al2 + 9) + n*(al2*(2*J2 + 16*al2 + 54) + n*(64*al2*n + 104*al2)));
    x.d2 = J * (al2*(-J2 - 6*al2 - 9) + n*(al2*(-6*J2 - 16*al2 - 66) + n*(-64*al2*n + al2*(-8*J2 - 136))));
    x.e = (al2*(J2 + al2*(J2 + 6*al2 + 15) + 9) + n*(J2*(J2 + 10) + al2*(18*J2 + al2*(6*J2 + 16*al2 + 106) + 114) + n*(J2*(7*J2 + 94) + al2*(78*J2 + al2*(8*J2 + 248) + 570) + n*(J2*(14*J2 + 324) + al2*(128*J2 + 192*al2 + 1408) + n*(J2*(8*J2 + 528) + al2*(64*J2 + 1696) + n*(416*J2 + 768*al2 + n*(128*J2 + 1024*n + 3200) + 3936) + 2440) + 806) + 135) + 9));
    x.g1 = al * (J2 + al2*(J2 + 6*al2 + 15) + n*(11*J2 + al2*(6*J2 + 16*al2 + 100) + n*(42*J2 + al2*(8*J2 + 208) + n*(64*J2 + 128*al2 + n*(32*J2 + 256*n + 736) + 800) + 410) + 99) + 9);
    x.g2 = al * J * (-J2 - 6*al2 + n*(-7*J2 - 34*al2 + n*(-14*J2 - 48*al2 + n*(-8*J2 - 192*n - 408) - 294) - 87) - 9);
    x.c1 = x.b1;
    x.c2 = x.b2;
    x.f1 = x.d1;
    x.f2 = 0.0;
    x.h = x.e;
    x.i1 = x.g1;
    x.i2 = x.g2;
    return s;
}

}  // namespace dimerss::horner
