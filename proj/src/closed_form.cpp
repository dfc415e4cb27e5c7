#include "dimerss/closed_form.hpp"

#include <cmath>
#include <initializer_list>

namespace dimerss {

namespace {

double p2(double x) { return x * x; }
double p3(double x) { return x * x * x; }
double p4(double x) { return p2(p2(x)); }
double p5(double x) { return p4(x) * x; }
double p6(double x) { return p3(x) * p3(x); }

// Guard used with the sum of |top-level terms| of D as the scale.
void check_denominator(double denom, std::initializer_list<double> terms) {
    double scale = 0.0;
    for (double t : terms) scale += std::abs(t);
    if (!std::isfinite(denom) || std::abs(denom) < 1e-12 * scale || scale == 0.0) {
        throw SingularDenominator("closed-form denominator vanishes");
    }
}

void check_domain(double alpha, double eta, double j) {
    if (!std::isfinite(alpha) || !std::isfinite(eta) || !std::isfinite(j)) {
        throw InvalidParameter("closed form: parameters must be finite");
    }
    if (eta < 0.0) throw InvalidParameter("closed form: eta must be non-negative");
}

// The symmetry identities c=b, f1=d1, f2=0, h=e, i=g.
void fill_symmetric(DensityParameters& n) {
    n.c1 = n.b1;
    n.c2 = n.b2;
    n.f1 = n.d1;
    n.f2 = 0.0;
    n.h = n.e;
    n.i1 = n.g1;
    n.i2 = n.g2;
}

}  // namespace

DensityParameters ClosedFormSolution::values() const {
    DensityParameters v;
    const double s = 1.0 / denom;
    v.a = numerators.a * s;
    v.b1 = numerators.b1 * s;
    v.b2 = numerators.b2 * s;
    v.c1 = numerators.c1 * s;
    v.c2 = numerators.c2 * s;
    v.d1 = numerators.d1 * s;
    v.d2 = numerators.d2 * s;
    v.e = numerators.e * s;
    v.f1 = numerators.f1 * s;
    v.f2 = numerators.f2 * s;
    v.g1 = numerators.g1 * s;
    v.g2 = numerators.g2 * s;
    v.h = numerators.h * s;
    v.i1 = numerators.i1 * s;
    v.i2 = numerators.i2 * s;
    return v;
}

DensityMatrix ClosedFormSolution::assembled() const {
    return DensityMatrix::from_parameters(values());
}

ClosedFormSolution appendix_a(double al, double n, double J) {
    check_domain(al, n, J);
    const double J2 = p2(J), J4 = p4(J);

    const double t1 = 24 * p6(al);
    const double t2 = J4 * p2(1 + 2 * n) * (1 + 6 * n);
    const double t3 = 4 * p4(al) * (15 + 82 * n + 144 * p2(n));
    const double t4 = 2 * p2(al + 2 * al * n) * (21 + 184 * n + 432 * p2(n));
    const double t5 = p2(1 + 2 * n) *
                      (9 + 150 * n + 880 * p2(n) + 2080 * p3(n) + 1536 * p4(n));
    const double t6 = 2 * J2 * (1 + 6 * n) *
                      (2 * p4(al) + p2(1 + 2 * n) * (5 + 16 * n + 8 * p2(n)) +
                       p2(al) * (5 + 18 * n + 16 * p2(n)));

    ClosedFormSolution s;
    s.denom = t1 + t2 + t3 + t4 + t5 + t6;
    check_denominator(s.denom, {t1, t2, t3, t4, t5, t6});

    DensityParameters& x = s.numerators;
    x.a = 6 * p6(al) + p4(al) * (9 + 66 * n + 144 * p2(n) + J2 * (1 + 6 * n)) +
          3 * p2(n) * (1 + 2 * n) *
              (9 + J4 + 96 * n + 304 * p2(n) + 256 * p3(n) + 2 * J2 * (5 + 16 * n + 8 * p2(n))) +
          2 * p2(al) * n *
              (J2 * (7 + 23 * n + 24 * p2(n)) + 3 * (9 + 63 * n + 152 * p2(n) + 144 * p3(n)));
    x.b1 = al * (6 * p4(al) + p2(al) * (9 + 48 * n + 120 * p2(n) + J2 * (1 + 6 * n)) +
                 n * (1 + 2 * n) * (J2 * (11 + 12 * n) + 3 * (9 + 60 * n + 64 * p2(n))));
    x.b2 = J * al * n * (3 - 10 * p2(al) + 22 * n + 32 * p2(n) + J2 * (3 + 6 * n));
    x.d1 = p4(al) * (6 + 8 * n) +
           p2(al) * (9 + 48 * n + 120 * p2(n) + 160 * p3(n) + J2 * (1 + 4 * n + 8 * p2(n))) +
           n * (1 + 2 * n) *
               (9 + J4 + 96 * n + 304 * p2(n) + 256 * p3(n) + 2 * J2 * (5 + 16 * n + 8 * p2(n)));
    x.d2 = -J * p2(al) * (9 + 6 * p2(al) + 66 * n + 96 * p2(n) + J2 * (1 + 6 * n));
    x.e = 6 * p6(al) + p4(al) * (15 + 74 * n + 144 * p2(n) + J2 * (1 + 6 * n)) +
          n * (1 + 5 * n + 6 * p2(n)) *
              (9 + J4 + 96 * n + 304 * p2(n) + 256 * p3(n) + 2 * J2 * (5 + 16 * n + 8 * p2(n))) +
          p2(al) * (9 + 102 * n + 498 * p2(n) + 1072 * p3(n) + 864 * p4(n) +
                    J2 * (1 + 18 * n + 54 * p2(n) + 48 * p3(n)));
    x.g1 = al * (9 + 6 * p4(al) + 105 * n + 418 * p2(n) + 680 * p3(n) + 384 * p4(n) +
                 5 * p2(al) * (3 + 16 * n + 24 * p2(n))) +
           al * J2 * (1 + 13 * n + 34 * p2(n) + 24 * p3(n) + p2(al) * (1 + 6 * n));
    x.g2 = -J * al *
           (9 + 81 * n + 206 * p2(n) + 160 * p3(n) + p2(al) * (6 + 22 * n) +
            J2 * (1 + 5 * n + 6 * p2(n)));
    fill_symmetric(x);
    return s;
}

ClosedFormSolution appendix_b(double al, double n, double J) {
    check_domain(al, n, J);
    const double J2 = p2(J), J4 = p4(J);

    const double t1 = J4 * p3(1 + 2 * n) * (1 + 4 * n);
    const double t2 = (3 + 8 * n) * p2(1 + 2 * p2(al) + 6 * n + 8 * p2(n)) *
                      (3 + 2 * p2(al) + 10 * n + 8 * p2(n));
    const double t3 = 2 * J2 * (1 + 2 * n) *
                      (p4(al) * (2 + 8 * n) +
                       p2(1 + 2 * n) * (5 + 32 * n + 56 * p2(n) + 32 * p3(n)) +
                       p2(al) * (5 + 38 * n + 96 * p2(n) + 64 * p3(n)));

    ClosedFormSolution s;
    s.denom = t1 + t2 + t3;
    check_denominator(s.denom, {t1, t2, t3});

    DensityParameters& x = s.numerators;
    x.a = 2 * p6(al) * (3 + 8 * n) +
          p4(al) * (9 + 66 * n + 184 * p2(n) + 192 * p3(n) + J2 * (1 + 6 * n + 8 * p2(n))) +
          p2(n) * (1 + 6 * n + 8 * p2(n)) *
              (9 + J4 + 72 * n + 176 * p2(n) + 128 * p3(n) + 2 * J2 * (5 + 12 * n + 8 * p2(n))) +
          2 * p2(al) * n *
              (9 + 93 * n + 352 * p2(n) + 592 * p3(n) + 384 * p4(n) +
               J2 * (3 + 23 * n + 48 * p2(n) + 32 * p3(n)));
    x.b1 = al * (2 * p4(al) * (3 + 8 * n) +
                 n * (1 + 6 * n + 8 * p2(n)) * (9 + 36 * n + 32 * p2(n) + J2 * (5 + 4 * n))) +
           p3(al) * (9 + 60 * n + 144 * p2(n) + 128 * p3(n) + J2 * (1 + 6 * n + 8 * p2(n)));
    x.b2 = J * al * n *
           (J2 * (1 + 6 * n + 8 * p2(n)) - (3 + 8 * n) * (1 + 2 * p2(al) + 6 * n + 8 * p2(n)));
    x.d1 = p2(al) * (J2 * (1 + 2 * n) + (3 + 8 * n) * (3 + 2 * p2(al) + 10 * n + 8 * p2(n)));
    x.d2 = -(J * p2(al) *
             (J2 * (1 + 6 * n + 8 * p2(n)) + (3 + 8 * n) * (3 + 2 * p2(al) + 14 * n + 8 * p2(n))));
    x.e = 2 * p6(al) * (3 + 8 * n) +
          p4(al) * (1 + 2 * n) * (15 + 76 * n + 96 * p2(n) + J2 * (1 + 4 * n)) +
          n * (1 + 7 * n + 14 * p2(n) + 8 * p3(n)) *
              (9 + J4 + 72 * n + 176 * p2(n) + 128 * p3(n) + 2 * J2 * (5 + 12 * n + 8 * p2(n))) +
          p2(al) * (9 + 114 * n + 570 * p2(n) + 1408 * p3(n) + 1696 * p4(n) + 768 * p5(n) +
                    J2 * (1 + 18 * n + 78 * p2(n) + 128 * p3(n) + 64 * p4(n)));
    x.g1 = al * (1 + p2(al) + 5 * n + 4 * p2(n)) *
           (J2 * (1 + 6 * n + 8 * p2(n)) + (3 + 8 * n) * (3 + 2 * p2(al) + 10 * n + 8 * p2(n)));
    x.g2 = -(J * al *
             (J2 * (1 + 7 * n + 14 * p2(n) + 8 * p3(n)) +
              (3 + 8 * n) * (p2(al) * (2 + 6 * n) + 3 * (1 + 7 * n + 14 * p2(n) + 8 * p3(n)))));
    fill_symmetric(x);
    return s;
}

ClosedFormSolution closed_form(const ModelParams& p) {
    const ModelParams u = p.in_decay_units();
    return u.mode == DriveMode::Common ? appendix_a(u.alpha, u.eta, u.j)
                                       : appendix_b(u.alpha, u.eta, u.j);
}

}  // namespace dimerss
