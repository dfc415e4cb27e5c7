#include "dimerss/robustness.hpp"

#include <cmath>

#include "dimerss/closed_form.hpp"
#include "dimerss/entanglement.hpp"
#include "dimerss/parallel.hpp"

namespace dimerss {

namespace {

ConcurrenceResult evaluate(double alpha, double eta, double j, DriveMode mode) {
    return concurrence(closed_form_state(ModelParams{alpha, eta, j, 1.0, mode}));
}

double margin_at(double alpha, double eta, double j, DriveMode mode) {
    return evaluate(alpha, eta, j, mode).margin();
}

}  // namespace

AlphaOptimum max_concurrence_over_alpha(double eta, double j, DriveMode mode,
                                        const SearchProtocol& proto) {
    if (eta < 0.0) throw InvalidParameter("max_concurrence_over_alpha: eta must be non-negative");
    const int n = std::max(proto.alpha_grid, 3);
    const double step = proto.alpha_max / (n - 1);

    int best = 0;
    double best_margin = -INFINITY;
    for (int k = 0; k < n; ++k) {
        const double m = margin_at(k * step, eta, j, mode);
        if (m > best_margin) {
            best_margin = m;
            best = k;
        }
    }

    // Golden section on [alpha_{best-1}, alpha_{best+1}].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::max(best - 1, 0) * step;
    double hi = std::min(best + 1, n - 1) * step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = margin_at(x1, eta, j, mode);
    double f2 = margin_at(x2, eta, j, mode);
    while (hi - lo > proto.alpha_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = margin_at(x2, eta, j, mode);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = margin_at(x1, eta, j, mode);
        }
    }

    AlphaOptimum out;
    double alpha = best * step;
    double margin = best_margin;
    const double mid = 0.5 * (lo + hi);
    const double f_mid = margin_at(mid, eta, j, mode);
    if (f_mid > margin) {
        alpha = mid;
        margin = f_mid;
    }
    out.margin = margin;
    if (margin > 0.0) {
        out.alpha_star = alpha;
        out.c_star = evaluate(alpha, eta, j, mode).c;
    }
    return out;
}

double eta_threshold(double j, DriveMode mode, const SearchProtocol& proto) {
    auto entangled = [&](double eta) {
        return max_concurrence_over_alpha(eta, j, mode, proto).c_star >= proto.collapse_tol;
    };
    if (!entangled(0.0)) throw NeverEntangled("eta_threshold: no entanglement at zero noise");

    double lo = 0.0;
    double hi = proto.eta_start;
    while (entangled(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > proto.eta_limit) throw NoCollapse("eta_threshold: entanglement survives eta_limit");
    }
    while (hi - lo > proto.eta_rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (entangled(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

SnrPoint snr_point(double j, DriveMode mode, const SearchProtocol& proto) {
    SnrPoint point;
    point.j = j;
    point.mode = mode;
    try {
        if (j < 0.0) throw InvalidParameter("snr_point: J must be non-negative");
        const AlphaOptimum noiseless = max_concurrence_over_alpha(0.0, j, mode, proto);
        point.alpha_star = noiseless.alpha_star;
        point.c_star = noiseless.c_star;
        point.eta_star = eta_threshold(j, mode, proto);
        point.snr = point.alpha_star / std::sqrt(2.0 * point.eta_star);
    } catch (const std::exception& e) {
        point.error = e.what();
    }
    return point;
}

std::vector<SnrPoint> snr_curve(std::span<const double> j_values, DriveMode mode,
                                const SearchProtocol& proto, unsigned threads) {
    std::vector<SnrPoint> points(j_values.size());
    parallel_for(j_values.size(), threads,
                 [&](std::size_t k) { points[k] = snr_point(j_values[k], mode, proto); });
    return points;
}

}  // namespace dimerss
