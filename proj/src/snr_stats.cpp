#include "cogsim/snr_stats.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cogsim/channel.hpp"
#include "cogsim/errors.hpp"

namespace cogsim {

double cdf_theta_r(double theta_r_db) {
    return 1.0 / (1.0 + std::pow(10.0, -theta_r_db / 10.0));
}

double pdf_theta_r(double theta_r_db) {
    // even in theta; evaluating at -|theta| keeps the power term below 1
    const double t = std::pow(10.0, -std::abs(theta_r_db) / 10.0);
    return std::numbers::ln10 * t / (10.0 * (1.0 + t) * (1.0 + t));
}

double pdf_theta_s(double theta_s_db, double sigma_s_db) {
    if (!(sigma_s_db > 0.0))
        throw DomainError("shadowing density is degenerate for sigma_s <= 0");
    const double var2 = 4.0 * sigma_s_db * sigma_s_db;
    return std::exp(-theta_s_db * theta_s_db / var2) / std::sqrt(std::numbers::pi * var2);
}

double SnrCdfModel::median_db() const {
    return target_snr_db + kPathLossSlopeDb * std::log10(d0_km / d1_km);
}

double SnrCdfModel::offset(double gamma1_db) const { return gamma1_db - median_db(); }

namespace {

struct Simpson {
    double tolerance;
    int max_depth;

    template <class F>
    double panel(F& f, double a, double fa, double b, double fb, double m, double fm,
                 double whole, double eps, int depth) const {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
        if (depth >= max_depth)
            throw QuadratureError("adaptive Simpson did not converge on [" + std::to_string(a) +
                                  ", " + std::to_string(b) + "]");
        return panel(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth + 1) +
               panel(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth + 1);
    }

    template <class F>
    double integrate(F f, double a, double b, int panels) const {
        const double h = (b - a) / panels;
        const double eps = tolerance / panels;
        double total = 0.0;
        for (int i = 0; i < panels; ++i) {
            const double lo = a + i * h;
            const double hi = (i + 1 == panels) ? b : lo + h;
            const double mid = 0.5 * (lo + hi);
            const double flo = f(lo);
            const double fhi = f(hi);
            const double fmid = f(mid);
            const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
            total += panel(f, lo, flo, hi, fhi, mid, fmid, whole, eps, 0);
        }
        return total;
    }
};

}  // namespace

double cdf_gamma1_db(const SnrCdfModel& model, double gamma1_db) {
    if (!(model.sigma_s_db >= 0.0)) throw DomainError("sigma_s must be non-negative");
    const double m = model.offset(gamma1_db);
    if (model.sigma_s_db == 0.0) return cdf_theta_r(m);

    const double sigma = model.sigma_s_db;
    const double half_width = 10.0 * sigma * std::numbers::sqrt2;
    auto integrand = [&](double theta_s) {
        return pdf_theta_s(theta_s, sigma) * cdf_theta_r(m - theta_s);
    };
    const Simpson simpson{1e-10, 40};
    return simpson.integrate(integrand, -half_width, half_width, 32);
}

}  // namespace cogsim
