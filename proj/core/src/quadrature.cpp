#include "fracdisp/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracdisp/errors.hpp"

namespace fracdisp {

void QuadratureSpec::validate() const {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    if (panel_count < 1) throw std::invalid_argument("quadrature panel count must be >= 1");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature abs_tol must be positive");
}

GaussLegendreRule::GaussLegendreRule(int order) : nodes_(order), weights_(order) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    const int n = order;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p0 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p0;
                p0 = p1;
                p1 = ((2.0 * j - 1.0) * z * p0 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        // Recompute the derivative at the converged root.
        double p1 = 1.0;
        double p0 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p2 = p0;
            p0 = p1;
            p1 = ((2.0 * j - 1.0) * z * p0 - (j - 1.0) * p2) / j;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes_[i] = -z;
        nodes_[n - 1 - i] = z;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

const GaussLegendreRule& GaussLegendreRule::get(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot.reset(new GaussLegendreRule(order));
    return *slot;
}

CompositeRule composite_rule(double a, double b, int order, int panel_count) {
    if (panel_count < 1) throw std::invalid_argument("quadrature panel count must be >= 1");
    const GaussLegendreRule& rule = GaussLegendreRule::get(order);
    CompositeRule out;
    out.nodes.reserve(static_cast<std::size_t>(order) * panel_count);
    out.weights.reserve(out.nodes.capacity());
    const double h = (b - a) / panel_count;
    for (int p = 0; p < panel_count; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int i = 0; i < order; ++i) {
            out.nodes.push_back(mid + 0.5 * h * rule.nodes()[i]);
            out.weights.push_back(0.5 * h * rule.weights()[i]);
        }
    }
    return out;
}

namespace detail {
void raise_quadrature_failure(double error_estimate, double abs_tol) {
    throw QuadratureError("quadrature error estimate " + std::to_string(error_estimate) +
                              " exceeds tolerance " + std::to_string(abs_tol),
                          error_estimate);
}
}  // namespace detail

}  // namespace fracdisp
