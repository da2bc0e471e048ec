#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace fracdisp {

/// Composite fixed-order Gauss-Legendre rule on equal panels.
struct QuadratureSpec {
    int order = 64;
    int panel_count = 8;
    double abs_tol = 1e-10;

    void validate() const;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], cached per n.
class GaussLegendreRule {
public:
    static const GaussLegendreRule& get(int order);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

private:
    explicit GaussLegendreRule(int order);
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Flattened composite nodes/weights on [a, b].
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
CompositeRule composite_rule(double a, double b, int order, int panel_count);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Integrates f over [a, b] with `spec.panel_count` and twice as many panels;
/// the finer value is returned and their difference is the error estimate.
/// Throws QuadratureError if the estimate exceeds spec.abs_tol.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec);

namespace detail {
void raise_quadrature_failure(double error_estimate, double abs_tol);
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    const GaussLegendreRule& rule = GaussLegendreRule::get(spec.order);
    auto sum_panels = [&](int panels) {
        const double h = (b - a) / panels;
        double total = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            double acc = 0.0;
            for (int i = 0; i < rule.order(); ++i) {
                acc += rule.weights()[i] * f(mid + 0.5 * h * rule.nodes()[i]);
            }
            total += 0.5 * h * acc;
        }
        return total;
    };
    const double coarse = sum_panels(spec.panel_count);
    const double fine = sum_panels(2 * spec.panel_count);
    QuadratureResult r{fine, std::abs(fine - coarse)};
    if (!(r.error_estimate <= spec.abs_tol)) {
        detail::raise_quadrature_failure(r.error_estimate, spec.abs_tol);
    }
    return r;
}

}  // namespace fracdisp
