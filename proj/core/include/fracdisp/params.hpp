#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fracdisp {

/// Reduced fraction num/den with den > 0.
struct Rational {
    long num = 0;
    long den = 1;

    static Rational reduced(long num, long den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Dispersion exponent as given by the user: a float, optionally with an
/// exact rational representation (needed to land exactly on a resonance).
struct AlphaInput {
    double value = 2.0;
    std::optional<Rational> exact;

    static AlphaInput from_double(double v) { return {v, std::nullopt}; }
    static AlphaInput from_rational(long num, long den);

    /// Accepts "1.5", "3/2" or "2".  Integers and p/q texts are exact.
    static AlphaInput parse(std::string_view text);
};

/// Regime of the linear large-time expansion.
///
///  - I:       2 < alpha < 3, dispersion does not enter at second order
///  - II(N):   alpha = (N+1)/N, resonant extra term M/N! (t D^alpha d_x)^N G
///  - III(N):  (N+2)/(N+1) < alpha < (N+1)/N, N dispersive correction terms
struct Regime {
    enum class Case { I, II, III };
    Case kind = Case::I;
    int n = 0;  // N for II and III, 0 for I

    bool operator==(const Regime&) const = default;
    std::string to_string() const;
};

inline constexpr double kDefaultResonanceTolerance = 1e-12;

/// Classifies alpha in (1,3).
///
/// Exact rationals of the form (N+1)/N and floats within `tol` of one map to
/// II(N). A float whose nearest resonances are closer together than 2*tol
/// cannot be separated from them and raises AmbiguousRegimeError.
Regime classify_alpha(const AlphaInput& alpha, double tol = kDefaultResonanceTolerance);

struct ModelParams {
    double alpha = 2.0;
    std::optional<Rational> alpha_exact;
    double beta = 0.0;
    Regime regime;

    static ModelParams make(const AlphaInput& alpha, double beta,
                            double tol = kDefaultResonanceTolerance);
    static ModelParams make(double alpha, double beta, double tol = kDefaultResonanceTolerance) {
        return make(AlphaInput::from_double(alpha), beta, tol);
    }
};

}  // namespace fracdisp
