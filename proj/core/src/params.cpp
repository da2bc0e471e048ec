#include "fracdisp/params.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fracdisp/errors.hpp"

namespace fracdisp {

namespace {

// Beyond this index the resonant terms (t D^alpha d_x)^N are far below
// double precision at any time we can simulate.
constexpr long kMaxResonanceIndex = 1'000'000;

long parse_long(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_alpha_range(double a) {
    if (!(a > 1.0 && a < 3.0)) {
        throw std::invalid_argument("alpha must lie in (1, 3), got " + std::to_string(a));
    }
}

Regime from_index_below_two(long n_floor, bool resonant) {
    Regime r;
    r.kind = resonant ? Regime::Case::II : Regime::Case::III;
    r.n = static_cast<int>(n_floor);
    return r;
}

}  // namespace

Rational Rational::reduced(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num, den);
    return {num / g, den / g};
}

AlphaInput AlphaInput::from_rational(long num, long den) {
    const Rational r = Rational::reduced(num, den);
    return {r.value(), r};
}

AlphaInput AlphaInput::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty alpha");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return from_rational(parse_long(trim(text.substr(0, slash))),
                             parse_long(trim(text.substr(slash + 1))));
    }
    if (text.find_first_of(".eE") == std::string_view::npos) {
        return from_rational(parse_long(text), 1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return from_double(v);
}

std::string Regime::to_string() const {
    switch (kind) {
        case Case::I: return "CaseI";
        case Case::II: return "CaseII(" + std::to_string(n) + ")";
        case Case::III: return "CaseIII(" + std::to_string(n) + ")";
    }
    return "unknown";
}

Regime classify_alpha(const AlphaInput& alpha, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("resonance tolerance must be nonnegative");

    if (alpha.exact) {
        const Rational r = Rational::reduced(alpha.exact->num, alpha.exact->den);
        require_alpha_range(r.value());
        // (N+1)/N is already in lowest terms, so the match is on num = den + 1.
        if (r.num == r.den + 1) return {Regime::Case::II, static_cast<int>(r.den)};
        if (r.num > 2 * r.den) return {Regime::Case::I, 0};
        // 1/(alpha-1) = den/(num-den) is not an integer here.
        const long n = r.den / (r.num - r.den);
        return from_index_below_two(n, false);
    }

    const double a = alpha.value;
    require_alpha_range(a);
    if (std::abs(a - 2.0) <= tol) return {Regime::Case::II, 1};
    if (a > 2.0) return {Regime::Case::I, 0};

    const double inv = 1.0 / (a - 1.0);
    const double nearest = std::round(inv);
    if (nearest > static_cast<double>(kMaxResonanceIndex)) {
        throw AmbiguousRegimeError("alpha = " + std::to_string(a) +
                                   " is too close to 1 to resolve its resonance index");
    }
    const long n_near = static_cast<long>(nearest);
    const double resonance = (static_cast<double>(n_near) + 1.0) / static_cast<double>(n_near);
    const double gap = 1.0 / (static_cast<double>(n_near) * (static_cast<double>(n_near) + 1.0));
    if (std::abs(a - resonance) <= tol) {
        if (gap <= 2.0 * tol) {
            throw AmbiguousRegimeError("alpha = " + std::to_string(a) +
                                       " lies within tolerance of several resonances");
        }
        return {Regime::Case::II, static_cast<int>(n_near)};
    }
    const long n_floor = static_cast<long>(std::floor(inv));
    return from_index_below_two(n_floor, false);
}

ModelParams ModelParams::make(const AlphaInput& alpha, double beta, double tol) {
    if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
    ModelParams p;
    p.regime = classify_alpha(alpha, tol);
    p.alpha = alpha.exact ? alpha.exact->value() : alpha.value;
    p.alpha_exact = alpha.exact;
    p.beta = beta;
    return p;
}

}  // namespace fracdisp
