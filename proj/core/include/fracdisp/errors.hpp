#pragma once

#include <stdexcept>
#include <string>

namespace fracdisp {

// Precondition violations throw std::invalid_argument. The types below cover
// failures that callers may want to distinguish.

/// Adaptive quadrature could not reach the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double error_estimate)
        : std::runtime_error(what), error_estimate_(error_estimate) {}
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

/// A time integration produced non-finite values.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, double last_good_time)
        : std::runtime_error(what), last_good_time_(last_good_time) {}
    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

/// An alpha value sits too close to a resonance to be classified reliably.
class AmbiguousRegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A field has too much mass near the edge of the truncated domain for a
/// whole-line quantity to be trusted.
class TailMassError : public std::runtime_error {
public:
    TailMassError(const std::string& what, double tail_fraction)
        : std::runtime_error(what), tail_fraction_(tail_fraction) {}
    double tail_fraction() const noexcept { return tail_fraction_; }

private:
    double tail_fraction_;
};

}  // namespace fracdisp
