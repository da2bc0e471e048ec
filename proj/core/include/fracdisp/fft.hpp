#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace fracdisp {

namespace detail {
struct FftPlans;
}

/// Unnormalized real-to-half-complex transform pair of length n.
///
/// Plans are created once per length and shared; executing them is
/// thread-safe. Plans use estimate-mode planning so that results are
/// reproducible bit for bit across runs.
class RealFft {
public:
    explicit RealFft(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t spectrum_size() const noexcept { return n_ / 2 + 1; }

    /// out[k] = sum_j in[j] exp(-2 pi i j k / n), k = 0..n/2.
    void forward(std::span<const double> in, std::span<std::complex<double>> out) const;

    /// out[j] = sum_k c[k] exp(+2 pi i j k / n) over the full Hermitian spectrum.
    /// `in` is used as scratch and is overwritten.
    void backward(std::span<std::complex<double>> in, std::span<double> out) const;

private:
    std::size_t n_;
    const detail::FftPlans* plans_;
};

/// Unnormalized complex transform pair of length n.
class ComplexFft {
public:
    explicit ComplexFft(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
    void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;

private:
    std::size_t n_;
    const detail::FftPlans* plans_;
};

}  // namespace fracdisp
