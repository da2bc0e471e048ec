#include "fracdisp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fracdisp {

namespace detail {

struct FftPlans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
    fftw_plan c2c_forward = nullptr;
    fftw_plan c2c_backward = nullptr;

    ~FftPlans() {
        for (fftw_plan p : {r2c, c2r, c2c_forward, c2c_backward}) {
            if (p != nullptr) fftw_destroy_plan(p);
        }
    }
};

}  // namespace detail

namespace {

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

enum class PlanKind { Real, Complex };

// The FFTW planner is not thread-safe; plan creation is serialized here while
// execution through the new-array interface may proceed concurrently.
const detail::FftPlans* plans_for(std::size_t n, PlanKind kind) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, PlanKind>, std::unique_ptr<detail::FftPlans>> cache;

    if (n == 0) throw std::invalid_argument("transform length must be positive");
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, kind}];
    if (!slot) {
        auto plans = std::make_unique<detail::FftPlans>();
        const int len = static_cast<int>(n);
        if (kind == PlanKind::Real) {
            std::vector<double> real(n);
            std::vector<std::complex<double>> half(n / 2 + 1);
            auto* h = reinterpret_cast<fftw_complex*>(half.data());
            plans->r2c = fftw_plan_dft_r2c_1d(len, real.data(), h, kPlanFlags);
            plans->c2r = fftw_plan_dft_c2r_1d(len, h, real.data(), kPlanFlags);
        } else {
            std::vector<std::complex<double>> a(n), b(n);
            auto* pa = reinterpret_cast<fftw_complex*>(a.data());
            auto* pb = reinterpret_cast<fftw_complex*>(b.data());
            plans->c2c_forward = fftw_plan_dft_1d(len, pa, pb, FFTW_FORWARD, kPlanFlags);
            plans->c2c_backward = fftw_plan_dft_1d(len, pa, pb, FFTW_BACKWARD, kPlanFlags);
        }
        slot = std::move(plans);
    }
    return slot.get();
}

void check(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n), plans_(plans_for(n, PlanKind::Real)) {}

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
    check(in.size() == n_ && out.size() == spectrum_size(), "RealFft::forward size mismatch");
    // r2c plans preserve their input.
    fftw_execute_dft_r2c(plans_->r2c, const_cast<double*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
}

void RealFft::backward(std::span<std::complex<double>> in, std::span<double> out) const {
    check(in.size() == spectrum_size() && out.size() == n_, "RealFft::backward size mismatch");
    fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(in.data()), out.data());
}

ComplexFft::ComplexFft(std::size_t n) : n_(n), plans_(plans_for(n, PlanKind::Complex)) {}

void ComplexFft::forward(std::span<const std::complex<double>> in,
                         std::span<std::complex<double>> out) const {
    check(in.size() == n_ && out.size() == n_, "ComplexFft::forward size mismatch");
    fftw_execute_dft(plans_->c2c_forward,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

void ComplexFft::backward(std::span<const std::complex<double>> in,
                          std::span<std::complex<double>> out) const {
    check(in.size() == n_ && out.size() == n_, "ComplexFft::backward size mismatch");
    fftw_execute_dft(plans_->c2c_backward,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace fracdisp
