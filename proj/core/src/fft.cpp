#include "holonoise/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <stdexcept>

namespace holonoise {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

template <typename T>
T* aligned_alloc_or_throw(std::size_t count) {
    void* p = fftw_malloc(sizeof(T) * count);
    if (p == nullptr) {
        throw std::bad_alloc();
    }
    return static_cast<T*>(p);
}

} // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

RealFft::RealFft(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("RealFft: zero length");
    }
    in_ = aligned_alloc_or_throw<double>(n);
    out_ = aligned_alloc_or_throw<std::complex<double>>(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_,
                                 reinterpret_cast<fftw_complex*>(out_), FFTW_ESTIMATE);
}

RealFft::~RealFft() {
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    fftw_free(in_);
    fftw_free(out_);
}

void RealFft::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

ComplexFft::ComplexFft(std::size_t n, FftDirection direction) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("ComplexFft: zero length");
    }
    buf_ = aligned_alloc_or_throw<std::complex<double>>(n);
    const int sign = direction == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    auto* raw = reinterpret_cast<fftw_complex*>(buf_);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, sign, FFTW_ESTIMATE);
}

ComplexFft::~ComplexFft() {
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    fftw_free(buf_);
}

void ComplexFft::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

} // namespace holonoise
