#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace holonoise {

/// Thin RAII wrappers over FFTW3 plans with owned, aligned buffers.
///
/// Plans are created with FFTW_ESTIMATE so that the chosen algorithm, and
/// therefore the floating-point result, is the same on every run. Plan
/// creation and destruction are serialized internally; execute() on
/// distinct objects may run concurrently.

/// Real-to-complex forward transform of length n (n/2 + 1 outputs).
class RealFft {
public:
    explicit RealFft(std::size_t n);
    ~RealFft();
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t size() const { return n_; }
    std::span<double> input() { return {in_, n_}; }
    std::span<const std::complex<double>> output() const { return {out_, n_ / 2 + 1}; }
    void execute();

private:
    std::size_t n_;
    double* in_;
    std::complex<double>* out_;
    void* plan_;
};

enum class FftDirection { Forward, Backward };

/// In-place complex transform of length n (unnormalized in both directions).
class ComplexFft {
public:
    ComplexFft(std::size_t n, FftDirection direction);
    ~ComplexFft();
    ComplexFft(const ComplexFft&) = delete;
    ComplexFft& operator=(const ComplexFft&) = delete;

    std::size_t size() const { return n_; }
    std::span<std::complex<double>> data() { return {buf_, n_}; }
    void execute();

private:
    std::size_t n_;
    std::complex<double>* buf_;
    void* plan_;
};

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

} // namespace holonoise
