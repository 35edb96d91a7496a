#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace hsda::detail {

using Complex = std::complex<double>;

// Forward (e^{-2 pi i jk/n}) 1D DFT of a fixed length. Decimation in time over
// the prime factors of n; lengths with a prime factor above kMaxDirectRadix go
// through Bluestein's chirp-z on a power-of-two inner plan. Immutable once
// built, so one plan can serve any number of threads.
class FftPlan {
 public:
  static constexpr std::size_t kMaxDirectRadix = 61;

  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }

  // out[k] = sum_j in[j * in_stride] * e^{-2 pi i jk/n}. `out` must not alias `in`.
  void forward(const Complex* in, std::size_t in_stride, Complex* out) const;

 private:
  void work(Complex* out, const Complex* in, std::size_t fstride, std::size_t in_stride,
            const std::size_t* factors) const;
  void butterfly2(Complex* out, std::size_t fstride, std::size_t m) const;
  void butterfly4(Complex* out, std::size_t fstride, std::size_t m) const;
  void butterfly_generic(Complex* out, std::size_t fstride, std::size_t m, std::size_t p) const;
  void bluestein(const Complex* in, std::size_t in_stride, Complex* out) const;

  std::size_t n_;
  std::vector<Complex> twiddles_;
  // (radix, remaining length) pairs, outermost stage first.
  std::vector<std::size_t> factors_;

  // Bluestein state; empty when the direct path is used.
  std::vector<Complex> chirp_;
  std::vector<Complex> kernel_spectrum_;
  std::unique_ptr<FftPlan> inner_;
};

// Process-wide cache of plans keyed by length; safe to call concurrently.
std::shared_ptr<const FftPlan> plan_for(std::size_t n);

}  // namespace hsda::detail
