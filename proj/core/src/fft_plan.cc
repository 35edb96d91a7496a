#include "fft_plan.h"

#include <array>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace hsda::detail {
namespace {

// e^{-2 pi i num/den}; num reduced first so large indices keep full precision.
Complex unit_root(std::size_t num, std::size_t den) {
  const double phase = -2.0 * std::numbers::pi * static_cast<double>(num % den) /
                       static_cast<double>(den);
  return {std::cos(phase), std::sin(phase)};
}

std::size_t largest_prime_factor(std::size_t n) {
  std::size_t largest = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      largest = p;
      n /= p;
    }
  }
  return n > 1 ? n : largest;
}

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t p = 4;
  const auto floor_sqrt = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  do {
    while (n % p != 0) {
      switch (p) {
        case 4: p = 2; break;
        case 2: p = 3; break;
        default: p += 2; break;
      }
      if (p > floor_sqrt) p = n;
    }
    n /= p;
    out.push_back(p);
    out.push_back(n);
  } while (n > 1);
  return out;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  assert(n >= 1);
  if (n == 1) {
    factors_ = {1, 1};
    return;
  }
  if (largest_prime_factor(n) > kMaxDirectRadix) {
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    inner_ = std::make_unique<FftPlan>(m);

    // chirp[j] = e^{-i pi j^2 / n}; j^2 taken mod 2n to keep the phase small.
    chirp_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t sq = (j * j) % (2 * n);
      chirp_[j] = unit_root(sq, 2 * n);
    }
    std::vector<Complex> kernel(m, Complex{});
    kernel[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n; ++j) {
      kernel[j] = std::conj(chirp_[j]);
      kernel[m - j] = std::conj(chirp_[j]);
    }
    kernel_spectrum_.resize(m);
    inner_->forward(kernel.data(), 1, kernel_spectrum_.data());
    return;
  }

  twiddles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) twiddles_[i] = unit_root(i, n);
  factors_ = factorize(n);
}

FftPlan::~FftPlan() = default;

void FftPlan::forward(const Complex* in, std::size_t in_stride, Complex* out) const {
  if (n_ == 1) {
    out[0] = in[0];
    return;
  }
  if (inner_) {
    bluestein(in, in_stride, out);
    return;
  }
  work(out, in, 1, in_stride, factors_.data());
}

void FftPlan::work(Complex* out, const Complex* in, std::size_t fstride, std::size_t in_stride,
                   const std::size_t* factors) const {
  const std::size_t p = factors[0];
  const std::size_t m = factors[1];
  Complex* const begin = out;
  Complex* const end = out + p * m;

  if (m == 1) {
    for (; out != end; ++out, in += fstride * in_stride) *out = *in;
  } else {
    for (; out != end; out += m, in += fstride * in_stride) {
      work(out, in, fstride * p, in_stride, factors + 2);
    }
  }

  switch (p) {
    case 2: butterfly2(begin, fstride, m); break;
    case 4: butterfly4(begin, fstride, m); break;
    default: butterfly_generic(begin, fstride, m, p); break;
  }
}

void FftPlan::butterfly2(Complex* out, std::size_t fstride, std::size_t m) const {
  Complex* out2 = out + m;
  for (std::size_t k = 0; k < m; ++k) {
    const Complex t = out2[k] * twiddles_[k * fstride];
    out2[k] = out[k] - t;
    out[k] += t;
  }
}

void FftPlan::butterfly4(Complex* out, std::size_t fstride, std::size_t m) const {
  for (std::size_t k = 0; k < m; ++k) {
    const Complex s0 = out[k + m] * twiddles_[k * fstride];
    const Complex s1 = out[k + 2 * m] * twiddles_[2 * k * fstride];
    const Complex s2 = out[k + 3 * m] * twiddles_[3 * k * fstride];
    const Complex s5 = out[k] - s1;
    out[k] += s1;
    const Complex s3 = s0 + s2;
    const Complex s4 = s0 - s2;
    out[k + 2 * m] = out[k] - s3;
    out[k] += s3;
    // Multiplying s4 by -i for the forward direction.
    out[k + m] = {s5.real() + s4.imag(), s5.imag() - s4.real()};
    out[k + 3 * m] = {s5.real() - s4.imag(), s5.imag() + s4.real()};
  }
}

void FftPlan::butterfly_generic(Complex* out, std::size_t fstride, std::size_t m,
                                std::size_t p) const {
  std::array<Complex, kMaxDirectRadix> scratch;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t q = 0, k = u; q < p; ++q, k += m) scratch[q] = out[k];
    for (std::size_t q1 = 0, k = u; q1 < p; ++q1, k += m) {
      std::size_t tw = 0;
      Complex acc = scratch[0];
      for (std::size_t q = 1; q < p; ++q) {
        tw += fstride * k;
        if (tw >= n_) tw -= n_;
        acc += scratch[q] * twiddles_[tw];
      }
      out[k] = acc;
    }
  }
}

void FftPlan::bluestein(const Complex* in, std::size_t in_stride, Complex* out) const {
  const std::size_t m = inner_->size();
  std::vector<Complex> a(m, Complex{});
  std::vector<Complex> spectrum(m);
  for (std::size_t j = 0; j < n_; ++j) a[j] = in[j * in_stride] * chirp_[j];
  inner_->forward(a.data(), 1, spectrum.data());
  // Circular convolution with the kernel; the inverse is done as conj(F(conj(.))).
  for (std::size_t j = 0; j < m; ++j) spectrum[j] = std::conj(spectrum[j] * kernel_spectrum_[j]);
  inner_->forward(spectrum.data(), 1, a.data());
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < n_; ++j) out[j] = std::conj(a[j]) * scale * chirp_[j];
}

std::shared_ptr<const FftPlan> plan_for(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, std::shared_ptr<const FftPlan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const FftPlan>(n);
  return slot;
}

}  // namespace hsda::detail
