#include "rblab/fft.hpp"

#include <cmath>

#include "rblab/errors.hpp"

namespace rblab {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw InvalidParameter("fft: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double two_pi = 6.283185307179586476925286766559;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = two_pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& v : a) v /= static_cast<double>(n);
  }
}

std::vector<double> apply_fourier_multiplier(const std::vector<double>& x, double circumference,
                                             const std::vector<double>& symbol) {
  const std::size_t n = x.size();
  if (symbol.size() != n) throw DimensionError("apply_fourier_multiplier: symbol length mismatch");
  if (circumference <= 0.0) throw InvalidParameter("apply_fourier_multiplier: circumference must be positive");
  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
  fft_inplace(buf, false);
  for (std::size_t i = 0; i < n; ++i) buf[i] *= symbol[i];
  fft_inplace(buf, true);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = buf[i].real();
  return out;
}

}  // namespace rblab
