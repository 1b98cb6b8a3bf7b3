#pragma once

#include <complex>
#include <vector>

namespace rblab {

// In-place iterative radix-2 FFT; size must be a power of two.
// Forward: X_k = sum_j x_j e^{-2*pi*i*jk/n}. Inverse includes the 1/n factor.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Signed integer frequency index for bin j of an n-point transform:
// 0, 1, ..., n/2, -(n/2-1), ..., -1.
inline long long fft_signed_index(int j, int n) {
  return (j <= n / 2) ? j : static_cast<long long>(j) - n;
}

// Apply a real even Fourier multiplier m(xi_j) to a real signal on a circle of
// circumference L sampled at n points: xi_j = 2*pi*j~/L with j~ the signed
// index. Output is real (imaginary residue of order 1e-16 is dropped).
std::vector<double> apply_fourier_multiplier(const std::vector<double>& x, double circumference,
                                             const std::vector<double>& symbol);

}  // namespace rblab
