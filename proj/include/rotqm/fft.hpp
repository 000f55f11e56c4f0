#pragma once

// Self-contained complex FFT. Power-of-two sizes use the iterative radix-2
// Cooley-Tukey transform; other sizes fall back to Bluestein's chirp-z
// algorithm on a padded power-of-two convolution. Plans are immutable after
// construction and safe to share across threads.
//
// Convention: forward X_k = sum_n x_n exp(-2 pi i n k / N), inverse divides
// by N. This matches the wavenumber layout in GridSpec::wavenumber.

#include <complex>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>
#include <cmath>

namespace rotqm {

class Fft {
 public:
  using cd = std::complex<double>;

  explicit Fft(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Fft: size must be positive");
    pow2_ = (n & (n - 1)) == 0;
    if (pow2_) {
      init_pow2_tables(n, bitrev_, roots_);
    } else {
      init_bluestein();
    }
  }

  std::size_t size() const { return n_; }

  void forward(cd* x) const { transform(x, false); }
  void inverse(cd* x) const { transform(x, true); }

  /// Strided transform; gathers into a scratch buffer.
  void forward_strided(cd* base, std::size_t stride) const { strided(base, stride, false); }
  void inverse_strided(cd* base, std::size_t stride) const { strided(base, stride, true); }

 private:
  std::size_t n_;
  bool pow2_ = true;
  std::vector<std::size_t> bitrev_;
  std::vector<cd> roots_;  // exp(-2 pi i j / n), j = 0..n/2-1

  // Bluestein state
  std::size_t m_ = 0;                  // padded power-of-two size >= 2n-1
  std::vector<cd> chirp_;              // exp(-i pi j^2 / n)
  std::vector<cd> bhat_;               // forward FFT of the chirp kernel
  std::unique_ptr<Fft> conv_;

  static void init_pow2_tables(std::size_t n, std::vector<std::size_t>& bitrev, std::vector<cd>& roots) {
    bitrev.resize(n);
    bitrev[0] = 0;
    std::size_t log2n = 0;
    while ((std::size_t(1) << log2n) < n) ++log2n;
    for (std::size_t i = 1; i < n; ++i) bitrev[i] = (bitrev[i >> 1] >> 1) | ((i & 1) << (log2n - 1));
    roots.resize(n / 2);
    const double theta = -6.283185307179586476925286766559 / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) roots[j] = std::polar(1.0, theta * static_cast<double>(j));
    if (n == 1) roots.assign(1, cd(1.0, 0.0));
  }

  void init_bluestein() {
    m_ = 1;
    while (m_ < 2 * n_ - 1) m_ <<= 1;
    conv_ = std::make_unique<Fft>(m_);
    chirp_.resize(n_);
    const double pi = 3.1415926535897932384626433832795;
    for (std::size_t j = 0; j < n_; ++j) {
      // j^2 mod 2n keeps the phase argument small for large sizes
      const std::size_t j2 = (j * j) % (2 * n_);
      chirp_[j] = std::polar(1.0, -pi * static_cast<double>(j2) / static_cast<double>(n_));
    }
    std::vector<cd> b(m_, cd(0.0, 0.0));
    b[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n_; ++j) {
      b[j] = std::conj(chirp_[j]);
      b[m_ - j] = std::conj(chirp_[j]);
    }
    conv_->forward(b.data());
    bhat_ = std::move(b);
  }

  void pow2_transform(cd* x, bool inverse) const {
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = bitrev_[i];
      if (j > i) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len >> 1;
      const std::size_t step = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          cd w = roots_[k * step];
          if (inverse) w = std::conj(w);
          const cd u = x[start + k];
          const cd v = x[start + k + half] * w;
          x[start + k] = u + v;
          x[start + k + half] = u - v;
        }
      }
    }
    if (inverse) {
      const double s = 1.0 / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) x[i] *= s;
    }
  }

  void bluestein_forward(cd* x) const {
    std::vector<cd> a(m_, cd(0.0, 0.0));
    for (std::size_t j = 0; j < n_; ++j) a[j] = x[j] * chirp_[j];
    conv_->forward(a.data());
    for (std::size_t j = 0; j < m_; ++j) a[j] *= bhat_[j];
    conv_->inverse(a.data());
    for (std::size_t k = 0; k < n_; ++k) x[k] = a[k] * chirp_[k];
  }

  void transform(cd* x, bool inverse) const {
    if (n_ == 1) return;
    if (pow2_) {
      pow2_transform(x, inverse);
      return;
    }
    if (!inverse) {
      bluestein_forward(x);
      return;
    }
    // inverse via conjugation: ifft(x) = conj(fft(conj(x))) / n
    for (std::size_t i = 0; i < n_; ++i) x[i] = std::conj(x[i]);
    bluestein_forward(x);
    const double s = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = std::conj(x[i]) * s;
  }

  void strided(cd* base, std::size_t stride, bool inverse) const {
    if (stride == 1) {
      transform(base, inverse);
      return;
    }
    std::vector<cd> buf(n_);
    for (std::size_t i = 0; i < n_; ++i) buf[i] = base[i * stride];
    transform(buf.data(), inverse);
    for (std::size_t i = 0; i < n_; ++i) base[i * stride] = buf[i];
  }
};

}  // namespace rotqm
