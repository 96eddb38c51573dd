#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigrate/rational.hpp"
#include "sigrate/word.hpp"

namespace sigrate {

// A level-truncated element of the tensor algebra over R^d, stored densely:
// one contiguous block per level, level n holding d^n coefficients indexed by
// the base-d encoding of words (see word_index). Values are immutable once
// built by the factory functions below; in-place mutation is limited to the
// construction phase.
//
// Scalar is either Rational (exact mode) or double (floating mode, used by
// the Monte Carlo estimator only). Mixed-mode operations do not exist.
template <typename Scalar>
class TensorSeries {
 public:
  TensorSeries(int dimension, int truncation_level)
      : d_(dimension), level_(truncation_level) {
    if (d_ < 2 || d_ > 9) throw std::invalid_argument("dimension must be in [2, 9]");
    if (level_ < 0) throw std::invalid_argument("truncation level must be >= 0");
    blocks_.resize(static_cast<std::size_t>(level_) + 1);
    for (int n = 0; n <= level_; ++n)
      blocks_[static_cast<std::size_t>(n)].assign(block_size(d_, n), Scalar(0));
  }

  static TensorSeries unit(int dimension, int truncation_level) {
    TensorSeries s(dimension, truncation_level);
    s.at(0, 0) = Scalar(1);
    return s;
  }

  int dimension() const { return d_; }
  int truncation_level() const { return level_; }

  Scalar& at(int n, std::size_t index) { return blocks_[check_level(n)][index]; }
  const Scalar& at(int n, std::size_t index) const { return blocks_[check_level(n)][index]; }

  std::span<const Scalar> block(int n) const { return blocks_[check_level(n)]; }
  std::span<Scalar> block(int n) { return blocks_[check_level(n)]; }

  const Scalar& coefficient(const Word& w) const {
    if (static_cast<int>(w.length()) > level_)
      throw std::invalid_argument("word longer than truncation level");
    return at(static_cast<int>(w.length()), word_index(w, d_));
  }

  void set_coefficient(const Word& w, Scalar value) {
    if (static_cast<int>(w.length()) > level_)
      throw std::invalid_argument("word longer than truncation level");
    at(static_cast<int>(w.length()), word_index(w, d_)) = std::move(value);
  }

  friend bool operator==(const TensorSeries& a, const TensorSeries& b) {
    return a.d_ == b.d_ && a.level_ == b.level_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t check_level(int n) const {
    if (n < 0 || n > level_) throw std::invalid_argument("level out of range");
    return static_cast<std::size_t>(n);
  }

  int d_;
  int level_;
  std::vector<std::vector<Scalar>> blocks_;
};

using RationalSeries = TensorSeries<Rational>;
using FloatSeries = TensorSeries<double>;

namespace detail {

template <typename Scalar>
void require_compatible(const TensorSeries<Scalar>& a, const TensorSeries<Scalar>& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("tensor series dimension mismatch");
  if (a.truncation_level() != b.truncation_level())
    throw std::invalid_argument("tensor series truncation level mismatch");
}

}  // namespace detail

template <typename Scalar>
TensorSeries<Scalar> operator+(const TensorSeries<Scalar>& a, const TensorSeries<Scalar>& b) {
  detail::require_compatible(a, b);
  TensorSeries<Scalar> c(a.dimension(), a.truncation_level());
  for (int n = 0; n <= a.truncation_level(); ++n) {
    auto out = c.block(n);
    auto lhs = a.block(n);
    auto rhs = b.block(n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] + rhs[i];
  }
  return c;
}

template <typename Scalar>
TensorSeries<Scalar> operator-(const TensorSeries<Scalar>& a, const TensorSeries<Scalar>& b) {
  detail::require_compatible(a, b);
  TensorSeries<Scalar> c(a.dimension(), a.truncation_level());
  for (int n = 0; n <= a.truncation_level(); ++n) {
    auto out = c.block(n);
    auto lhs = a.block(n);
    auto rhs = b.block(n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] - rhs[i];
  }
  return c;
}

template <typename Scalar>
TensorSeries<Scalar> operator*(const Scalar& s, const TensorSeries<Scalar>& a) {
  TensorSeries<Scalar> c(a.dimension(), a.truncation_level());
  for (int n = 0; n <= a.truncation_level(); ++n) {
    auto out = c.block(n);
    auto in = a.block(n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * in[i];
  }
  return c;
}

// Truncated concatenation (Chen) product: level n of the result is the
// convolution sum_k block_k(a) (x) block_{n-k}(b); levels above the common
// truncation are discarded.
template <typename Scalar>
TensorSeries<Scalar> product(const TensorSeries<Scalar>& a, const TensorSeries<Scalar>& b) {
  detail::require_compatible(a, b);
  const int d = a.dimension();
  const int level = a.truncation_level();
  TensorSeries<Scalar> c(d, level);
  for (int n = 0; n <= level; ++n) {
    auto out = c.block(n);
    for (int k = 0; k <= n; ++k) {
      auto lhs = a.block(k);
      auto rhs = b.block(n - k);
      const std::size_t stride = rhs.size();
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == Scalar(0)) continue;
        const std::size_t base = i * stride;
        for (std::size_t j = 0; j < stride; ++j) out[base + j] += lhs[i] * rhs[j];
      }
    }
  }
  return c;
}

// a^{(x)M} by binary exponentiation. The truncated product is associative, so
// this agrees exactly with the M-fold left-to-right product.
template <typename Scalar>
TensorSeries<Scalar> power(const TensorSeries<Scalar>& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative tensor power");
  TensorSeries<Scalar> result = TensorSeries<Scalar>::unit(a.dimension(), a.truncation_level());
  TensorSeries<Scalar> square = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = product(result, square);
    e >>= 1;
    if (e > 0) square = product(square, square);
  }
  return result;
}

// sum_{k<=level} a^{(x)k} / k!. Requires a vanishing constant term, so the
// series terminates at the truncation level.
template <typename Scalar>
TensorSeries<Scalar> exp(const TensorSeries<Scalar>& a) {
  if (!(a.at(0, 0) == Scalar(0)))
    throw std::invalid_argument("exp requires a vanishing constant term");
  TensorSeries<Scalar> result = TensorSeries<Scalar>::unit(a.dimension(), a.truncation_level());
  TensorSeries<Scalar> term = result;
  for (int k = 1; k <= a.truncation_level(); ++k) {
    term = product(term, a);
    for (int n = 0; n <= a.truncation_level(); ++n) {
      auto blk = term.block(n);
      for (std::size_t i = 0; i < blk.size(); ++i) blk[i] /= k;
    }
    result = result + term;
  }
  return result;
}

// Keeps the level-n block, zeroing all others.
template <typename Scalar>
TensorSeries<Scalar> projection(const TensorSeries<Scalar>& a, int n) {
  if (n < 0 || n > a.truncation_level()) throw std::invalid_argument("projection level out of range");
  TensorSeries<Scalar> c(a.dimension(), a.truncation_level());
  auto out = c.block(n);
  auto in = a.block(n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = in[i];
  return c;
}

// Projective tensor norm of the level-n block when R^d carries the l1 norm:
// it collapses to the sum of absolute coefficients.
template <typename Scalar>
Scalar projective_norm(const TensorSeries<Scalar>& a, int n) {
  Scalar sum(0);
  for (const Scalar& c : a.block(n)) sum += abs_value(c);
  return sum;
}

// Hilbert-Schmidt norm of the level-n block. Floating output in both scalar
// modes; only used for the strict norm-comparison check.
template <typename Scalar>
double hs_norm(const TensorSeries<Scalar>& a, int n) {
  double sum = 0.0;
  for (const Scalar& c : a.block(n)) {
    const double x = to_double(c);
    sum += x * x;
  }
  return std::sqrt(sum);
}

}  // namespace sigrate
