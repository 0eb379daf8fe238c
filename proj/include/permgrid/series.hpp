#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace permgrid {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense truncated power series in z with exact coefficients c_0..c_N.
/// Arithmetic requires matching orders.
template <typename T>
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1) {}
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }

  static TruncatedSeries constant(const T& value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static TruncatedSeries monomial(int degree, int order, const T& coeff = T(1)) {
    TruncatedSeries s(order);
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = coeff;
    return s;
  }
  /// 1/(1-z) truncated: all coefficients 1.
  static TruncatedSeries geometric(int order) {
    TruncatedSeries s(order);
    for (auto& c : s.c_) c = T(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<T>& coefficients() const { return c_; }

  bool operator==(const TruncatedSeries&) const = default;

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    return mul_to(a, b, a.order());
  }

  /// Product truncated at `limit` (coefficients above it are left zero).
  static TruncatedSeries mul_to(const TruncatedSeries& a, const TruncatedSeries& b, int limit) {
    TruncatedSeries out(a.order());
    const int top = std::min(limit, a.order());
    for (int i = 0; i <= top; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= top; ++j) {
        if (b[j] == 0) continue;
        out.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series order mismatch");
  }
  std::vector<T> c_;
};

using ZSeries = TruncatedSeries<BigInt>;
using QSeries = TruncatedSeries<BigRational>;

}  // namespace permgrid
