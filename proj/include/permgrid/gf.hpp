#pragma once

#include <memory>
#include <string>
#include <vector>

#include "permgrid/series.hpp"

namespace permgrid {

/// Expression tree over {constant, z, +, -, *, /, sqrt, integer powers},
/// evaluated by exact rational series arithmetic. Division cancels a common
/// power of z when the denominator has no constant term; square roots
/// require constant term 1.
class SeriesExpr {
 public:
  enum class Kind { Constant, Z, Add, Sub, Mul, Div, Neg, Sqrt, Pow };

  static SeriesExpr constant(BigRational v);
  static SeriesExpr z();
  static SeriesExpr add(SeriesExpr a, SeriesExpr b);
  static SeriesExpr sub(SeriesExpr a, SeriesExpr b);
  static SeriesExpr mul(SeriesExpr a, SeriesExpr b);
  static SeriesExpr div(SeriesExpr a, SeriesExpr b);
  static SeriesExpr neg(SeriesExpr a);
  static SeriesExpr sqrt(SeriesExpr a);
  static SeriesExpr pow(SeriesExpr a, int exponent);

  Kind kind() const { return kind_; }
  std::string to_string() const;
  QSeries expand(int order) const;

 private:
  SeriesExpr() = default;
  Kind kind_ = Kind::Z;
  BigRational value_;
  int exponent_ = 0;
  std::shared_ptr<const SeriesExpr> lhs_, rhs_;
};

/// Parses expressions like "(1+z-sqrt(1-6*z+5*z^2))/(2*z*(2-z))".
SeriesExpr parse_series_expr(const std::string& text);

QSeries expand(const SeriesExpr& e, int order);

/// Exact series division with automatic cancellation of a shared z^k factor.
/// The result is k orders shorter than the inputs (those coefficients are
/// all the inputs determine). Throws on an uncancelled pole or a zero
/// denominator.
QSeries divide(const QSeries& num, const QSeries& den);

/// Exact square root of a series with constant term 1.
QSeries sqrt_series(const QSeries& f);

/// Drops rationals to integers; throws if any coefficient is non-integral.
ZSeries to_integer_series(const QSeries& s);

/// Closed forms for the counting series of classes A and B. Class C has no
/// usable printed closed form; use verify_algebraic instead.
SeriesExpr closed_form(char cls);

/// Expansion of the class closed form as an integer sequence c_0..c_order.
std::vector<BigInt> closed_form_sequence(char cls, int order);

/// True iff the grammar-solved series of the class satisfies its transcribed
/// polynomial system with zero residual up to `order`.
bool verify_algebraic(char cls, int order);

}  // namespace permgrid
