#include "permgrid/gf.hpp"

#include <cctype>

#include "permgrid/grammar.hpp"

namespace permgrid {

SeriesExpr SeriesExpr::constant(BigRational v) {
  SeriesExpr e;
  e.kind_ = Kind::Constant;
  e.value_ = std::move(v);
  return e;
}

SeriesExpr SeriesExpr::z() {
  SeriesExpr e;
  e.kind_ = Kind::Z;
  return e;
}

SeriesExpr SeriesExpr::add(SeriesExpr a, SeriesExpr b) {
  SeriesExpr e;
  e.kind_ = Kind::Add;
  e.lhs_ = std::make_shared<SeriesExpr>(std::move(a));
  e.rhs_ = std::make_shared<SeriesExpr>(std::move(b));
  return e;
}

SeriesExpr SeriesExpr::sub(SeriesExpr a, SeriesExpr b) {
  SeriesExpr e = add(std::move(a), std::move(b));
  e.kind_ = Kind::Sub;
  return e;
}

SeriesExpr SeriesExpr::mul(SeriesExpr a, SeriesExpr b) {
  SeriesExpr e = add(std::move(a), std::move(b));
  e.kind_ = Kind::Mul;
  return e;
}

SeriesExpr SeriesExpr::div(SeriesExpr a, SeriesExpr b) {
  SeriesExpr e = add(std::move(a), std::move(b));
  e.kind_ = Kind::Div;
  return e;
}

SeriesExpr SeriesExpr::neg(SeriesExpr a) {
  SeriesExpr e;
  e.kind_ = Kind::Neg;
  e.lhs_ = std::make_shared<SeriesExpr>(std::move(a));
  return e;
}

SeriesExpr SeriesExpr::sqrt(SeriesExpr a) {
  SeriesExpr e;
  e.kind_ = Kind::Sqrt;
  e.lhs_ = std::make_shared<SeriesExpr>(std::move(a));
  return e;
}

SeriesExpr SeriesExpr::pow(SeriesExpr a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SeriesExpr e;
  e.kind_ = Kind::Pow;
  e.exponent_ = exponent;
  e.lhs_ = std::make_shared<SeriesExpr>(std::move(a));
  return e;
}

std::string SeriesExpr::to_string() const {
  switch (kind_) {
    case Kind::Constant: {
      const std::string s = value_.str();
      return s;
    }
    case Kind::Z: return "z";
    case Kind::Add: return "(" + lhs_->to_string() + "+" + rhs_->to_string() + ")";
    case Kind::Sub: return "(" + lhs_->to_string() + "-" + rhs_->to_string() + ")";
    case Kind::Mul: return "(" + lhs_->to_string() + "*" + rhs_->to_string() + ")";
    case Kind::Div: return "(" + lhs_->to_string() + "/" + rhs_->to_string() + ")";
    case Kind::Neg: return "(-" + lhs_->to_string() + ")";
    case Kind::Sqrt: return "sqrt(" + lhs_->to_string() + ")";
    case Kind::Pow: return lhs_->to_string() + "^" + std::to_string(exponent_);
  }
  return "?";
}

QSeries divide(const QSeries& num, const QSeries& den) {
  const int order = num.order();
  if (den.order() != order) throw std::invalid_argument("series order mismatch");
  int shift = 0;
  while (shift <= order && den[shift] == 0) ++shift;
  if (shift > order) throw std::invalid_argument("division by zero series");
  for (int k = 0; k < shift; ++k) {
    if (num[k] != 0) throw std::invalid_argument("uncancelled pole in series division");
  }
  // After stripping z^shift from both sides the denominator has an
  // invertible constant term; long division order by order. The inputs only
  // determine the quotient up to order-shift, so the result is that short.
  QSeries out(order - shift);
  for (int k = 0; k + shift <= order; ++k) {
    BigRational acc = num[k + shift];
    for (int j = 0; j < k; ++j) acc -= out[j] * den[k - j + shift];
    out[k] = acc / den[shift];
  }
  return out;
}

QSeries sqrt_series(const QSeries& f) {
  if (f[0] != 1) throw std::invalid_argument("series sqrt requires constant term 1");
  const int order = f.order();
  QSeries g(order);
  g[0] = 1;
  // g^2 = f gives 2 g_0 g_k = f_k - sum_{0<j<k} g_j g_{k-j}.
  for (int k = 1; k <= order; ++k) {
    BigRational acc = f[k];
    for (int j = 1; j < k; ++j) acc -= g[j] * g[k - j];
    g[k] = acc / 2;
  }
  return g;
}

QSeries SeriesExpr::expand(int order) const {
  switch (kind_) {
    case Kind::Constant: return QSeries::constant(value_, order);
    case Kind::Z: return QSeries::monomial(1, order);
    case Kind::Add: return lhs_->expand(order) + rhs_->expand(order);
    case Kind::Sub: return lhs_->expand(order) - rhs_->expand(order);
    case Kind::Mul: return lhs_->expand(order) * rhs_->expand(order);
    case Kind::Div: {
      const QSeries den = rhs_->expand(order);
      int shift = 0;
      while (shift <= order && den[shift] == 0) ++shift;
      if (shift > order) throw std::invalid_argument("division by zero series");
      if (shift == 0) return divide(lhs_->expand(order), den);
      // A cancelled z^shift costs `shift` orders of accuracy; re-expand the
      // operands high enough that the quotient is exact to `order`.
      return divide(lhs_->expand(order + shift), rhs_->expand(order + shift));
    }
    case Kind::Neg: return QSeries(order) - lhs_->expand(order);
    case Kind::Sqrt: return sqrt_series(lhs_->expand(order));
    case Kind::Pow: {
      QSeries out = QSeries::constant(1, order);
      const QSeries base = lhs_->expand(order);
      for (int i = 0; i < exponent_; ++i) out = out * base;
      return out;
    }
  }
  throw std::logic_error("bad expression node");
}

QSeries expand(const SeriesExpr& e, int order) { return e.expand(order); }

ZSeries to_integer_series(const QSeries& s) {
  ZSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) {
    if (boost::multiprecision::denominator(s[k]) != 1) {
      throw std::runtime_error("non-integral coefficient at order " + std::to_string(k));
    }
    out[k] = boost::multiprecision::numerator(s[k]);
  }
  return out;
}

namespace {

// Recursive-descent parser for the closed-form expression syntax.
class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  SeriesExpr parse() {
    SeriesExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      throw std::invalid_argument("trailing input at position " + std::to_string(pos_));
    }
    return e;
  }

 private:
  SeriesExpr parse_sum() {
    SeriesExpr e = parse_product();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        e = SeriesExpr::add(std::move(e), parse_product());
      } else if (eat('-')) {
        e = SeriesExpr::sub(std::move(e), parse_product());
      } else {
        return e;
      }
    }
  }

  SeriesExpr parse_product() {
    SeriesExpr e = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        e = SeriesExpr::mul(std::move(e), parse_factor());
      } else if (eat('/')) {
        e = SeriesExpr::div(std::move(e), parse_factor());
      } else {
        return e;
      }
    }
  }

  SeriesExpr parse_factor() {
    skip_ws();
    if (eat('-')) return SeriesExpr::neg(parse_factor());
    SeriesExpr e = parse_primary();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw std::invalid_argument("exponent expected at position " + std::to_string(pos_));
      e = SeriesExpr::pow(std::move(e), std::stoi(text_.substr(start, pos_ - start)));
    }
    return e;
  }

  SeriesExpr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw std::invalid_argument("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SeriesExpr e = parse_sum();
      skip_ws();
      if (!eat(')')) throw std::invalid_argument("missing ')' at position " + std::to_string(pos_));
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SeriesExpr::constant(BigRational(text_.substr(start, pos_ - start)));
    }
    if (text_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      SeriesExpr e = parse_sum();
      skip_ws();
      if (!eat(')')) throw std::invalid_argument("missing ')' after sqrt");
      return SeriesExpr::sqrt(std::move(e));
    }
    if (c == 'z') {
      ++pos_;
      return SeriesExpr::z();
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' at position " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeriesExpr parse_series_expr(const std::string& text) { return ExprParser(text).parse(); }

SeriesExpr closed_form(char cls) {
  switch (cls) {
    case 'A':
      return parse_series_expr("(1+z-sqrt(1-6*z+5*z^2))/(2*z*(2-z))");
    case 'B':
      return parse_series_expr(
          "-(1-sqrt(1-4*z)+z*(-4+sqrt(1-4*z)+sqrt(1-5*z)/sqrt(1-z)))/(2*z^2)");
    case 'C':
      throw std::invalid_argument(
          "class C has no usable closed form; run the algebraic residual check instead");
  }
  throw std::invalid_argument("unknown class");
}

std::vector<BigInt> closed_form_sequence(char cls, int order) {
  return to_integer_series(closed_form(cls).expand(order)).coefficients();
}

bool verify_algebraic(char cls, int order) {
  const std::string name = std::string("class") + cls;
  return system_residual_is_zero(builtin_grammar(name), order);
}

}  // namespace permgrid
