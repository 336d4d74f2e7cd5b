#include "weyl/parse.hpp"

#include <cctype>
#include <string>

#include "weyl/weyl_core.hpp"

namespace weyl {

namespace {

// Recursive-descent evaluator. Algebra supplies the value type, symbol
// lookup and multiplication.
template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, Algebra algebra) : text_(text), algebra_(std::move(algebra)) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (accept('*')) v = algebra_.mul(v, unary());
    return v;
  }

  Value unary() {
    if (accept('-')) return Scalar(-1) * unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const Integer e = integer();
    if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
    return algebra_.pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return algebra_.constant(make_scalar(num, den));
    }
    if (auto v = algebra_.symbol(c)) {
      ++pos_;
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Algebra algebra_;
  std::size_t pos_ = 0;
};

struct WeylAlgebra {
  using Value = WeylElement;
  static Value constant(const Scalar& c) { return WeylElement::constant(c); }
  static Value mul(const Value& a, const Value& b) { return normal_mul(a, b); }
  static Value pow(const Value& a, unsigned k) { return weyl::pow(a, k); }
  static std::optional<Value> symbol(char c) {
    if (c == 'X') return weyl_x();
    if (c == 'Y') return weyl_y();
    return std::nullopt;
  }
};

struct UniAlgebra {
  using Value = UniPoly;
  char var = 0;
  static Value constant(const Scalar& c) { return UniPoly::constant(c); }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value pow(const Value& a, unsigned k) { return weyl::pow(a, k); }
  std::optional<Value> symbol(char c) {
    if (c != 'x' && c != 'y' && c != 'z') return std::nullopt;
    if (var != 0 && var != c) return std::nullopt;
    var = c;
    return UniPoly::monomial(1);
  }
};

}  // namespace

WeylElement parse_element(std::string_view text) { return Parser<WeylAlgebra>(text, {}).parse(); }

UniPoly parse_unipoly(std::string_view text) { return Parser<UniAlgebra>(text, {}).parse(); }

}  // namespace weyl
