#include "kleinian/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError("cannot evaluate '" + std::string(s_) + "': " + what +
                          " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  double power() {
    const double base = primary();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  double primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("bad number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  double named() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "pi") return std::numbers::pi;
    if (name == "sqrt5") return std::sqrt(5.0);
    if (name == "sin" || name == "cos" || name == "sqrt") {
      if (!eat('(')) fail("expected '(' after " + std::string(name));
      const double arg = expr();
      if (!eat(')')) fail("missing ')'");
      if (name == "sin") return std::sin(arg);
      if (name == "cos") return std::cos(arg);
      if (arg < 0.0) fail("sqrt of a negative number");
      return std::sqrt(arg);
    }
    pos_ = start;
    fail("unknown name '" + std::string(name) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

double evaluate_expression(std::string_view text) {
  const double v = Parser(text).parse();
  if (!std::isfinite(v)) {
    throw ExpressionError("'" + std::string(text) + "' is not a finite number");
  }
  return v;
}

}  // namespace kleinian
