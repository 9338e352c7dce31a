#include "zastava/expr_parse.hpp"

#include <cctype>

namespace zastava {

namespace {

// recursive-descent parser over
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' ['-'] digits)?
//   atom   := digits ['/' digits] | ('w'|'y') '[' i ',' r ']' | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, SessionPtr session)
      : text_(text), session_(std::move(session)) {}

  ChartExpr run() {
    ChartExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& text_;
  SessionPtr session_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SchemaError("expression, offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (...) {
      fail("integer literal out of range");
    }
  }

  ChartExpr expr() {
    ChartExpr acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  ChartExpr term() {
    ChartExpr acc = factor();
    while (true) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) acc = acc / factor();
      else return acc;
    }
  }

  ChartExpr factor() {
    if (eat('-')) return -factor();
    ChartExpr base = atom();
    if (eat('^')) {
      long sign = eat('-') ? -1 : 1;
      return base.pow(sign * digits());
    }
    return base;
  }

  ChartExpr atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = digits();
      if (eat('/')) {
        long den = digits();
        if (den == 0) fail("zero denominator");
        return ChartExpr::constant(session_, make_rational(num, den));
      }
      return ChartExpr::constant(session_, Rational(num));
    }
    if (c == 'w' || c == 'y') {
      ++pos_;
      if (!eat('[')) fail("expected '[' after variable letter");
      long node = digits();
      if (!eat(',')) fail("expected ',' in variable index");
      long r = digits();
      if (!eat(']')) fail("expected ']' closing variable index");
      const auto& alpha = session_->alpha();
      if (node < 1 || node > long(alpha.size())) fail("node index out of range");
      if (r < 1 || r > alpha[node - 1]) fail("point index out of range");
      return c == 'w' ? ChartExpr::w(session_, int(node - 1), int(r - 1))
                      : ChartExpr::y(session_, int(node - 1), int(r - 1));
    }
    if (eat('(')) {
      ChartExpr inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("expected a rational, a variable, or '('");
  }
};

}  // namespace

ChartExpr parse_chart_expr(const std::string& text, const SessionPtr& session) {
  return Parser(text, session).run();
}

}  // namespace zastava
