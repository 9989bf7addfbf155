#include "cli/expr.hpp"

#include <cctype>

namespace qdr::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const ExprContext& ctx) : s_(s), ctx_(ctx) {}

  ParsedExpr run() {
    ParsedExpr out{expr(), uses_dx_};
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  int index() {
    const std::size_t at = pos_;
    expect('[');
    const long i = integer();
    expect(']');
    if (i < 1 || i > ctx_.dim) {
      pos_ = at;
      fail("index " + std::to_string(i) + " outside 1.." + std::to_string(ctx_.dim));
    }
    return static_cast<int>(i);
  }

  FieldForm constant(const Fn& f) const { return FieldForm::constant(ctx_.dim, f); }

  FieldForm expr() {
    FieldForm acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  FieldForm term() {
    FieldForm acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = wedge(acc, unary());
      } else if (peek('^')) {
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == 'h' &&
            (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
          ++pos_;
          acc = quantum_wedge_field(acc, unary(), ctx_.w);
        } else {
          acc = wedge(acc, unary());
        }
      } else {
        return acc;
      }
    }
  }

  FieldForm unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  FieldForm atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long p = integer();
      long q = 1;
      if (accept('/')) {
        q = integer();
        if (q == 0) fail("zero denominator");
      }
      Rational r(p, q);
      r.canonicalize();
      return constant(Fn(Gaussian(r)));
    }
    if (accept('(')) {
      FieldForm inner = expr();
      expect(')');
      return inner;
    }
    if (accept_word("mode")) {
      if (ctx_.modes < 0) fail("mode(...) needs a torus model");
      expect('(');
      std::vector<int> k;
      do {
        const long v = integer();
        if (v < -ctx_.modes || v > ctx_.modes) fail("mode outside the truncation |k| <= " + std::to_string(ctx_.modes));
        k.push_back(static_cast<int>(v));
      } while (accept(','));
      expect(')');
      if (static_cast<int>(k.size()) != ctx_.dim) fail("mode(...) needs " + std::to_string(ctx_.dim) + " entries");
      return constant(fn_mode(k));
    }
    if (accept_word("dx")) {
      uses_dx_ = true;
      return dx_form(ctx_.dim, {index()});
    }
    if (accept_word("e")) return dx_form(ctx_.dim, {index()});
    if (accept_word("x")) return constant(fn_x(index()));
    if (accept_word("i")) return constant(Fn(Gaussian::i()));
    if (accept_word("h")) {
      // h^k is a power; any other '^' after h is left for term().
      const std::size_t save = pos_;
      if (accept('^')) {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
          return constant(fn_h(static_cast<int>(integer())));
        pos_ = save;
      }
      return constant(fn_h());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
  bool uses_dx_ = false;
};

}  // namespace

ParsedExpr parse_expression(const std::string& text, const ExprContext& ctx) {
  if (ctx.w.dim() != ctx.dim) throw std::invalid_argument("expression context: bivector dimension mismatch");
  return Parser(text, ctx).run();
}

std::optional<QForm> as_qform(const FieldForm& a) {
  QForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    if (!has_only_constants(c)) return std::nullopt;
    for (const auto& [mono, z] : c.terms())
      if (!z.is_real()) return std::nullopt;
    out.add(m, to_laurent(c));
  }
  return out;
}

std::string format_form(const FieldForm& a, bool dx_prefix) {
  const std::string prefix = dx_prefix ? "dx" : "e";
  if (auto q = as_qform(a)) return to_string(*q, prefix);
  return to_string(a, prefix);
}

}  // namespace qdr::cli
