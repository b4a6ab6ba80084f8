#include "cherednik/expr.hpp"

#include <cctype>
#include <optional>

#include "cherednik/errors.hpp"

namespace cherednik {
namespace {

class Parser {
 public:
  Parser(AlgebraPtr alg, const std::string& text) : alg_(std::move(alg)), text_(text) {}

  PBWElement parse() {
    PBWElement value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  // A factor is either a group element (kept apart so neighbours can merge)
  // or an algebra element.
  struct Factor {
    std::optional<MonomialMatrix> g;
    PBWElement value;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_is(const char* word) const {
    return text_.compare(pos_, std::char_traits<char>::length(word), word) == 0;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  PBWElement expression() {
    PBWElement sum(alg_);
    bool negative = false;
    skip_space();
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      PBWElement t = term();
      if (negative) {
        sum -= t;
      } else {
        sum += t;
      }
      skip_space();
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return sum;
  }

  PBWElement group_element(const MonomialMatrix& g, std::size_t where) {
    if (!alg_->contains(g)) {
      pos_ = where;
      fail("group element " + format_group_element(g) + " is not in " + alg_->group().to_string());
    }
    return PBWElement::group(alg_, g);
  }

  PBWElement term() {
    PBWElement product = PBWElement::scalar(alg_, ParamScalar(1));
    std::optional<MonomialMatrix> pending;
    std::size_t pending_pos = pos_;
    auto flush = [&] {
      if (pending) product = multiply(product, group_element(*pending, pending_pos));
      pending.reset();
    };
    do {
      skip_space();
      const std::size_t here = pos_;
      Factor f = factor();
      if (f.g) {
        if (!pending) pending_pos = here;
        pending = pending ? *pending * *f.g : *f.g;
      } else {
        flush();
        product = multiply(product, f.value);
      }
    } while (accept('*'));
    flush();
    return product;
  }

  Factor factor() {
    Factor f = primary();
    if (accept('^')) {
      const long k = integer();
      if (k < 0) fail("negative exponent");
      if (f.g) {
        MonomialMatrix power(alg_->n(), alg_->m());
        for (long e = 0; e < k; ++e) power = power * *f.g;
        f.g = power;
      } else {
        PBWElement power = PBWElement::scalar(alg_, ParamScalar(1));
        for (long e = 0; e < k; ++e) power = multiply(power, f.value);
        f.value = power;
      }
    }
    return f;
  }

  int index_in_range(long v, int hi, const char* what) {
    if (v < 1 || v > hi) fail(std::string(what) + " index out of range");
    return static_cast<int>(v);
  }

  Factor primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const int n = alg_->n(), m = alg_->m();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PBWElement inner = expression();
      expect(')');
      return Factor{std::nullopt, inner};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer();
      long den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return Factor{std::nullopt, PBWElement::scalar(alg_, ParamScalar(CycRational(Rational(num, 1) / den)))};
    }
    if (peek_is("sg(")) {
      pos_ += 3;
      const int i = index_in_range(integer(), n, "sg");
      expect(',');
      const int j = index_in_range(integer(), n, "sg");
      expect(';');
      const long k = integer();
      expect(')');
      if (i == j) fail("sg needs distinct indices");
      if (m % 2) fail("sg needs m even");
      return Factor{make_sigma(n, m, i, j, static_cast<int>(k % m)), {}};
    }
    if (peek_is("s(")) {
      pos_ += 2;
      const int i = index_in_range(integer(), n, "s");
      expect(',');
      const int j = index_in_range(integer(), n, "s");
      expect(';');
      const long k = integer();
      expect(')');
      if (i == j) fail("s needs distinct indices");
      return Factor{make_s(n, m, i, j, static_cast<int>(k % m)), {}};
    }
    if (peek_is("t(")) {
      pos_ += 2;
      const int i = index_in_range(integer(), n, "t");
      expect(';');
      const long k = integer();
      expect(')');
      return Factor{make_t(n, m, i, static_cast<int>(k % m)), {}};
    }
    if (peek_is("c[")) {
      pos_ += 2;
      const long k = integer();
      expect(']');
      if (k < 1 || k >= alg_->parameter_count()) fail("no parameter c[" + std::to_string(k) + "] here");
      return Factor{std::nullopt, PBWElement::scalar(alg_, ParamScalar::parameter(static_cast<int>(k)))};
    }
    if (peek_is("c1")) {
      pos_ += 2;
      return Factor{std::nullopt, PBWElement::scalar(alg_, ParamScalar::parameter(0))};
    }
    if (c == 'z') {
      ++pos_;
      return Factor{std::nullopt, PBWElement::scalar(alg_, ParamScalar(CycRational::zeta_power(m, 1)))};
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an index");
      const int i = index_in_range(integer(), n, c == 'x' ? "x" : "y");
      return Factor{std::nullopt, c == 'x' ? PBWElement::x(alg_, i) : PBWElement::y(alg_, i)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  AlgebraPtr alg_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PBWElement parse_expression(const AlgebraPtr& alg, const std::string& text) { return Parser(alg, text).parse(); }

}  // namespace cherednik
