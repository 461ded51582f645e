#include "polyharm/polytext.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>

#include "polyharm/error.hpp"
#include "polyharm/geometry.hpp"

namespace polyharm {

namespace {

constexpr int kMaxPower = 1000;

struct NumberToken {
  std::string mantissa_digits;  // integer and fraction digits, no point
  int fraction_digits = 0;
  long exponent = 0;
  std::string text;
};

Rational to_rational(const NumberToken& t) {
  Rational r(mpz_class(t.mantissa_digits.empty() ? "0" : t.mantissa_digits, 10));
  const long shift = t.exponent - t.fraction_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    r *= ten_pow;
  } else {
    r /= ten_pow;
  }
  r.canonicalize();
  return r;
}

double to_double(const NumberToken& t, std::size_t pos) {
  double v = 0.0;
  const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
    throw ParseError("number out of range '" + t.text + "'", pos);
  }
  return v;
}

template <class Coeff>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational from_number(const NumberToken& t, std::size_t) { return to_rational(t); }
  static Rational from_ratio(const NumberToken& num, const NumberToken& den, std::size_t pos) {
    const Rational d = to_rational(den);
    if (sgn(d) == 0) throw ParseError("zero denominator", pos);
    Rational r = to_rational(num) / d;
    r.canonicalize();
    return r;
  }
  static Rational from_complex(const NumberToken& re, const NumberToken& im, std::size_t pos) {
    if (sgn(to_rational(im)) != 0) {
      throw ParseError("complex coefficient in an exact polynomial", pos);
    }
    return to_rational(re);
  }
};

template <>
struct CoeffTraits<Complex> {
  static Complex from_number(const NumberToken& t, std::size_t pos) { return to_double(t, pos); }
  static Complex from_ratio(const NumberToken& num, const NumberToken& den, std::size_t pos) {
    const double d = to_double(den, pos);
    if (d == 0.0) throw ParseError("zero denominator", pos);
    return to_double(num, pos) / d;
  }
  static Complex from_complex(const NumberToken& re, const NumberToken& im, std::size_t pos) {
    return {to_double(re, pos), to_double(im, pos)};
  }
};

template <class Coeff>
class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {
    if (nvars < 1) throw DomainError("polynomial needs at least one variable");
  }

  MultiPoly<Coeff> parse() {
    auto q = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return q;
  }

 private:
  using Poly = MultiPoly<Coeff>;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Poly sum() {
    Poly total(nvars_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      Poly t = product();
      if (negative) t = -t;
      total += t;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return total;
      }
    }
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'x' || c == 'z';
  }

  Poly product() {
    Poly out = power();
    for (;;) {
      if (accept('*')) {
        out = out * power();
      } else if (starts_factor(peek())) {
        out = out * power();
      } else {
        return out;
      }
    }
  }

  Poly power() {
    Poly base = factor();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const NumberToken t = number();
    if (!t.text.empty() && (t.fraction_digits > 0 || t.text.find_first_of(".eE") != std::string::npos)) {
      throw ParseError("power must be a nonnegative integer", at);
    }
    const Rational k = to_rational(t);
    if (k > kMaxPower) throw ParseError("power too large", at);
    return base.pow(static_cast<int>(k.get_num().get_si()));
  }

  Poly factor() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == 'x' || c == 'z') return variable();
    if (c == '(') {
      ++pos_;
      if (auto z = complex_literal()) return Poly::constant(nvars_, *z);
      Poly inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const NumberToken num = number();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const NumberToken den = number();
        return Poly::constant(nvars_, CoeffTraits<Coeff>::from_ratio(num, den, at));
      }
      return Poly::constant(nvars_, CoeffTraits<Coeff>::from_number(num, at));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly variable() {
    ++pos_;
    const std::size_t at = pos_;
    int index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > nvars_) break;
      ++pos_;
    }
    if (pos_ == at) fail("variable needs an index");
    if (index < 1 || index > nvars_) {
      throw ParseError("variable index out of range 1.." + std::to_string(nvars_), at);
    }
    return Poly::variable(nvars_, index - 1);
  }

  // After '(': "(re,im)" with optional signs, else rewinds and returns empty.
  std::optional<Coeff> complex_literal() {
    const std::size_t start = pos_;
    const std::size_t at = pos_ - 1;
    auto signed_number = [&]() -> std::optional<NumberToken> {
      skip_space();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      skip_space();
      if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        return std::nullopt;
      }
      NumberToken t = number();
      if (neg) {
        t.mantissa_digits.insert(0, "-");
        t.text.insert(0, "-");
      }
      return t;
    };
    auto re = signed_number();
    if (!re || !accept(',')) {
      pos_ = start;
      return std::nullopt;
    }
    auto im = signed_number();
    if (!im) fail("expected imaginary part");
    expect(')');
    return CoeffTraits<Coeff>::from_complex(*re, *im, at);
  }

  NumberToken number() {
    NumberToken t;
    const std::size_t start = pos_;
    auto digits = [&](std::string& into) {
      std::size_t count = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        into.push_back(text_[pos_++]);
        ++count;
      }
      return count;
    };
    std::size_t count = digits(t.mantissa_digits);
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = digits(t.mantissa_digits);
      t.fraction_digits = static_cast<int>(frac);
      count += frac;
    }
    if (count == 0) throw ParseError("expected a number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) neg = text_[pos_++] == '-';
      std::string exp_digits;
      if (digits(exp_digits) == 0 || exp_digits.size() > 6) {
        throw ParseError("malformed exponent", mark);
      }
      t.exponent = std::stol(exp_digits) * (neg ? -1 : 1);
    }
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (e[j] > 1) out += '^' + std::to_string(e[j]);
  }
  return out;
}

std::string real_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Joins (negative?, magnitude-coefficient text or empty for 1, monomial).
void append_term(std::string& out, bool negative, const std::string& coeff, const std::string& mono) {
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += coeff.empty() ? "1" : coeff;
  } else if (coeff.empty()) {
    out += mono;
  } else {
    out += coeff + '*' + mono;
  }
}

}  // namespace

ExactPoly parse_exact_poly(std::string_view text, int nvars) { return Parser<Rational>(text, nvars).parse(); }

NumericPoly parse_numeric_poly(std::string_view text, int nvars) {
  return Parser<Complex>(text, nvars).parse();
}

std::string format_poly(const ExactPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
    const Rational& c = it->second;
    const Rational mag = abs(c);
    append_term(out, sgn(c) < 0, mag == 1 ? "" : mag.get_str(), monomial_text(it->first));
  }
  return out;
}

std::string format_poly(const NumericPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
    const Complex c = it->second;
    if (c.imag() == 0.0 && !std::signbit(c.imag())) {
      const double mag = std::abs(c.real());
      append_term(out, std::signbit(c.real()), mag == 1.0 ? "" : real_text(mag), monomial_text(it->first));
    } else {
      append_term(out, false, "(" + real_text(c.real()) + "," + real_text(c.imag()) + ")",
                  monomial_text(it->first));
    }
  }
  return out;
}

}  // namespace polyharm
