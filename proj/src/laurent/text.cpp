#include <cctype>
#include <string>

#include "ialex/error.hpp"
#include "ialex/laurent.hpp"

namespace ialex {

namespace {

std::string clean(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (std::isspace(c)) continue;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

class Parser {
 public:
  Parser(std::string text, std::string_view original) : s_(std::move(text)), original_(original) {}

  LaurentPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    LaurentPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      LaurentPoly term = parse_term();
      if (negative) term = -term;
      acc += term;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse polynomial \"" + std::string(original_) + "\": " + why + " at offset " +
                    std::to_string(pos_));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  LaurentPoly parse_term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("missing denominator");
      }
      Integer d(den);
      if (d == 0) fail("zero denominator");
      coeff = Rational(Integer(num), d);
      coeff.canonicalize();
      have_coeff = true;
    }
    if (peek() == '*') {
      if (!have_coeff) fail("unexpected *");
      ++pos_;
      if (peek() != 't') fail("expected t after *");
    }
    long exponent = 0;
    if (peek() == 't') {
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        bool paren = peek() == '(';
        if (paren) ++pos_;
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++pos_;
        }
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        if (e.size() > 12) fail("exponent too large");
        exponent = std::stol(e);
        if (neg) exponent = -exponent;
        if (paren) {
          if (peek() != ')') fail("expected )");
          ++pos_;
        }
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or t");
    }
    return LaurentPoly::monomial(coeff, exponent);
  }

  std::string s_;
  std::string_view original_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(clean(text), text).parse(); }

PrimitiveRep parse_primitive(std::string_view text) { return normalize(parse_laurent(text)); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.dense();
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    long e = p.low_exponent() + static_cast<long>(j);
    Rational mag = abs(c[j]);
    if (out.empty()) {
      if (c[j] < 0) out += "-";
    } else {
      out += c[j] < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const PrimitiveRep& p) { return to_string(p.to_laurent()); }

}  // namespace ialex
