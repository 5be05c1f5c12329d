#include "tenspec/poly.hpp"

#include <cctype>

namespace tenspec {
namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// factor := rational | 'x' digits ['^' digits]
// term   := factor ('*' factor)*
// poly   := ['-'] term (('+'|'-') term)*
struct TermParser {
  const std::string& s;
  std::size_t i = 0;
  int nvars;

  long read_int() {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("polynomial parse: expected integer at offset " + std::to_string(start));
    return std::stol(s.substr(start, i - start));
  }

  Rational read_rational() {
    long num = read_int();
    skip_ws(s, i);
    if (i < s.size() && s[i] == '/') {
      ++i;
      long den = read_int();
      return rat(num, den);
    }
    return Rational(num);
  }

  void read_term(MPolyQ& out, int sign) {
    Rational coeff(sign);
    Exponents e(nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws(s, i);
      if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
        ++i;
        long var = read_int();
        if (var < 0 || var >= nvars) throw std::invalid_argument("polynomial parse: variable index out of range");
        long pw = 1;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '^') {
          ++i;
          pw = read_int();
          if (pw < 0) throw std::invalid_argument("polynomial parse: negative exponent");
        }
        e[var] += static_cast<int>(pw);
      } else {
        coeff *= read_rational();
      }
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
      } else {
        expect_factor = false;
      }
    }
    out.add_term(e, coeff);
  }

  MPolyQ parse() {
    MPolyQ out(nvars);
    skip_ws(s, i);
    if (i >= s.size()) throw std::invalid_argument("polynomial parse: empty input");
    int sign = 1;
    if (s[i] == '-') {
      sign = -1;
      ++i;
    } else if (s[i] == '+') {
      ++i;
    }
    read_term(out, sign);
    skip_ws(s, i);
    while (i < s.size()) {
      char c = s[i];
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        throw std::invalid_argument("polynomial parse: unexpected character at offset " + std::to_string(i));
      }
      ++i;
      read_term(out, sign);
      skip_ws(s, i);
    }
    return out;
  }
};

}  // namespace

MPolyQ parse_mpoly(const std::string& text, int nvars) {
  TermParser p{text, 0, nvars};
  return p.parse();
}

std::string to_string(const UPolyQ& p) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    if (is_zero(p.coeff(k))) continue;
    if (!out.empty()) out += "+";
    out += to_string(p.coeff(k));
    if (k >= 1) out += "*t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace tenspec
