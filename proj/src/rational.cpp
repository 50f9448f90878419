#include "cube/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cube {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("empty number: \"" + text + "\"");

  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction: \"" + text + "\"");
    }
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
    result = Rational(boost::multiprecision::cpp_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal: \"" + text + "\"");
    }
    boost::multiprecision::cpp_int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int digits(whole.empty() ? "0" : whole);
    digits *= scale;
    if (!frac.empty()) digits += boost::multiprecision::cpp_int(frac);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number: \"" + text + "\"");
    result = Rational(boost::multiprecision::cpp_int(s));
  }
  if (negative) result = -result;
  return result;
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cube
