#include "pkaeq/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace pkaeq {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("bad rational: " + std::string(text));
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("bad rational: " + std::string(text));

  Rational r;
  r.get_num().set_str(std::string(num), 10);
  if (!den.empty()) {
    r.get_den().set_str(std::string(den), 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

}  // namespace pkaeq
