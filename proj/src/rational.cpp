#include "compactlab/rational.hpp"

namespace compactlab {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (den.empty() || den == "0" || den.find('/') != std::string::npos)
      throw std::invalid_argument("bad rational denominator in '" + s + "'");
  }
  try {
    Rational r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace compactlab
