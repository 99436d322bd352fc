#include <dirhyp/rational.hpp>

#include <stdexcept>

namespace dirhyp {

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto digits = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
  };
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::string p = s.substr(0, slash), q = s.substr(slash + 1);
      if (!digits(p) || !digits(q)) throw bad();
      BigInt den(q);
      if (den == 0) throw bad();
      return Rational(BigInt(p), den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      bool neg = !whole.empty() && whole.front() == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      if (!digits(whole) || frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      Rational r{BigInt(whole)};
      Rational f(BigInt(frac), scale);
      return neg ? r - f : r + f;
    }
    if (!digits(s)) throw bad();
    return Rational(BigInt(s));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace dirhyp
