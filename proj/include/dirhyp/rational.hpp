#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dirhyp {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// "p/q" always, including integers ("14/1").
std::string format_rational(const Rational& q);
// Accepts "p/q", integers and plain decimals ("1.25").
Rational parse_rational(std::string_view text);
double to_double(const Rational& q);

}  // namespace dirhyp
