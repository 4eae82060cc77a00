#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace z2n {

// Exact rational coefficients; no floating point anywhere in the kernel.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace z2n
