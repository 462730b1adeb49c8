#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

namespace irank {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

// Fixed-point rendering for display, e.g. format_decimal(67/13, 3) == "5.154".
inline std::string format_decimal(const Rational& r, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << to_double(r);
    return os.str();
}

} // namespace irank
