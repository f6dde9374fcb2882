#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Under C++20 the mixed-type equality templates of boost::rational rewrite
// into each other and recurse; exact overloads take precedence.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == static_cast<std::int64_t>(a); }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(std::int64_t a, const rational<std::int64_t>& b) { return !(b == a); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(b == a); }

}  // namespace boost

namespace fairsplit {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fairsplit
