#ifndef LRT_RATIONAL_HPP
#define LRT_RATIONAL_HPP

// Exact rational scalar type and its string form "p/q" (or "p" when the
// denominator is 1).  All arithmetic in the kernel flows through this type;
// nothing is ever rounded.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace lrt {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", "p/q" with optional sign on the numerator.
// Throws std::invalid_argument on malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational literal '") + s +
                                    "': " + e.what());
    }
}

}  // namespace lrt

#endif  // LRT_RATIONAL_HPP
