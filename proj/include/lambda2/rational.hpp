#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lambda2 {

// Exact rational coefficient type. All quotient/ledger/LP arithmetic that the
// contracts call "exact" goes through this alias.
using rat = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline std::string rat_to_string(const rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat(bigint(s));
        bigint num(s.substr(0, slash));
        bigint den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace lambda2
