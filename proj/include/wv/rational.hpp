#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wv {

/// Exact rational scalar used for all weight coordinates and inner products.
using Rat = boost::rational<long long>;

/// Error type thrown on precondition violations and internal inconsistencies.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q". Throws on malformed input or q == 0.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + s);
    } catch (const std::out_of_range&) {
        throw Error("rational out of range: " + s);
    }
}

inline long long rat_floor(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

} // namespace wv
