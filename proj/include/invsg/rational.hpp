#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace invsg {

/// Exact fraction p/q, q > 0, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Rng = std::mt19937_64;

/// 2^-k
Rational pow2_neg(unsigned k);

/// Canonical text form: "p" or "p/q".
std::string to_string(Rational const& r);

/// Parses "p" or "p/q"; throws InvalidInput on malformed text.
Rational parse_rational(std::string const& text);

/// x mod 1, in [0, 1).
Rational frac(Rational const& x);

/// A random rational in [0, 1] drawn from a fixed set of small
/// denominators (at most 2^10 or 12). The coarse resolution is what lets a
/// chain probed to depth 64 stand in for its limit: no sample can fall
/// strictly between the 64th member and the limit.
Rational sample_unit(Rng& rng);

/// Same, restricted to [0, 1).
Rational sample_turn(Rng& rng);

/// A random dyadic rational in [0, bound] with denominator at most 2^8.
Rational sample_dyadic(Rng& rng, unsigned bound);

} // namespace invsg
