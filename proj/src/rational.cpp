#include "invsg/rational.hpp"

#include <array>

#include "invsg/errors.hpp"

namespace invsg {

Rational pow2_neg(unsigned k)
{
    BigInt den = 1;
    den <<= k;
    return Rational(BigInt(1), den);
}

std::string to_string(Rational const& r)
{
    return r.str();
}

Rational parse_rational(std::string const& text)
{
    auto valid_int = [](std::string const& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw InvalidInput("malformed rational: '" + text + "'");
    BigInt d(den);
    if (d == 0)
        throw InvalidInput("zero denominator: '" + text + "'");
    return Rational(BigInt(num), d);
}

Rational frac(Rational const& x)
{
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt r = n % d;
    if (r < 0)
        r += d;
    return Rational(r, d);
}

namespace {

constexpr std::array<unsigned, 12> kDenominators = {2, 3, 4, 5, 6, 8, 12, 16, 32, 64, 256, 1024};

unsigned pick_denominator(Rng& rng)
{
    return kDenominators[std::uniform_int_distribution<std::size_t>(0, kDenominators.size() - 1)(rng)];
}

} // namespace

Rational sample_unit(Rng& rng)
{
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
    case 0: return Rational(0);
    case 1: return Rational(1);
    default: break;
    }
    unsigned q = pick_denominator(rng);
    unsigned p = std::uniform_int_distribution<unsigned>(0, q)(rng);
    return Rational(p, q);
}

Rational sample_turn(Rng& rng)
{
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        return Rational(0);
    unsigned q = pick_denominator(rng);
    unsigned p = std::uniform_int_distribution<unsigned>(0, q - 1)(rng);
    return Rational(p, q);
}

Rational sample_dyadic(Rng& rng, unsigned bound)
{
    unsigned shift = std::uniform_int_distribution<unsigned>(0, 8)(rng);
    unsigned q = 1u << shift;
    unsigned p = std::uniform_int_distribution<unsigned>(0, bound * q)(rng);
    return Rational(p, q);
}

} // namespace invsg
