#include "legch/rational.hpp"

namespace legch {

Rat parse_rat(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational literal");

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point away and divide by a power of ten
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad rational literal: " + s);
        try {
            Int num(digits);
            Int den = 1;
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            Rat q(num, den);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal: " + s);
        }
    }

    try {
        Rat q(t);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_str(const Rat& q)
{
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Int factorial(unsigned n)
{
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rat rat_pow(const Rat& x, unsigned long k)
{
    Rat r = 1;
    Rat base = x;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace legch
