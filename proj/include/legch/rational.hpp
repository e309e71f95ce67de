#ifndef LEGCH_RATIONAL_HPP
#define LEGCH_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace legch {

// All arithmetic in the engine is exact: arbitrary-precision integers and
// rationals from GMP.  No floating point enters any algebraic computation;
// doubles appear only in the tolerance-based variety membership test.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "p/q" or a plain decimal like "0.5" into an exact rational.
Rat parse_rat(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q)
{
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

Int factorial(unsigned n);

// x^k for integer k (k >= 0), exact.
Rat rat_pow(const Rat& x, unsigned long k);

}  // namespace legch

#endif
