#ifndef LEGCH_LAURENT_HPP
#define LEGCH_LAURENT_HPP

#include <complex>
#include <map>
#include <optional>

#include "legch/matrix.hpp"

namespace legch {

// Term order used everywhere a polynomial is stored or printed: ascending
// total degree, then ascending sup-norm, then descending lexicographic.
// This keeps "1" ahead of mixed-sign monomials of total degree zero and
// puts y1 before y2 within a degree, so printed output is stable.
struct ExponentOrder {
    bool operator()(const IntVec& a, const IntVec& b) const;
};

// Multivariate Laurent polynomial over Q with lattice-valued exponents.
// Invariant: no zero coefficients are stored; all exponent vectors have
// length rank().
class LaurentPoly {
public:
    using TermMap = std::map<IntVec, Rat, ExponentOrder>;

    explicit LaurentPoly(size_t rank = 0) : rank_(rank) {}
    static LaurentPoly constant(size_t rank, const Rat& c);
    static LaurentPoly monomial(IntVec exp, const Rat& c = 1);

    size_t rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rat coeff(const IntVec& exp) const;
    Rat constant_term() const { return coeff(IntVec(rank_)); }

    void add_term(const IntVec& exp, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& rhs) const = default;

    // x^{-v} * this (termwise exponent shift).
    LaurentPoly shifted(const IntVec& v) const;

    // Exponent support (Newton polytope point set).
    std::vector<IntVec> support() const;

    // Exact evaluation at a rational point; point entries must be nonzero
    // whenever the corresponding variable appears with negative exponent.
    Rat eval(const RatVec& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    // Renders with the given variable names, e.g. "1 + y1^2*y2 - 3/2*y2^-1".
    std::string str(const std::vector<std::string>& vars) const;
    std::string str() const;  // default names x1..xn

private:
    size_t rank_;
    TermMap terms_;
};

std::string monomial_str(const IntVec& exp, const std::vector<std::string>& vars);

// Vertices of the convex hull of a set of lattice points (exact; small sets
// only -- membership in the hull of the others is tested via Caratheodory
// subsets).
std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points);
bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& others);

// Is p in the convex cone generated by gens (rational coefficients >= 0)?
bool in_cone(const IntVec& p, const std::vector<IntVec>& gens);

}  // namespace legch

#endif
