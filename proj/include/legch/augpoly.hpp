#ifndef LEGCH_AUGPOLY_HPP
#define LEGCH_AUGPOLY_HPP

#include "legch/lift.hpp"

namespace legch {

struct NotAVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDescendable : std::runtime_error {
    IntVec exponent;
    NotDescendable(std::string msg, IntVec e) : std::runtime_error(std::move(msg)), exponent(std::move(e)) {}
};
struct ZeroCoordinate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<IntVec> newton_vertices(const LaurentPoly& w);

// x^{-v} * w.  When v is omitted the lexicographically smallest Newton
// vertex is used; a supplied v must be a vertex (NotAVertex otherwise).
// The result has 0 as a vertex of its Newton polytope.
LaurentPoly vertex_shift(const LaurentPoly& w, const std::optional<IntVec>& v,
                         IntVec* vertex_used = nullptr);

// Re-expresses every exponent of w_shifted in coordinates of the sublattice;
// throws NotDescendable on the first exponent outside the image.
LaurentPoly descend(const LaurentPoly& w_shifted, const Sublattice& image);

// Unimodular change of coordinates mapping every exponent into the
// nonnegative orthant.  basis columns express the new basis vectors in the
// current coordinates; transform is its inverse (new = transform * old).
struct PositiveBasis {
    IntMat basis;
    IntMat transform;
};

// Strategy: accept the identity when the exponents are already nonnegative;
// otherwise try the extreme rays of the exponent cone (usable when their
// matrix is unimodular); otherwise exhaust unimodular matrices with entries
// in [-3, 3] (ranks <= 3).  nullopt means not representable within the
// search bounds.
std::optional<PositiveBasis> positive_basis(const std::vector<IntVec>& exponents);

struct AugmentationPolynomial {
    LaurentPoly poly;                 // in the chosen sublattice coordinates
    std::vector<IntVec> basis_used;   // chosen H1 basis, in ambient H1(Pi) coordinates
    IntVec vertex_used;
    bool positive = false;            // exponents all nonnegative in this basis
};

struct AugPolyOptions {
    std::optional<IntVec> vertex;     // override for the shift vertex
    std::vector<int> signs;           // per-facet signs, empty = all +1
};

// Full pipeline: disk potential with the sign convention applied, vertex
// shift, descent along the lift sublattice, positive-cone basis selection.
AugmentationPolynomial augmentation_polynomial(const DelzantPolytope& p, const MonotoneFiber& fiber,
                                               const LiftSpec& spec, const AugPolyOptions& opts = {});

// Exact membership for rational points (all coordinates nonzero).
bool variety_member(const LaurentPoly& w, const RatVec& point);
// Tolerance-based membership for complex points.
bool variety_member(const LaurentPoly& w, const std::vector<std::complex<double>>& point,
                    double tolerance = 1e-9);

// The sublattice generated by pairwise differences of the potential's
// exponents ("auto" lift lattice).
Sublattice difference_lattice(const LaurentPoly& w);

}  // namespace legch

#endif
