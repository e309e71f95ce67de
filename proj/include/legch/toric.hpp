#ifndef LEGCH_TORIC_HPP
#define LEGCH_TORIC_HPP

#include "legch/laurent.hpp"

namespace legch {

// Facet inequality <normal, x> + offset >= 0 with a primitive integer normal.
struct Facet {
    IntVec normal;
    Rat offset;
};

struct DelzantPolytope {
    size_t dim = 0;
    std::vector<Facet> facets;
};

struct PolytopeVertex {
    RatVec point;
    std::vector<size_t> active_facets;  // all facets vanishing at the point
};

struct ValidationIssue {
    enum class Kind { NotBounded, NotPrimitive, NotSmooth, Degenerate } kind;
    // facet index for NotPrimitive, vertex index for NotSmooth
    size_t subject = 0;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<PolytopeVertex> vertices;
    std::vector<ValidationIssue> issues;
    bool omega_integral = false;  // vertex differences all integral (warning-level check)
};

// Checks primitivity of the normals, boundedness, and vertex smoothness
// (incident normals forming a lattice basis), enumerating all vertices by
// brute-force facet intersection.
ValidationReport validate_delzant(const DelzantPolytope& p);

struct NoMonotonePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonotoneFiber {
    RatVec point;       // moment value of the monotone torus fiber
    Rat facet_distance; // common lattice distance l = <nu_i, p> + c_i
    Rat tau;            // monotonicity constant 1/l
    bool tame;          // tau > 1
};

// The unique interior point lattice-equidistant from all facets; throws
// NoMonotonePoint when the equidistance system is inconsistent or the
// solution is not interior.
MonotoneFiber monotone_fiber(const DelzantPolytope& p);

// Disk potential of the monotone fiber: one monomial x^{nu_i} per facet,
// coefficient +1 in the monotone normalization (the common Maslov-two area
// is factored out).  Exponent lattice is H_1 of the fiber torus.
LaurentPoly disk_potential(const DelzantPolytope& p, const MonotoneFiber& fiber);

}  // namespace legch

#endif
