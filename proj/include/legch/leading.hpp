#ifndef LEGCH_LEADING_HPP
#define LEGCH_LEADING_HPP

#include "legch/augpoly.hpp"
#include "legch/ce.hpp"

namespace legch {

// All ordered splittings of a chord component into two chords through an
// intermediate component, with exactly matching angles.
std::vector<std::pair<ReebChordComponent, ReebChordComponent>> chord_concatenations(
    const LiftSpec& spec, const ReebChordComponent& chord);

struct LeadingOptions {
    std::vector<int> signs;        // per-facet sign convention, empty = all +1
    std::optional<IntVec> vertex;  // vertex-shift override
    Truncation truncation{6, std::nullopt};
};

struct LeadingTable {
    DifferentialTable table;
    AugmentationPolynomial aug;  // descended potential entering the a_ii entries
    Rat tau;
    std::vector<ReebChordComponent> chords;
    std::vector<std::string> warnings;
};

// Leading-order differential table of a toric lift: for each component i the
// entry delta(a_ii) is the augmentation polynomial in that component's
// variables plus one quadratic word per chord concatenation; index-zero
// cross generators collect their splittings; index-one cross generators
// c_ij_k map to (1 - y_{k,i} y_{k,j}^{-1}) a_ij.  The table is flagged
// leading-order only: higher corrections are unknown, never silently zero.
LeadingTable leading_differential(const DelzantPolytope& p, const MonotoneFiber& fiber,
                                  const LiftSpec& spec, const LeadingOptions& opts = {});

// Chord generator symbols used by leading tables.
std::string chord_symbol(const LiftSpec& spec, const ReebChordComponent& c, int morse_index,
                         size_t direction = 0);

// The generator roster for the given chords: index-zero and index-one Morse
// points on every chord component, plus the classical minimum and index-one
// generators of each Legendrian component.
Alphabet generator_roster(const LiftSpec& spec, const Rat& tau,
                          const std::vector<ReebChordComponent>& chords);
// Coefficient variables, component-major: y1, y2, ... for a connected lift,
// y{k}_{label} otherwise.
RingSpec leading_ring(const LiftSpec& spec);

// Classical-sector table of the two-torus with the product Morse function:
// delta(b) = sign (c1 c2 - c2 c1), optionally with the unit-type words
// b a + a b whose presence depends on the perturbation scheme (off by
// default; turning them on leaves the table non-closed, hence truncated).
DifferentialTable t2_classical_table(int sign = 1, bool unit_terms = false);

}  // namespace legch

#endif
