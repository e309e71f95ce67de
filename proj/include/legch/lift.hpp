#ifndef LEGCH_LIFT_HPP
#define LEGCH_LIFT_HPP

#include "legch/lattice.hpp"
#include "legch/toric.hpp"

namespace legch {

// Angles are stored as exact rationals in units of full fiber rotations
// ("turns"); an angle change of 2*pi/n is the rational 1/n.

struct LiftComponent {
    std::string label;
    Rat phase;  // in [0, 1/m)
};

// A Legendrian lift of the monotone fiber torus: the image sublattice of
// first homology, the component phases, and the number m of intersection
// points of each component with a fiber circle.
struct LiftSpec {
    Sublattice pi1_image;
    std::vector<LiftComponent> components;
    Int fiber_points;  // m >= 1

    LiftSpec(Sublattice image, std::vector<LiftComponent> comps, Int m);
    size_t component_index(const std::string& label) const;
};

struct ReebChordComponent {
    size_t from = 0, to = 0;  // component indices
    Rat angle;                // turns, > 0

    bool operator==(const ReebChordComponent& rhs) const
    {
        return from == rhs.from && to == rhs.to && angle == rhs.angle;
    }
    bool operator<(const ReebChordComponent& rhs) const
    {
        if (angle != rhs.angle) return angle < rhs.angle;
        if (from != rhs.from) return from < rhs.from;
        return to < rhs.to;
    }
};

// All chord components between ordered component pairs with
// 0 < angle <= theta_max, sorted by (angle, from, to).
std::vector<ReebChordComponent> enumerate_chords(const LiftSpec& spec, const Rat& theta_max);

// Complementary chord: reversed endpoints, angle the phase-gap complement
// modulo 1/m.  Chord rosters are closed under this involution.
ReebChordComponent reverse_chord(const LiftSpec& spec, const ReebChordComponent& c);

enum class GenKind { Reeb, Classical };

struct Grading {
    Rat deg_r;
    int deg_z2 = 0;
    bool integral = true;  // false flags a non-integral real grading
};

// Real grading of a Reeb generator: morse_index + tau*theta/pi - 1, where
// theta/pi = 2 * angle_turns.  The Z/2 grading is (morse_index + 1) mod 2,
// which agrees with the shifted real degree whenever the latter is integral
// and tau*theta/pi is even.
Grading reeb_grading(const Rat& angle_turns, int morse_index, const Rat& tau);

// Classical generators are graded by Morse index shifted down by one, so
// the Morse minimum sits in degree -1 and the differential has uniform
// degree -1 across sectors.
Grading classical_grading(int morse_index);

// All angle tuples (theta_in..., theta_out...) with each angle a positive
// element of its offset class modulo `quantum`, each at most theta_max, and
// satisfying the exact balance  sum(in) - sum(out) = area  (in turns).
std::vector<std::vector<Rat>> angle_solutions(const Rat& area, const std::vector<Rat>& in_offsets,
                                              const std::vector<Rat>& out_offsets,
                                              const Rat& quantum, const Rat& theta_max);

}  // namespace legch

#endif
