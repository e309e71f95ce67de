#include "legch/lift.hpp"

#include <algorithm>
#include <set>

namespace legch {

LiftSpec::LiftSpec(Sublattice image, std::vector<LiftComponent> comps, Int m)
    : pi1_image(std::move(image)), components(std::move(comps)), fiber_points(std::move(m))
{
    if (fiber_points < 1) throw std::invalid_argument("fiber_points must be positive");
    if (components.empty()) throw std::invalid_argument("lift needs at least one component");
    Rat quantum(Int(1), fiber_points);
    std::set<std::string> labels;
    for (const auto& c : components) {
        if (!labels.insert(c.label).second)
            throw std::invalid_argument("duplicate component label " + c.label);
        if (c.phase < 0 || c.phase >= quantum)
            throw std::invalid_argument("component phase must lie in [0, 1/m)");
    }
}

size_t LiftSpec::component_index(const std::string& label) const
{
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].label == label) return i;
    throw std::invalid_argument("unknown component label " + label);
}

namespace {

Rat mod_quantum(Rat x, const Rat& quantum)
{
    Rat q = x / quantum;
    Int f = rat_floor(q);
    return x - Rat(f) * quantum;
}

}  // namespace

std::vector<ReebChordComponent> enumerate_chords(const LiftSpec& spec, const Rat& theta_max)
{
    if (theta_max <= 0) throw std::invalid_argument("theta_max must be positive");
    Rat quantum(Int(1), spec.fiber_points);
    std::vector<ReebChordComponent> out;
    for (size_t a = 0; a < spec.components.size(); ++a)
        for (size_t b = 0; b < spec.components.size(); ++b) {
            Rat off = mod_quantum(spec.components[b].phase - spec.components[a].phase, quantum);
            Rat theta = off == 0 ? quantum : off;  // smallest positive representative
            for (; theta <= theta_max; theta += quantum) out.push_back({a, b, theta});
        }
    std::sort(out.begin(), out.end(), [](const ReebChordComponent& x, const ReebChordComponent& y) {
        return std::tie(x.angle, x.from, x.to) < std::tie(y.angle, y.from, y.to);
    });
    return out;
}

ReebChordComponent reverse_chord(const LiftSpec& spec, const ReebChordComponent& c)
{
    Rat quantum(Int(1), spec.fiber_points);
    Rat rev = mod_quantum(-c.angle, quantum);
    if (rev == 0) rev = quantum;
    return {c.to, c.from, rev};
}

Grading reeb_grading(const Rat& angle_turns, int morse_index, const Rat& tau)
{
    if (angle_turns <= 0) throw std::invalid_argument("chord angle must be positive");
    Grading g;
    Rat shift = 2 * tau * angle_turns;  // tau * theta / pi
    g.deg_r = Rat(morse_index) + shift - 1;
    g.deg_z2 = (morse_index + 1) % 2;
    g.integral = is_integer(shift);
    return g;
}

Grading classical_grading(int morse_index)
{
    Grading g;
    g.deg_r = Rat(morse_index) - 1;
    g.deg_z2 = (morse_index + 1) % 2;
    g.integral = true;
    return g;
}

namespace {

void enumerate_legs(const std::vector<Rat>& offsets, const Rat& quantum, const Rat& theta_max,
                    size_t pos, std::vector<Rat>& cur, std::vector<std::vector<Rat>>& out)
{
    if (pos == offsets.size()) {
        out.push_back(cur);
        return;
    }
    Rat q = offsets[pos] / quantum;
    Int f = rat_floor(q);
    Rat theta = offsets[pos] - Rat(f) * quantum;
    if (theta == 0) theta = quantum;
    for (; theta <= theta_max; theta += quantum) {
        cur.push_back(theta);
        enumerate_legs(offsets, quantum, theta_max, pos + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Rat>> angle_solutions(const Rat& area, const std::vector<Rat>& in_offsets,
                                              const std::vector<Rat>& out_offsets,
                                              const Rat& quantum, const Rat& theta_max)
{
    if (quantum <= 0 || theta_max <= 0)
        throw std::invalid_argument("quantum and theta_max must be positive");
    std::vector<std::vector<Rat>> ins, outs;
    std::vector<Rat> cur;
    enumerate_legs(in_offsets, quantum, theta_max, 0, cur, ins);
    enumerate_legs(out_offsets, quantum, theta_max, 0, cur, outs);

    std::vector<std::vector<Rat>> sols;
    for (const auto& ti : ins) {
        Rat si = 0;
        for (const auto& t : ti) si += t;
        for (const auto& to : outs) {
            Rat so = 0;
            for (const auto& t : to) so += t;
            if (si - so != area) continue;
            std::vector<Rat> tuple = ti;
            tuple.insert(tuple.end(), to.begin(), to.end());
            sols.push_back(std::move(tuple));
        }
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

}  // namespace legch
