#include "legch/leading.hpp"

#include <algorithm>

namespace legch {

std::vector<std::pair<ReebChordComponent, ReebChordComponent>> chord_concatenations(
    const LiftSpec& spec, const ReebChordComponent& chord)
{
    Rat quantum(Int(1), spec.fiber_points);
    std::vector<std::pair<ReebChordComponent, ReebChordComponent>> out;
    for (size_t b = 0; b < spec.components.size(); ++b) {
        Rat off = spec.components[b].phase - spec.components[chord.from].phase;
        // smallest positive representative of the (from -> b) coset
        Rat q = off / quantum;
        Int fl = rat_floor(q);
        Rat t1 = off - Rat(fl) * quantum;
        if (t1 == 0) t1 = quantum;
        for (; t1 < chord.angle; t1 += quantum) {
            Rat t2 = chord.angle - t1;
            Rat off2 = spec.components[chord.to].phase - spec.components[b].phase;
            Rat diff = (t2 - off2) / quantum;
            if (!is_integer(diff)) continue;
            out.emplace_back(ReebChordComponent{chord.from, b, t1},
                             ReebChordComponent{b, chord.to, t2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string chord_symbol(const LiftSpec& spec, const ReebChordComponent& c, int morse_index,
                         size_t direction)
{
    Rat quantum(Int(1), spec.fiber_points);
    bool short_labels = true;
    for (const auto& comp : spec.components)
        if (comp.label.size() != 1) short_labels = false;
    std::string sep = short_labels ? "" : "_";
    std::string pair = spec.components[c.from].label + sep + spec.components[c.to].label;
    std::string base = morse_index == 0 ? "a_" + pair : "c_" + pair + "_" + std::to_string(direction);
    // non-minimal chords of the same component pair carry their angle
    Rat off = spec.components[c.to].phase - spec.components[c.from].phase;
    Rat q = off / quantum;
    Int fl = rat_floor(q);
    Rat minimal = off - Rat(fl) * quantum;
    if (minimal == 0) minimal = quantum;
    if (c.angle != minimal) base += "@" + rat_str(c.angle);
    return base;
}

RingSpec leading_ring(const LiftSpec& spec)
{
    RingSpec ring;
    size_t k = spec.pi1_image.rank();
    bool connected = spec.components.size() == 1;
    for (const auto& comp : spec.components)
        for (size_t d = 1; d <= k; ++d)
            ring.vars.push_back(connected ? "y" + std::to_string(d)
                                          : "y" + std::to_string(d) + "_" + comp.label);
    return ring;
}

namespace {

// direction subsets of {1..k} by size, each encoded as concatenated digits
std::vector<std::vector<std::string>> direction_subsets(size_t k)
{
    std::vector<std::vector<std::string>> by_size(k + 1);
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::string tag;
        size_t size = 0;
        for (size_t d = 0; d < k; ++d)
            if (mask & (size_t(1) << d)) {
                tag += std::to_string(d + 1);
                ++size;
            }
        by_size[size].push_back(tag);
    }
    for (auto& v : by_size) std::sort(v.begin(), v.end());
    return by_size;
}

}  // namespace

Alphabet generator_roster(const LiftSpec& spec, const Rat& tau,
                          const std::vector<ReebChordComponent>& chords)
{
    // Morse model: product of height functions on the torus, critical
    // points = sign vectors, index = number of descending directions
    Alphabet a;
    size_t k = spec.pi1_image.rank();
    auto subsets = direction_subsets(k);
    for (const auto& c : chords) {
        std::string base = chord_symbol(spec, c, 0);  // "a_<pair>[@angle]"
        std::string pair_tag = base.substr(2);
        a.add(Generator::reeb(base, c.from, c.to, c.angle, 0, tau));
        for (size_t d = 1; d <= k; ++d)
            a.add(Generator::reeb(chord_symbol(spec, c, 1, d), c.from, c.to, c.angle, 1, tau));
        for (size_t j = 2; j <= k; ++j)
            for (const auto& tag : subsets[j])
                a.add(Generator::reeb("b_" + pair_tag + "_" + tag, c.from, c.to, c.angle,
                                      static_cast<int>(j), tau));
    }
    bool connected = spec.components.size() == 1;
    for (const auto& comp : spec.components) {
        std::string suffix = connected ? "" : "_" + comp.label;
        a.add(Generator::classical("cm0" + suffix, 0));
        for (size_t d = 1; d <= k; ++d)
            a.add(Generator::classical("cm" + std::to_string(d) + suffix, 1));
        for (size_t j = 2; j <= k; ++j)
            for (const auto& tag : subsets[j])
                a.add(Generator::classical("bm_" + tag + suffix, static_cast<int>(j)));
    }
    return a;
}

namespace {

// exponent of y_{d, comp} inside the component-major variable layout
size_t var_slot(size_t rank, size_t comp, size_t d) { return comp * rank + d; }

LaurentPoly embed_component(const LaurentPoly& w, size_t rank, size_t comp, size_t total)
{
    LaurentPoly out(total);
    for (const auto& [e, c] : w.terms()) {
        IntVec full(total);
        for (size_t d = 0; d < rank; ++d) full[var_slot(rank, comp, d)] = e[d];
        out.add_term(full, c);
    }
    return out;
}

}  // namespace

LeadingTable leading_differential(const DelzantPolytope& p, const MonotoneFiber& fiber,
                                  const LiftSpec& spec, const LeadingOptions& opts)
{
    LeadingTable lt;
    lt.tau = fiber.tau;
    lt.aug = augmentation_polynomial(p, fiber, spec, {opts.vertex, opts.signs});
    if (!lt.aug.positive)
        lt.warnings.push_back(
            "no positive unimodular basis found; potential kept in the original "
            "sublattice coordinates");

    size_t k = spec.pi1_image.rank();
    Rat quantum(Int(1), spec.fiber_points);

    DifferentialTable& t = lt.table;
    t.ring = leading_ring(spec);
    t.truncation = opts.truncation;
    t.truncated = true;
    lt.chords = enumerate_chords(spec, quantum);
    t.alphabet = generator_roster(spec, fiber.tau, lt.chords);

    for (const auto& c : lt.chords) {
        std::string a_sym = chord_symbol(spec, c, 0);
        CEElement entry(t.ring, t.truncation);
        if (c.from == c.to)
            entry.add({}, embed_component(lt.aug.poly, k, c.from, t.ring.rank()));
        for (const auto& [left, right] : chord_concatenations(spec, c))
            entry.add({chord_symbol(spec, left, 0), chord_symbol(spec, right, 0)},
                      LaurentPoly::constant(t.ring.rank(), 1));
        t.entries.emplace(a_sym, std::move(entry));

        for (size_t d = 1; d <= k; ++d) {
            CEElement ce(t.ring, t.truncation);
            if (c.from != c.to) {
                // two Morse trajectories along the k-th circle direction,
                // differing by the holonomy class mu_{d,from} - mu_{d,to}
                LaurentPoly coef = LaurentPoly::constant(t.ring.rank(), 1);
                IntVec e(t.ring.rank());
                e[var_slot(k, c.from, d - 1)] = 1;
                e[var_slot(k, c.to, d - 1)] = -1;
                coef = coef - LaurentPoly::monomial(e, 1);
                ce.add({a_sym}, coef);
                t.entries.emplace(chord_symbol(spec, c, 1, d), std::move(ce));
            }
            // self-chord index-one generators have no documented leading
            // entry; they stay in the alphabet without a table row
        }
    }
    return lt;
}

DifferentialTable t2_classical_table(int sign, bool unit_terms)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    DifferentialTable t;
    t.ring = RingSpec{};
    t.truncation = Truncation{6, std::nullopt};
    t.truncated = unit_terms;  // the unit-type words leave the table non-closed
    t.alphabet.add(Generator::classical("a", 0));
    t.alphabet.add(Generator::classical("c1", 1));
    t.alphabet.add(Generator::classical("c2", 1));
    t.alphabet.add(Generator::classical("b", 2));

    CEElement zero = CEElement::zero(t.ring, t.truncation);
    t.entries.emplace("a", zero);
    t.entries.emplace("c1", zero);
    t.entries.emplace("c2", zero);
    CEElement db(t.ring, t.truncation);
    db.add({"c1", "c2"}, LaurentPoly::constant(0, sign));
    db.add({"c2", "c1"}, LaurentPoly::constant(0, -sign));
    if (unit_terms) {
        db.add({"b", "a"}, LaurentPoly::constant(0, 1));
        db.add({"a", "b"}, LaurentPoly::constant(0, 1));
    }
    t.entries.emplace("b", std::move(db));
    return t;
}

}  // namespace legch
