#include "legch/augcheck.hpp"

#include <set>

namespace legch {

Rat Augmentation::eval(const CEElement& x) const
{
    RatVec point;
    point.reserve(x.ring().rank());
    for (const auto& v : x.ring().vars) {
        auto it = var_values.find(v);
        if (it == var_values.end()) throw MissingValue(v);
        point.push_back(it->second);
    }
    Rat total = 0;
    for (const auto& [w, coef] : x.terms()) {
        Rat t = coef.eval(point);
        for (const auto& l : w) {
            auto it = gen_values.find(l);
            if (it == gen_values.end()) throw MissingValue(l);
            t *= it->second;
        }
        total += t;
    }
    return total;
}

std::vector<std::string> Augmentation::ungraded_support(const Alphabet& alphabet) const
{
    std::vector<std::string> out;
    for (const auto& [sym, val] : gen_values) {
        if (val == 0) continue;
        if (alphabet.contains(sym) && alphabet.at(sym).deg_r != 0) out.push_back(sym);
    }
    return out;
}

AugReport check_augmentation(const DifferentialTable& table, const Augmentation& eps)
{
    AugReport rep;
    for (const auto& [sym, entry] : table.entries) {
        Rat r = eps.eval(entry);
        if (r != 0) rep.residuals.emplace_back(sym, r);
    }
    rep.ok = rep.residuals.empty();
    return rep;
}

ChainMap ChainMap::identity(const DifferentialTable& table)
{
    ChainMap phi;
    for (const auto& [sym, gen] : table.alphabet.gens) {
        CEElement e(table.ring, table.truncation);
        e.add({sym}, LaurentPoly::constant(table.ring.rank(), 1));
        phi.images.emplace(sym, std::move(e));
    }
    return phi;
}

CEElement ChainMap::apply(const CEElement& x, const RingSpec& target_ring,
                          const Truncation& target_trunc) const
{
    if (!(x.ring() == target_ring))
        throw TruncationMismatch("chain maps require a common coefficient ring");
    CEElement out = CEElement::zero(target_ring, target_trunc);
    for (const auto& [w, coef] : x.terms()) {
        CEElement acc = CEElement::unit(target_ring, target_trunc);
        for (const auto& l : w) {
            auto it = images.find(l);
            if (it == images.end()) throw MissingGenerator(l);
            acc = product(acc, it->second);
        }
        out = out + acc.scaled(coef);
    }
    return out;
}

ChainMapReport check_chain_map(const ChainMap& phi, const DifferentialTable& source,
                               const DifferentialTable& target)
{
    ChainMapReport rep;
    for (const auto& [sym, entry] : source.entries) {
        auto im = phi.images.find(sym);
        if (im == phi.images.end()) throw MissingGenerator(sym);
        CEElement lhs = phi.apply(entry, target.ring, target.truncation);
        CEElement rhs = derive(target, im->second);
        CEElement res = lhs - rhs;
        if (!res.is_zero()) rep.residuals.emplace_back(sym, res);
    }
    rep.ok = rep.residuals.empty();
    return rep;
}

CEElement mc_residual(const MCProblem& problem, const RingSpec& ring, const Truncation& trunc)
{
    int max_d = problem.declared_max.value_or(
        problem.m_tables.empty() ? 0 : problem.m_tables.rbegin()->first);
    if (problem.declared_max)
        for (int d = 0; d <= *problem.declared_max; ++d)
            if (!problem.m_tables.count(d)) throw MissingTable(d);

    CEElement res = CEElement::zero(ring, trunc);
    for (const auto& [d, table] : problem.m_tables) {
        if (d > max_d) continue;
        Rat inv_fact(Int(1), factorial(static_cast<unsigned>(d)));
        for (const auto& [tuple, value] : table) {
            if (static_cast<int>(tuple.size()) != d)
                throw std::invalid_argument("m_" + std::to_string(d) + " entry with wrong arity");
            Rat c = inv_fact;
            for (const auto& sym : tuple) {
                auto it = problem.b.find(sym);
                c *= it == problem.b.end() ? Rat(0) : it->second;
                if (c == 0) break;
            }
            if (c == 0) continue;
            res = res + value.scaled(c);
        }
    }
    return res;
}

bool Matching::simply_connected() const
{
    for (const auto& c : components)
        if (c.circle) return false;
    return true;
}

void validate_matching(const Matching& m)
{
    std::set<std::string> minus_seen, plus_seen;
    for (const auto& c : m.components) {
        if (c.circle) {
            if (c.minus || c.plus)
                throw EndpointMismatch("circle components carry no endpoints");
            continue;
        }
        if (c.minus && !minus_seen.insert(c.minus->component).second)
            throw EndpointMismatch("boundary point " + c.minus->component +
                                   " consumed twice on the negative end");
        if (c.plus && !plus_seen.insert(c.plus->component).second)
            throw EndpointMismatch("boundary point " + c.plus->component +
                                   " consumed twice on the positive end");
    }
}

namespace {

std::vector<std::string> matching_warnings(const Matching& m)
{
    validate_matching(m);
    std::vector<std::string> w;
    if (!m.simply_connected())
        w.push_back(
            "UnobstructednessUnknown: matching has a circle component; the composed "
            "table is formal");
    return w;
}

}  // namespace

ComposedChainMap compose_matching(const Matching& m, const ChainMap& first, const ChainMap& second,
                                  const RingSpec& ring, const Truncation& trunc)
{
    ComposedChainMap out;
    out.warnings = matching_warnings(m);
    for (const auto& [sym, mid] : first.images)
        out.map.images.emplace(sym, second.apply(mid, ring, trunc));
    return out;
}

ComposedAugmentation compose_matching(const Matching& m, const ChainMap& first,
                                      const Augmentation& second)
{
    ComposedAugmentation out;
    out.warnings = matching_warnings(m);
    out.aug.var_values = second.var_values;
    for (const auto& [sym, mid] : first.images) out.aug.gen_values.emplace(sym, second.eval(mid));
    return out;
}

}  // namespace legch
