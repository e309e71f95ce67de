#include <doctest.h>

#include <random>

#include "legch/augcheck.hpp"
#include "legch/io.hpp"
#include "legch/leading.hpp"

using namespace legch;

namespace {

LeadingTable build(const std::string& name, std::optional<int> n = std::nullopt,
                   std::vector<int> signs = {})
{
    InputSpec spec = preset(name, n);
    MonotoneFiber fiber = monotone_fiber(spec.polytope);
    LaurentPoly w = disk_potential(spec.polytope, fiber);
    LiftSpec lift = resolve_lift(spec, w);
    LeadingOptions opts;
    opts.signs = std::move(signs);
    return leading_differential(spec.polytope, fiber, lift, opts);
}

Augmentation zero_on(const DifferentialTable& t)
{
    Augmentation eps;
    for (const auto& [sym, g] : t.alphabet.gens) eps.gen_values[sym] = 0;
    for (const auto& v : t.ring.vars) eps.var_values[v] = 0;
    return eps;
}

// a rescaling isomorphism onto a renamed copy: phi(g) = c_g g', with the
// target differential transported so that phi is a chain map by construction
struct IsoFixture {
    DifferentialTable target;
    ChainMap phi;
};

IsoFixture renamed_copy(const DifferentialTable& source, const std::map<std::string, Rat>& scale)
{
    IsoFixture fx;
    fx.target.ring = source.ring;
    fx.target.truncation = source.truncation;
    fx.target.truncated = source.truncated;
    for (const auto& [sym, g] : source.alphabet.gens) {
        Generator g2 = g;
        g2.symbol = sym + "p";
        fx.target.alphabet.add(g2);
        CEElement img(source.ring, source.truncation);
        img.add({sym + "p"}, LaurentPoly::constant(source.ring.rank(), scale.at(sym)));
        fx.phi.images.emplace(sym, std::move(img));
    }
    for (const auto& [sym, entry] : source.entries) {
        CEElement moved = fx.phi.apply(entry, fx.target.ring, fx.target.truncation);
        fx.target.entries.emplace(sym + "p", moved.scaled(1 / scale.at(sym)));
    }
    return fx;
}

Matching straight_matching(int strands)
{
    Matching m;
    for (int i = 0; i < strands; ++i) {
        MatchingComponent c;
        c.minus = MatchingEnd{std::to_string(i + 1), Rat(0)};
        c.plus = MatchingEnd{std::to_string(i + 1), Rat(0)};
        m.components.push_back(c);
    }
    return m;
}

}  // namespace

TEST_CASE("augmentation check on the one-variable fixture")
{
    auto lt = build("clifford", 2);  // delta(a_11) = 1 + y1
    Augmentation eps;
    eps.gen_values["a_11"] = 0;
    eps.var_values["y1"] = -1;
    auto rep = check_augmentation(lt.table, eps);
    CHECK(rep.ok);

    Augmentation dead = zero_on(lt.table);
    auto bad = check_augmentation(lt.table, dead);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.residuals.size() == 1);
    CHECK(bad.residuals[0].first == "a_11");
    CHECK(bad.residuals[0].second == 1);
}

TEST_CASE("augmentation check on the two-component consistency fixture")
{
    auto lt = build("hopf", 3, {-1, -1, 1});  // delta(a_11) = 1 - y1_1 - y2_1 + a_12 a_21
    Augmentation eps;
    eps.var_values["y1_1"] = 2;
    eps.var_values["y1_2"] = 2;
    eps.var_values["y2_1"] = 3;
    eps.var_values["y2_2"] = 3;
    eps.gen_values["a_12"] = 2;
    eps.gen_values["a_21"] = 2;  // product 4 = 2 + 3 - 1
    auto rep = check_augmentation(lt.table, eps);
    CHECK(rep.ok);

    eps.gen_values["a_21"] = 1;
    CHECK_FALSE(check_augmentation(lt.table, eps).ok);
}

TEST_CASE("augmentation check demands values for everything it meets")
{
    auto lt = build("clifford", 2);
    Augmentation eps;
    CHECK_THROWS_AS(check_augmentation(lt.table, eps), MissingValue);
}

TEST_CASE("ungraded support is reported, never enforced")
{
    auto lt = build("hopf", 3);
    Augmentation eps;
    for (const auto& v : lt.table.ring.vars) eps.var_values[v] = 1;
    for (const auto& [sym, g] : lt.table.alphabet.gens) eps.gen_values[sym] = 0;
    eps.gen_values["c_12_1"] = 5;  // degree-one generator
    auto warn = eps.ungraded_support(lt.table.alphabet);
    CHECK(warn == std::vector<std::string>{"c_12_1"});
}

TEST_CASE("identity is a chain map")
{
    auto lt = build("hopf", 3);
    auto rep = check_chain_map(ChainMap::identity(lt.table), lt.table, lt.table);
    CHECK(rep.ok);
}

TEST_CASE("rescaled renamed copies are chain maps; the zero map is not")
{
    auto lt = build("clifford", 3);
    std::map<std::string, Rat> scale;
    for (const auto& [sym, g] : lt.table.alphabet.gens) scale[sym] = 1;
    scale["a_11"] = Rat(3, 2);
    auto fx = renamed_copy(lt.table, scale);
    CHECK(check_chain_map(fx.phi, lt.table, fx.target).ok);

    ChainMap zero;
    for (const auto& [sym, g] : lt.table.alphabet.gens)
        zero.images.emplace(sym, CEElement::zero(fx.target.ring, fx.target.truncation));
    auto rep = check_chain_map(zero, lt.table, fx.target);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.residuals.empty());
    CHECK(rep.residuals[0].first == "a_11");  // phi(1 + y1 + y2) = 1 + y1 + y2 survives
}

TEST_CASE("verified augmentations compose with verified chain maps")
{
    std::mt19937_64 rng(60);
    std::uniform_int_distribution<int> pick(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        auto lt = build("clifford", 3);
        std::map<std::string, Rat> scale;
        for (const auto& [sym, g] : lt.table.alphabet.gens) scale[sym] = Rat(pick(rng), pick(rng));
        auto fx = renamed_copy(lt.table, scale);
        REQUIRE(check_chain_map(fx.phi, lt.table, fx.target).ok);

        // an augmentation of the target: 1 + t + (-1 - t) = 0
        Augmentation eps;
        Rat t(pick(rng), pick(rng));
        eps.var_values["y1"] = t;
        eps.var_values["y2"] = -1 - t;
        for (const auto& [sym, g] : fx.target.alphabet.gens) eps.gen_values[sym] = 0;
        REQUIRE(check_augmentation(fx.target, eps).ok);

        auto composed = compose_matching(straight_matching(1), fx.phi, eps);
        CHECK(composed.warnings.empty());
        composed.aug.var_values = eps.var_values;
        CHECK(check_augmentation(lt.table, composed.aug).ok);
    }
}

TEST_CASE("maurer-cartan residuals")
{
    RingSpec ring;
    Truncation tr{6, std::nullopt};
    auto word = [&](const Word& w, const Rat& c) {
        CEElement e(ring, tr);
        e.add(w, LaurentPoly::constant(0, c));
        return e;
    };

    SUBCASE("no structure maps: every chain bounds")
    {
        MCProblem p;
        p.b["x0"] = 5;
        CHECK(mc_residual(p, ring, tr).is_zero());
    }
    SUBCASE("linear cancellation")
    {
        MCProblem p;
        p.m_tables[0][{}] = word({"x0"}, 1);
        p.m_tables[1][{"x0"}] = word({"x0"}, -1);
        p.b["x0"] = 1;
        CHECK(mc_residual(p, ring, tr).is_zero());
        p.b["x0"] = 2;
        CHECK_FALSE(mc_residual(p, ring, tr).is_zero());
    }
    SUBCASE("zero chain leaves the curvature term")
    {
        MCProblem p;
        p.m_tables[0][{}] = word({"x0"}, 1);
        CHECK(mc_residual(p, ring, tr) == word({"x0"}, 1));
    }
    SUBCASE("scaling b scales the degree-d term by t^d")
    {
        MCProblem p;
        p.m_tables[0][{}] = word({"w0"}, 1);
        p.m_tables[1][{"x"}] = word({"w1"}, 1);
        p.m_tables[2][{"x", "x"}] = word({"w2"}, 1);
        for (Rat t : {Rat(1), Rat(2), Rat(-3), Rat(5, 7)}) {
            p.b["x"] = t;
            auto res = mc_residual(p, ring, tr);
            CHECK(res.coeff({"w0"}) == LaurentPoly::constant(0, 1));
            CHECK(res.coeff({"w1"}) == LaurentPoly::constant(0, t));
            CHECK(res.coeff({"w2"}) == LaurentPoly::constant(0, t * t / 2));
        }
    }
    SUBCASE("declared degrees force tables to exist")
    {
        MCProblem p;
        p.m_tables[0][{}] = word({"x0"}, 1);
        p.declared_max = 1;
        CHECK_THROWS_AS(mc_residual(p, ring, tr), MissingTable);
    }
}

TEST_CASE("matching validation and warnings")
{
    Matching ok = straight_matching(2);
    CHECK(ok.simply_connected());
    validate_matching(ok);

    Matching dup = straight_matching(1);
    dup.components.push_back(dup.components[0]);
    CHECK_THROWS_AS(validate_matching(dup), EndpointMismatch);

    Matching circle = straight_matching(1);
    MatchingComponent c;
    c.circle = true;
    circle.components.push_back(c);
    CHECK_FALSE(circle.simply_connected());
    auto lt = build("clifford", 2);
    auto composed = compose_matching(circle, ChainMap::identity(lt.table),
                                     ChainMap::identity(lt.table), lt.table.ring,
                                     lt.table.truncation);
    REQUIRE(composed.warnings.size() == 1);
    CHECK(composed.warnings[0].find("UnobstructednessUnknown") == 0);
}

TEST_CASE("composition of verified chain maps is a verified chain map")
{
    auto lt = build("hopf", 3);
    std::map<std::string, Rat> ones;
    for (const auto& [sym, g] : lt.table.alphabet.gens) ones[sym] = 1;
    auto fx1 = renamed_copy(lt.table, ones);
    std::map<std::string, Rat> ones2;
    for (const auto& [sym, g] : fx1.target.alphabet.gens) ones2[sym] = 1;
    auto fx2 = renamed_copy(fx1.target, ones2);

    auto composed = compose_matching(straight_matching(2), fx1.phi, fx2.phi, fx2.target.ring,
                                     fx2.target.truncation);
    CHECK(composed.warnings.empty());
    CHECK(check_chain_map(composed.map, lt.table, fx2.target).ok);
}

TEST_CASE("the trivial matching composes identities to the identity")
{
    auto lt = build("clifford", 3);
    auto id = ChainMap::identity(lt.table);
    auto composed = compose_matching(straight_matching(1), id, id, lt.table.ring,
                                     lt.table.truncation);
    for (const auto& [sym, img] : composed.map.images) CHECK(img == id.images.at(sym));
    CHECK(check_chain_map(composed.map, lt.table, lt.table).ok);
}

TEST_CASE("composition is associative on triples")
{
    auto lt = build("clifford", 2);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pick(1, 5);
    auto scales = [&](const DifferentialTable& t) {
        std::map<std::string, Rat> s;
        for (const auto& [sym, g] : t.alphabet.gens) s[sym] = Rat(pick(rng), pick(rng));
        return s;
    };
    auto fx1 = renamed_copy(lt.table, scales(lt.table));
    auto fx2 = renamed_copy(fx1.target, scales(fx1.target));
    auto fx3 = renamed_copy(fx2.target, scales(fx2.target));

    Matching m = straight_matching(1);
    auto left = compose_matching(
        m, compose_matching(m, fx1.phi, fx2.phi, fx2.target.ring, fx2.target.truncation).map,
        fx3.phi, fx3.target.ring, fx3.target.truncation);
    auto right = compose_matching(
        m, fx1.phi,
        compose_matching(m, fx2.phi, fx3.phi, fx3.target.ring, fx3.target.truncation).map,
        fx3.target.ring, fx3.target.truncation);
    for (const auto& [sym, img] : left.map.images) CHECK(img == right.map.images.at(sym));
}
