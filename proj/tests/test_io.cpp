#include <doctest.h>

#include "legch/io.hpp"
#include "legch/leading.hpp"

using namespace legch;

TEST_CASE("preset TOML round-trips through the parser")
{
    for (auto [name, n] : std::vector<std::pair<std::string, std::optional<int>>>{
             {"clifford", 3}, {"cliffordanti", 3}, {"hopf", 4}, {"p1xp1", std::nullopt}}) {
        std::string toml = preset_toml(name, n);
        InputSpec direct = preset(name, n);
        InputSpec parsed = parse_input(toml, name);
        CHECK(parsed.polytope.dim == direct.polytope.dim);
        REQUIRE(parsed.polytope.facets.size() == direct.polytope.facets.size());
        for (size_t i = 0; i < parsed.polytope.facets.size(); ++i) {
            CHECK(parsed.polytope.facets[i].normal == direct.polytope.facets[i].normal);
            CHECK(parsed.polytope.facets[i].offset == direct.polytope.facets[i].offset);
        }
        CHECK(parsed.sublattice_rows.has_value() == direct.sublattice_rows.has_value());
        CHECK(parsed.fiber_points == direct.fiber_points);
        REQUIRE(parsed.components.size() == direct.components.size());
        for (size_t i = 0; i < parsed.components.size(); ++i) {
            CHECK(parsed.components[i].label == direct.components[i].label);
            CHECK(parsed.components[i].phase == direct.components[i].phase);
        }
    }
}

TEST_CASE("JSON input is accepted")
{
    std::string text = R"({
      "polytope": {"dim": 1, "normals": [[1], [-1]], "offsets": [0, "1"]},
      "lift": {"sublattice": "auto", "fiber_points": 2,
               "component_labels": ["1"], "component_phases": ["0"]},
      "options": {"max_word_len": 4, "signs": [1, -1]}
    })";
    InputSpec spec = parse_input(text);
    CHECK(spec.polytope.dim == 1);
    CHECK(spec.polytope.facets.size() == 2);
    CHECK(spec.fiber_points == Int(2));
    CHECK(spec.max_word_len == 4);
    CHECK(spec.signs == std::vector<int>{1, -1});
}

TEST_CASE("input validation errors carry the field")
{
    // non-integer facet normal
    std::string bad = R"({"polytope": {"dim": 1, "normals": [["x"]], "offsets": [0]}})";
    CHECK_THROWS_AS(parse_input(bad), ValidationError);
    std::string bad2 = R"({"polytope": {"dim": 1, "normals": [[1, 2]], "offsets": [0]}})";
    CHECK_THROWS_AS(parse_input(bad2), ValidationError);
    std::string bad3 = R"({"polytope": {"dim": 1, "normals": [["1/2"]], "offsets": [0]}})";
    CHECK_THROWS_AS(parse_input(bad3), ValidationError);
}

TEST_CASE("TOML arrays may span lines and carry comments")
{
    std::string text =
        "# a comment\n"
        "[polytope]\n"
        "dim = 2\n"
        "normals = [\n"
        "  [1, 0],   # first facet\n"
        "  [0, 1],\n"
        "  [-1, -1],\n"
        "]\n"
        "offsets = [\"0\", \"0\", \"1\"]\n";
    InputSpec spec = parse_input(text, "multiline.toml");
    CHECK(spec.polytope.facets.size() == 3);
    CHECK(spec.polytope.facets[2].normal == IntVec{Int(-1), Int(-1)});
}

TEST_CASE("TOML errors carry line numbers")
{
    std::string bad = "[polytope]\ndim = ???\n";
    try {
        parse_input(bad, "bad.toml");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.toml:2") != std::string::npos);
    }
}

TEST_CASE("auto lift resolution uses the difference lattice and its index")
{
    InputSpec spec = preset("clifford", 3);
    spec.fiber_points.reset();
    MonotoneFiber fiber = monotone_fiber(spec.polytope);
    LaurentPoly w = disk_potential(spec.polytope, fiber);
    LiftSpec lift = resolve_lift(spec, w);
    CHECK(lift.fiber_points == 3);
    CHECK(*lift.pi1_image.index() == 3);
}

TEST_CASE("polynomial JSON round trip")
{
    LaurentPoly p(2);
    p.add_term({Int(1), Int(-2)}, Rat(3, 7));
    p.add_term({Int(0), Int(0)}, Rat(-1));
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("element JSON round trip")
{
    RingSpec ring{{"y1", "y2"}, {}};
    Truncation tr{5, std::nullopt};
    CEElement e(ring, tr);
    e.add({"a", "b"}, LaurentPoly::monomial({Int(1), Int(0)}, Rat(1, 2)));
    e.add({}, LaurentPoly::constant(2, 4));
    CHECK(element_from_json(element_to_json(e), ring, tr) == e);
}

TEST_CASE("differential table JSON round trip")
{
    auto tables = {t2_classical_table(), synthetic_closed_table(), synthetic_broken_table()};
    for (const auto& t : tables) {
        Json j = table_to_json(t);
        DifferentialTable back = table_from_json(j);
        CHECK(back.ring == t.ring);
        CHECK(back.truncation == t.truncation);
        CHECK(back.truncated == t.truncated);
        REQUIRE(back.alphabet.gens.size() == t.alphabet.gens.size());
        for (const auto& [sym, g] : t.alphabet.gens) {
            const Generator& b = back.alphabet.at(sym);
            CHECK(b.kind == g.kind);
            CHECK(b.morse_index == g.morse_index);
            CHECK(b.deg_r == g.deg_r);
            CHECK(b.deg_z2 == g.deg_z2);
        }
        REQUIRE(back.entries.size() == t.entries.size());
        for (const auto& [sym, e] : t.entries) CHECK(back.entries.at(sym) == e);
        // serialization is deterministic
        CHECK(table_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("leading table survives the JSON round trip")
{
    InputSpec spec = preset("hopf", 3);
    MonotoneFiber fiber = monotone_fiber(spec.polytope);
    LaurentPoly w = disk_potential(spec.polytope, fiber);
    LiftSpec lift = resolve_lift(spec, w);
    auto lt = leading_differential(spec.polytope, fiber, lift, {});
    DifferentialTable back = table_from_json(table_to_json(lt.table));
    for (const auto& [sym, e] : lt.table.entries) CHECK(back.entries.at(sym) == e);
    CHECK(check_squares_zero(back).status == D2Report::Status::Inconclusive);
}

TEST_CASE("augmentation, chain map, problem and matching parsing")
{
    Json aug = Json::parse(R"({"generators": {"a_11": "0"}, "variables": {"y1": "-1"}})");
    Augmentation a = augmentation_from_json(aug);
    CHECK(a.gen_values.at("a_11") == 0);
    CHECK(a.var_values.at("y1") == -1);

    RingSpec ring;
    Truncation tr{6, std::nullopt};
    Json cm = Json::parse(R"({"images": {"g": {"terms": [{"word": ["h"],
        "coeff": {"rank": 0, "terms": [{"coeff": "2", "exp": []}]}}]}}})");
    ChainMap phi = chainmap_from_json(cm, ring, tr);
    CHECK(phi.images.at("g").coeff({"h"}) == LaurentPoly::constant(0, 2));

    Json mc = Json::parse(R"({
        "m_tables": {"0": [{"inputs": [], "value": {"terms": [{"word": ["x0"],
            "coeff": {"rank": 0, "terms": [{"coeff": "1", "exp": []}]}}]}}]},
        "b": {"x0": "1"}})");
    MCProblem problem = mcproblem_from_json(mc, ring, tr);
    CHECK(problem.b.at("x0") == 1);
    CHECK(problem.m_tables.at(0).size() == 1);

    Json mj = Json::parse(R"({"components": [
        {"minus": {"component": "1", "phase": "0"}, "plus": {"component": "1", "phase": "0"}},
        {"circle": true}]})");
    Matching m = matching_from_json(mj);
    CHECK(m.components.size() == 2);
    CHECK_FALSE(m.simply_connected());
}

TEST_CASE("preset parameter validation")
{
    CHECK_THROWS_AS(preset("clifford", 1), ValidationError);
    CHECK_THROWS_AS(preset("p1xp1", 3), ValidationError);
    CHECK_THROWS_AS(preset("nonsense", std::nullopt), ValidationError);
}
