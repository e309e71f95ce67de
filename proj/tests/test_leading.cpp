#include <doctest.h>

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

}  // namespace

TEST_CASE("chord concatenations of the two-component self chord")
{
    for (int n : {2, 3, 4}) {
        LiftSpec spec(Sublattice::full(static_cast<size_t>(n - 1)),
                      {{"1", Rat(0)}, {"2", Rat(1, 2 * n)}}, n);
        auto pairs = chord_concatenations(spec, {0, 0, Rat(1, n)});
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].first == ReebChordComponent{0, 1, Rat(1, 2 * n)});
        CHECK(pairs[0].second == ReebChordComponent{1, 0, Rat(1, 2 * n)});
    }
}

TEST_CASE("the minimal chord of a connected lift admits no splitting")
{
    LiftSpec spec(Sublattice::full(2), {{"1", Rat(0)}}, 3);
    CHECK(chord_concatenations(spec, {0, 0, Rat(1, 3)}).empty());
}

TEST_CASE("splittings through an intermediate sheet")
{
    LiftSpec spec(Sublattice::full(2), {{"1", Rat(0)}, {"2", Rat(1, 12)}, {"3", Rat(1, 6)}}, 3);
    // chord from the second sheet back to the first, angle 1/4 of a turn
    auto pairs = chord_concatenations(spec, {1, 0, Rat(1, 4)});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == ReebChordComponent{1, 2, Rat(1, 12)});
    CHECK(pairs[0].second == ReebChordComponent{2, 0, Rat(1, 6)});
}

TEST_CASE("leading table of the connected Clifford lift")
{
    auto lt = build("clifford", 3);
    const auto& t = lt.table;
    const CEElement& da = t.entry("a_11");
    REQUIRE(da.terms().size() == 1);
    LaurentPoly w(2);
    w.add_term({Int(0), Int(0)}, 1);
    w.add_term({Int(1), Int(0)}, 1);
    w.add_term({Int(0), Int(1)}, 1);
    CHECK(da.coeff({}) == w);
    CHECK(t.truncated);
    CHECK(degree_check(t).empty());
}

TEST_CASE("leading table of the product-of-lines lift")
{
    auto lt = build("p1xp1");
    const CEElement& da = lt.table.entry("a_11");
    LaurentPoly w(2);
    w.add_term({Int(0), Int(0)}, 1);
    w.add_term({Int(1), Int(0)}, 1);
    w.add_term({Int(0), Int(1)}, 1);
    w.add_term({Int(1), Int(1)}, 1);
    CHECK(da.coeff({}) == w);
    CHECK(degree_check(lt.table).empty());
}

TEST_CASE("leading table of the two-component lift")
{
    auto lt = build("hopf", 3);
    const auto& t = lt.table;

    SUBCASE("self-chord entries carry the potential and the splitting word")
    {
        const CEElement& da = t.entry("a_11");
        CHECK(da.coeff({"a_12", "a_21"}) == LaurentPoly::constant(t.ring.rank(), 1));
        // potential in the first component's variables y1_1 = slot 0, y2_1 = slot 1
        LaurentPoly w(4);
        w.add_term(IntVec(4), 1);
        w.add_term({Int(1), Int(0), Int(0), Int(0)}, 1);
        w.add_term({Int(0), Int(1), Int(0), Int(0)}, 1);
        CHECK(da.coeff({}) == w);

        const CEElement& da2 = t.entry("a_22");
        CHECK(da2.coeff({"a_21", "a_12"}) == LaurentPoly::constant(t.ring.rank(), 1));
    }

    SUBCASE("index-one cross generators map to the holonomy difference times a_12")
    {
        const CEElement& dc = t.entry("c_12_1");
        REQUIRE(dc.terms().size() == 1);
        LaurentPoly coef = LaurentPoly::constant(4, 1);
        coef = coef - LaurentPoly::monomial({Int(1), Int(0), Int(-1), Int(0)}, 1);
        CHECK(dc.coeff({"a_12"}) == coef);

        const CEElement& dc2 = t.entry("c_21_2");
        LaurentPoly coef2 = LaurentPoly::constant(4, 1);
        coef2 = coef2 - LaurentPoly::monomial({Int(0), Int(-1), Int(0), Int(1)}, 1);
        CHECK(dc2.coeff({"a_21"}) == coef2);
    }

    SUBCASE("cross chords have no leading entry terms")
    {
        CHECK(t.entry("a_12").is_zero());
        CHECK(t.entry("a_21").is_zero());
    }

    SUBCASE("degree audit and gradings")
    {
        CHECK(degree_check(t).empty());
        CHECK(t.alphabet.at("a_11").deg_r == 1);
        CHECK(t.alphabet.at("a_12").deg_r == 0);
        CHECK(t.alphabet.at("a_21").deg_r == 0);
        CHECK(t.alphabet.at("c_12_1").deg_r == 1);
        CHECK(t.alphabet.at("c_12_2").deg_r == 1);
    }

    SUBCASE("quadratic words biject with chord concatenations")
    {
        InputSpec spec = preset("hopf", 3);
        LaurentPoly w = disk_potential(spec.polytope, monotone_fiber(spec.polytope));
        LiftSpec lift = resolve_lift(spec, w);
        for (const auto& chord : lt.chords) {
            std::string sym = chord_symbol(lift, chord, 0);
            auto pairs = chord_concatenations(lift, chord);
            size_t quadratic = 0;
            for (const auto& [word, coef] : t.entry(sym).terms())
                if (word.size() == 2) ++quadratic;
            CHECK(quadratic == pairs.size());
            for (const auto& [left, right] : pairs) {
                Word word{chord_symbol(lift, left, 0), chord_symbol(lift, right, 0)};
                CHECK(t.entry(sym).coeff(word) == LaurentPoly::constant(t.ring.rank(), 1));
            }
        }
    }

    SUBCASE("the delta-squared check is inconclusive but residual-free")
    {
        auto rep = check_squares_zero(t);
        CHECK(rep.status == D2Report::Status::Inconclusive);
        CHECK(rep.failures.empty());
        CHECK(rep.truncated);
    }
}

TEST_CASE("sign conventions propagate into the table")
{
    auto lt = build("hopf", 3, {-1, -1, 1});
    LaurentPoly w(4);
    w.add_term(IntVec(4), 1);
    w.add_term({Int(1), Int(0), Int(0), Int(0)}, -1);
    w.add_term({Int(0), Int(1), Int(0), Int(0)}, -1);
    CHECK(lt.table.entry("a_11").coeff({}) == w);
}

TEST_CASE("degree-zero projection of the abelianized self-chord entry")
{
    // the empty-word part is exactly the augmentation polynomial in the
    // component's variables; quadratic degree-zero chord words survive the
    // projection and sit alongside it
    auto lt = build("hopf", 3);
    auto pr = project_degree0(lt.table.alphabet, abelianize(lt.table.alphabet, lt.table.entry("a_11")));
    LaurentPoly w(4);
    w.add_term(IntVec(4), 1);
    w.add_term({Int(1), Int(0), Int(0), Int(0)}, 1);
    w.add_term({Int(0), Int(1), Int(0), Int(0)}, 1);
    CHECK(pr.coeff({}) == w);

    auto clifford = build("clifford", 3);
    auto pr2 = project_degree0(clifford.table.alphabet,
                               abelianize(clifford.table.alphabet, clifford.table.entry("a_11")));
    CHECK(pr2 == clifford.table.entry("a_11"));
}

TEST_CASE("two-torus classical table")
{
    auto t = t2_classical_table();
    CHECK(abelianize(t.alphabet, t.entry("b")).is_zero());
    CHECK(classical_sector_closed(t));
    CHECK(degree_check(t).empty());
    CHECK(check_squares_zero(t).status == D2Report::Status::Ok);
    CHECK(t.alphabet.at("b").deg_r == 1);
    CHECK(t.alphabet.at("c1").deg_r == 0);
    CHECK(t.alphabet.at("a").deg_r == -1);

    auto flipped = t2_classical_table(-1);
    CHECK(abelianize(flipped.alphabet, flipped.entry("b")).is_zero());

    auto with_units = t2_classical_table(1, true);
    CHECK(with_units.truncated);
    CHECK(abelianize(with_units.alphabet, with_units.entry("b")).is_zero());
    CHECK(degree_check(with_units).empty());
    CHECK(check_squares_zero(with_units).status == D2Report::Status::Inconclusive);
}

TEST_CASE("expanding a leading entry inserts classical letters with inverse factorials")
{
    auto lt = build("clifford", 2);  // delta(a_11) = 1 + y1
    const auto& t = lt.table;
    RingSpec target{{"mu1"}, {}};
    auto out = exp_substitute(t.entry("a_11"), {{IntVec{Int(1)}, "cm1"}}, target, t.truncation);
    // the constant 1 stays on the empty word; y1 = [mu1] exp(cm1) expands
    CHECK(out.coeff({}) ==
          LaurentPoly::constant(1, 1) + LaurentPoly::monomial({Int(1)}, 1));
    for (int d = 1; d <= t.truncation.max_word_len; ++d) {
        Word w(static_cast<size_t>(d), "cm1");
        CHECK(out.coeff(w) == LaurentPoly::monomial({Int(1)}, Rat(Int(1), factorial(d))));
    }
    // the expansion stays within the degree-zero sector
    Alphabet ext = t.alphabet;
    auto pr = project_degree0(ext, out);
    CHECK(pr == out);
}

TEST_CASE("hopf ring variable order is component-major")
{
    InputSpec spec = preset("hopf", 3);
    LaurentPoly w = disk_potential(spec.polytope, monotone_fiber(spec.polytope));
    LiftSpec lift = resolve_lift(spec, w);
    RingSpec ring = leading_ring(lift);
    CHECK(ring.vars == std::vector<std::string>{"y1_1", "y2_1", "y1_2", "y2_2"});
    LiftSpec conn(lift.pi1_image, {{"1", Rat(0)}}, 3);
    CHECK(leading_ring(conn).vars == std::vector<std::string>{"y1", "y2"});
}
