#ifndef LEGCH_IO_HPP
#define LEGCH_IO_HPP

#include <json.hpp>

#include "legch/augcheck.hpp"
#include "legch/leading.hpp"

namespace legch {

using Json = nlohmann::ordered_json;

struct ValidationError : std::runtime_error {
    std::string field;
    ValidationError(std::string fld, const std::string& msg)
        : std::runtime_error(fld + ": " + msg), field(std::move(fld))
    {
    }
};

// Parsed input file: the polytope plus the (not yet resolved) lift block.
// A missing sublattice means "auto": the lattice generated by pairwise
// differences of the potential's exponents.  A missing fiber_points
// defaults to the sublattice index (the standard connected lift).
struct InputSpec {
    DelzantPolytope polytope;
    std::optional<std::vector<IntVec>> sublattice_rows;
    std::optional<Int> fiber_points;
    std::vector<LiftComponent> components{{"1", Rat(0)}};
    std::vector<int> signs;
    int max_word_len = 6;
    std::optional<Rat> max_area;
    std::optional<IntVec> vertex;
};

// TOML (restricted grammar: sections, key = value, strings, integers,
// booleans, nested arrays) or JSON, sniffed from the content.
InputSpec parse_input(const std::string& text, const std::string& origin = "<input>");
InputSpec parse_input_file(const std::string& path);

// Built-in presets: "clifford N", "cliffordanti N", "p1xp1", "hopf N".
InputSpec preset(const std::string& name, std::optional<int> n);
std::vector<std::string> preset_names();
// The preset rendered as an input file (TOML), for the examples command.
std::string preset_toml(const std::string& name, std::optional<int> n);

LiftSpec resolve_lift(const InputSpec& spec, const LaurentPoly& potential);

Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json element_to_json(const CEElement& e);
CEElement element_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc);

Json table_to_json(const DifferentialTable& t);
DifferentialTable table_from_json(const Json& j);

Json generator_to_json(const Generator& g);
Generator generator_from_json(const Json& j);

Augmentation augmentation_from_json(const Json& j);
ChainMap chainmap_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc);
MCProblem mcproblem_from_json(const Json& j, const RingSpec& ring, const Truncation& trunc);
Matching matching_from_json(const Json& j);
RingSpec ring_from_json(const Json& j);
Json ring_to_json(const RingSpec& r);

// Fixture tables for the examples command and the test corpus.
DifferentialTable synthetic_closed_table();
DifferentialTable synthetic_broken_table();

}  // namespace legch

#endif
