#ifndef LEGCH_AUGCHECK_HPP
#define LEGCH_AUGCHECK_HPP

#include "legch/ce.hpp"

namespace legch {

struct MissingValue : std::runtime_error {
    std::string symbol;
    explicit MissingValue(std::string sym)
        : std::runtime_error("augmentation has no value for " + sym), symbol(std::move(sym))
    {
    }
};

// Unital algebra map to the coefficient field: rational values on the
// generators and on the coefficient variables, extended multiplicatively
// over words.  Gradedness is never enforced; nonzero values on generators
// of nonzero degree are reported as warnings only.
struct Augmentation {
    std::map<std::string, Rat> gen_values;
    std::map<std::string, Rat> var_values;

    Rat eval(const CEElement& x) const;
    std::vector<std::string> ungraded_support(const Alphabet& alphabet) const;
};

struct AugReport {
    bool ok = false;
    std::vector<std::pair<std::string, Rat>> residuals;  // nonzero eps(delta g)
};

// ok iff eps(delta g) = 0 exactly for every table generator.
AugReport check_augmentation(const DifferentialTable& table, const Augmentation& eps);

// Algebra map between Chekanov-Eliashberg algebras, specified on generators
// and extended by phi(g1...gd) = phi(g1)...phi(gd); coefficients pass
// through unchanged (both tables share one coefficient ring).
struct ChainMap {
    std::map<std::string, CEElement> images;

    static ChainMap identity(const DifferentialTable& table);
    CEElement apply(const CEElement& x, const RingSpec& target_ring,
                    const Truncation& target_trunc) const;
};

struct ChainMapReport {
    bool ok = false;
    std::vector<std::pair<std::string, CEElement>> residuals;  // phi(d-g) - d+(phi g)
};

ChainMapReport check_chain_map(const ChainMap& phi, const DifferentialTable& source,
                               const DifferentialTable& target);

struct MissingTable : std::runtime_error {
    int degree;
    explicit MissingTable(int d)
        : std::runtime_error("no structure table supplied for degree " + std::to_string(d)), degree(d)
    {
    }
};

// Structure maps m_d as finitely supported multilinear tables on classical
// generators, plus a candidate chain b.  Absent degrees count as zero maps
// unless declared_max forces their presence.
struct MCProblem {
    std::map<int, std::map<std::vector<std::string>, CEElement>> m_tables;
    std::map<std::string, Rat> b;
    std::optional<int> declared_max;
};

// The curvature sum_d (1/d!) m_d(b, ..., b), exact; b is a bounding chain
// iff the residual vanishes.
CEElement mc_residual(const MCProblem& problem, const RingSpec& ring, const Truncation& trunc);

struct EndpointMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One-dimensional matching data: interval components with their endpoint
// labels (a missing endpoint is a closed cap) and any circle components.
struct MatchingEnd {
    std::string component;
    Rat phase;
};

struct MatchingComponent {
    bool circle = false;
    std::optional<MatchingEnd> minus, plus;
};

struct Matching {
    std::vector<MatchingComponent> components;
    bool simply_connected() const;
};

// Throws EndpointMismatch when a boundary label is consumed more than once
// on one side.
void validate_matching(const Matching& m);

struct ComposedChainMap {
    ChainMap map;
    std::vector<std::string> warnings;  // e.g. UnobstructednessUnknown
};

struct ComposedAugmentation {
    Augmentation aug;
    std::vector<std::string> warnings;
};

// Table-level composition along a matching: generator-level substitution
// second after first.  A non-simply-connected matching only warns
// (unobstructedness unknown), it does not fail.
ComposedChainMap compose_matching(const Matching& m, const ChainMap& first, const ChainMap& second,
                                  const RingSpec& ring, const Truncation& trunc);
ComposedAugmentation compose_matching(const Matching& m, const ChainMap& first,
                                      const Augmentation& second);

}  // namespace legch

#endif
