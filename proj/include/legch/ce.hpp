#ifndef LEGCH_CE_HPP
#define LEGCH_CE_HPP

#include "legch/lift.hpp"

namespace legch {

// A generator of the Chekanov-Eliashberg algebra: either a Morse critical
// point on a Reeb-chord component or a classical (Morse) generator on the
// Legendrian itself.
struct Generator {
    std::string symbol;
    GenKind kind = GenKind::Classical;
    int morse_index = 0;
    Rat angle;           // chord angle in turns; Reeb generators only
    size_t from = 0, to = 0;  // chord endpoints; Reeb generators only
    Rat deg_r;
    int deg_z2 = 0;
    bool integral = true;

    static Generator reeb(std::string symbol, size_t from, size_t to, Rat angle, int morse_index,
                          const Rat& tau);
    static Generator classical(std::string symbol, int morse_index);

    // Parity used for abelianization reordering: the shifted real degree
    // mod 2 when integral, deg_z2 otherwise.
    int shifted_parity() const;
};

struct MissingGenerator : std::runtime_error {
    std::string symbol;
    explicit MissingGenerator(std::string sym)
        : std::runtime_error("no differential entry for generator " + sym), symbol(std::move(sym))
    {
    }
};

struct Alphabet {
    std::map<std::string, Generator> gens;

    void add(Generator g);
    const Generator& at(const std::string& symbol) const;
    bool contains(const std::string& symbol) const { return gens.count(symbol) > 0; }
};

// Coefficient ring: the group ring presented by named Laurent variables,
// each optionally carrying an area weight for the filtration cutoff.
struct RingSpec {
    std::vector<std::string> vars;
    std::vector<Rat> areas;  // empty or same length as vars

    size_t rank() const { return vars.size(); }
    Rat area_of(const IntVec& exp) const;  // signed linear area of a monomial
    bool operator==(const RingSpec& rhs) const { return vars == rhs.vars && areas == rhs.areas; }
};

struct Truncation {
    int max_word_len = 8;
    std::optional<Rat> max_area;  // unset = no area cutoff
    bool operator==(const Truncation&) const = default;
};

struct TruncationMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Word = std::vector<std::string>;

// Words ordered by length, then lexicographically.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Truncated formal sum of words with group-ring coefficients.  No zero
// coefficients are stored; words beyond the truncation are dropped on
// insertion, which realizes the completed coefficient ring at a finite
// cutoff.
class CEElement {
public:
    using TermMap = std::map<Word, LaurentPoly, WordOrder>;

    CEElement() = default;
    CEElement(RingSpec ring, Truncation trunc) : ring_(std::move(ring)), trunc_(std::move(trunc)) {}
    static CEElement unit(const RingSpec& ring, const Truncation& trunc);
    static CEElement zero(const RingSpec& ring, const Truncation& trunc);

    const RingSpec& ring() const { return ring_; }
    const Truncation& truncation() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const LaurentPoly& coef);
    LaurentPoly coeff(const Word& w) const;

    CEElement operator+(const CEElement& rhs) const;
    CEElement operator-(const CEElement& rhs) const;
    CEElement scaled(const Rat& c) const;
    CEElement scaled(const LaurentPoly& c) const;

    // Mathematical equality: same ring and same terms (truncations need not
    // agree; comparisons are only meaningful under a common cutoff).
    bool operator==(const CEElement& rhs) const
    {
        return ring_.vars == rhs.ring_.vars && terms_ == rhs.terms_;
    }

    std::string str(const Alphabet* alphabet = nullptr) const;

private:
    RingSpec ring_;
    Truncation trunc_;
    TermMap terms_;
};

// Bilinear concatenation product truncated to the common cutoff.
CEElement product(const CEElement& a, const CEElement& b);

// Finite presentation of the differential on generators.
struct DifferentialTable {
    Alphabet alphabet;
    RingSpec ring;
    Truncation truncation;
    std::map<std::string, CEElement> entries;
    bool truncated = false;  // leading-order only: higher corrections unknown

    const CEElement& entry(const std::string& symbol) const;
};

// The degree -1 derivation extending the table, with the Koszul sign taken
// from deg_z2 of the letters passed over.  Coefficient-ring elements are
// constants of the derivation.
CEElement derive(const DifferentialTable& table, const CEElement& x);

struct D2Report {
    enum class Status { Ok, Failed, Inconclusive } status = Status::Ok;
    std::vector<std::pair<std::string, CEElement>> failures;  // nonzero residuals
    std::vector<std::string> missing;                         // letters without entries
    bool truncated = false;
    std::string summary() const;
};

D2Report check_squares_zero(const DifferentialTable& table);

// Sorts each word into canonical letter order with the Koszul sign from the
// shifted parities; the result is the image in the free graded-commutative
// quotient, represented on sorted words.
CEElement abelianize(const Alphabet& alphabet, const CEElement& x);

// Keeps exactly the words all of whose letters have real degree zero.
CEElement project_degree0(const Alphabet& alphabet, const CEElement& x);

// Per-variable data for the exponential substitution y_i = [mu_i] exp(c_i).
struct ExpAssignment {
    IntVec cls;                    // class mu_i in the target exponent lattice
    std::string classical_symbol;  // degree-zero classical letter c_i
};

// Replaces each coefficient monomial prod y_i^{a_i} by [sum a_i mu_i] times
// the expansion of prod exp(a_i c_i): for every multiplicity vector d the
// word c_1^{d_1} ... c_k^{d_k} (inserted adjacently, ascending variable
// order) appears with coefficient prod a_i^{d_i} / d_i!, truncated at the
// word-length cutoff.
CEElement exp_substitute(const CEElement& x, const std::vector<ExpAssignment>& assignments,
                         const RingSpec& target_ring, const Truncation& trunc);

struct DegreeViolation {
    std::string symbol;
    Word word;
    Rat expected, actual;
};

// Checks deg_R(entry word) = deg_R(generator) - 1 for every table entry.
std::vector<DegreeViolation> degree_check(const DifferentialTable& table);

// True when every entry of a classical generator uses classical letters
// only (the differential then preserves the classical sector).
bool classical_sector_closed(const DifferentialTable& table);

}  // namespace legch

#endif
