#include "legch/ce.hpp"

#include <set>
#include <sstream>

namespace legch {

Generator Generator::reeb(std::string symbol, size_t from, size_t to, Rat angle, int morse_index,
                          const Rat& tau)
{
    Generator g;
    g.symbol = std::move(symbol);
    g.kind = GenKind::Reeb;
    g.morse_index = morse_index;
    g.angle = std::move(angle);
    g.from = from;
    g.to = to;
    Grading gr = reeb_grading(g.angle, morse_index, tau);
    g.deg_r = gr.deg_r;
    g.deg_z2 = gr.deg_z2;
    g.integral = gr.integral;
    return g;
}

Generator Generator::classical(std::string symbol, int morse_index)
{
    Generator g;
    g.symbol = std::move(symbol);
    g.kind = GenKind::Classical;
    g.morse_index = morse_index;
    Grading gr = classical_grading(morse_index);
    g.deg_r = gr.deg_r;
    g.deg_z2 = gr.deg_z2;
    return g;
}

int Generator::shifted_parity() const
{
    if (integral && is_integer(deg_r)) return mpz_odd_p(deg_r.get_num().get_mpz_t()) ? 1 : 0;
    return deg_z2;
}

void Alphabet::add(Generator g)
{
    auto sym = g.symbol;
    if (!gens.emplace(sym, std::move(g)).second)
        throw std::invalid_argument("duplicate generator symbol " + sym);
}

const Generator& Alphabet::at(const std::string& symbol) const
{
    auto it = gens.find(symbol);
    if (it == gens.end()) throw MissingGenerator(symbol);
    return it->second;
}

Rat RingSpec::area_of(const IntVec& exp) const
{
    if (areas.empty()) return 0;
    Rat a = 0;
    for (size_t i = 0; i < exp.size() && i < areas.size(); ++i) a += Rat(exp[i]) * areas[i];
    return a;
}

CEElement CEElement::unit(const RingSpec& ring, const Truncation& trunc)
{
    CEElement e(ring, trunc);
    e.add({}, LaurentPoly::constant(ring.rank(), 1));
    return e;
}

CEElement CEElement::zero(const RingSpec& ring, const Truncation& trunc)
{
    return CEElement(ring, trunc);
}

void CEElement::add(const Word& w, const LaurentPoly& coef)
{
    if (coef.rank() != ring_.rank())
        throw std::invalid_argument("coefficient rank does not match the ring");
    if (static_cast<int>(w.size()) > trunc_.max_word_len) return;
    LaurentPoly pruned = coef;
    if (trunc_.max_area && !ring_.areas.empty()) {
        LaurentPoly kept(coef.rank());
        for (const auto& [e, c] : coef.terms())
            if (ring_.area_of(e) <= *trunc_.max_area) kept.add_term(e, c);
        pruned = kept;
    }
    if (pruned.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, pruned);
    if (!inserted) {
        it->second = it->second + pruned;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly CEElement::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly(ring_.rank()) : it->second;
}

CEElement CEElement::operator+(const CEElement& rhs) const
{
    if (!(ring_ == rhs.ring_) || !(trunc_ == rhs.trunc_))
        throw TruncationMismatch("sum of elements over different rings or truncations");
    CEElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.add(w, c);
    return r;
}

CEElement CEElement::operator-(const CEElement& rhs) const
{
    if (!(ring_ == rhs.ring_) || !(trunc_ == rhs.trunc_))
        throw TruncationMismatch("difference of elements over different rings or truncations");
    CEElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.add(w, -c);
    return r;
}

CEElement CEElement::scaled(const Rat& c) const
{
    CEElement r(ring_, trunc_);
    for (const auto& [w, q] : terms_) r.add(w, q * c);
    return r;
}

CEElement CEElement::scaled(const LaurentPoly& c) const
{
    CEElement r(ring_, trunc_);
    for (const auto& [w, q] : terms_) r.add(w, q * c);
    return r;
}

std::string CEElement::str(const Alphabet*) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string word;
        for (size_t i = 0; i < w.size(); ++i) word += (i ? "*" : "") + w[i];
        bool single = c.term_count() == 1;
        std::string cs = c.str(ring_.vars);
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << (single ? cs : "(" + cs + ")");
        } else if (single && cs == "1") {
            os << word;
        } else if (single && cs == "-1") {
            os << "-" << word;
        } else if (single && cs.find(' ') == std::string::npos) {
            os << cs << "*" << word;
        } else {
            os << "(" << cs << ")*" << word;
        }
    }
    return os.str();
}

CEElement product(const CEElement& a, const CEElement& b)
{
    if (!(a.ring() == b.ring()) || !(a.truncation() == b.truncation()))
        throw TruncationMismatch("product of elements over different rings or truncations");
    CEElement r(a.ring(), a.truncation());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

const CEElement& DifferentialTable::entry(const std::string& symbol) const
{
    auto it = entries.find(symbol);
    if (it == entries.end()) throw MissingGenerator(symbol);
    return it->second;
}

CEElement derive(const DifferentialTable& table, const CEElement& x)
{
    CEElement out(table.ring, table.truncation);
    for (const auto& [w, coef] : x.terms()) {
        int sign = 1;
        for (size_t i = 0; i < w.size(); ++i) {
            const Generator& g = table.alphabet.at(w[i]);
            const CEElement& dg = table.entry(w[i]);
            for (const auto& [dw, dc] : dg.terms()) {
                Word nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                out.add(nw, dc * coef * Rat(sign));
            }
            if (g.deg_z2 % 2 != 0) sign = -sign;
        }
    }
    return out;
}

D2Report check_squares_zero(const DifferentialTable& table)
{
    D2Report rep;
    rep.truncated = table.truncated;
    std::set<std::string> missing;
    for (const auto& [sym, entry] : table.entries) {
        try {
            CEElement res = derive(table, entry);
            if (!res.is_zero()) rep.failures.emplace_back(sym, res);
        } catch (const MissingGenerator& e) {
            missing.insert(e.symbol);
        }
    }
    rep.missing.assign(missing.begin(), missing.end());
    if (!rep.missing.empty() || table.truncated)
        rep.status = D2Report::Status::Inconclusive;
    else if (!rep.failures.empty())
        rep.status = D2Report::Status::Failed;
    else
        rep.status = D2Report::Status::Ok;
    return rep;
}

std::string D2Report::summary() const
{
    switch (status) {
        case Status::Ok:
            return "ok: delta^2 = 0 below the truncation";
        case Status::Failed:
            return "failed: " + std::to_string(failures.size()) + " nonzero residual(s)";
        case Status::Inconclusive:
        default: {
            std::string s = "inconclusive: table not closed";
            if (!missing.empty()) s += " (missing entries for " + std::to_string(missing.size()) + " generator(s))";
            if (!failures.empty()) s += "; " + std::to_string(failures.size()) + " residual(s) below truncation";
            return s;
        }
    }
}

CEElement abelianize(const Alphabet& alphabet, const CEElement& x)
{
    CEElement out(x.ring(), x.truncation());
    for (const auto& [w, coef] : x.terms()) {
        // insertion sort, tracking the Koszul sign of each adjacent swap
        Word s = w;
        int sign = 1;
        for (size_t i = 1; i < s.size(); ++i)
            for (size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
                int pa = alphabet.at(s[j - 1]).shifted_parity();
                int pb = alphabet.at(s[j]).shifted_parity();
                if (pa == 1 && pb == 1) sign = -sign;
                std::swap(s[j - 1], s[j]);
            }
        // a repeated odd letter equals its own negative in the quotient
        bool kill = false;
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1] && alphabet.at(s[i]).shifted_parity() == 1) kill = true;
        if (kill) continue;
        out.add(s, coef * Rat(sign));
    }
    return out;
}

CEElement project_degree0(const Alphabet& alphabet, const CEElement& x)
{
    CEElement out(x.ring(), x.truncation());
    for (const auto& [w, coef] : x.terms()) {
        bool keep = true;
        for (const auto& l : w)
            if (alphabet.at(l).deg_r != 0) keep = false;
        if (keep) out.add(w, coef);
    }
    return out;
}

CEElement exp_substitute(const CEElement& x, const std::vector<ExpAssignment>& assignments,
                         const RingSpec& target_ring, const Truncation& trunc)
{
    if (assignments.size() != x.ring().rank())
        throw std::invalid_argument("one exp assignment per coefficient variable required");
    for (const auto& a : assignments)
        if (a.cls.size() != target_ring.rank())
            throw std::invalid_argument("exp assignment class has wrong rank");

    CEElement out(target_ring, trunc);
    size_t k = assignments.size();
    for (const auto& [w, coef] : x.terms()) {
        int budget = trunc.max_word_len - static_cast<int>(w.size());
        if (budget < 0) continue;
        for (const auto& [a, q] : coef.terms()) {
            IntVec cls(target_ring.rank());
            for (size_t i = 0; i < k; ++i)
                for (size_t r = 0; r < cls.size(); ++r) cls[r] += a[i] * assignments[i].cls[r];

            // expand prod_i exp(a_i c_i) up to the remaining word length
            struct Frame {
                Word prefix;
                Rat coeff;
            };
            std::vector<Frame> frames{{Word{}, q}};
            for (size_t i = 0; i < k; ++i) {
                std::vector<Frame> next;
                for (const auto& f : frames) {
                    Rat power = 1;  // a_i^d / d!
                    for (int d = 0; static_cast<int>(f.prefix.size()) + d <= budget; ++d) {
                        if (d > 0) {
                            if (a[i] == 0) break;
                            power *= Rat(a[i]) / d;
                        }
                        Frame nf;
                        nf.prefix = f.prefix;
                        nf.prefix.insert(nf.prefix.end(), d, assignments[i].classical_symbol);
                        nf.coeff = f.coeff * power;
                        next.push_back(std::move(nf));
                    }
                }
                frames = std::move(next);
            }
            for (const auto& f : frames) {
                Word nw = f.prefix;
                nw.insert(nw.end(), w.begin(), w.end());
                out.add(nw, LaurentPoly::monomial(cls, f.coeff));
            }
        }
    }
    return out;
}

std::vector<DegreeViolation> degree_check(const DifferentialTable& table)
{
    std::vector<DegreeViolation> out;
    for (const auto& [sym, entry] : table.entries) {
        Rat expected = table.alphabet.at(sym).deg_r - 1;
        for (const auto& [w, coef] : entry.terms()) {
            Rat actual = 0;
            for (const auto& l : w) actual += table.alphabet.at(l).deg_r;
            if (actual != expected) out.push_back({sym, w, expected, actual});
        }
    }
    return out;
}

bool classical_sector_closed(const DifferentialTable& table)
{
    for (const auto& [sym, entry] : table.entries) {
        if (table.alphabet.at(sym).kind != GenKind::Classical) continue;
        for (const auto& [w, coef] : entry.terms())
            for (const auto& l : w)
                if (table.alphabet.at(l).kind != GenKind::Classical) return false;
    }
    return true;
}

}  // namespace legch
