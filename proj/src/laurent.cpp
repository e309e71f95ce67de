#include "legch/laurent.hpp"

#include <sstream>

namespace legch {

bool ExponentOrder::operator()(const IntVec& a, const IntVec& b) const
{
    Int da = 0, db = 0, ma = 0, mb = 0;
    for (const auto& x : a) {
        da += x;
        if (abs(x) > ma) ma = abs(x);
    }
    for (const auto& x : b) {
        db += x;
        if (abs(x) > mb) mb = abs(x);
    }
    if (da != db) return da < db;
    if (ma != mb) return ma < mb;
    return a > b;  // descending lex inside a degree: y1 prints before y2
}

LaurentPoly LaurentPoly::constant(size_t rank, const Rat& c)
{
    LaurentPoly p(rank);
    p.add_term(IntVec(rank), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(IntVec exp, const Rat& c)
{
    LaurentPoly p(exp.size());
    p.add_term(exp, c);
    return p;
}

Rat LaurentPoly::coeff(const IntVec& exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const IntVec& exp, const Rat& c)
{
    if (exp.size() != rank_) throw std::invalid_argument("exponent dimension mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const
{
    if (rank_ != rhs.rank_) throw std::invalid_argument("polynomial rank mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const
{
    if (rank_ != rhs.rank_) throw std::invalid_argument("polynomial rank mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const
{
    if (rank_ != rhs.rank_) throw std::invalid_argument("polynomial rank mismatch");
    LaurentPoly r(rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(ivec_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const
{
    LaurentPoly r(rank_);
    if (c == 0) return r;
    for (const auto& [e, q] : terms_) r.add_term(e, q * c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return *this * Rat(-1); }

LaurentPoly LaurentPoly::shifted(const IntVec& v) const
{
    if (v.size() != rank_) throw std::invalid_argument("shift vector dimension mismatch");
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.add_term(ivec_sub(e, v), c);
    return r;
}

std::vector<IntVec> LaurentPoly::support() const
{
    std::vector<IntVec> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return pts;
}

Rat LaurentPoly::eval(const RatVec& point) const
{
    if (point.size() != rank_) throw std::invalid_argument("evaluation point dimension mismatch");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < rank_ && t != 0; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw std::domain_error("zero coordinate raised to a negative power");
                t = 0;
                break;
            }
            unsigned long k = mpz_get_ui(Int(abs(e[i])).get_mpz_t());
            Rat p = rat_pow(point[i], k);
            if (e[i] > 0)
                t *= p;
            else
                t /= p;
        }
        total += t;
    }
    return total;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& point) const
{
    if (point.size() != rank_) throw std::invalid_argument("evaluation point dimension mismatch");
    std::complex<double> total = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.get_d();
        for (size_t i = 0; i < rank_; ++i) {
            long k = mpz_get_si(e[i].get_mpz_t());
            if (k == 0) continue;
            std::complex<double> p = 1;
            for (long j = 0; j < labs(k); ++j) p *= point[i];
            t = k > 0 ? t * p : t / p;
        }
        total += t;
    }
    return total;
}

std::string monomial_str(const IntVec& exp, const std::vector<std::string>& vars)
{
    std::string s;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (exp[i] != 1) s += "^" + exp[i].get_str();
    }
    return s;
}

std::string LaurentPoly::str(const std::vector<std::string>& vars) const
{
    if (vars.size() != rank_) throw std::invalid_argument("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_str(e, vars);
        if (mono.empty())
            s += rat_str(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_str(a) + "*" + mono;
    }
    return s;
}

std::string LaurentPoly::str() const
{
    std::vector<std::string> vars;
    for (size_t i = 0; i < rank_; ++i) vars.push_back("x" + std::to_string(i + 1));
    return str(vars);
}

namespace {

// All subsets of {0..n-1} of the given size, visited in lexicographic order.
template <class F>
void for_subsets(size_t n, size_t size, F&& f)
{
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    if (size > n) return;
    while (true) {
        f(idx);
        size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& others)
{
    if (others.empty()) return false;
    size_t d = p.size();
    bool found = false;
    for (size_t k = 1; k <= d + 1 && !found; ++k) {
        for_subsets(others.size(), k, [&](const std::vector<size_t>& idx) {
            if (found) return;
            // columns = chosen points, plus a normalization row of ones
            std::vector<RatVec> rows(d + 1, RatVec(k));
            RatVec rhs(d + 1);
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < k; ++j) rows[i][j] = Rat(others[idx[j]][i]);
                rhs[i] = Rat(p[i]);
            }
            for (size_t j = 0; j < k; ++j) rows[d][j] = 1;
            rhs[d] = 1;
            bool unique = false;
            auto sol = solve_rational(rows, rhs, &unique);
            if (!sol || !unique) return;  // dependent subsets are covered by smaller ones
            for (const auto& l : *sol)
                if (l < 0) return;
            found = true;
        });
    }
    return found;
}

std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points)
{
    std::vector<IntVec> verts;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < points.size(); ++j)
            if (j != i && points[j] != points[i]) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) verts.push_back(points[i]);
    }
    return verts;
}

bool in_cone(const IntVec& p, const std::vector<IntVec>& gens)
{
    bool zero = true;
    for (const auto& x : p)
        if (x != 0) zero = false;
    if (zero) return true;
    size_t d = p.size();
    bool found = false;
    for (size_t k = 1; k <= d && !found; ++k) {
        for_subsets(gens.size(), k, [&](const std::vector<size_t>& idx) {
            if (found) return;
            std::vector<RatVec> rows(d, RatVec(k));
            RatVec rhs(d);
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < k; ++j) rows[i][j] = Rat(gens[idx[j]][i]);
                rhs[i] = Rat(p[i]);
            }
            bool unique = false;
            auto sol = solve_rational(rows, rhs, &unique);
            if (!sol || !unique) return;
            for (const auto& l : *sol)
                if (l < 0) return;
            found = true;
        });
    }
    return found;
}

}  // namespace legch
