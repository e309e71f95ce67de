#include "legch/toric.hpp"

#include <algorithm>
#include <set>

namespace legch {

namespace {

template <class F>
void for_subsets(size_t n, size_t size, F&& f)
{
    if (size > n) return;
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        f(idx);
        size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Rat facet_value(const Facet& f, const RatVec& x)
{
    Rat v = f.offset;
    for (size_t i = 0; i < x.size(); ++i) v += Rat(f.normal[i]) * x[i];
    return v;
}

// Does the recession cone { x : <nu_i, x> >= 0 for all i } contain a nonzero
// vector?  Every extreme ray of a pointed cone is cut out by dim-1 of the
// inequalities, so testing kernel directions of all (dim-1)-subsets plus a
// row-rank check is exhaustive.
bool has_recession_direction(const DelzantPolytope& p)
{
    size_t d = p.dim;
    size_t m = p.facets.size();

    auto in_cone_dir = [&](const RatVec& x) {
        bool nonzero = false;
        for (const auto& v : x)
            if (v != 0) nonzero = true;
        if (!nonzero) return false;
        for (const auto& f : p.facets)
            if (facet_value(f, x) - f.offset < 0) return false;
        return true;
    };

    // rank deficiency gives a direction with <nu_i, x> = 0 for all i
    {
        std::vector<RatVec> rows;
        for (const auto& f : p.facets) {
            RatVec r(d);
            for (size_t i = 0; i < d; ++i) r[i] = Rat(f.normal[i]);
            rows.push_back(r);
        }
        // kernel vector exists iff solving A^T y over all unit rhs... simpler:
        // Gaussian-eliminate the rows and look for a free column.
        std::vector<RatVec> a = rows;
        size_t r = 0;
        std::vector<bool> pivot(d, false);
        for (size_t c = 0; c < d && r < a.size(); ++c) {
            size_t pr = r;
            while (pr < a.size() && a[pr][c] == 0) ++pr;
            if (pr == a.size()) continue;
            std::swap(a[pr], a[r]);
            for (size_t i = 0; i < a.size(); ++i) {
                if (i == r || a[i][c] == 0) continue;
                Rat f2 = a[i][c] / a[r][c];
                for (size_t j = 0; j < d; ++j) a[i][j] -= f2 * a[r][j];
            }
            pivot[c] = true;
            ++r;
        }
        if (r < d) {
            // build a kernel vector from a free column
            size_t free_col = 0;
            while (pivot[free_col]) ++free_col;
            RatVec x(d);
            x[free_col] = 1;
            // back-substitute pivots
            size_t ri = 0;
            for (size_t c = 0; c < d; ++c) {
                if (!pivot[c]) continue;
                x[c] = -a[ri][free_col] / a[ri][c];
                ++ri;
            }
            if (in_cone_dir(x)) return true;
            for (auto& v : x) v = -v;
            if (in_cone_dir(x)) return true;
        }
    }

    if (d == 1) {
        RatVec plus{Rat(1)}, minus{Rat(-1)};
        return in_cone_dir(plus) || in_cone_dir(minus);
    }

    bool found = false;
    for_subsets(m, d - 1, [&](const std::vector<size_t>& idx) {
        if (found) return;
        std::vector<RatVec> rows(d - 1, RatVec(d));
        for (size_t i = 0; i < d - 1; ++i)
            for (size_t j = 0; j < d; ++j) rows[i][j] = Rat(p.facets[idx[i]].normal[j]);
        // kernel of a (d-1) x d system: append a normalization row for each
        // candidate coordinate until a solvable normalization is found
        for (size_t fix = 0; fix < d && !found; ++fix) {
            auto sys = rows;
            RatVec rhs(d, Rat(0));
            RatVec norm_row(d, Rat(0));
            norm_row[fix] = 1;
            sys.push_back(norm_row);
            rhs[d - 1] = 1;
            bool unique = false;
            auto sol = solve_rational(sys, rhs, &unique);
            if (!sol || !unique) continue;
            if (in_cone_dir(*sol)) {
                found = true;
                break;
            }
            for (auto& v : *sol) v = -v;
            if (in_cone_dir(*sol)) found = true;
        }
    });
    return found;
}

}  // namespace

ValidationReport validate_delzant(const DelzantPolytope& p)
{
    ValidationReport rep;
    if (p.facets.empty()) throw std::invalid_argument("polytope has no facets");
    for (const auto& f : p.facets)
        if (f.normal.size() != p.dim)
            throw std::invalid_argument("facet normal dimension mismatch");

    for (size_t i = 0; i < p.facets.size(); ++i) {
        Int g = ivec_gcd(p.facets[i].normal);
        if (g != 1)
            rep.issues.push_back({ValidationIssue::Kind::NotPrimitive, i,
                                  "facet " + std::to_string(i) + " normal " +
                                      ivec_str(p.facets[i].normal) + " has content " + g.get_str()});
    }

    if (has_recession_direction(p))
        rep.issues.push_back({ValidationIssue::Kind::NotBounded, 0,
                              "facet normals do not positively span; polytope unbounded"});

    // vertex enumeration over dim-subsets of facets
    std::set<RatVec> seen;
    for_subsets(p.facets.size(), p.dim, [&](const std::vector<size_t>& idx) {
        IntMat a(p.dim, p.dim);
        RatVec b(p.dim);
        for (size_t i = 0; i < p.dim; ++i) {
            for (size_t j = 0; j < p.dim; ++j) a.at(i, j) = p.facets[idx[i]].normal[j];
            b[i] = -p.facets[idx[i]].offset;
        }
        bool unique = false;
        auto x = solve_rational(a, b, &unique);
        if (!x || !unique) return;
        for (const auto& f : p.facets)
            if (facet_value(f, *x) < 0) return;
        if (seen.count(*x)) return;
        seen.insert(*x);
        PolytopeVertex v;
        v.point = *x;
        for (size_t fi = 0; fi < p.facets.size(); ++fi)
            if (facet_value(p.facets[fi], *x) == 0) v.active_facets.push_back(fi);
        rep.vertices.push_back(std::move(v));
    });
    std::sort(rep.vertices.begin(), rep.vertices.end(),
              [](const PolytopeVertex& a, const PolytopeVertex& b) { return a.point < b.point; });

    if (rep.vertices.empty())
        rep.issues.push_back({ValidationIssue::Kind::Degenerate, 0, "no vertices found"});

    for (size_t vi = 0; vi < rep.vertices.size(); ++vi) {
        const auto& v = rep.vertices[vi];
        if (v.active_facets.size() != p.dim) {
            rep.issues.push_back({ValidationIssue::Kind::NotSmooth, vi,
                                  "vertex " + std::to_string(vi) + " lies on " +
                                      std::to_string(v.active_facets.size()) + " facets"});
            continue;
        }
        IntMat n(p.dim, p.dim);
        for (size_t i = 0; i < p.dim; ++i)
            for (size_t j = 0; j < p.dim; ++j) n.at(i, j) = p.facets[v.active_facets[i]].normal[j];
        Int dt = n.det();
        if (dt != 1 && dt != -1)
            rep.issues.push_back({ValidationIssue::Kind::NotSmooth, vi,
                                  "vertex " + std::to_string(vi) +
                                      " incident normals have determinant " + dt.get_str()});
    }

    // integrality of the symplectic class, up to translation: all vertex
    // differences integral
    rep.omega_integral = true;
    for (size_t i = 1; i < rep.vertices.size(); ++i)
        for (size_t j = 0; j < p.dim; ++j) {
            Rat diff = rep.vertices[i].point[j] - rep.vertices[0].point[j];
            if (!is_integer(diff)) rep.omega_integral = false;
        }

    rep.ok = rep.issues.empty();
    return rep;
}

MonotoneFiber monotone_fiber(const DelzantPolytope& p)
{
    // unknowns (x, l): <nu_i, x> - l = -c_i
    size_t m = p.facets.size();
    std::vector<RatVec> rows(m, RatVec(p.dim + 1));
    RatVec rhs(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < p.dim; ++j) rows[i][j] = Rat(p.facets[i].normal[j]);
        rows[i][p.dim] = -1;
        rhs[i] = -p.facets[i].offset;
    }
    bool unique = false;
    auto sol = solve_rational(rows, rhs, &unique);
    if (!sol) throw NoMonotonePoint("facet equidistance system is inconsistent");
    if (!unique) throw NoMonotonePoint("facet equidistance system is underdetermined");
    Rat l = (*sol)[p.dim];
    if (l <= 0) throw NoMonotonePoint("equidistant point is not interior");
    MonotoneFiber fib;
    fib.point.assign(sol->begin(), sol->begin() + p.dim);
    fib.facet_distance = l;
    fib.tau = 1 / l;
    fib.tame = fib.tau > 1;
    return fib;
}

LaurentPoly disk_potential(const DelzantPolytope& p, const MonotoneFiber& fiber)
{
    for (const auto& f : p.facets)
        if (facet_value(f, fiber.point) != fiber.facet_distance)
            throw std::invalid_argument("fiber is not monotone for this polytope");
    LaurentPoly w(p.dim);
    for (const auto& f : p.facets) w.add_term(f.normal, 1);
    return w;
}

}  // namespace legch
