#include "legch/augpoly.hpp"

#include <algorithm>

namespace legch {

std::vector<IntVec> newton_vertices(const LaurentPoly& w) { return hull_vertices(w.support()); }

LaurentPoly vertex_shift(const LaurentPoly& w, const std::optional<IntVec>& v, IntVec* vertex_used)
{
    if (w.is_zero()) throw std::invalid_argument("vertex shift of the zero polynomial");
    auto verts = newton_vertices(w);
    IntVec chosen;
    if (v) {
        if (std::find(verts.begin(), verts.end(), *v) == verts.end())
            throw NotAVertex(ivec_str(*v) + " is not a vertex of the Newton polytope");
        chosen = *v;
    } else {
        chosen = *std::min_element(verts.begin(), verts.end());  // lexicographic minimum
    }
    if (vertex_used) *vertex_used = chosen;
    return w.shifted(chosen);
}

LaurentPoly descend(const LaurentPoly& w_shifted, const Sublattice& image)
{
    IntVec zero(w_shifted.rank());
    if (w_shifted.coeff(zero) == 0)
        throw std::invalid_argument("descend requires 0 to be a vertex of the Newton polytope");
    LaurentPoly out(image.rank());
    for (const auto& [e, c] : w_shifted.terms()) {
        auto pre = image.member_preimage(e);
        if (!pre)
            throw NotDescendable("exponent " + ivec_str(e) +
                                     " is not in the lift sublattice; the lift does not "
                                     "satisfy the boundary-difference condition",
                                 e);
        out.add_term(*pre, c);
    }
    return out;
}

namespace {

IntVec primitive(const IntVec& v)
{
    Int g = ivec_gcd(v);
    if (g <= 1) return v;
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

bool is_zero_vec(const IntVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Extreme rays of cone(exps), as primitive vectors sorted by the term order.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& exps)
{
    std::vector<IntVec> dirs;
    for (const auto& e : exps) {
        if (is_zero_vec(e)) continue;
        IntVec p = primitive(e);
        if (std::find(dirs.begin(), dirs.end(), p) == dirs.end()) dirs.push_back(p);
    }
    std::vector<IntVec> rays;
    for (size_t i = 0; i < dirs.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < dirs.size(); ++j)
            if (j != i) others.push_back(dirs[j]);
        if (!in_cone(dirs[i], others)) rays.push_back(dirs[i]);
    }
    std::sort(rays.begin(), rays.end(), ExponentOrder{});
    return rays;
}

std::optional<PositiveBasis> from_basis_matrix(const IntMat& basis, const std::vector<IntVec>& exps)
{
    Int d = basis.det();
    if (d != 1 && d != -1) return std::nullopt;
    PositiveBasis pb;
    pb.basis = basis;
    pb.transform = inverse_unimodular(basis);
    for (const auto& e : exps) {
        IntVec ne = pb.transform.apply(e);
        for (const auto& x : ne)
            if (x < 0) return std::nullopt;
    }
    return pb;
}

// entry values in preference order for the exhaustive search
constexpr long kEntryOrder[] = {0, 1, -1, 2, -2, 3, -3};

// Exhaustive search over unimodular transforms with entries in [-3, 3],
// preferring small entries.  Only attempted at rank <= 3; uses int64
// throughout (entries are tiny).
std::optional<PositiveBasis> exhaustive_search(const std::vector<IntVec>& exps, size_t k)
{
    std::vector<std::vector<long>> le;
    for (const auto& e : exps) {
        std::vector<long> v(k);
        for (size_t i = 0; i < k; ++i) {
            if (!e[i].fits_slong_p()) return std::nullopt;
            v[i] = e[i].get_si();
        }
        le.push_back(std::move(v));
    }
    // rows valid as transform rows: nonnegative on every exponent
    std::vector<std::vector<long>> rows;
    std::vector<long> row(k);
    auto gen_rows = [&](auto&& self, size_t pos) -> void {
        if (pos == k) {
            for (const auto& e : le) {
                long s = 0;
                for (size_t i = 0; i < k; ++i) s += row[i] * e[i];
                if (s < 0) return;
            }
            rows.push_back(row);
            return;
        }
        for (long v : kEntryOrder) {
            row[pos] = v;
            self(self, pos + 1);
        }
    };
    gen_rows(gen_rows, 0);

    auto det_long = [&](const std::vector<const std::vector<long>*>& m) -> long {
        if (k == 1) return (*m[0])[0];
        if (k == 2) return (*m[0])[0] * (*m[1])[1] - (*m[0])[1] * (*m[1])[0];
        const auto& a = *m[0];
        const auto& b = *m[1];
        const auto& c = *m[2];
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };

    std::vector<const std::vector<long>*> pick(k);
    std::optional<PositiveBasis> result;
    auto search = [&](auto&& self, size_t pos) -> bool {
        if (pos == k) {
            long d = det_long(pick);
            if (d != 1 && d != -1) return false;
            IntMat t(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) t.at(i, j) = (*pick[i])[j];
            PositiveBasis pb;
            pb.transform = t;
            pb.basis = inverse_unimodular(t);
            result = pb;
            return true;
        }
        for (const auto& r : rows) {
            pick[pos] = &r;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    search(search, 0);
    return result;
}

}  // namespace

std::optional<PositiveBasis> positive_basis(const std::vector<IntVec>& exponents)
{
    if (exponents.empty()) throw std::invalid_argument("positive_basis needs exponents");
    size_t k = exponents[0].size();
    bool has_zero = false;
    for (const auto& e : exponents) {
        if (e.size() != k) throw std::invalid_argument("exponent dimension mismatch");
        if (is_zero_vec(e)) has_zero = true;
    }
    if (!has_zero) throw std::invalid_argument("positive_basis requires 0 among the exponents");
    if (k == 0) return PositiveBasis{IntMat::identity(0), IntMat::identity(0)};

    // The extreme rays are the canonical choice whenever they form a
    // unimodular simplicial cone.
    auto rays = extreme_rays(exponents);
    if (rays.size() == k) {
        IntMat basis(k, k);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < k; ++i) basis.at(i, j) = rays[j][i];
        if (auto pb = from_basis_matrix(basis, exponents)) return pb;
    }

    bool all_nonneg = true;
    for (const auto& e : exponents)
        for (const auto& x : e)
            if (x < 0) all_nonneg = false;
    if (all_nonneg) return PositiveBasis{IntMat::identity(k), IntMat::identity(k)};

    if (k <= 3) return exhaustive_search(exponents, k);
    return std::nullopt;
}

AugmentationPolynomial augmentation_polynomial(const DelzantPolytope& p, const MonotoneFiber& fiber,
                                               const LiftSpec& spec, const AugPolyOptions& opts)
{
    if (!opts.signs.empty() && opts.signs.size() != p.facets.size())
        throw std::invalid_argument("sign vector length must equal the facet count");
    LaurentPoly w(p.dim);
    for (size_t i = 0; i < p.facets.size(); ++i) {
        int s = opts.signs.empty() ? 1 : opts.signs[i];
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
        w.add_term(p.facets[i].normal, s);
    }
    // monotone normalization sanity: every facet at the common distance
    (void)disk_potential(p, fiber);

    AugmentationPolynomial out;
    LaurentPoly shifted = vertex_shift(w, opts.vertex, &out.vertex_used);
    LaurentPoly descended = descend(shifted, spec.pi1_image);

    auto pb = positive_basis(descended.support());
    if (pb) {
        LaurentPoly re(descended.rank());
        for (const auto& [e, c] : descended.terms()) re.add_term(pb->transform.apply(e), c);
        out.poly = re;
        out.positive = true;
        for (size_t j = 0; j < spec.pi1_image.rank(); ++j) {
            IntVec b(spec.pi1_image.ambient_rank());
            for (size_t i = 0; i < spec.pi1_image.rank(); ++i) {
                const IntVec& basis_vec = spec.pi1_image.basis()[i];
                for (size_t a = 0; a < b.size(); ++a) b[a] += pb->basis.at(i, j) * basis_vec[a];
            }
            out.basis_used.push_back(std::move(b));
        }
    } else {
        out.poly = descended;
        out.positive = false;
        out.basis_used = spec.pi1_image.basis();
    }
    return out;
}

bool variety_member(const LaurentPoly& w, const RatVec& point)
{
    for (const auto& c : point)
        if (c == 0) throw ZeroCoordinate("variety membership needs invertible coordinates");
    return w.eval(point) == 0;
}

bool variety_member(const LaurentPoly& w, const std::vector<std::complex<double>>& point,
                    double tolerance)
{
    for (const auto& c : point)
        if (c == std::complex<double>(0, 0))
            throw ZeroCoordinate("variety membership needs invertible coordinates");
    return std::abs(w.eval(point)) <= tolerance;
}

Sublattice difference_lattice(const LaurentPoly& w)
{
    auto pts = w.support();
    if (pts.empty()) throw std::invalid_argument("difference lattice of the zero polynomial");
    size_t n = w.rank();
    IntMat m(n, pts.size() > 1 ? pts.size() - 1 : 1);
    for (size_t j = 1; j < pts.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.at(i, j - 1) = pts[j][i] - pts[0][i];

    auto snf = smith_normal_form(m);
    IntMat uinv = inverse_unimodular(snf.u);
    std::vector<IntVec> basis;
    size_t nmin = std::min(m.rows(), m.cols());
    for (size_t i = 0; i < nmin; ++i) {
        if (snf.d.at(i, i) == 0) continue;
        IntVec b(n);
        for (size_t r = 0; r < n; ++r) b[r] = uinv.at(r, i) * snf.d.at(i, i);
        basis.push_back(std::move(b));
    }
    return Sublattice(n, std::move(basis));
}

}  // namespace legch
