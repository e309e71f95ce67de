#include "legch/matrix.hpp"

#include <optional>
#include <sstream>

namespace legch {

IntMat IntMat::identity(size_t n)
{
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows)
{
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged row list");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMat::row(size_t i) const
{
    IntVec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

IntVec IntMat::col(size_t j) const
{
    IntVec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntMat::swap_rows(size_t i, size_t j)
{
    for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(size_t i, size_t j)
{
    for (size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row(size_t dst, size_t src, const Int& factor)
{
    for (size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMat::add_col(size_t dst, size_t src, const Int& factor)
{
    for (size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMat::negate_row(size_t i)
{
    for (size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

IntMat IntMat::operator*(const IntMat& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product size mismatch");
    IntMat r(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k)
            for (size_t j = 0; j < rhs.cols_; ++j)
                r.at(i, j) += at(i, k) * rhs.at(k, j);
    return r;
}

IntVec IntMat::apply(const IntVec& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("matrix apply size mismatch");
    IntVec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

Int IntMat::det() const
{
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = rows_;
    std::vector<RatVec> a(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(at(i, j));

    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    d.canonicalize();
    if (d.get_den() != 1) throw std::logic_error("non-integral determinant");
    return d.get_num();
}

std::string IntMat::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b, bool* unique)
{
    std::vector<RatVec> rows(a.rows(), RatVec(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) rows[i][j] = Rat(a.at(i, j));
    return solve_rational(rows, b, unique);
}

std::optional<RatVec> solve_rational(const std::vector<RatVec>& a_in, const RatVec& b_in,
                                     bool* unique)
{
    auto a = a_in;
    auto b = b_in;
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve size mismatch");

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = a[r][c];
        for (size_t j = c; j < n; ++j) a[r][j] /= inv;
        b[r] /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;

    RatVec x(n, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    if (unique) *unique = (pivot_col.size() == n);
    return x;
}

IntMat inverse_unimodular(const IntMat& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    Int d = m.det();
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    IntMat inv(n, n);
    for (size_t c = 0; c < n; ++c) {
        RatVec e(n);
        e[c] = 1;
        auto x = solve_rational(m, e);
        for (size_t r = 0; r < n; ++r) {
            if (!is_integer((*x)[r])) throw std::logic_error("unimodular inverse not integral");
            inv.at(r, c) = (*x)[r].get_num();
        }
    }
    return inv;
}

Int ivec_gcd(const IntVec& v)
{
    Int g = 0;
    for (const auto& x : v) {
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

IntVec ivec_sub(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec ivec_add(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::string ivec_str(const IntVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

}  // namespace legch
