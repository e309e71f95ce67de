#ifndef LEGCH_MATRIX_HPP
#define LEGCH_MATRIX_HPP

#include <optional>

#include "legch/rational.hpp"

namespace legch {

// Dense exact integer matrix, row-major.  Sizes in this engine stay tiny
// (rank <= 10), so no attention is paid to performance.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMat identity(size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(size_t i) const;
    IntVec col(size_t j) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void add_row(size_t dst, size_t src, const Int& factor);  // row dst += factor * row src
    void add_col(size_t dst, size_t src, const Int& factor);
    void negate_row(size_t i);

    IntMat operator*(const IntMat& rhs) const;
    IntVec apply(const IntVec& v) const;  // matrix * column vector
    bool operator==(const IntMat& rhs) const = default;

    // Exact determinant by rational Gaussian elimination (square only).
    Int det() const;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

// Solves A x = b over the rationals.  Returns empty optional if inconsistent.
// If the system is underdetermined the free variables are set to zero and
// *unique, when given, is set to false.
std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b, bool* unique = nullptr);

// Rational matrix solve for systems with rational coefficients.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b,
                                     bool* unique = nullptr);

// Exact inverse of a matrix with determinant +-1.
IntMat inverse_unimodular(const IntMat& m);

Int ivec_gcd(const IntVec& v);
IntVec ivec_sub(const IntVec& a, const IntVec& b);
IntVec ivec_add(const IntVec& a, const IntVec& b);
std::string ivec_str(const IntVec& v);

}  // namespace legch

#endif
