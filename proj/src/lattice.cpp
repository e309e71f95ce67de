#include "legch/lattice.hpp"

namespace legch {

LatticeHom::LatticeHom(IntegerLattice src, IntegerLattice tgt, IntMat m)
    : source(src), target(tgt), matrix(std::move(m))
{
    if (matrix.rows() != target.rank || matrix.cols() != source.rank)
        throw std::invalid_argument("lattice hom matrix shape mismatch");
}

std::vector<Int> SmithDecomposition::invariant_factors() const
{
    std::vector<Int> f;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) f.push_back(d.at(i, i));
    return f;
}

namespace {

bool is_lone(const IntMat& d, size_t s)
{
    for (size_t i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0) return false;
    for (size_t j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

// Location of the smallest nonzero |entry| in the lower-right block.
bool locate_min(const IntMat& d, size_t s, size_t& ir, size_t& ic)
{
    bool found = false;
    Int best;
    for (size_t i = s; i < d.rows(); ++i)
        for (size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                ir = i;
                ic = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m)
{
    SmithDecomposition s;
    size_t rows = m.rows(), cols = m.cols();
    s.u = IntMat::identity(rows);
    s.v = IntMat::identity(cols);
    s.d = m;
    IntMat& d = s.d;

    size_t nmin = std::min(rows, cols);
    for (size_t i = 0; i < nmin; ++i) {
        size_t ir = i, ic = i;
        if (!locate_min(d, i, ir, ic)) break;  // rest of the matrix is zero
        while (!is_lone(d, i)) {
            locate_min(d, i, ir, ic);
            d.swap_rows(i, ir);
            s.u.swap_rows(i, ir);
            d.swap_cols(i, ic);
            s.v.swap_cols(i, ic);

            for (size_t r = i + 1; r < rows; ++r) {
                if (d.at(r, i) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(r, i).get_mpz_t(), d.at(i, i).get_mpz_t());
                d.add_row(r, i, -q);
                s.u.add_row(r, i, -q);
            }
            for (size_t c = i + 1; c < cols; ++c) {
                if (d.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, c).get_mpz_t(), d.at(i, i).get_mpz_t());
                d.add_col(c, i, -q);
                s.v.add_col(c, i, -q);
            }
        }
        // enforce the divisibility chain: fold a non-divisible entry into row i
        bool redo = true;
        while (redo) {
            redo = false;
            for (size_t r = i + 1; r < rows && !redo; ++r)
                for (size_t c = i + 1; c < cols && !redo; ++c)
                    if (d.at(r, c) % d.at(i, i) != 0) {
                        d.add_row(i, r, 1);
                        s.u.add_row(i, r, 1);
                        redo = true;
                    }
            if (redo) {
                while (!is_lone(d, i)) {
                    locate_min(d, i, ir, ic);
                    d.swap_rows(i, ir);
                    s.u.swap_rows(i, ir);
                    d.swap_cols(i, ic);
                    s.v.swap_cols(i, ic);
                    for (size_t r = i + 1; r < rows; ++r) {
                        if (d.at(r, i) == 0) continue;
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(r, i).get_mpz_t(), d.at(i, i).get_mpz_t());
                        d.add_row(r, i, -q);
                        s.u.add_row(r, i, -q);
                    }
                    for (size_t c = i + 1; c < cols; ++c) {
                        if (d.at(i, c) == 0) continue;
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(i, c).get_mpz_t(), d.at(i, i).get_mpz_t());
                        d.add_col(c, i, -q);
                        s.v.add_col(c, i, -q);
                    }
                }
            }
        }
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            s.u.negate_row(i);
        }
    }
    return s;
}

Sublattice::Sublattice(size_t ambient_rank, std::vector<IntVec> basis)
    : ambient_rank_(ambient_rank), basis_(std::move(basis))
{
    for (const auto& b : basis_)
        if (b.size() != ambient_rank_)
            throw std::invalid_argument("sublattice basis vector of wrong dimension");
    basis_cols_ = IntMat(ambient_rank_, basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j)
        for (size_t i = 0; i < ambient_rank_; ++i) basis_cols_.at(i, j) = basis_[j][i];
    snf_ = smith_normal_form(basis_cols_);
    if (snf_.invariant_factors().size() != basis_.size())
        throw std::invalid_argument("sublattice basis is linearly dependent");
}

Sublattice Sublattice::full(size_t rank)
{
    std::vector<IntVec> basis(rank, IntVec(rank));
    for (size_t i = 0; i < rank; ++i) basis[i][i] = 1;
    return Sublattice(rank, std::move(basis));
}

std::optional<IntVec> Sublattice::member_preimage(const IntVec& v) const
{
    if (v.size() != ambient_rank_)
        throw std::invalid_argument("member_preimage: vector dimension mismatch");
    // B c = v  <=>  D (V^-1 c) = U v with U B V = D.
    IntVec w = snf_.u.apply(v);
    size_t k = basis_.size();
    IntVec y(k);
    for (size_t i = 0; i < ambient_rank_; ++i) {
        if (i < k && snf_.d.at(i, i) != 0) {
            if (w[i] % snf_.d.at(i, i) != 0) return std::nullopt;
            y[i] = w[i] / snf_.d.at(i, i);
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec c = snf_.v.apply(y);
    if (basis_cols_.apply(c) != v) throw std::logic_error("member_preimage postcondition failed");
    return c;
}

std::optional<Int> Sublattice::index() const
{
    if (rank() < ambient_rank_) return std::nullopt;
    Int idx = 1;
    for (const auto& f : snf_.invariant_factors()) idx *= f;
    return idx;
}

}  // namespace legch
