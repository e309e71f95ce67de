#ifndef LEGCH_LATTICE_HPP
#define LEGCH_LATTICE_HPP

#include <optional>

#include "legch/matrix.hpp"

namespace legch {

// Exact algebra of finitely generated free abelian groups.  This is the
// substrate for first/second homology lattices and their pushforwards.

struct IntegerLattice {
    size_t rank = 0;
};

struct LatticeHom {
    IntegerLattice source;
    IntegerLattice target;
    IntMat matrix;  // target.rank x source.rank

    LatticeHom(IntegerLattice src, IntegerLattice tgt, IntMat m);
    IntVec apply(const IntVec& v) const { return matrix.apply(v); }
};

// U * M * V = D with U, V unimodular and D diagonal satisfying the
// divisibility chain d_i | d_{i+1} (zeros trailing).
struct SmithDecomposition {
    IntMat u, d, v;
    std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMat& m);

// A finite-index-or-smaller subgroup of Z^ambient_rank, spanned by basis
// vectors that must be linearly independent over Q.
class Sublattice {
public:
    Sublattice(size_t ambient_rank, std::vector<IntVec> basis);
    static Sublattice full(size_t rank);  // identity basis

    size_t ambient_rank() const { return ambient_rank_; }
    size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }
    const IntMat& basis_matrix() const { return basis_cols_; }  // ambient_rank x rank, columns

    // Integer coordinates c with basis * c = v, or nullopt when v is not in
    // the sublattice.  Throws on a dimension mismatch.
    std::optional<IntVec> member_preimage(const IntVec& v) const;

    // |det(basis)| for full-rank sublattices, nullopt (infinite) otherwise.
    std::optional<Int> index() const;

private:
    size_t ambient_rank_;
    std::vector<IntVec> basis_;
    IntMat basis_cols_;
    SmithDecomposition snf_;  // of basis_cols_
};

}  // namespace legch

#endif
