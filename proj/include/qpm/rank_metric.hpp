#pragma once

#include <optional>

#include "qpm/qpolymatroid.hpp"

namespace qpm {

// F_q-linear rank-metric code in F_q^{n x m}: the ambient lattice side has
// dimension n, codewords are n x m matrices, and the rank weight of a
// codeword is its matrix rank. Stored via an RREF basis of the flattened
// (row-major) codewords, so equal codes have equal representations.
class MatrixCode {
  public:
    MatrixCode(FieldPtr F, int n, int m, const std::vector<FMat>& basis);

    const FieldPtr& field() const { return F_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int k() const { return static_cast<int>(basis_.size()); }  // F_q-dimension
    FMat basis_matrix(int i) const;  // i-th basis codeword as an n x m matrix
    const FMat& flat_basis() const { return basis_; }

    // dual under the trace form <X,Y> = Tr(X Y^T), i.e. the flattened dot
    MatrixCode dual() const;
    bool operator==(const MatrixCode& o) const;

    // number of codewords A with column space inside W <= F_q^n
    Int count_colspace_within(const Subspace& W) const;
    // dim_q of {A in C : colspace(A) <= W}
    int dim_colspace_within(const Subspace& W) const;

    // W[i] = number of codewords of rank i; enumerates all q^k codewords
    std::vector<Int> weight_distribution(Int ceiling = 8000000) const;
    int min_distance(Int ceiling = 8000000) const;  // minimum nonzero rank
    bool is_mrd(Int ceiling = 8000000) const;

  private:
    FieldPtr F_;
    int n_, m_;
    FMat basis_;  // k x (n*m), RREF
};

// F_{q^m}-linear code of length n over an extension field, given by a
// generator matrix; stored via the RREF generator.
class VectorCode {
  public:
    VectorCode(FieldPtr ext_field, int n, const FMat& generator);

    const FieldPtr& field() const { return ext_; }        // F_{q^m}
    const FieldPtr& base_field() const { return base_; }  // F_q
    int n() const { return n_; }
    int k() const { return static_cast<int>(gen_.size()); }
    int m() const { return ext_->ext_degree(); }
    const FMat& generator() const { return gen_; }

    VectorCode dual() const;  // under the standard dot product over F_{q^m}
    bool operator==(const VectorCode& o) const;

    // expansion to a matrix code in F_q^{n x m} over the given basis
    MatrixCode expand(const GammaBasis& gamma) const;
    MatrixCode expand() const;  // polynomial basis

    // rank weight and support (the F_q-span of the coordinates) of c * gen
    std::vector<Field::Elem> codeword(const std::vector<Field::Elem>& c) const;
    int weight(const std::vector<Field::Elem>& v, const GammaBasis& gamma) const;
    Subspace support(const std::vector<Field::Elem>& v, const GammaBasis& gamma) const;

    // dim over F_{q^m} of {v in C : support(v) <= W}, W <= F_q^n
    int dim_support_within(const Subspace& W) const;
    Int count_support_within(const Subspace& W) const;

    // W[i] = number of codewords of rank weight i, via one representative
    // per scalar class
    std::vector<Int> weight_distribution(Int ceiling = 8000000) const;
    int min_distance(Int ceiling = 8000000) const;
    bool is_mrd(Int ceiling = 8000000) const;  // requires n <= m

    // v is minimal when its scalar multiples are the only codewords whose
    // support lies inside its own
    bool is_minimal_codeword(const std::vector<Field::Elem>& v,
                             const GammaBasis& gamma) const;

  private:
    FieldPtr ext_, base_;
    int n_;
    FMat gen_;  // k x n over ext_, RREF
};

// number of codewords whose column space / support is exactly U, via
// Moebius inversion over the subspaces of U
Int codewords_with_support(const MatrixCode& C, const Subspace& U);
Int codewords_with_support(const VectorCode& C, const Subspace& U);

// the (q,m)-polymatroid of a matrix code: rho(U) = k - dim C_{U^perp-cols}
QPolymatroid induced_qpm(const MatrixCode& C);
// the q-matroid of a vector code: rho(U) = k - dim{v : support(v) <= U^perp}
QPolymatroid induced_qmatroid(const VectorCode& C);

}  // namespace qpm
