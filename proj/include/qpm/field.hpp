#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qpm/common.hpp"

namespace qpm {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field, either a prime field Z/p or an extension of another
// Field by a monic irreducible polynomial.
//
// Elements are packed indices in [0, order): an element of an extension
// with digits d_0..d_{m-1} over a base of order B is encoded as
// sum d_i * B^i, so 0 and 1 are always the additive and multiplicative
// identities, and in an extension the index B is the class of x.
// Supported orders are capped at 2^16 so that full log/exp tables fit.
class Field : public std::enable_shared_from_this<Field> {
  public:
    using Elem = uint32_t;

    static FieldPtr prime(uint32_t p);
    // modulus: coefficients of a monic polynomial over `base`,
    // constant term first; throws NotMonic / BadDegree / NotIrreducible.
    static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);
    // GF(q) for q = p^e, using the lexicographically first monic
    // irreducible polynomial of degree e over GF(p) when e > 1.
    static FieldPtr gf(uint64_t q);
    // Parse "GF(p)", "GF(p^m)" or "GF(p^m)/x^m+...+1".
    static FieldPtr from_spec(const std::string& s);
    std::string spec() const;

    uint32_t order() const { return order_; }
    uint32_t characteristic() const { return p_; }
    // degree over the base field (1 for a prime field)
    int ext_degree() const { return deg_; }
    // degree over the prime field
    int abs_degree() const { return abs_deg_; }
    FieldPtr base() const { return base_; }
    bool is_prime_field() const { return base_ == nullptr; }
    const std::vector<Elem>& modulus() const { return modulus_; }
    // structural equality (same tower of moduli)
    bool same(const Field& other) const { return spec() == other.spec(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // class of x in an extension field
    Elem x() const;

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw ZeroToNegativePower("inv of zero");
        return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long e) const;

    // a fixed multiplicative generator (x itself when primitive)
    Elem generator() const { return gen_; }
    // discrete log base generator(); a must be nonzero
    long dlog(Elem a) const {
        if (a == 0) throw ZeroToNegativePower("dlog of zero");
        return glog_[a];
    }

    // digits over the base field, length ext_degree()
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;

    // "0", "1", decimal residues for prime fields, "a^k" for extensions
    std::string to_string(Elem a) const;
    Elem parse(const std::string& s) const;

    void check_elem(Elem a) const {
        if (a >= order_) throw BadElementString("element index out of range");
    }

  private:
    Field() = default;
    void build_tables();
    Elem mul_raw(Elem a, Elem b) const;  // table-free, used during construction

    FieldPtr base_;
    uint32_t p_ = 0;
    int deg_ = 1;
    int abs_deg_ = 1;
    uint32_t order_ = 0;
    std::vector<Elem> modulus_;  // empty for prime fields
    Elem gen_ = 0;
    bool char2_ = false;
    std::vector<Elem> exp_;     // exp_[i] = gen_^i, i in [0, order-1)
    std::vector<uint32_t> log_; // inverse of exp_ (log_[0] unused)
    std::vector<uint32_t> glog_;
};

// Dense matrix over an arbitrary Field; rows of equal length.
using FMat = std::vector<std::vector<Field::Elem>>;

FMat fmat_identity(const FieldPtr& F, int n);
FMat fmat_mul(const FieldPtr& F, const FMat& A, const FMat& B);
// in-place reduced row echelon form; returns rank
int fmat_rref(const FieldPtr& F, FMat& A);
int fmat_rank(const FieldPtr& F, FMat A);
// basis of the right kernel {x : A x^T = 0}, as rows
FMat fmat_kernel(const FieldPtr& F, const FMat& A);
// inverse of a square matrix; throws SingularMinor if singular
FMat fmat_inverse(const FieldPtr& F, const FMat& A);

// An ordered basis of an extension field over its base, used to expand
// vectors over the extension into matrices over the base.
class GammaBasis {
  public:
    // basis 1, x, ..., x^(m-1)
    static GammaBasis polynomial(FieldPtr ext);
    GammaBasis(FieldPtr ext, std::vector<Field::Elem> elems);

    const FieldPtr& ext_field() const { return ext_; }
    const FieldPtr& base_field() const { return base_; }
    int m() const { return static_cast<int>(elems_.size()); }
    const std::vector<Field::Elem>& elements() const { return elems_; }

    // coordinates of a over this basis, length m, entries in the base field
    std::vector<Field::Elem> coords(Field::Elem a) const;
    // expand a length-n vector over the extension to an m x n base-field
    // matrix whose column j holds the coordinates of v[j]
    FMat expand(const std::vector<Field::Elem>& v) const;

  private:
    FieldPtr ext_, base_;
    std::vector<Field::Elem> elems_;
    FMat inv_;  // m x m, digits-to-coordinates change of basis
};

}  // namespace qpm
