#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qpm/common.hpp"
#include "qpm/field.hpp"

namespace qpm {

// Gaussian binomial coefficient [a choose b]_q, exact.
Int gauss_binom(long a, long b, const Int& q);
// number of subspaces of F_q^n of all dimensions
Int lattice_size(long n, const Int& q);

// The ambient space F_q^n carrying a non-degenerate bilinear form.
// Vectors are packed rows: entry j occupies bits [4j, 4j+4), so q <= 16
// and n <= 16.
struct AmbientSpace;
using AmbientPtr = std::shared_ptr<const AmbientSpace>;
using Row = uint64_t;

struct AmbientSpace {
    static constexpr int kMaxN = 16;
    static constexpr int kEntryBits = 4;
    static constexpr Row kEntryMask = 0xF;

    FieldPtr F;
    int n;
    std::array<Row, kMaxN> gram{};  // rows of the form's matrix
    bool gram_identity = true;

    // standard dot product form
    static AmbientPtr make(FieldPtr F, int n);
    static AmbientPtr make(FieldPtr F, int n, const FMat& gram_matrix);

    uint32_t q() const { return F->order(); }

    static Field::Elem entry(Row r, int j) {
        return static_cast<Field::Elem>((r >> (kEntryBits * j)) & kEntryMask);
    }
    static Row with_entry(Row r, int j, Field::Elem v) {
        int s = kEntryBits * j;
        return (r & ~(kEntryMask << s)) | (Row(v) << s);
    }
    // a += c * b
    Row row_add_scaled(Row a, Row b, Field::Elem c) const {
        if (c == 0) return a;
        if (F->order() == 2) return a ^ b;
        for (int j = 0; j < n; j++) {
            Field::Elem v = F->add(entry(a, j), F->mul(c, entry(b, j)));
            a = with_entry(a, j, v);
        }
        return a;
    }
    Row row_scale(Row a, Field::Elem c) const {
        if (c == 1) return a;
        for (int j = 0; j < n; j++) a = with_entry(a, j, F->mul(entry(a, j), c));
        return a;
    }
    Field::Elem dot(Row a, Row b) const {
        Field::Elem s = 0;
        for (int j = 0; j < n; j++) s = F->add(s, F->mul(entry(a, j), entry(b, j)));
        return s;
    }
    // the bilinear form: a G b^T
    Field::Elem form(Row a, Row b) const;

    bool same(const AmbientSpace& o) const;
};

// in-place reduced row echelon form on packed rows; returns the rank and
// leaves the nonzero rows first in pivot order
int packed_rref(const AmbientSpace& amb, Row* rows, int m);

// A subspace of an AmbientSpace, stored as its reduced row echelon basis,
// which makes equality of subspaces equality of representations.
class Subspace {
  public:
    struct Key {
        std::array<uint64_t, 4> w{};
        bool operator==(const Key& o) const { return w == o.w; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t h = 0x9e3779b97f4a7c15ull;
            for (uint64_t x : k.w) {
                h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                h *= 0xff51afd7ed558ccdull;
                h ^= h >> 33;
            }
            return static_cast<size_t>(h);
        }
    };

    Subspace() = default;
    static Subspace zero(AmbientPtr amb);
    static Subspace full(AmbientPtr amb);
    static Subspace from_rows(AmbientPtr amb, const std::vector<Row>& rows);
    static Subspace from_fmat(AmbientPtr amb, const FMat& M);
    // trusted constructor: rows already in RREF
    static Subspace from_rref(AmbientPtr amb, const Row* rows, int dim);

    const AmbientPtr& ambient() const { return amb_; }
    int dim() const { return dim_; }
    int n() const { return amb_->n; }
    Row row(int i) const { return rows_[i]; }
    Field::Elem entry(int i, int j) const { return AmbientSpace::entry(rows_[i], j); }

    // residue of v after elimination by this basis; zero iff v is in the span
    Row reduce_vector(Row v) const;
    bool contains_vector(Row v) const { return reduce_vector(v) == 0; }
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Key key() const;
    FMat to_fmat() const;
    std::string str() const;

    friend Subspace sum(const Subspace& U, const Subspace& V);
    friend Subspace intersect(const Subspace& U, const Subspace& V);
    // annihilator under the plain dot product
    friend Subspace dot_perp(const Subspace& U);
    // annihilator under the ambient's bilinear form
    friend Subspace perp(const Subspace& U);

    // used by enumerators to avoid reallocation; rows must be left in RREF
    Row* mutable_rows() { return rows_.data(); }
    void set_dim(int d) { dim_ = d; }
    void set_ambient(AmbientPtr a) { amb_ = std::move(a); }

  private:
    AmbientPtr amb_;
    std::array<Row, AmbientSpace::kMaxN> rows_{};
    int dim_ = 0;
};

void require_same_ambient(const Subspace& U, const Subspace& V);

// Moebius function of the subspace lattice: 0 unless U <= V, otherwise
// (-1)^d q^(d(d-1)/2) with d = dim V - dim U.
Int mobius(const Subspace& U, const Subspace& V);

// Enumerate all k-dimensional subspaces in a fixed deterministic order:
// pivot-column sets in ascending lexicographic order, then the free
// entries as a base-q odometer with the last free position varying
// fastest. The callback receives a reused buffer.
void for_each_subspace(const AmbientPtr& amb, int k,
                       const std::function<void(const Subspace&)>& fn);

struct SubspaceConstraints {
    std::optional<Subspace> contains;      // I <= X
    std::optional<Subspace> within;        // X <= W
    std::optional<Subspace> trivial_meet;  // X n J = 0
};

// Enumerate k-dimensional subspaces satisfying the constraints. Throws
// InconsistentConstraints when the constraints are structurally
// contradictory (I not contained in W, or I meeting J nontrivially);
// an empty result set is not an error.
std::vector<Subspace> enumerate_subspaces(const AmbientPtr& amb, int k,
                                          const SubspaceConstraints& c = {});

// X^perp computed inside T under the form restricted to T when that
// restriction is non-degenerate, otherwise via the chart of T with the
// dot product.
Subspace relative_perp(const Subspace& X, const Subspace& T);

// An interval [base, top] of the subspace lattice, with a chart
// identifying it with the full lattice of F_q^(dim top - dim base).
class LatticeView {
  public:
    explicit LatticeView(AmbientPtr amb);           // full lattice
    LatticeView(Subspace base, Subspace top);       // interval

    const AmbientPtr& ambient() const { return amb_; }
    const Subspace& base() const { return base_; }
    const Subspace& top() const { return top_; }
    int nrel() const { return nrel_; }
    bool is_full() const { return full_; }
    int reldim(const Subspace& X) const { return X.dim() - base_.dim(); }
    bool contains(const Subspace& X) const {
        return X.contains(base_) && top_.contains(X);
    }
    void require(const Subspace& X) const;

    Int size() const;
    Int size_reldim(int j) const;

    const AmbientPtr& chart_ambient() const { return chart_amb_; }
    Subspace lift(const Subspace& chart_sub) const;
    Subspace to_chart(const Subspace& X) const;
    // lift a single chart row into ambient coordinates
    Row lift_row(Row chart_row) const;

    // complement of X inside the interval: the ambient form's perp for the
    // full lattice, T-relative perp for [0, T], chart dot perp otherwise
    Subspace perp_rel(const Subspace& X) const;

    Int mobius_rel(const Subspace& U, const Subspace& V) const { return mobius(U, V); }

    // enumerate interval elements of relative dimension j (reused buffer)
    void for_each_reldim(int j, const std::function<void(const Subspace&)>& fn) const;
    void for_each(const std::function<void(const Subspace&)>& fn) const;

  private:
    void init_chart();
    AmbientPtr amb_;
    Subspace base_, top_;
    int nrel_ = 0;
    bool full_ = false;
    bool ident_ = false;  // chart coordinates equal ambient coordinates
    AmbientPtr chart_amb_;
    AmbientPtr topc_amb_;  // F_q^(dim top), coordinates on top
    // top's RREF rows and pivot columns give coordinates on top
    std::array<int, AmbientSpace::kMaxN> top_pivots_{};
    // base in top-coordinates, RREF, with pivot flags and free columns
    std::array<Row, AmbientSpace::kMaxN> base_coords_{};
    std::array<int, AmbientSpace::kMaxN> free_cols_{};
    uint32_t base_pivot_mask_ = 0;
    bool perp_via_form_ = false;      // full lattice
    bool perp_via_restrict_ = false;  // [0, T] with non-degenerate restriction
};

// Materialized interval: every element listed in enumeration order
// (relative dimension ascending, enumeration order within), with an id
// lookup table and a cached perp_rel permutation.
class LatticeIndex {
  public:
    explicit LatticeIndex(const LatticeView& view, Int ceiling = 8000000);

    const LatticeView& view() const { return view_; }
    int count() const { return static_cast<int>(elems_.size()); }
    const Subspace& at(int id) const { return elems_[static_cast<size_t>(id)]; }
    int id_of(const Subspace& X) const;
    int try_id_of(const Subspace& X) const;  // -1 when absent
    // ids of elements of relative dimension j: [dim_begin(j), dim_end(j))
    int dim_begin(int j) const { return offs_[static_cast<size_t>(j)]; }
    int dim_end(int j) const { return offs_[static_cast<size_t>(j) + 1]; }
    int perp_id(int id) const;  // lazily built full table

  private:
    LatticeView view_;
    std::vector<Subspace> elems_;
    std::vector<int> offs_;
    std::unordered_map<Subspace::Key, int, Subspace::KeyHash> ids_;
    mutable std::vector<int> perp_;
};

// test helper: a k-dimensional subspace from random matrix rows
Subspace random_subspace(const AmbientPtr& amb, int k, uint64_t& rng_state);
uint64_t splitmix64(uint64_t& state);

}  // namespace qpm
