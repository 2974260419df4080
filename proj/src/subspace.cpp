#include "qpm/subspace.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qpm {

Int gauss_binom(long a, long b, const Int& q) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (2 * b > a) b = a - b;
    Int r = 1;
    for (long i = 1; i <= b; i++)
        r = exact_div(r * (int_pow(q, a - b + i) - 1), int_pow(q, i) - 1, "gauss_binom");
    return r;
}

Int lattice_size(long n, const Int& q) {
    Int s = 0;
    for (long k = 0; k <= n; k++) s += gauss_binom(n, k, q);
    return s;
}

// ------------------------------------------------------------ AmbientSpace

AmbientPtr AmbientSpace::make(FieldPtr F, int n) {
    if (!F) throw BadParams("null field");
    if (n < 1 || n > kMaxN) throw BadParams("ambient dimension must be in [1,16]");
    if (F->order() > 16) throw BadParams("lattice fields are limited to order <= 16");
    auto amb = std::make_shared<AmbientSpace>();
    amb->F = std::move(F);
    amb->n = n;
    for (int i = 0; i < n; i++) amb->gram[i] = with_entry(0, i, 1);
    amb->gram_identity = true;
    return amb;
}

AmbientPtr AmbientSpace::make(FieldPtr F, int n, const FMat& G) {
    AmbientPtr base = make(F, n);
    if (static_cast<int>(G.size()) != n) throw BadParams("form matrix must be n x n");
    auto amb = std::make_shared<AmbientSpace>(*base);
    bool ident = true;
    for (int i = 0; i < n; i++) {
        if (static_cast<int>(G[i].size()) != n) throw BadParams("form matrix must be n x n");
        Row r = 0;
        for (int j = 0; j < n; j++) {
            amb->F->check_elem(G[i][j]);
            r = with_entry(r, j, G[i][j]);
            if (G[i][j] != (i == j ? 1u : 0u)) ident = false;
        }
        amb->gram[i] = r;
    }
    amb->gram_identity = ident;
    std::array<Row, kMaxN> copy = amb->gram;
    if (packed_rref(*amb, copy.data(), n) != n)
        throw DegenerateForm("bilinear form is degenerate");
    return amb;
}

Field::Elem AmbientSpace::form(Row a, Row b) const {
    if (gram_identity) return dot(a, b);
    Row t = 0;
    for (int i = 0; i < n; i++) {
        Field::Elem ai = entry(a, i);
        if (ai) t = row_add_scaled(t, gram[i], ai);
    }
    return dot(t, b);
}

bool AmbientSpace::same(const AmbientSpace& o) const {
    if (this == &o) return true;
    return n == o.n && F->same(*o.F) && gram == o.gram;
}

int packed_rref(const AmbientSpace& amb, Row* rows, int m) {
    const Field& F = *amb.F;
    const int n = amb.n;
    int r = 0;
    for (int c = 0; c < n && r < m; c++) {
        int piv = -1;
        for (int i = r; i < m; i++)
            if (AmbientSpace::entry(rows[i], c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        Field::Elem lead = AmbientSpace::entry(rows[r], c);
        if (lead != 1) rows[r] = amb.row_scale(rows[r], F.inv(lead));
        for (int i = 0; i < m; i++) {
            if (i == r) continue;
            Field::Elem e = AmbientSpace::entry(rows[i], c);
            if (e) rows[i] = amb.row_add_scaled(rows[i], rows[r], F.neg(e));
        }
        r++;
    }
    return r;
}

// --------------------------------------------------------------- Subspace

Subspace Subspace::zero(AmbientPtr amb) {
    Subspace s;
    s.amb_ = std::move(amb);
    return s;
}

Subspace Subspace::full(AmbientPtr amb) {
    Subspace s;
    s.dim_ = amb->n;
    for (int i = 0; i < amb->n; i++) s.rows_[i] = AmbientSpace::with_entry(0, i, 1);
    s.amb_ = std::move(amb);
    return s;
}

Subspace Subspace::from_rows(AmbientPtr amb, const std::vector<Row>& rows) {
    std::vector<Row> work = rows;
    int r = packed_rref(*amb, work.data(), static_cast<int>(work.size()));
    Subspace s;
    s.amb_ = std::move(amb);
    s.dim_ = r;
    for (int i = 0; i < r; i++) s.rows_[i] = work[i];
    return s;
}

Subspace Subspace::from_fmat(AmbientPtr amb, const FMat& M) {
    std::vector<Row> rows;
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != amb->n)
            throw BadParams("matrix width does not match ambient dimension");
        Row r = 0;
        for (int j = 0; j < amb->n; j++) {
            amb->F->check_elem(row[j]);
            r = AmbientSpace::with_entry(r, j, row[j]);
        }
        rows.push_back(r);
    }
    return from_rows(std::move(amb), rows);
}

Subspace Subspace::from_rref(AmbientPtr amb, const Row* rows, int dim) {
    Subspace s;
    s.amb_ = std::move(amb);
    s.dim_ = dim;
    for (int i = 0; i < dim; i++) s.rows_[i] = rows[i];
    return s;
}

static int leading_col(Row r, int n) {
    for (int j = 0; j < n; j++)
        if (AmbientSpace::entry(r, j)) return j;
    return n;
}

Row Subspace::reduce_vector(Row v) const {
    const AmbientSpace& amb = *amb_;
    for (int i = 0; i < dim_ && v; i++) {
        int c = leading_col(rows_[i], amb.n);
        Field::Elem e = AmbientSpace::entry(v, c);
        if (e) v = amb.row_add_scaled(v, rows_[i], amb.F->neg(e));
    }
    return v;
}

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other);
    if (other.dim_ > dim_) return false;
    for (int i = 0; i < other.dim_; i++)
        if (reduce_vector(other.rows_[i]) != 0) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    require_same_ambient(*this, o);
    if (dim_ != o.dim_) return false;
    for (int i = 0; i < dim_; i++)
        if (rows_[i] != o.rows_[i]) return false;
    return true;
}

Subspace::Key Subspace::key() const {
    const int n = amb_->n;
    const uint32_t q = amb_->q();
    const int b = std::max(1, static_cast<int>(std::bit_width(q - 1)));
    if (dim_ * n * b > 256) throw BadParams("subspace key does not fit");
    Key k;
    int bitpos = 0;
    for (int i = 0; i < dim_; i++)
        for (int j = 0; j < n; j++) {
            uint64_t v = AmbientSpace::entry(rows_[i], j);
            k.w[static_cast<size_t>(bitpos >> 6)] |= v << (bitpos & 63);
            if ((bitpos & 63) + b > 64 && (bitpos >> 6) < 3)
                k.w[static_cast<size_t>((bitpos >> 6) + 1)] |= v >> (64 - (bitpos & 63));
            bitpos += b;
        }
    return k;
}

FMat Subspace::to_fmat() const {
    FMat M(static_cast<size_t>(dim_), std::vector<Field::Elem>(static_cast<size_t>(n()), 0));
    for (int i = 0; i < dim_; i++)
        for (int j = 0; j < n(); j++) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i, j);
    return M;
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "<";
    for (int i = 0; i < dim_; i++) {
        if (i) os << ", ";
        for (int j = 0; j < n(); j++) os << entry(i, j);
    }
    os << ">";
    return os.str();
}

void require_same_ambient(const Subspace& U, const Subspace& V) {
    if (U.ambient() == V.ambient()) return;
    if (!U.ambient() || !V.ambient() || !U.ambient()->same(*V.ambient()))
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

// kernel of the row span of `rows` under the plain dot product
static Subspace kernel_of_rows(const AmbientPtr& amb, std::vector<Row> rows) {
    int m = packed_rref(*amb, rows.data(), static_cast<int>(rows.size()));
    const int n = amb->n;
    std::vector<int> pivots(static_cast<size_t>(n), -1);
    for (int i = 0; i < m; i++) pivots[static_cast<size_t>(leading_col(rows[static_cast<size_t>(i)], n))] = i;
    std::vector<Row> basis;
    for (int f = 0; f < n; f++) {
        if (pivots[static_cast<size_t>(f)] != -1) continue;
        Row v = AmbientSpace::with_entry(0, f, 1);
        for (int j = 0; j < n; j++)
            if (pivots[static_cast<size_t>(j)] != -1) {
                Field::Elem e = AmbientSpace::entry(rows[static_cast<size_t>(pivots[static_cast<size_t>(j)])], f);
                v = AmbientSpace::with_entry(v, j, amb->F->neg(e));
            }
        basis.push_back(v);
    }
    return Subspace::from_rows(amb, basis);
}

Subspace sum(const Subspace& U, const Subspace& V) {
    require_same_ambient(U, V);
    std::vector<Row> rows;
    for (int i = 0; i < U.dim(); i++) rows.push_back(U.row(i));
    for (int i = 0; i < V.dim(); i++) rows.push_back(V.row(i));
    return Subspace::from_rows(U.ambient(), rows);
}

Subspace dot_perp(const Subspace& U) {
    std::vector<Row> rows;
    for (int i = 0; i < U.dim(); i++) rows.push_back(U.row(i));
    return kernel_of_rows(U.ambient(), std::move(rows));
}

Subspace perp(const Subspace& U) {
    const AmbientSpace& amb = *U.ambient();
    if (amb.gram_identity) return dot_perp(U);
    std::vector<Row> rows;
    for (int i = 0; i < U.dim(); i++) {
        Row t = 0;
        for (int l = 0; l < amb.n; l++) {
            Field::Elem e = U.entry(i, l);
            if (e) t = amb.row_add_scaled(t, amb.gram[l], e);
        }
        rows.push_back(t);
    }
    return kernel_of_rows(U.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    return dot_perp(sum(dot_perp(U), dot_perp(V)));
}

Int mobius(const Subspace& U, const Subspace& V) {
    if (!V.contains(U)) return 0;
    long d = V.dim() - U.dim();
    Int val = int_pow(Int(U.ambient()->q()), d * (d - 1) / 2);
    return (d % 2) ? -val : val;
}

// ------------------------------------------------------------ enumeration

void for_each_subspace(const AmbientPtr& amb, int k,
                       const std::function<void(const Subspace&)>& fn) {
    const int n = amb->n;
    if (k < 0 || k > n) return;
    Subspace buf = Subspace::zero(amb);
    buf.set_dim(k);
    if (k == 0) {
        fn(buf);
        return;
    }
    const uint32_t q = amb->q();
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) piv[static_cast<size_t>(i)] = i;
    Row* rows = buf.mutable_rows();
    while (true) {
        // free positions for this pivot set, row-major
        std::vector<std::pair<int, int>> pos;
        std::vector<bool> is_piv(static_cast<size_t>(n), false);
        for (int i = 0; i < k; i++) is_piv[static_cast<size_t>(piv[static_cast<size_t>(i)])] = true;
        for (int i = 0; i < k; i++)
            for (int j = piv[static_cast<size_t>(i)] + 1; j < n; j++)
                if (!is_piv[static_cast<size_t>(j)]) pos.emplace_back(i, j);
        for (int i = 0; i < k; i++)
            rows[i] = AmbientSpace::with_entry(0, piv[static_cast<size_t>(i)], 1);
        std::vector<Field::Elem> val(pos.size(), 0);
        while (true) {
            fn(buf);
            size_t idx = pos.size();
            while (idx > 0) {
                idx--;
                auto [ri, cj] = pos[idx];
                if (++val[idx] == q) {
                    val[idx] = 0;
                    rows[ri] = AmbientSpace::with_entry(rows[ri], cj, 0);
                } else {
                    rows[ri] = AmbientSpace::with_entry(rows[ri], cj, val[idx]);
                    break;
                }
            }
            if (idx == 0 && (pos.empty() || val[0] == 0)) {
                bool done = true;
                for (Field::Elem v : val)
                    if (v) { done = false; break; }
                if (done) break;
            }
        }
        // next pivot combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) i--;
        if (i < 0) break;
        piv[static_cast<size_t>(i)]++;
        for (int j = i + 1; j < k; j++)
            piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(const AmbientPtr& amb, int k,
                                          const SubspaceConstraints& c) {
    if (k < 0 || k > amb->n) return {};
    Subspace I = c.contains ? *c.contains : Subspace::zero(amb);
    Subspace W = c.within ? *c.within : Subspace::full(amb);
    if (!W.contains(I))
        throw InconsistentConstraints("'contains' space is not inside 'within' space");
    if (c.trivial_meet && intersect(I, *c.trivial_meet).dim() > 0 && I.dim() > 0)
        throw InconsistentConstraints("'contains' space meets 'trivial_meet' space");
    std::vector<Subspace> out;
    if (k < I.dim() || k > W.dim()) return out;
    LatticeView view(I, W);
    view.for_each_reldim(k - I.dim(), [&](const Subspace& X) {
        if (c.trivial_meet && intersect(X, *c.trivial_meet).dim() > 0) return;
        out.push_back(X);
    });
    return out;
}

// ------------------------------------------------------------ LatticeView

LatticeView::LatticeView(AmbientPtr amb)
    : amb_(amb), base_(Subspace::zero(amb)), top_(Subspace::full(amb)) {
    init_chart();
}

LatticeView::LatticeView(Subspace base, Subspace top)
    : amb_(base.ambient()), base_(std::move(base)), top_(std::move(top)) {
    require_same_ambient(base_, top_);
    if (!top_.contains(base_)) throw NotASubspaceOf("interval base not inside top");
    init_chart();
}

void LatticeView::init_chart() {
    const int n = amb_->n;
    const int w = top_.dim();
    nrel_ = w - base_.dim();
    full_ = (base_.dim() == 0 && w == n);
    ident_ = full_;  // the full space's RREF basis is the standard basis
    chart_amb_ = nrel_ > 0 ? AmbientSpace::make(amb_->F, nrel_) : nullptr;
    topc_amb_ = w > 0 ? AmbientSpace::make(amb_->F, w) : nullptr;
    for (int l = 0; l < w; l++) top_pivots_[l] = leading_col(top_.row(l), n);
    // base written in top-coordinates, then RREF'd there
    if (w > 0) {
        std::array<Row, AmbientSpace::kMaxN> bc{};
        for (int i = 0; i < base_.dim(); i++) {
            Row v = 0;
            for (int l = 0; l < w; l++)
                v = AmbientSpace::with_entry(v, l, base_.entry(i, top_pivots_[l]));
            bc[static_cast<size_t>(i)] = v;
        }
        int r = packed_rref(*topc_amb_, bc.data(), base_.dim());
        if (r != base_.dim()) throw Error("internal: base coordinates degenerate");
        base_coords_ = bc;
        base_pivot_mask_ = 0;
        for (int i = 0; i < r; i++)
            base_pivot_mask_ |= 1u << leading_col(bc[static_cast<size_t>(i)], w);
        int t = 0;
        for (int l = 0; l < w; l++)
            if (!(base_pivot_mask_ & (1u << l))) free_cols_[static_cast<size_t>(t++)] = l;
    }
    perp_via_form_ = full_;
    perp_via_restrict_ = false;
    if (!full_ && base_.dim() == 0 && w > 0) {
        // is the ambient form non-degenerate on top?
        std::array<Row, AmbientSpace::kMaxN> gr{};
        for (int i = 0; i < w; i++) {
            Row r = 0;
            for (int l = 0; l < w; l++)
                r = AmbientSpace::with_entry(r, l, amb_->form(top_.row(i), top_.row(l)));
            gr[static_cast<size_t>(i)] = r;
        }
        perp_via_restrict_ = (packed_rref(*topc_amb_, gr.data(), w) == w);
    }
}

void LatticeView::require(const Subspace& X) const {
    if (!contains(X)) throw NotASubspaceOf("subspace is not in the interval");
}

Int LatticeView::size() const { return lattice_size(nrel_, Int(amb_->q())); }
Int LatticeView::size_reldim(int j) const { return gauss_binom(nrel_, j, Int(amb_->q())); }

Row LatticeView::lift_row(Row chart_row) const {
    if (ident_) return chart_row;
    const int w = top_.dim();
    Row v = 0;
    for (int t = 0; t < nrel_; t++) {
        Field::Elem e = AmbientSpace::entry(chart_row, t);
        if (e) v = AmbientSpace::with_entry(v, free_cols_[static_cast<size_t>(t)], e);
    }
    Row out = 0;
    for (int l = 0; l < w; l++) {
        Field::Elem e = AmbientSpace::entry(v, l);
        if (e) out = amb_->row_add_scaled(out, top_.row(l), e);
    }
    return out;
}

Subspace LatticeView::lift(const Subspace& chart_sub) const {
    if (ident_) {
        Row rows[AmbientSpace::kMaxN];
        for (int i = 0; i < chart_sub.dim(); i++) rows[i] = chart_sub.row(i);
        return Subspace::from_rref(amb_, rows, chart_sub.dim());
    }
    std::vector<Row> rows;
    for (int i = 0; i < base_.dim(); i++) rows.push_back(base_.row(i));
    for (int i = 0; i < chart_sub.dim(); i++) rows.push_back(lift_row(chart_sub.row(i)));
    return Subspace::from_rows(amb_, rows);
}

Subspace LatticeView::to_chart(const Subspace& X) const {
    require(X);
    if (ident_) {
        Row rows[AmbientSpace::kMaxN];
        for (int i = 0; i < X.dim(); i++) rows[i] = X.row(i);
        return Subspace::from_rref(chart_amb_, rows, X.dim());
    }
    const int w = top_.dim();
    std::vector<Row> rows;
    for (int i = 0; i < X.dim(); i++) {
        Row v = 0;
        for (int l = 0; l < w; l++)
            v = AmbientSpace::with_entry(v, l, X.entry(i, top_pivots_[l]));
        // reduce by base in top-coordinates
        for (int b = 0; b < base_.dim() && v; b++) {
            int c = leading_col(base_coords_[static_cast<size_t>(b)], w);
            Field::Elem e = AmbientSpace::entry(v, c);
            if (e) v = topc_amb_->row_add_scaled(v, base_coords_[static_cast<size_t>(b)], amb_->F->neg(e));
        }
        Row cr = 0;
        for (int t = 0; t < nrel_; t++)
            cr = AmbientSpace::with_entry(cr, t,
                                          AmbientSpace::entry(v, free_cols_[static_cast<size_t>(t)]));
        rows.push_back(cr);
    }
    return Subspace::from_rows(chart_amb_, rows);
}

Subspace LatticeView::perp_rel(const Subspace& X) const {
    require(X);
    if (perp_via_form_) return perp(X);
    if (perp_via_restrict_) return intersect(perp(X), top_);
    if (nrel_ == 0) return base_;
    return lift(dot_perp(to_chart(X)));
}

void LatticeView::for_each_reldim(int j, const std::function<void(const Subspace&)>& fn) const {
    if (j < 0 || j > nrel_) return;
    if (ident_) {
        for_each_subspace(amb_, j, fn);
        return;
    }
    if (nrel_ == 0 || j == 0) {
        fn(base_);
        return;
    }
    for_each_subspace(chart_amb_, j, [&](const Subspace& c) {
        Subspace lifted = lift(c);
        fn(lifted);
    });
}

void LatticeView::for_each(const std::function<void(const Subspace&)>& fn) const {
    for (int j = 0; j <= nrel_; j++) for_each_reldim(j, fn);
}

Subspace relative_perp(const Subspace& X, const Subspace& T) {
    if (!T.contains(X)) throw NotASubspaceOf("relative_perp: X is not inside T");
    if (T.dim() == T.ambient()->n) return perp(X);
    LatticeView view(Subspace::zero(T.ambient()), T);
    return view.perp_rel(X);
}

// ----------------------------------------------------------- LatticeIndex

LatticeIndex::LatticeIndex(const LatticeView& view, Int ceiling) : view_(view) {
    Int total = view_.size();
    if (total > ceiling)
        throw TooLargeToEnumerate("lattice has " + total.str() + " elements, ceiling is " +
                                  ceiling.str());
    size_t count = total.convert_to<size_t>();
    elems_.reserve(count);
    ids_.reserve(count * 2);
    offs_.push_back(0);
    for (int j = 0; j <= view_.nrel(); j++) {
        view_.for_each_reldim(j, [&](const Subspace& X) {
            int id = static_cast<int>(elems_.size());
            elems_.push_back(X);
            ids_.emplace(X.key(), id);
        });
        offs_.push_back(static_cast<int>(elems_.size()));
    }
}

int LatticeIndex::id_of(const Subspace& X) const {
    int id = try_id_of(X);
    if (id < 0) throw NotASubspaceOf("subspace is not an element of this lattice");
    return id;
}

int LatticeIndex::try_id_of(const Subspace& X) const {
    auto it = ids_.find(X.key());
    return it == ids_.end() ? -1 : it->second;
}

int LatticeIndex::perp_id(int id) const {
    if (perp_.empty()) {
        perp_.resize(elems_.size());
        for (size_t i = 0; i < elems_.size(); i++)
            perp_[i] = id_of(view_.perp_rel(elems_[i]));
    }
    return perp_[static_cast<size_t>(id)];
}

// ----------------------------------------------------------------- random

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Subspace random_subspace(const AmbientPtr& amb, int k, uint64_t& rng_state) {
    if (k < 0 || k > amb->n) throw BadParams("random_subspace: bad dimension");
    const uint32_t q = amb->q();
    for (int attempt = 0; attempt < 1000; attempt++) {
        std::vector<Row> rows;
        for (int i = 0; i < k; i++) {
            Row r = 0;
            for (int j = 0; j < amb->n; j++)
                r = AmbientSpace::with_entry(r, j,
                                             static_cast<Field::Elem>(splitmix64(rng_state) % q));
            rows.push_back(r);
        }
        Subspace s = Subspace::from_rows(amb, rows);
        if (s.dim() == k) return s;
    }
    throw Error("random_subspace: failed to reach requested dimension");
}

}  // namespace qpm
