#include "qpm/rank_metric.hpp"

namespace qpm {

namespace {

FMat unflatten(const std::vector<Field::Elem>& flat, int n, int m) {
    FMat M(static_cast<size_t>(n), std::vector<Field::Elem>(static_cast<size_t>(m)));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < m; j++)
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                flat[static_cast<size_t>(i * m + j)];
    return M;
}

FMat subspace_rows(const Subspace& U) { return U.to_fmat(); }

}  // namespace

// --------------------------------------------------------------- MatrixCode

MatrixCode::MatrixCode(FieldPtr F, int n, int m, const std::vector<FMat>& basis)
    : F_(std::move(F)), n_(n), m_(m) {
    if (!F_) throw BadParams("null field");
    if (n_ < 1 || m_ < 1) throw BadParams("matrix code shape must be positive");
    FMat flat;
    for (const FMat& B : basis) {
        if (static_cast<int>(B.size()) != n_) throw BadParams("basis matrix has wrong row count");
        std::vector<Field::Elem> row;
        for (const auto& r : B) {
            if (static_cast<int>(r.size()) != m_)
                throw BadParams("basis matrix has wrong column count");
            for (Field::Elem e : r) {
                F_->check_elem(e);
                row.push_back(e);
            }
        }
        flat.push_back(std::move(row));
    }
    int rank = fmat_rref(F_, flat);
    flat.resize(static_cast<size_t>(rank));
    basis_ = std::move(flat);
}

FMat MatrixCode::basis_matrix(int i) const {
    if (i < 0 || i >= k()) throw BadIndices("basis index out of range");
    return unflatten(basis_[static_cast<size_t>(i)], n_, m_);
}

MatrixCode MatrixCode::dual() const {
    FMat ker;
    if (k() == 0) {
        ker = fmat_identity(F_, n_ * m_);
    } else {
        ker = fmat_kernel(F_, basis_);
    }
    std::vector<FMat> mats;
    for (const auto& row : ker) mats.push_back(unflatten(row, n_, m_));
    return MatrixCode(F_, n_, m_, mats);
}

bool MatrixCode::operator==(const MatrixCode& o) const {
    return n_ == o.n_ && m_ == o.m_ && F_->same(*o.F_) && basis_ == o.basis_;
}

int MatrixCode::dim_colspace_within(const Subspace& W) const {
    if (W.n() != n_) throw AmbientMismatch("subspace dimension does not match code length");
    // colspace(A) <= W  iff  K A = 0 for K spanning W^perp (dot)
    FMat K = subspace_rows(dot_perp(W));
    if (K.empty() || k() == 0) return k();
    FMat R;
    for (int i = 0; i < k(); i++) {
        FMat KB = fmat_mul(F_, K, basis_matrix(i));
        std::vector<Field::Elem> row;
        for (const auto& r : KB) row.insert(row.end(), r.begin(), r.end());
        R.push_back(std::move(row));
    }
    return k() - fmat_rank(F_, R);
}

Int MatrixCode::count_colspace_within(const Subspace& W) const {
    return int_pow(Int(F_->order()), dim_colspace_within(W));
}

std::vector<Int> MatrixCode::weight_distribution(Int ceiling) const {
    Int total = int_pow(Int(F_->order()), k());
    if (total > ceiling)
        throw TooLargeToEnumerate("code has " + total.str() + " words, ceiling is " +
                                  ceiling.str());
    const uint32_t q = F_->order();
    std::vector<Int> W(static_cast<size_t>(std::min(n_, m_)) + 1, Int(0));
    std::vector<Field::Elem> cur(static_cast<size_t>(n_ * m_), 0);
    std::vector<uint32_t> dig(static_cast<size_t>(k()), 0);
    auto add_basis = [&](int j) {
        const auto& b = basis_[static_cast<size_t>(j)];
        for (size_t t = 0; t < cur.size(); t++) cur[t] = F_->add(cur[t], b[t]);
    };
    uint64_t count = total.convert_to<uint64_t>();
    for (uint64_t step = 0;; step++) {
        W[static_cast<size_t>(fmat_rank(F_, unflatten(cur, n_, m_)))] += 1;
        if (step + 1 == count) break;
        int j = 0;
        while (dig[static_cast<size_t>(j)] == q - 1) {
            dig[static_cast<size_t>(j)] = 0;
            add_basis(j);  // q * B_j = 0, so adding once finishes the wrap
            j++;
        }
        dig[static_cast<size_t>(j)]++;
        add_basis(j);
    }
    return W;
}

int MatrixCode::min_distance(Int ceiling) const {
    if (k() == 0) throw BadParams("the zero code has no minimum distance");
    std::vector<Int> W = weight_distribution(ceiling);
    for (size_t i = 1; i < W.size(); i++)
        if (W[i] > 0) return static_cast<int>(i);
    throw Error("internal: nonzero code with no nonzero weights");
}

bool MatrixCode::is_mrd(Int ceiling) const {
    if (k() == 0) return false;
    int d = min_distance(ceiling);
    return k() == std::max(n_, m_) * (std::min(n_, m_) - d + 1);
}

// --------------------------------------------------------------- VectorCode

VectorCode::VectorCode(FieldPtr ext_field, int n, const FMat& generator)
    : ext_(std::move(ext_field)), n_(n) {
    if (!ext_ || ext_->is_prime_field())
        throw BadParams("vector codes need an extension field");
    base_ = ext_->base();
    if (n_ < 1) throw BadParams("code length must be positive");
    FMat g = generator;
    for (const auto& r : g) {
        if (static_cast<int>(r.size()) != n_) throw BadParams("generator width mismatch");
        for (Field::Elem e : r) ext_->check_elem(e);
    }
    int rank = fmat_rref(ext_, g);
    g.resize(static_cast<size_t>(rank));
    gen_ = std::move(g);
}

VectorCode VectorCode::dual() const {
    FMat ker = k() == 0 ? fmat_identity(ext_, n_) : fmat_kernel(ext_, gen_);
    return VectorCode(ext_, n_, ker);
}

bool VectorCode::operator==(const VectorCode& o) const {
    return n_ == o.n_ && ext_->same(*o.ext_) && gen_ == o.gen_;
}

MatrixCode VectorCode::expand(const GammaBasis& gamma) const {
    if (!gamma.ext_field()->same(*ext_))
        throw FieldMismatch("expansion basis lives in a different field");
    std::vector<FMat> mats;
    for (int i = 0; i < k(); i++)
        for (Field::Elem g : gamma.elements()) {
            std::vector<Field::Elem> w(static_cast<size_t>(n_));
            for (int j = 0; j < n_; j++)
                w[static_cast<size_t>(j)] = ext_->mul(g, gen_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            // row j of the expanded codeword = coordinates of w_j
            FMat M(static_cast<size_t>(n_));
            for (int j = 0; j < n_; j++) M[static_cast<size_t>(j)] = gamma.coords(w[static_cast<size_t>(j)]);
            mats.push_back(std::move(M));
        }
    return MatrixCode(base_, n_, m(), mats);
}

MatrixCode VectorCode::expand() const { return expand(GammaBasis::polynomial(ext_)); }

std::vector<Field::Elem> VectorCode::codeword(const std::vector<Field::Elem>& c) const {
    if (static_cast<int>(c.size()) != k()) throw BadParams("coefficient vector has wrong length");
    std::vector<Field::Elem> v(static_cast<size_t>(n_), 0);
    for (int i = 0; i < k(); i++)
        for (int j = 0; j < n_; j++)
            v[static_cast<size_t>(j)] = ext_->add(
                v[static_cast<size_t>(j)],
                ext_->mul(c[static_cast<size_t>(i)], gen_[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return v;
}

int VectorCode::weight(const std::vector<Field::Elem>& v, const GammaBasis& gamma) const {
    return fmat_rank(base_, gamma.expand(v));
}

Subspace VectorCode::support(const std::vector<Field::Elem>& v, const GammaBasis& gamma) const {
    AmbientPtr amb = AmbientSpace::make(base_, n_);
    return Subspace::from_fmat(amb, gamma.expand(v));
}

int VectorCode::dim_support_within(const Subspace& W) const {
    if (W.n() != n_) throw AmbientMismatch("subspace dimension does not match code length");
    if (!W.ambient()->F->same(*base_))
        throw FieldMismatch("support subspaces live over the base field");
    // support(v) <= W iff u . v = 0 over the extension for all u in W^perp
    Subspace K = dot_perp(W);
    if (K.dim() == 0 || k() == 0) return k();
    FMat M(static_cast<size_t>(k()), std::vector<Field::Elem>(static_cast<size_t>(K.dim()), 0));
    for (int i = 0; i < k(); i++)
        for (int t = 0; t < K.dim(); t++) {
            Field::Elem s = 0;
            for (int j = 0; j < n_; j++)
                s = ext_->add(s, ext_->mul(gen_[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                           K.entry(t, j)));
            M[static_cast<size_t>(i)][static_cast<size_t>(t)] = s;
        }
    return k() - fmat_rank(ext_, M);
}

Int VectorCode::count_support_within(const Subspace& W) const {
    return int_pow(Int(ext_->order()), dim_support_within(W));
}

std::vector<Int> VectorCode::weight_distribution(Int ceiling) const {
    const Int Q(ext_->order());
    Int reps = 0;
    for (int t = 0; t < k(); t++) reps += int_pow(Q, k() - 1 - t);
    if (reps > ceiling)
        throw TooLargeToEnumerate("code has " + reps.str() + " scalar classes");
    GammaBasis gamma = GammaBasis::polynomial(ext_);
    std::vector<Int> W(static_cast<size_t>(std::min(n_, m())) + 1, Int(0));
    W[0] = 1;
    const uint64_t q_ext = ext_->order();
    std::vector<Field::Elem> c(static_cast<size_t>(k()), 0);
    for (int t = 0; t < k(); t++) {
        // representatives with first nonzero coordinate 1 at position t
        std::fill(c.begin(), c.end(), 0);
        c[static_cast<size_t>(t)] = 1;
        while (true) {
            W[static_cast<size_t>(weight(codeword(c), gamma))] += Q - 1;
            int j = k() - 1;
            while (j > t && c[static_cast<size_t>(j)] == q_ext - 1) c[static_cast<size_t>(j--)] = 0;
            if (j == t) break;
            c[static_cast<size_t>(j)]++;
        }
    }
    return W;
}

int VectorCode::min_distance(Int ceiling) const {
    if (k() == 0) throw BadParams("the zero code has no minimum distance");
    std::vector<Int> W = weight_distribution(ceiling);
    for (size_t i = 1; i < W.size(); i++)
        if (W[i] > 0) return static_cast<int>(i);
    throw Error("internal: nonzero code with no nonzero weights");
}

bool VectorCode::is_mrd(Int ceiling) const {
    if (n_ > m()) throw BadParams("is_mrd for vector codes requires n <= m");
    if (k() == 0) return false;
    return min_distance(ceiling) == n_ - k() + 1;
}

bool VectorCode::is_minimal_codeword(const std::vector<Field::Elem>& v,
                                     const GammaBasis& gamma) const {
    bool zero = true;
    for (Field::Elem e : v) if (e) { zero = false; break; }
    if (zero) return false;
    FMat check = gen_;
    check.push_back(v);
    if (fmat_rank(ext_, check) != k())
        throw BadParams("vector is not a codeword");
    return dim_support_within(support(v, gamma)) == 1;
}

// ----------------------------------------------------------- exact supports

template <typename Code>
static Int exact_support_count(const Code& C, const Subspace& U,
                               const std::function<Int(const Subspace&)>& count_leq) {
    LatticeView inside(Subspace::zero(U.ambient()), U);
    Int total = 0;
    inside.for_each([&](const Subspace& W) {
        total += mobius(W, U) * count_leq(W);
    });
    return total;
}

Int codewords_with_support(const MatrixCode& C, const Subspace& U) {
    return exact_support_count(C, U, [&](const Subspace& W) {
        return C.count_colspace_within(W);
    });
}

Int codewords_with_support(const VectorCode& C, const Subspace& U) {
    return exact_support_count(C, U, [&](const Subspace& W) {
        return C.count_support_within(W);
    });
}

// --------------------------------------------------------- induced matroids

QPolymatroid induced_qpm(const MatrixCode& C) {
    auto code = std::make_shared<MatrixCode>(C);
    AmbientPtr amb = AmbientSpace::make(C.field(), C.n());
    return QPolymatroid(LatticeView(amb), C.m(),
                        [code](const Subspace& U) {
                            return code->k() - code->dim_colspace_within(perp(U));
                        },
                        "M_C");
}

QPolymatroid induced_qmatroid(const VectorCode& C) {
    auto code = std::make_shared<VectorCode>(C);
    AmbientPtr amb = AmbientSpace::make(C.base_field(), C.n());
    return QPolymatroid(LatticeView(amb), 1,
                        [code](const Subspace& U) {
                            return code->k() - code->dim_support_within(perp(U));
                        },
                        "M_C");
}

}  // namespace qpm
