#include "qpm/qpolymatroid.hpp"

#include <algorithm>
#include <unordered_set>

namespace qpm {

QPolymatroid::QPolymatroid(LatticeView lat, int r, RankFn rho, std::string name)
    : lat_(std::move(lat)), r_(r), rho_(std::move(rho)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
    if (r_ < 1) throw BadParams("polymatroid parameter r must be >= 1");
}

int QPolymatroid::rank(const Subspace& X) const {
    lat_.require(X);
    return rho_(X);
}

int QPolymatroid::rank_top() const {
    if (cache_->rank_top < 0) cache_->rank_top = rho_(lat_.top());
    return cache_->rank_top;
}

const QPolymatroid::Materialized& QPolymatroid::materialize(Int ceiling) const {
    if (!cache_->mat) {
        Materialized m;
        m.idx = std::make_shared<LatticeIndex>(lat_, ceiling);
        m.ranks.resize(static_cast<size_t>(m.idx->count()));
        for (int i = 0; i < m.idx->count(); i++)
            m.ranks[static_cast<size_t>(i)] = rho_(m.idx->at(i));
        m.rank_top = m.ranks.back();
        cache_->mat = std::move(m);
        cache_->rank_top = cache_->mat->rank_top;
    }
    return *cache_->mat;
}

QPolymatroid QPolymatroid::uniform(int k, int n, uint64_t q) {
    if (k < 0 || k > n) throw BadParams("uniform q-matroid needs 0 <= k <= n");
    AmbientPtr amb = AmbientSpace::make(Field::gf(q), n);
    return QPolymatroid(LatticeView(amb), 1,
                        [k](const Subspace& X) { return std::min(X.dim(), k); },
                        "U_{" + std::to_string(k) + "," + std::to_string(n) + "}");
}

QPolymatroid QPolymatroid::vamos(uint64_t q) {
    AmbientPtr amb = AmbientSpace::make(Field::gf(q), 8);
    // the five distinguished 4-spaces, spanned by standard basis vectors
    static const int quads[5][4] = {
        {0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}, {2, 3, 6, 7}, {4, 5, 6, 7}};
    auto special = std::make_shared<std::vector<Subspace::Key>>();
    for (const auto& quad : quads) {
        std::vector<Row> rows;
        for (int e : quad) rows.push_back(AmbientSpace::with_entry(0, e, 1));
        special->push_back(Subspace::from_rows(amb, rows).key());
    }
    auto rho = [special](const Subspace& X) {
        int d = X.dim();
        if (d <= 3) return d;
        if (d == 4) {
            Subspace::Key k = X.key();
            for (const auto& s : *special)
                if (s == k) return 3;
        }
        return 4;
    };
    return QPolymatroid(LatticeView(amb), 1, rho, "vamos_q" + std::to_string(q));
}

QPolymatroid QPolymatroid::from_table(AmbientPtr amb, int r, const std::vector<int>& table,
                                      std::string name, Int ceiling) {
    LatticeView lat(amb);
    auto idx = std::make_shared<LatticeIndex>(lat, ceiling);
    if (static_cast<int>(table.size()) != idx->count())
        throw BadParams("rank table has " + std::to_string(table.size()) +
                        " entries, lattice has " + std::to_string(idx->count()));
    auto tbl = std::make_shared<std::vector<int>>(table);
    QPolymatroid M(lat, r,
                   [idx, tbl](const Subspace& X) { return (*tbl)[static_cast<size_t>(idx->id_of(X))]; },
                   std::move(name));
    Materialized m;
    m.idx = idx;
    m.ranks = *tbl;
    m.rank_top = m.ranks.back();
    M.cache_->mat = std::move(m);
    M.cache_->rank_top = m.rank_top;
    return M;
}

QPolymatroid QPolymatroid::dual() const {
    LatticeView lat = lat_;
    int r = r_;
    int top = rank_top();
    if (is_materialized()) {
        // share the parent's lattice index; rank via the cached perp table
        const Materialized& pm = *cache_->mat;
        auto idx = pm.idx;
        Materialized dm;
        dm.idx = idx;
        dm.ranks.resize(pm.ranks.size());
        int basedim = lat_.base().dim();
        for (int i = 0; i < idx->count(); i++) {
            int d = idx->at(i).dim() - basedim;
            dm.ranks[static_cast<size_t>(i)] =
                r * d - top + pm.ranks[static_cast<size_t>(idx->perp_id(i))];
        }
        dm.rank_top = dm.ranks.back();
        auto tbl = std::make_shared<std::vector<int>>(dm.ranks);
        QPolymatroid D(lat, r,
                       [idx, tbl](const Subspace& X) {
                           return (*tbl)[static_cast<size_t>(idx->id_of(X))];
                       },
                       name_.empty() ? "" : name_ + "*");
        D.cache_->mat = std::move(dm);
        D.cache_->rank_top = D.cache_->mat->rank_top;
        return D;
    }
    QPolymatroid parent = *this;
    return QPolymatroid(lat, r,
                        [parent, r, top](const Subspace& X) {
                            int d = parent.reldim(X);
                            return r * d - top + parent.rho_(parent.lat_.perp_rel(X));
                        },
                        name_.empty() ? "" : name_ + "*");
}

QPolymatroid QPolymatroid::restriction(const Subspace& T) const {
    lat_.require(T);
    return QPolymatroid(LatticeView(lat_.base(), T), r_, rho_,
                        name_.empty() ? "" : name_ + "|T");
}

QPolymatroid QPolymatroid::contraction(const Subspace& T) const {
    lat_.require(T);
    RankFn rho = rho_;
    int rt = rho_(T);
    return QPolymatroid(LatticeView(T, lat_.top()), r_,
                        [rho, rt](const Subspace& X) { return rho(X) - rt; },
                        name_.empty() ? "" : name_ + "/T");
}

QPolymatroid QPolymatroid::contract_to(const Subspace& X) const {
    return contraction(lat_.perp_rel(X));
}

// ----------------------------------------------------------------- basics

bool is_independent(const QPolymatroid& M, const Subspace& X) {
    return M.rank(X) == M.r() * M.reldim(X);
}

bool is_loop(const QPolymatroid& M, const Subspace& X) {
    return M.reldim(X) == 1 && M.rank(X) == 0;
}

std::vector<Subspace> loops(const QPolymatroid& M) {
    std::vector<Subspace> out;
    M.lattice().for_each_reldim(1, [&](const Subspace& X) {
        if (M.rank(X) == 0) out.push_back(X);
    });
    return out;
}

std::vector<Subspace> circuits(const QPolymatroid& M, int max_dim) {
    std::vector<Subspace> out;
    const LatticeView& lat = M.lattice();
    int lim = max_dim < 0 ? lat.nrel() : std::min(max_dim, lat.nrel());
    for (int d = 1; d <= lim; d++) {
        lat.for_each_reldim(d, [&](const Subspace& X) {
            if (M.rank(X) == M.r() * d) return;  // independent
            // minimal iff every maximal proper subspace above the base is independent
            LatticeView below(lat.base(), X);
            bool minimal = true;
            below.for_each_reldim(d - 1, [&](const Subspace& Y) {
                if (!minimal) return;
                if (M.rank(Y) < M.r() * (d - 1)) minimal = false;
            });
            if (minimal) out.push_back(X);
        });
    }
    return out;
}

std::vector<Subspace> cocircuits(const QPolymatroid& M, int max_dim) {
    return circuits(M.dual(), max_dim);
}

int min_cocircuit_dim(const QPolymatroid& M) {
    QPolymatroid D = M.dual();
    const LatticeView& lat = D.lattice();
    for (int d = 1; d <= lat.nrel(); d++) {
        std::vector<Subspace> cs = circuits(D, d);
        for (const Subspace& C : cs)
            if (D.reldim(C) == d) return d;
        if (!cs.empty()) return D.reldim(cs.front());
    }
    throw NoCocircuits("polymatroid has no cocircuits");
}

Subspace closure(const QPolymatroid& M, const Subspace& A) {
    const LatticeView& lat = M.lattice();
    lat.require(A);
    int ra = M.rank(A);
    Subspace acc = A;
    lat.for_each_reldim(1, [&](const Subspace& e) {
        if (acc.contains(e)) return;
        if (M.rank(sum(A, e)) == ra) acc = sum(acc, e);
    });
    return acc;
}

std::vector<Subspace> flats(const QPolymatroid& M) {
    std::vector<Subspace> out;
    M.lattice().for_each([&](const Subspace& X) {
        if (closure(M, X) == X) out.push_back(X);
    });
    return out;
}

std::vector<Subspace> hyperplanes(const QPolymatroid& M) {
    std::vector<Subspace> fl = flats(M);
    const Subspace& top = M.lattice().top();
    std::vector<Subspace> out;
    for (const Subspace& F : fl) {
        if (F == top) continue;
        bool maximal = true;
        for (const Subspace& G : fl) {
            if (G == top || G == F) continue;
            if (G.contains(F)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(F);
    }
    return out;
}

// ------------------------------------------------------------ axiom checks

namespace {

bool check_triple(const QPolymatroid& M, const Subspace& A, const Subspace& B,
                  AxiomReport& rep) {
    int ra = M.rank(A), rb = M.rank(B);
    if (ra < 0 || ra > M.r() * M.reldim(A)) {
        rep = {false, "R1 fails at " + A.str() + " with rank " + std::to_string(ra)};
        return false;
    }
    if (B.contains(A) && ra > rb) {
        rep = {false, "R2 fails: rank(" + A.str() + ") > rank(" + B.str() + ")"};
        return false;
    }
    int rs = M.rank(sum(A, B));
    int ri = M.rank(intersect(A, B));
    if (rs + ri > ra + rb) {
        rep = {false, "R3 fails at A=" + A.str() + ", B=" + B.str()};
        return false;
    }
    return true;
}

}  // namespace

AxiomReport check_axioms_exhaustive(const QPolymatroid& M, Int pair_ceiling) {
    Int count = M.lattice().size();
    Int pairs = count * count;
    if (pairs > pair_ceiling)
        throw TooLargeToEnumerate("exhaustive axiom check needs " + pairs.str() + " pairs");
    const auto& mat = M.materialize();
    const LatticeIndex& idx = *mat.idx;
    AxiomReport rep;
    for (int i = 0; i < idx.count() && rep.ok; i++)
        for (int j = i; j < idx.count() && rep.ok; j++)
            check_triple(M, idx.at(i), idx.at(j), rep);
    return rep;
}

AxiomReport check_axioms_sampled(const QPolymatroid& M, int samples, uint64_t seed) {
    const LatticeView& lat = M.lattice();
    uint64_t rng = seed;
    AxiomReport rep;
    for (int s = 0; s < samples && rep.ok; s++) {
        int da = static_cast<int>(splitmix64(rng) % (lat.nrel() + 1));
        int db = static_cast<int>(splitmix64(rng) % (lat.nrel() + 1));
        Subspace A = lat.lift(random_subspace(lat.chart_ambient(), da, rng));
        Subspace B = lat.lift(random_subspace(lat.chart_ambient(), db, rng));
        if (!check_triple(M, A, B, rep)) break;
        // a guaranteed-containment pair for R2
        Subspace C = sum(A, B);
        if (M.rank(A) > M.rank(C)) {
            rep = {false, "R2 fails: rank(" + A.str() + ") > rank(" + C.str() + ")"};
            break;
        }
    }
    return rep;
}

bool same_qpm(const QPolymatroid& A, const QPolymatroid& B, Int ceiling) {
    if (A.r() != B.r()) return false;
    if (!A.ambient()->same(*B.ambient())) return false;
    if (A.lattice().base() != B.lattice().base() || A.lattice().top() != B.lattice().top())
        return false;
    const auto& ma = A.materialize(ceiling);
    const auto& mb = B.materialize(ceiling);
    return ma.ranks == mb.ranks;
}

}  // namespace qpm
