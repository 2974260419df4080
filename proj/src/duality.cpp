#include "qpm/duality.hpp"

#include <algorithm>
#include <utility>

namespace qpm {

namespace {

// Moebius multiplier for codimension d: (-1)^d q^(d(d-1)/2)
std::vector<Int> mobius_by_codim(int n, const Int& q) {
    std::vector<Int> mu(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; d++) {
        Int m = int_pow(q, static_cast<long>(d) * (d - 1) / 2);
        mu[static_cast<size_t>(d)] = (d % 2) ? Int(-m) : m;
    }
    return mu;
}

// compare lhs == z^e * rhs_inner in Z[z] after shifting the deficient side
CheckResult laurent_compare(IntPoly lhs, IntPoly rhs_inner, long e) {
    CheckResult res;
    if (e >= 0) {
        res.lhs = std::move(lhs);
        res.rhs = rhs_inner.shifted(e);
    } else {
        res.lhs = lhs.shifted(-e);
        res.rhs = std::move(rhs_inner);
    }
    res.ok = res.lhs == res.rhs;
    return res;
}

std::vector<IntPoly> enums_by_dim(const LatticeIndex& idx, const std::vector<IntPoly>& P,
                                  int n) {
    std::vector<IntPoly> A(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; j++)
        for (int id = idx.dim_begin(j); id < idx.dim_end(j); id++)
            A[static_cast<size_t>(j)] += P[static_cast<size_t>(id)];
    return A;
}

}  // namespace

DualityTables DualityTables::build(const QPolymatroid& M, Int ceiling) {
    const auto& mat = M.materialize(ceiling);
    QPolymatroid Mstar = M.dual();
    ContractionTable tab = all_contraction_polys(M, ceiling);
    ContractionTable tabstar = all_contraction_polys(Mstar, ceiling);
    int n = tab.idx->view().nrel();
    return DualityTables{M,
                         std::move(Mstar),
                         tab.idx,
                         std::move(tab.p),
                         std::move(tabstar.p),
                         n,
                         M.r(),
                         mat.rank_top,
                         Int(M.ambient()->q())};
}

std::vector<IntPoly> DualityTables::subspace_sums(const std::vector<IntPoly>& vals) const {
    const LatticeView& view = idx->view();
    int total = idx->count();
    if (static_cast<int>(vals.size()) != total)
        throw BadParams("subspace_sums: value table size mismatch");
    Int gather_cost = 0, scatter_cost = 0;
    for (int j = 0; j <= n; j++) {
        Int cnt = idx->dim_end(j) - idx->dim_begin(j);
        gather_cost += cnt * lattice_size(j, q);
    }
    for (int id = 0; id < total; id++) {
        if (vals[static_cast<size_t>(id)].is_zero()) continue;
        scatter_cost += lattice_size(n - view.reldim(idx->at(id)), q);
    }
    std::vector<IntPoly> S(static_cast<size_t>(total));
    if (scatter_cost <= gather_cost) {
        for (int id = 0; id < total; id++) {
            const IntPoly& v = vals[static_cast<size_t>(id)];
            if (v.is_zero()) continue;
            LatticeView up(idx->at(id), view.top());
            up.for_each(
                [&](const Subspace& U) { S[static_cast<size_t>(idx->id_of(U))] += v; });
        }
    } else {
        for (int uid = 0; uid < total; uid++) {
            LatticeView down(view.base(), idx->at(uid));
            IntPoly acc;
            down.for_each(
                [&](const Subspace& A) { acc += vals[static_cast<size_t>(idx->id_of(A))]; });
            S[static_cast<size_t>(uid)] = std::move(acc);
        }
    }
    return S;
}

std::vector<IntPoly> DualityTables::weight_enums_primal() const {
    return enums_by_dim(*idx, P, n);
}

std::vector<IntPoly> DualityTables::weight_enums_dual() const {
    return enums_by_dim(*idx, Pstar, n);
}

CheckResult charpoly_duality_check(const DualityTables& T, const Subspace& U) {
    const LatticeView& view = T.idx->view();
    view.require(U);
    IntPoly lhs, rhs_inner;
    LatticeView down(view.base(), U);
    down.for_each([&](const Subspace& A) {
        lhs += T.Pstar[static_cast<size_t>(T.idx->id_of(A))];
    });
    LatticeView downp(view.base(), view.perp_rel(U));
    downp.for_each([&](const Subspace& A) {
        rhs_inner += T.P[static_cast<size_t>(T.idx->id_of(A))];
    });
    long e = static_cast<long>(T.r) * view.reldim(U) - T.rank_top;
    CheckResult res = laurent_compare(std::move(lhs), std::move(rhs_inner), e);
    if (!res.ok) res.detail = "contraction-polynomial duality fails at U = " + U.str();
    return res;
}

CheckResult charpoly_duality_check(const QPolymatroid& M, const Subspace& U) {
    const LatticeView& view = M.lattice();
    view.require(U);
    QPolymatroid Mstar = M.dual();
    IntPoly lhs, rhs_inner;
    LatticeView down(view.base(), U);
    down.for_each(
        [&](const Subspace& A) { lhs += char_poly_contract_to(Mstar, A); });
    LatticeView downp(view.base(), view.perp_rel(U));
    downp.for_each(
        [&](const Subspace& A) { rhs_inner += char_poly_contract_to(M, A); });
    long e = static_cast<long>(M.r()) * view.reldim(U) - M.rank_top();
    CheckResult res = laurent_compare(std::move(lhs), std::move(rhs_inner), e);
    if (!res.ok) res.detail = "contraction-polynomial duality fails at U = " + U.str();
    return res;
}

bool charpoly_duality_check_all(const DualityTables& T, std::string* detail) {
    std::vector<IntPoly> Sstar = T.subspace_sums(T.Pstar);
    std::vector<IntPoly> S = T.subspace_sums(T.P);
    const LatticeView& view = T.idx->view();
    for (int uid = 0; uid < T.idx->count(); uid++) {
        int d = view.reldim(T.idx->at(uid));
        long e = static_cast<long>(T.r) * d - T.rank_top;
        CheckResult res =
            laurent_compare(Sstar[static_cast<size_t>(uid)],
                            S[static_cast<size_t>(T.idx->perp_id(uid))], e);
        if (!res.ok) {
            if (detail)
                *detail = "mismatch at U = " + T.idx->at(uid).str() +
                          ": lhs = " + res.lhs.str() + ", rhs = " + res.rhs.str();
            return false;
        }
    }
    return true;
}

IntPoly dual_contraction_poly(const DualityTables& T, const Subspace& U) {
    const LatticeView& view = T.idx->view();
    view.require(U);
    int du = view.reldim(U);
    // the inner alternating sum depends only on m = dim(U n V^perp)
    std::vector<IntPoly> inner(static_cast<size_t>(du) + 1);
    for (int m = 0; m <= du; m++) {
        IntPoly f;
        for (int j = 0; j <= m; j++) {
            int d = du - j;
            Int c = gauss_binom(m, j, T.q) * int_pow(T.q, static_cast<long>(d) * (d - 1) / 2);
            if (d % 2) c = -c;
            f += IntPoly::monomial(std::move(c), static_cast<long>(j) * T.r);
        }
        inner[static_cast<size_t>(m)] = std::move(f);
    }
    IntPoly acc;
    for (int vid = 0; vid < T.idx->count(); vid++) {
        const IntPoly& pv = T.P[static_cast<size_t>(vid)];
        if (pv.is_zero()) continue;
        const Subspace& Vp = T.idx->at(T.idx->perp_id(vid));
        int m = view.reldim(intersect(U, Vp));
        acc += pv * inner[static_cast<size_t>(m)];
    }
    return acc;
}

IntPoly dual_contraction_poly(const QPolymatroid& M, const Subspace& U) {
    return dual_contraction_poly(DualityTables::build(M), U);
}

bool dual_contraction_check_all(const DualityTables& T, std::string* detail) {
    const LatticeView& view = T.idx->view();
    int total = T.idx->count();
    std::vector<IntPoly> S = T.subspace_sums(T.P);
    std::vector<Int> mu = mobius_by_codim(T.n, T.q);
    // z^rho(E) p(M*.U;z) = sum_{A<=U} mu(A,U) z^(r dim A) sum_{B<=A^perp} p(M.B;z),
    // accumulated by scattering each A-term over its superspaces
    std::vector<IntPoly> acc(static_cast<size_t>(total));
    for (int aid = 0; aid < total; aid++) {
        int da = view.reldim(T.idx->at(aid));
        IntPoly W = S[static_cast<size_t>(T.idx->perp_id(aid))].shifted(
            static_cast<long>(T.r) * da);
        if (W.is_zero()) continue;
        LatticeView up(T.idx->at(aid), view.top());
        up.for_each([&](const Subspace& U) {
            int uid = T.idx->id_of(U);
            int d = view.reldim(U) - da;
            acc[static_cast<size_t>(uid)].add_scaled(W, mu[static_cast<size_t>(d)]);
        });
    }
    for (int uid = 0; uid < total; uid++) {
        IntPoly want = T.Pstar[static_cast<size_t>(uid)].shifted(T.rank_top);
        if (acc[static_cast<size_t>(uid)] != want) {
            if (detail)
                *detail = "mismatch at U = " + T.idx->at(uid).str() + ": got " +
                          acc[static_cast<size_t>(uid)].str() + ", expected " + want.str();
            return false;
        }
    }
    return true;
}

CheckResult macwilliams_transform_check(const std::vector<IntPoly>& A,
                                        const std::vector<IntPoly>& Astar, int n, int r,
                                        int rank_top, const Int& q, int s) {
    if (s < 0 || s > n) throw BadParams("macwilliams_transform_check: s out of range");
    if (static_cast<int>(A.size()) != n + 1 || static_cast<int>(Astar.size()) != n + 1)
        throw BadParams("macwilliams_transform_check: enumerator vectors must have n+1 entries");
    IntPoly lhs, rhs_inner;
    for (int i = 0; i <= n - s; i++)
        lhs.add_scaled(A[static_cast<size_t>(i)], gauss_binom(n - i, s, q));
    for (int i = 0; i <= s; i++)
        rhs_inner.add_scaled(Astar[static_cast<size_t>(i)], gauss_binom(n - i, s - i, q));
    long e = rank_top - static_cast<long>(r) * s;
    CheckResult res = laurent_compare(std::move(lhs), std::move(rhs_inner), e);
    if (!res.ok)
        res.detail = "weight-enumerator transform fails at s = " + std::to_string(s);
    return res;
}

CheckResult macwilliams_transform_check(const DualityTables& T, int s) {
    return macwilliams_transform_check(T.weight_enums_primal(), T.weight_enums_dual(),
                                       T.n, T.r, T.rank_top, T.q, s);
}

CheckResult macwilliams_transform_check(const QPolymatroid& M, int s) {
    return macwilliams_transform_check(DualityTables::build(M), s);
}

namespace {

Int bareiss_det(std::vector<std::vector<Int>> a) {
    size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) p++;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev, "bareiss_det");
        prev = a[k][k];
    }
    return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace

Int qpascal_det(const std::vector<long>& rs, const Int& q) {
    size_t n = rs.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            a[i][j] = gauss_binom(rs[i], static_cast<long>(j), q);
    return bareiss_det(std::move(a));
}

Int qpascal_det_closed(const std::vector<long>& rs, const Int& q) {
    long n = static_cast<long>(rs.size());
    if (n == 0) return 1;
    for (long r : rs)
        if (r < 0) throw BadParams("qpascal_det_closed: indices must be non-negative");
    Int num = int_pow(q, n * (n - 1) / 2);
    Int den = 1;
    for (long i = 0; i < n; i++)
        for (long j = i + 1; j < n; j++) {
            num *= int_pow(q, rs[static_cast<size_t>(j)]) - int_pow(q, rs[static_cast<size_t>(i)]);
            den *= int_pow(q, j + 1) - int_pow(q, i + 1);
        }
    if (num == 0) return 0;
    return exact_div(num, den, "qpascal_det_closed");
}

RecoveryResult recover_enumerators(const RecoveryProblem& prob) {
    int n = prob.n, r = prob.r, rt = prob.rank_top;
    const Int& q = prob.q;
    if (n < 0 || r < 1) throw BadParams("recover_enumerators: need n >= 0, r >= 1");
    std::vector<bool> in_S(static_cast<size_t>(n) + 1, false);
    for (int j : prob.S) {
        if (j < 1 || j > n || in_S[static_cast<size_t>(j)])
            throw BadParams("recover_enumerators: S must be distinct indices in 1..n");
        in_S[static_cast<size_t>(j)] = true;
    }
    int sigma = static_cast<int>(prob.S.size());
    std::vector<int> S(prob.S);
    std::sort(S.begin(), S.end());

    std::vector<IntPoly> A(static_cast<size_t>(n) + 1), Astar(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; j++) {
        if (in_S[static_cast<size_t>(j)]) continue;
        auto it = prob.known_A.find(j);
        if (it == prob.known_A.end())
            throw BadParams("recover_enumerators: missing known primal enumerator at index " +
                            std::to_string(j));
        A[static_cast<size_t>(j)] = it->second;
    }
    for (int i = 0; i < sigma; i++) {
        auto it = prob.known_Astar.find(i);
        if (it == prob.known_Astar.end())
            throw BadParams("recover_enumerators: missing known dual enumerator at index " +
                            std::to_string(i));
        Astar[static_cast<size_t>(i)] = it->second;
    }

    // common shift so every transform equation for s = 0..sigma-1 stays in Z[z]
    long K = 0;
    for (int s = 0; s < sigma; s++)
        K = std::max(K, static_cast<long>(r) * s - rt);

    try {
        if (sigma > 0) {
            std::vector<std::vector<Int>> B(static_cast<size_t>(sigma),
                                            std::vector<Int>(static_cast<size_t>(sigma)));
            std::vector<IntPoly> b(static_cast<size_t>(sigma));
            for (int s = 0; s < sigma; s++) {
                for (int t = 0; t < sigma; t++)
                    B[static_cast<size_t>(s)][static_cast<size_t>(t)] =
                        gauss_binom(n - S[static_cast<size_t>(t)], s, q);
                IntPoly rhs;
                for (int i = 0; i <= s; i++)
                    rhs.add_scaled(Astar[static_cast<size_t>(i)], gauss_binom(n - i, s - i, q));
                rhs = rhs.shifted(K + rt - static_cast<long>(r) * s);
                IntPoly known_lhs;
                for (int i = 0; i <= n - s; i++)
                    if (!in_S[static_cast<size_t>(i)])
                        known_lhs.add_scaled(A[static_cast<size_t>(i)], gauss_binom(n - i, s, q));
                rhs -= known_lhs.shifted(K);
                b[static_cast<size_t>(s)] = std::move(rhs);
            }

            // fraction-free elimination; divisions stay exact by the
            // determinantal identity, applied coefficient-wise to b
            Int prev = 1;
            for (int k = 0; k + 1 < sigma; k++) {
                auto& Bk = B[static_cast<size_t>(k)];
                if (Bk[static_cast<size_t>(k)] == 0) {
                    int p = k + 1;
                    while (p < sigma && B[static_cast<size_t>(p)][static_cast<size_t>(k)] == 0)
                        p++;
                    if (p == sigma)
                        throw SingularMinor("recover_enumerators: singular coefficient matrix");
                    std::swap(B[static_cast<size_t>(k)], B[static_cast<size_t>(p)]);
                    std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(p)]);
                }
                const Int piv = B[static_cast<size_t>(k)][static_cast<size_t>(k)];
                for (int i = k + 1; i < sigma; i++) {
                    auto& Bi = B[static_cast<size_t>(i)];
                    const Int m = Bi[static_cast<size_t>(k)];
                    for (int j = k + 1; j < sigma; j++)
                        Bi[static_cast<size_t>(j)] =
                            exact_div(piv * Bi[static_cast<size_t>(j)] -
                                          m * B[static_cast<size_t>(k)][static_cast<size_t>(j)],
                                      prev, "recover_enumerators");
                    IntPoly nb = b[static_cast<size_t>(i)] * piv;
                    nb.add_scaled(b[static_cast<size_t>(k)], -m);
                    b[static_cast<size_t>(i)] = nb.divided_by(prev);
                    Bi[static_cast<size_t>(k)] = 0;
                }
                prev = piv;
            }
            if (B[static_cast<size_t>(sigma - 1)][static_cast<size_t>(sigma - 1)] == 0)
                throw SingularMinor("recover_enumerators: singular coefficient matrix");

            std::vector<IntPoly> x(static_cast<size_t>(sigma));
            for (int t = sigma - 1; t >= 0; t--) {
                IntPoly rhs = b[static_cast<size_t>(t)];
                for (int j = t + 1; j < sigma; j++)
                    rhs.add_scaled(x[static_cast<size_t>(j)],
                                   -B[static_cast<size_t>(t)][static_cast<size_t>(j)]);
                x[static_cast<size_t>(t)] =
                    rhs.divided_by(B[static_cast<size_t>(t)][static_cast<size_t>(t)]);
                // x solves the z^K-shifted system
                A[static_cast<size_t>(S[static_cast<size_t>(t)])] =
                    x[static_cast<size_t>(t)].unshifted(K);
            }
        }

        // back-substitute the remaining dual enumerators, one per level;
        // the new unknown at level s carries coefficient qbin(n-s, 0) = 1
        for (int s = sigma; s <= n; s++) {
            IntPoly lhs;
            for (int i = 0; i <= n - s; i++)
                lhs.add_scaled(A[static_cast<size_t>(i)], gauss_binom(n - i, s, q));
            long e = rt - static_cast<long>(r) * s;
            IntPoly tot = e >= 0 ? lhs.unshifted(e) : lhs.shifted(-e);
            for (int i = 0; i < s; i++)
                tot.add_scaled(Astar[static_cast<size_t>(i)], -gauss_binom(n - i, s - i, q));
            Astar[static_cast<size_t>(s)] = std::move(tot);
        }
    } catch (const NonIntegralValue& e) {
        throw InconsistentKnowns(std::string("recover_enumerators: ") + e.what());
    }

    return RecoveryResult{std::move(A), std::move(Astar)};
}

}  // namespace qpm
