#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "qpm/duality.hpp"
#include "qpm/rank_metric.hpp"

using namespace qpm;

namespace {

VectorCode example_code() {
    FieldPtr F = Field::from_spec("GF(2^6)/x^6+x^4+x^3+x+1");
    auto e = [&](const char* s) { return F->parse(s); };
    FMat G = {{e("1"), e("0"), e("0"), e("a^13"), e("a^47"), e("a^35")},
              {e("0"), e("1"), e("0"), e("a^44"), e("a^62"), e("a^32")},
              {e("0"), e("0"), e("1"), e("a^34"), e("a^22"), e("a^19")}};
    return VectorCode(F, 6, G);
}

MatrixCode random_matrix_code(int n, int m, int k, uint64_t seed) {
    FieldPtr F = Field::gf(2);
    uint64_t st = seed;
    std::vector<FMat> basis;
    for (int b = 0; b < k; b++) {
        FMat Mx(static_cast<size_t>(n), std::vector<Field::Elem>(static_cast<size_t>(m)));
        for (auto& row : Mx)
            for (auto& e : row) e = static_cast<Field::Elem>(splitmix64(st) & 1);
        basis.push_back(Mx);
    }
    return MatrixCode(F, n, m, basis);
}

std::vector<QPolymatroid> suite() {
    std::vector<QPolymatroid> out;
    out.push_back(QPolymatroid::uniform(2, 4, 2));
    out.push_back(QPolymatroid::uniform(2, 5, 2));
    out.push_back(induced_qmatroid(example_code()));
    for (uint64_t seed : {21ULL, 22ULL, 23ULL, 24ULL, 25ULL})
        out.push_back(induced_qpm(random_matrix_code(4, 3, 3, seed)));
    return out;
}

}  // namespace

TEST_CASE("characteristic polynomial duality across all contractions") {
    for (const QPolymatroid& M : suite()) {
        DualityTables T = DualityTables::build(M);
        std::string detail;
        CHECK(charpoly_duality_check_all(T, &detail));
        if (!detail.empty()) MESSAGE(detail);
        // spot-check the single-subspace variants against the batch pass
        uint64_t st = 3;
        for (int trial = 0; trial < 4; trial++) {
            Subspace U =
                random_subspace(M.ambient(), static_cast<int>(splitmix64(st) % (T.n + 1)), st);
            CHECK(charpoly_duality_check(T, U).ok);
            CHECK(charpoly_duality_check(M, U).ok);
        }
    }
}

TEST_CASE("dual contraction polynomials match restriction duals") {
    for (const QPolymatroid& M : suite()) {
        DualityTables T = DualityTables::build(M);
        std::string detail;
        CHECK(dual_contraction_check_all(T, &detail));
        if (!detail.empty()) MESSAGE(detail);
        uint64_t st = 8;
        for (int trial = 0; trial < 4; trial++) {
            Subspace U =
                random_subspace(M.ambient(), static_cast<int>(splitmix64(st) % (T.n + 1)), st);
            IntPoly want = char_poly_contract_to(T.Mstar, U).shifted(T.rank_top);
            CHECK(dual_contraction_poly(T, U) == want);
            CHECK(dual_contraction_poly(M, U) == want);
        }
    }
}

TEST_CASE("weight enumerator transform identities for every s") {
    for (const QPolymatroid& M : suite()) {
        DualityTables T = DualityTables::build(M);
        std::vector<IntPoly> A = T.weight_enums_primal();
        std::vector<IntPoly> Astar = T.weight_enums_dual();
        for (int s = 0; s <= T.n; s++) {
            CheckResult r = macwilliams_transform_check(A, Astar, T.n, T.r, T.rank_top, T.q, s);
            CHECK(r.ok);
            if (!r.ok) MESSAGE(r.detail);
            CHECK(macwilliams_transform_check(T, s).ok);
        }
    }
}

TEST_CASE("recovering withheld enumerator entries") {
    uint64_t st = 99;
    for (const QPolymatroid& M : suite()) {
        DualityTables T = DualityTables::build(M);
        std::vector<IntPoly> A = T.weight_enums_primal();
        std::vector<IntPoly> Astar = T.weight_enums_dual();
        for (int holes = 1; holes <= 3; holes++) {
            RecoveryProblem prob;
            prob.n = T.n;
            prob.r = T.r;
            prob.rank_top = T.rank_top;
            prob.q = T.q;
            std::set<int> hidden;
            while (static_cast<int>(hidden.size()) < holes)
                hidden.insert(1 + static_cast<int>(splitmix64(st) % T.n));
            for (int j : hidden) prob.S.push_back(j);
            for (int j = 0; j <= T.n; j++)
                if (!hidden.count(j)) prob.known_A[j] = A[static_cast<size_t>(j)];
            for (int i = 0; i < holes; i++) prob.known_Astar[i] = Astar[static_cast<size_t>(i)];
            RecoveryResult res = recover_enumerators(prob);
            CHECK(res.A == A);
            CHECK(res.Astar == Astar);
        }
    }
}

TEST_CASE("recovery rejects inconsistent inputs") {
    QPolymatroid M = QPolymatroid::uniform(2, 5, 2);
    DualityTables T = DualityTables::build(M);
    std::vector<IntPoly> A = T.weight_enums_primal();
    std::vector<IntPoly> Astar = T.weight_enums_dual();
    RecoveryProblem prob;
    prob.n = T.n;
    prob.r = T.r;
    prob.rank_top = T.rank_top;
    prob.q = T.q;
    prob.S = {2, 4};
    for (int j = 0; j <= T.n; j++)
        if (j != 2 && j != 4) prob.known_A[j] = A[static_cast<size_t>(j)];
    prob.known_Astar[0] = Astar[0] + IntPoly(std::vector<Int>{1});  // corrupted
    prob.known_Astar[1] = Astar[1];
    CHECK_THROWS_AS(recover_enumerators(prob), InconsistentKnowns);

    RecoveryProblem bad = prob;
    bad.S = {0, 4};  // indices must lie in 1..n
    CHECK_THROWS_AS(recover_enumerators(bad), BadParams);
}

TEST_CASE("q-Pascal determinant closed form") {
    uint64_t st = 7;
    for (int trial = 0; trial < 100; trial++) {
        Int q = std::vector<Int>{2, 3, 4}[splitmix64(st) % 3];
        int size = 1 + static_cast<int>(splitmix64(st) % 5);
        std::vector<long> rs;
        for (int i = 0; i < size; i++) rs.push_back(static_cast<long>(splitmix64(st) % 9));
        CHECK(qpascal_det(rs, q) == qpascal_det_closed(rs, q));
    }
}

TEST_CASE("subspace sum tables match direct evaluation") {
    QPolymatroid M = QPolymatroid::uniform(2, 4, 2);
    DualityTables T = DualityTables::build(M);
    CHECK(weight_enums(M) == T.weight_enums_primal());
    CHECK(weight_enums(M.dual()) == T.weight_enums_dual());
    // down-set sums: compare against the naive double loop
    std::vector<IntPoly> S = T.subspace_sums(T.P);
    for (size_t id = 0; id < S.size(); id++) {
        IntPoly direct;
        const Subspace& X = T.idx->at(id);
        LatticeView(Subspace::zero(M.ambient()), X).for_each([&](const Subspace& Asub) {
            direct += T.P[T.idx->id_of(Asub)];
        });
        CHECK(S[id] == direct);
    }
}
