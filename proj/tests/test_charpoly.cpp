#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "qpm/charpoly.hpp"
#include "qpm/rank_metric.hpp"

using namespace qpm;

namespace {

// independent oracle: direct Moebius-weighted sum over the full lattice
IntPoly charpoly_oracle(const QPolymatroid& M) {
    Subspace zero = Subspace::zero(M.ambient());
    std::vector<Int> coeffs(static_cast<size_t>(M.rank_top()) + 1);
    LatticeView(M.ambient()).for_each([&](const Subspace& X) {
        coeffs[static_cast<size_t>(M.ell(X))] += mobius(zero, X);
    });
    return IntPoly(std::move(coeffs));
}

QPolymatroid small_code_qmatroid() {
    FieldPtr F = Field::gf(8);
    Field::Elem a = F->x();
    FMat G = {{1, 0, a, F->mul(a, a)}, {0, 1, F->add(a, 1), a}};
    return induced_qmatroid(VectorCode(F, 4, G));
}

QPolymatroid example_code_qmatroid() {
    FieldPtr F = Field::from_spec("GF(2^6)/x^6+x^4+x^3+x+1");
    auto e = [&](const char* s) { return F->parse(s); };
    FMat G = {{e("1"), e("0"), e("0"), e("a^13"), e("a^47"), e("a^35")},
              {e("0"), e("1"), e("0"), e("a^44"), e("a^62"), e("a^32")},
              {e("0"), e("0"), e("1"), e("a^34"), e("a^22"), e("a^19")}};
    return induced_qmatroid(VectorCode(F, 6, G));
}

}  // namespace

TEST_CASE("characteristic polynomial matches the direct Moebius oracle") {
    for (auto& M : {QPolymatroid::uniform(2, 4, 2), QPolymatroid::uniform(1, 3, 3),
                    QPolymatroid::uniform(3, 5, 2), small_code_qmatroid()}) {
        CHECK(char_poly(M) == charpoly_oracle(M));
        CHECK(char_poly(M.dual()) == charpoly_oracle(M.dual()));
    }
}

TEST_CASE("golden characteristic polynomials") {
    CHECK(char_poly(QPolymatroid::vamos(2)) ==
          IntPoly(std::vector<Int>{755584, -776920, 21590, -255, 1}));
    CHECK(char_poly(example_code_qmatroid()) == IntPoly(std::vector<Int>{-1168, 1230, -63, 1}));
}

TEST_CASE("contraction polynomials match materialized minors") {
    QPolymatroid M = small_code_qmatroid();
    uint64_t st = 2;
    for (int trial = 0; trial < 10; trial++) {
        Subspace T = random_subspace(M.ambient(), static_cast<int>(splitmix64(st) % 4), st);
        CHECK(char_poly_contraction(M, T) == char_poly(M.contraction(T)));
        CHECK(char_poly_contract_to(M, T) == char_poly_contraction(M, perp(T)));
    }
    ContractionTable tab = all_contraction_polys(M);
    for (int id = 0; id < tab.idx->count(); id++)
        CHECK(tab.p[static_cast<size_t>(id)] == char_poly_contract_to(M, tab.idx->at(id)));
}

TEST_CASE("weight enumerators sum the contraction polynomials") {
    QPolymatroid M = small_code_qmatroid();
    std::vector<IntPoly> A = weight_enums(M);
    CHECK(static_cast<int>(A.size()) == 5);
    CHECK(A[0] == IntPoly(std::vector<Int>{1}));
    CHECK(A[4] == char_poly(M));
    for (int i = 0; i <= 4; i++) {
        IntPoly direct;
        for_each_subspace(M.ambient(), i, [&](const Subspace& X) {
            direct = direct + char_poly_contract_to(M, X);
        });
        CHECK(A[static_cast<size_t>(i)] == direct);
        CHECK(weight_enum(M, i) == direct);
    }
    // A_{M/T}(j) sums p(M.X) over j-dim X <= T^perp
    uint64_t st = 8;
    Subspace T = random_subspace(M.ambient(), 1, st);
    for (int j = 0; j <= 3; j++) {
        IntPoly direct;
        LatticeView(Subspace::zero(M.ambient()), perp(T)).for_each_reldim(j, [&](const Subspace& X) {
            direct = direct + char_poly_contract_to(M, X);
        });
        CHECK(weight_enum_contraction(M, T, j) == direct);
    }
}

TEST_CASE("independent and circuit spaces of the dual") {
    // exhaustive n <= 4: dual-independent T of positive dimension have
    // p(M.T;z) = 0; dual circuits T have p(M.T;z) = z^{ell(T^perp)} - 1
    for (auto& M : {QPolymatroid::uniform(2, 4, 2), small_code_qmatroid()}) {
        QPolymatroid Mstar = M.dual();
        auto dual_circuits = circuits(Mstar);
        std::map<std::array<uint64_t, 4>, bool> is_circ;
        for (const auto& C : dual_circuits) is_circ[C.key().w] = true;
        LatticeView(M.ambient()).for_each([&](const Subspace& T) {
            if (T.dim() > 0 && is_independent(Mstar, T)) {
                CHECK(M.ell(perp(T)) == 0);
                CHECK(char_poly_contract_to(M, T).is_zero());
            }
            if (T.dim() > 0 && !is_independent(Mstar, T))
                CHECK(M.ell(perp(T)) > 0);
            if (is_circ.count(T.key().w)) {
                IntPoly want;
                {
                    std::vector<Int> c(static_cast<size_t>(M.ell(perp(T))) + 1);
                    c[0] = -1;
                    c.back() += 1;
                    want = IntPoly(std::move(c));
                }
                CHECK(char_poly_contract_to(M, T) == want);
            }
        });
    }
}

TEST_CASE("moebius inversion of the contraction polynomials") {
    // z^{ell(U)} = sum over A >= U of p(M/A;z), exhaustive for n <= 4
    QPolymatroid M = small_code_qmatroid();
    LatticeView(M.ambient()).for_each([&](const Subspace& U) {
        IntPoly sum;
        LatticeView(U, Subspace::full(M.ambient())).for_each([&](const Subspace& A) {
            sum = sum + char_poly_contraction(M, A);
        });
        std::vector<Int> c(static_cast<size_t>(M.ell(U)) + 1);
        c.back() = 1;
        CHECK(sum == IntPoly(std::move(c)));
    });
}

TEST_CASE("restriction-contraction sum identity") {
    // p(M|T^perp / W^perp; z) = sum over {A : A + T = W} of p(M.A;z)
    // whenever T <= W and T is independent in the dual
    for (auto& M : {QPolymatroid::uniform(2, 4, 2), small_code_qmatroid()}) {
        QPolymatroid Mstar = M.dual();
        uint64_t st = 31;
        int done = 0;
        while (done < 6) {
            Subspace W = random_subspace(M.ambient(), 2 + static_cast<int>(splitmix64(st) % 2), st);
            Subspace T = random_subspace(M.ambient(), 1, st);
            if (!W.contains(T) || !is_independent(Mstar, T)) continue;
            done++;
            Subspace Tp = perp(T), Wp = perp(W);
            IntPoly lhs = char_poly(M.restriction(Tp).contraction(Wp));
            IntPoly rhs;
            LatticeView(Subspace::zero(M.ambient()), W).for_each([&](const Subspace& A) {
                if (sum(A, T) == W) rhs = rhs + char_poly_contract_to(M, A);
            });
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("one-dimensional trichotomy") {
    // for a line e: p(M.e;z) = 0  <=>  rho(e^perp) = rho(E)  <=>  e is not
    // a loop of the dual; exhaustive over all lines, n <= 5
    for (auto& M : {QPolymatroid::uniform(2, 5, 2), small_code_qmatroid(),
                    QPolymatroid::uniform(1, 4, 3)}) {
        QPolymatroid Mstar = M.dual();
        for_each_subspace(M.ambient(), 1, [&](const Subspace& e) {
            bool p_zero = char_poly_contract_to(M, e).is_zero();
            bool full_rank = M.rank(perp(e)) == M.rank_top();
            bool not_dual_loop = !is_loop(Mstar, e);
            CHECK(p_zero == full_rank);
            CHECK(full_rank == not_dual_loop);
        });
    }
}

TEST_CASE("loopless q-matroids have monic characteristic polynomials") {
    for (auto& M : {QPolymatroid::uniform(2, 4, 2), QPolymatroid::uniform(3, 5, 2),
                    small_code_qmatroid(), example_code_qmatroid(), QPolymatroid::vamos(2)}) {
        REQUIRE(loops(M).empty());
        IntPoly p = char_poly(M);
        CHECK(p.degree() == M.rank_top());
        CHECK(p.coeff(p.degree()) == 1);
    }
}

TEST_CASE("unique-cocircuit dichotomy") {
    // if X contains a unique cocircuit C then p(M.X;z) is z-1 when X = C
    // and 0 otherwise; p(M.X;z) = 0 unless X is a sum of cocircuits
    for (auto& M : {QPolymatroid::uniform(2, 4, 2), small_code_qmatroid(),
                    QPolymatroid::uniform(2, 5, 2)}) {
        auto cocircs = cocircuits(M);
        REQUIRE(!cocircs.empty());
        IntPoly zm1(std::vector<Int>{-1, 1});
        LatticeView(M.ambient()).for_each([&](const Subspace& X) {
            int inside = 0;
            bool is_cocirc = false;
            for (const auto& C : cocircs)
                if (X.contains(C)) {
                    inside++;
                    if (C == X) is_cocirc = true;
                }
            if (inside == 1) {
                IntPoly p = char_poly_contract_to(M, X);
                if (is_cocirc)
                    CHECK(p == zm1);
                else
                    CHECK(p.is_zero());
            }
            // sum-of-cocircuits necessary condition
            if (!char_poly_contract_to(M, X).is_zero() && X.dim() > 0) {
                Subspace acc = Subspace::zero(M.ambient());
                for (const auto& C : cocircs)
                    if (X.contains(C)) acc = sum(acc, C);
                CHECK(acc == X);
            }
        });
    }
}
