#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "qpm/field.hpp"
#include "qpm/subspace.hpp"

using namespace qpm;

namespace {

Field::Elem rand_elem(const FieldPtr& F, uint64_t& st) {
    return static_cast<Field::Elem>(splitmix64(st) % F->order());
}

void check_axioms(const FieldPtr& F, int triples) {
    uint64_t st = 0xC0FFEE ^ F->order();
    for (int i = 0; i < triples; i++) {
        Field::Elem a = rand_elem(F, st), b = rand_elem(F, st), c = rand_elem(F, st);
        REQUIRE(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        REQUIRE(F->add(a, b) == F->add(b, a));
        REQUIRE(F->mul(a, b) == F->mul(b, a));
        REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        REQUIRE(F->add(a, F->zero()) == a);
        REQUIRE(F->mul(a, F->one()) == a);
        REQUIRE(F->add(a, F->neg(a)) == F->zero());
        if (a != 0) {
            REQUIRE(F->mul(a, F->inv(a)) == F->one());
            REQUIRE(F->pow(a, static_cast<long>(F->order()) - 1) == F->one());
        }
    }
}

}  // namespace

TEST_CASE("field construction and structure") {
    for (uint64_t q : {2ULL, 3ULL, 4ULL, 5ULL, 8ULL, 9ULL, 16ULL, 27ULL, 64ULL}) {
        FieldPtr F = Field::gf(q);
        CHECK(F->order() == q);
        CHECK(Field::from_spec(F->spec())->order() == q);
    }
    CHECK(Field::gf(8)->characteristic() == 2);
    CHECK(Field::gf(9)->characteristic() == 3);
    CHECK(Field::gf(9)->abs_degree() == 2);
    FieldPtr F64 = Field::from_spec("GF(2^6)/x^6+x^4+x^3+x+1");
    CHECK(F64->order() == 64);
    CHECK(F64->ext_degree() == 6);
    CHECK(F64->spec() == "GF(2^6)/x^6+x^4+x^3+x+1");

    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK_THROWS_AS(Field::extension(Field::gf(2), {1, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(Field::extension(Field::gf(3), {1, 1, 2}), NotMonic);
}

TEST_CASE("field axioms on random triples") {
    for (uint64_t q : {2ULL, 3ULL, 4ULL, 8ULL, 9ULL})
        check_axioms(Field::gf(q), 2000);
    check_axioms(Field::from_spec("GF(2^6)/x^6+x^4+x^3+x+1"), 2000);
}

TEST_CASE("element strings round-trip") {
    for (const char* spec : {"GF(7)", "GF(9)", "GF(2^6)/x^6+x^4+x^3+x+1"}) {
        FieldPtr F = Field::from_spec(spec);
        for (Field::Elem a = 0; a < F->order(); a++)
            CHECK(F->parse(F->to_string(a)) == a);
        CHECK_THROWS_AS(F->parse("not-an-element"), BadElementString);
    }
}

TEST_CASE("digits and generator") {
    FieldPtr F = Field::gf(64);
    for (Field::Elem a = 0; a < F->order(); a++) {
        auto d = F->digits(a);
        CHECK(d.size() == 6);
        CHECK(F->from_digits(d) == a);
        if (a != 0) CHECK(F->pow(F->generator(), F->dlog(a)) == a);
    }
}

TEST_CASE("matrix operations") {
    FieldPtr F = Field::gf(4);
    uint64_t st = 99;
    for (int trial = 0; trial < 50; trial++) {
        FMat A(4, std::vector<Field::Elem>(4));
        for (auto& row : A)
            for (auto& e : row) e = rand_elem(F, st);
        FMat R = A;
        int rank = fmat_rref(F, R);
        CHECK(rank == fmat_rank(F, A));
        FMat K = fmat_kernel(F, A);
        CHECK(static_cast<int>(K.size()) == 4 - rank);
        for (const auto& v : K)
            for (int i = 0; i < 4; i++) {
                Field::Elem s = 0;
                for (int j = 0; j < 4; j++) s = F->add(s, F->mul(A[i][j], v[j]));
                CHECK(s == 0);
            }
        if (rank == 4) {
            FMat P = fmat_mul(F, A, fmat_inverse(F, A));
            CHECK(P == fmat_identity(F, 4));
        } else {
            CHECK_THROWS_AS(fmat_inverse(F, A), SingularMinor);
        }
    }
}

TEST_CASE("gamma basis expansion") {
    FieldPtr F = Field::gf(64);
    GammaBasis gamma = GammaBasis::polynomial(F);
    CHECK(gamma.m() == 6);
    CHECK(gamma.base_field()->order() == 2);
    uint64_t st = 7;
    for (int trial = 0; trial < 200; trial++) {
        Field::Elem a = rand_elem(F, st);
        auto co = gamma.coords(a);
        Field::Elem back = 0;
        for (int i = 0; i < 6; i++)
            if (co[i]) back = F->add(back, gamma.elements()[static_cast<size_t>(i)]);
        CHECK(back == a);
    }
    // column j of expand(v) holds the coordinates of v[j]
    std::vector<Field::Elem> v = {rand_elem(F, st), rand_elem(F, st), rand_elem(F, st)};
    FMat X = gamma.expand(v);
    CHECK(X.size() == 6);
    CHECK(X[0].size() == 3);
    for (int j = 0; j < 3; j++) {
        auto co = gamma.coords(v[static_cast<size_t>(j)]);
        for (int i = 0; i < 6; i++) CHECK(X[static_cast<size_t>(i)][static_cast<size_t>(j)] == co[static_cast<size_t>(i)]);
    }
}
