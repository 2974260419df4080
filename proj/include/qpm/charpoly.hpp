#pragma once

#include "qpm/intpoly.hpp"
#include "qpm/qpolymatroid.hpp"

namespace qpm {

// characteristic polynomial p(M; z) = sum_X mu(0,X) z^(rho(E)-rho(X))
IntPoly char_poly(const QPolymatroid& M);

// p(M/T; z) and p(M.X; z) without materializing the minor separately
IntPoly char_poly_contraction(const QPolymatroid& M, const Subspace& T);
IntPoly char_poly_contract_to(const QPolymatroid& M, const Subspace& X);

// p(M.X; z) for every lattice element X, keyed by LatticeIndex id
struct ContractionTable {
    std::shared_ptr<const LatticeIndex> idx;
    std::vector<IntPoly> p;
};
ContractionTable all_contraction_polys(const QPolymatroid& M, Int ceiling = 8000000);

// weight enumerator A_M(i; z) = sum over i-dim X of p(M.X; z)
IntPoly weight_enum(const QPolymatroid& M, int i);
std::vector<IntPoly> weight_enums(const QPolymatroid& M);
std::vector<IntPoly> weight_enums(const ContractionTable& tab);

// A_{M/T}(j; z) = sum over j-dim X <= T^perp of p(M.X; z)
IntPoly weight_enum_contraction(const QPolymatroid& M, const Subspace& T, int j);

}  // namespace qpm
