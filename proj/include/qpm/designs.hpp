#pragma once

#include <map>
#include <optional>

#include "qpm/duality.hpp"
#include "qpm/rank_metric.hpp"

namespace qpm {

// A weighted t-(n, k, lambda; q) subspace design: every t-dimensional
// subspace meets the blocks containing it with the same total weight.
struct WeightedDesign {
    int n = 0;
    Int q;
    int t = 0;
    int k = 0;
    std::vector<Subspace> blocks;  // distinct, all of dimension k
    std::vector<Int> weights;      // parallel to blocks
    Int lambda;                    // meaningful once verified
    bool verified = false;
};

struct VerifyResult {
    bool verified = false;
    Int lambda;
    std::optional<Subspace> counterexample;  // t-space with a deviating sum
    Int counterexample_sum;
    std::string detail;
};

// Checks the lambda-constancy over every t-dimensional subspace; stamps
// the design's verified flag and lambda on success.
VerifyResult verify_design(WeightedDesign& D);

// Direct block summation over {B : I <= B, B n J = 0}; used to cross-check
// the closed-form intersection numbers.
Int direct_intersection_count(const WeightedDesign& D, const Subspace& I, const Subspace& J);

// lambda_{i,j} = q^((k-i)j) qbin(n-i-j, k-i) / qbin(n-t, k-t) * lambda
Int intersection_number(const WeightedDesign& D, int i, int j);

// lambda_i = qbin(n-i, k-i) / qbin(n-t, k-t) * lambda
Int derived_design_lambda(const WeightedDesign& D, int i);

// blocks B^perp with unchanged weights; requires k <= n - t
WeightedDesign dual_design(const WeightedDesign& D);

// The vanishing apparatus of the design criteria:
//   D_M(i;theta) = {X : dim X = i, p(M.X;theta) != 0}
//   R_M(t;theta) = {j in 1..n-t : A_{M*}(j;theta) != 0}
//   d_M = minimum dimension of a cocircuit of M
struct DRInfo {
    int d_M = 0;
    std::vector<int> R;
    int sigma_star = 0;
    std::map<int, std::vector<Subspace>> D;  // D_M(i;theta) for requested i
};
void require_admissible_theta(const Int& theta, int r);
DRInfo d_and_r(const DualityTables& T, int t, const Int& theta,
               const std::vector<int>& requested_dims = {});
DRInfo d_and_r(const QPolymatroid& M, int t, const Int& theta,
               const std::vector<int>& requested_dims = {});

struct AMReport {
    Int theta;  // 0 when the check ran symbolically
    bool symbolic = false;
    int t = 0;
    int d_M = 0;
    std::vector<int> R;
    int sigma_star = 0;
    bool bound_ok = false;         // sigma* <= d_M - t
    bool vanishing_ok = false;     // transfer condition for every j <= n-t
    bool vanishing_ok_weak = false;  // restricted to j in {d_M..n-t}
    bool theorem_applies = false;  // bound_ok && vanishing_ok
    bool weak_applies = false;     // bound_ok && vanishing_ok_weak
    std::string detail;            // first failing (T, j) when any
};

// Checks, at theta: sigma* <= d_M - t, and for EVERY t-dimensional T and
// every j <= n-t with A_{M*}(j;theta) = 0 that also A_{M*/T}(j;theta) = 0,
// where A_{M*/T}(j;theta) is evaluated as the sum of p(M*.X;theta) over
// the j-dimensional X <= T^perp.
AMReport am_check(const DualityTables& T, int t, const Int& theta);
AMReport am_check(const QPolymatroid& M, int t, const Int& theta);
// Indeterminate variant: vanishing means vanishing as a polynomial.
AMReport am_check_symbolic(const DualityTables& T, int t);

struct DesignCertificate {
    WeightedDesign design;
    std::string provenance;  // which construction produced it
    Int lambda;
    bool reverified = false;      // direct lambda-constancy passed
    bool trivial_complete = false;  // blocks are all k-spaces
};

// Block-list cap for assembled certificates.
inline constexpr long kMaxCertificateBlocks = 1000000;

// Once am_check passes: for j in {d_M..n-t} the pair (D_M(j;theta),
// p(M.-;theta)) is a weighted t-design, and when the full transfer
// condition holds, so is (D_{M*}(j;theta), p(M*.-;theta)) for j in
// {d_{M*}..n-t}. Every certificate is re-verified directly.
std::vector<DesignCertificate> designs_from_qpm(const DualityTables& T, int t,
                                                const Int& theta);

// For a q-matroid whose low-dimensional spaces contain at most one
// cocircuit (resp. circuit): unweighted designs from cocircuits, circuits,
// and their orthogonal hyperplane families.
std::vector<DesignCertificate> unweighted_designs_from_qmatroid(const DualityTables& T,
                                                                int t, const Int& theta);

// greatest p such that every subspace of dimension <= p contains at most
// one member of the given family (n when the family has < 2 members)
int unique_containment_bound(const std::vector<Subspace>& family, int n);

struct CodeAMResult {
    AMReport report;
    int d = 0;                         // minimum distance of C
    std::vector<int> dual_weights;     // distinct nonzero weights of C^perp in 1..n-t
    bool criteria_pass = false;        // |dual_weights| <= d - t
    bool mrd = false;
    std::vector<DesignCertificate> certificates;
};

// Assmus-Mattson-style screening for rank-metric codes: blocks
// B(i) = {U : dim U = i, |C_{=U^perp}| != 0} with f(U) = |C_{=U^perp}|,
// for i in {d..n-t}. The vector-code variant additionally produces the
// unweighted minimal-codeword support designs.
CodeAMResult am_check_code(const MatrixCode& C, int t, Int ceiling = 8000000);
CodeAMResult am_check_code(const VectorCode& C, const GammaBasis& gamma, int t,
                           Int ceiling = 8000000);

// greatest p such that every codeword of rank at most p is minimal
int minimal_codeword_bound(const VectorCode& C, const GammaBasis& gamma);

}  // namespace qpm
