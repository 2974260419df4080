#include "qpm/designs.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace qpm {

namespace {

void validate_design_shape(const WeightedDesign& D) {
    if (D.blocks.size() != D.weights.size())
        throw BadParams("design: blocks and weights must be parallel");
    if (D.t < 1 || D.k < 1 || D.t > D.k || D.k > D.n)
        throw BadParams("design: need 1 <= t <= k <= n");
    std::unordered_map<Subspace::Key, int, Subspace::KeyHash> seen;
    for (const Subspace& B : D.blocks) {
        if (B.dim() != D.k) throw BadParams("design: block of wrong dimension");
        if (B.n() != D.n || Int(B.ambient()->q()) != D.q)
            throw BadParams("design: block ambient mismatch");
        if (!seen.emplace(B.key(), 0).second)
            throw BadParams("design: duplicate block");
    }
}

}  // namespace

VerifyResult verify_design(WeightedDesign& D) {
    validate_design_shape(D);
    VerifyResult res;
    if (D.blocks.empty()) {
        res.verified = true;
        res.lambda = 0;
        D.lambda = 0;
        D.verified = true;
        return res;
    }
    // scatter each block's weight onto its t-dimensional subspaces
    std::unordered_map<Subspace::Key, Int, Subspace::KeyHash> sums;
    const AmbientPtr& amb = D.blocks.front().ambient();
    Subspace zero = Subspace::zero(amb);
    for (size_t b = 0; b < D.blocks.size(); b++) {
        LatticeView inside(zero, D.blocks[b]);
        inside.for_each_reldim(D.t, [&](const Subspace& T) {
            sums[T.key()] += D.weights[b];
        });
    }
    // scan every t-space in enumeration order; lambda is pinned by the first
    bool have_lambda = false;
    bool done = false;
    for_each_subspace(amb, D.t, [&](const Subspace& T) {
        if (done) return;
        auto it = sums.find(T.key());
        Int s = (it == sums.end()) ? Int(0) : it->second;
        if (!have_lambda) {
            res.lambda = s;
            have_lambda = true;
        } else if (s != res.lambda) {
            res.counterexample = T;
            res.counterexample_sum = s;
            res.detail = "t-space " + T.str() + " meets total " + s.str() +
                         ", expected " + res.lambda.str();
            done = true;
        }
    });
    res.verified = !res.counterexample.has_value();
    if (res.verified) {
        D.lambda = res.lambda;
        D.verified = true;
    }
    return res;
}

Int direct_intersection_count(const WeightedDesign& D, const Subspace& I, const Subspace& J) {
    Int s = 0;
    for (size_t b = 0; b < D.blocks.size(); b++) {
        const Subspace& B = D.blocks[b];
        if (B.contains(I) && intersect(B, J).dim() == 0) s += D.weights[b];
    }
    return s;
}

Int intersection_number(const WeightedDesign& D, int i, int j) {
    if (i < 0 || j < 0 || i + j > D.t)
        throw BadIndices("intersection_number: need i, j >= 0 and i + j <= t");
    if (!D.verified) throw BadParams("intersection_number: design not verified");
    if (i > D.k) return 0;
    Int num = int_pow(D.q, static_cast<long>(D.k - i) * j) *
              gauss_binom(D.n - i - j, D.k - i, D.q) * D.lambda;
    return exact_div(num, gauss_binom(D.n - D.t, D.k - D.t, D.q), "intersection_number");
}

Int derived_design_lambda(const WeightedDesign& D, int i) {
    if (i < 0 || i > D.t) throw BadIndices("derived_design_lambda: need 0 <= i <= t");
    if (!D.verified) throw BadParams("derived_design_lambda: design not verified");
    Int num = gauss_binom(D.n - i, D.k - i, D.q) * D.lambda;
    return exact_div(num, gauss_binom(D.n - D.t, D.k - D.t, D.q), "derived_design_lambda");
}

WeightedDesign dual_design(const WeightedDesign& D) {
    if (!D.verified) throw BadParams("dual_design: design not verified");
    if (D.k > D.n - D.t)
        throw DualConditionViolated("dual_design: requires k <= n - t");
    WeightedDesign P;
    P.n = D.n;
    P.q = D.q;
    P.t = D.t;
    P.k = D.n - D.k;
    P.blocks.reserve(D.blocks.size());
    for (const Subspace& B : D.blocks) P.blocks.push_back(perp(B));
    P.weights = D.weights;
    Int expect = exact_div(gauss_binom(D.n - D.k, D.t, D.q) * D.lambda,
                           gauss_binom(D.k, D.t, D.q), "dual_design");
    VerifyResult vr = verify_design(P);
    if (!vr.verified || vr.lambda != expect)
        throw BadInput("dual_design: re-verification failed: " + vr.detail);
    return P;
}

void require_admissible_theta(const Int& theta, int r) {
    Int p = 1;
    for (int s = 1; s <= r; s++) {
        p *= theta;
        if (p == 1)
            throw ThetaIsRootOfUnityRange("theta^" + std::to_string(s) + " = 1");
    }
}

DRInfo d_and_r(const DualityTables& T, int t, const Int& theta,
               const std::vector<int>& requested_dims) {
    require_admissible_theta(theta, T.r);
    if (t < 1 || t > T.n) throw BadParams("d_and_r: need 1 <= t <= n");
    DRInfo info;
    info.d_M = min_cocircuit_dim(T.M);
    std::vector<IntPoly> As = T.weight_enums_dual();
    for (int j = 1; j <= T.n - t; j++)
        if (As[static_cast<size_t>(j)].eval(theta) != 0) info.R.push_back(j);
    info.sigma_star = static_cast<int>(info.R.size());
    for (int i : requested_dims) {
        if (i < 0 || i > T.n) throw BadIndices("d_and_r: requested dimension out of range");
        std::vector<Subspace> Di;
        for (int id = T.idx->dim_begin(i); id < T.idx->dim_end(i); id++)
            if (T.P[static_cast<size_t>(id)].eval(theta) != 0) Di.push_back(T.idx->at(id));
        info.D.emplace(i, std::move(Di));
    }
    return info;
}

DRInfo d_and_r(const QPolymatroid& M, int t, const Int& theta,
               const std::vector<int>& requested_dims) {
    return d_and_r(DualityTables::build(M), t, theta, requested_dims);
}

namespace {

// shared core of the numeric and symbolic hypothesis checks; "zero" for a
// subspace X means its dual contraction value vanishes (at theta, or as a
// polynomial), and the zero set of j's comes from the dual enumerator
template <typename Value>
void vanishing_transfer(const DualityTables& T, int t, int d_M,
                        const std::vector<Value>& pstar_val,
                        const std::vector<int>& zero_js, AMReport& rep) {
    rep.vanishing_ok = true;
    rep.vanishing_ok_weak = true;
    if (zero_js.empty()) return;
    const LatticeView& view = T.idx->view();
    for (int tid = T.idx->dim_begin(t); tid < T.idx->dim_end(t); tid++) {
        const Subspace& Tperp = T.idx->at(T.idx->perp_id(tid));
        LatticeView sub(view.base(), Tperp);
        for (int j : zero_js) {
            if (!rep.vanishing_ok && (!rep.vanishing_ok_weak || j < d_M)) continue;
            Value s{};
            sub.for_each_reldim(j, [&](const Subspace& X) {
                s += pstar_val[static_cast<size_t>(T.idx->id_of(X))];
            });
            if (!(s == Value{})) {
                rep.vanishing_ok = false;
                if (j >= d_M) rep.vanishing_ok_weak = false;
                if (rep.detail.empty())
                    rep.detail = "dual contraction enumerator does not vanish at j = " +
                                 std::to_string(j) + " for T = " + T.idx->at(tid).str();
            }
        }
        if (!rep.vanishing_ok && !rep.vanishing_ok_weak) break;
    }
}

AMReport am_check_core(const DualityTables& T, int t, const Int& theta, bool symbolic) {
    if (t < 1 || t > T.n) throw BadParams("am_check: need 1 <= t <= n");
    AMReport rep;
    rep.symbolic = symbolic;
    rep.theta = symbolic ? Int(0) : theta;
    rep.t = t;
    rep.d_M = min_cocircuit_dim(T.M);
    if (t >= rep.d_M) throw TNotLessThanDM("am_check: t >= d_M");
    std::vector<IntPoly> As = T.weight_enums_dual();
    std::vector<int> zero_js;
    for (int j = 1; j <= T.n - t; j++) {
        bool nz = symbolic ? !As[static_cast<size_t>(j)].is_zero()
                           : (As[static_cast<size_t>(j)].eval(theta) != 0);
        if (nz)
            rep.R.push_back(j);
        else
            zero_js.push_back(j);
    }
    rep.sigma_star = static_cast<int>(rep.R.size());
    rep.bound_ok = rep.sigma_star <= rep.d_M - t;
    if (symbolic) {
        vanishing_transfer<IntPoly>(T, t, rep.d_M, T.Pstar, zero_js, rep);
    } else {
        require_admissible_theta(theta, T.r);
        std::vector<Int> pv(T.Pstar.size());
        for (size_t i = 0; i < T.Pstar.size(); i++) pv[i] = T.Pstar[i].eval(theta);
        vanishing_transfer<Int>(T, t, rep.d_M, pv, zero_js, rep);
    }
    rep.theorem_applies = rep.bound_ok && rep.vanishing_ok;
    rep.weak_applies = rep.bound_ok && rep.vanishing_ok_weak;
    return rep;
}

DesignCertificate certify(WeightedDesign D, std::string provenance) {
    if (static_cast<long>(D.blocks.size()) > kMaxCertificateBlocks)
        throw TooLargeToEnumerate("certificate block list exceeds cap");
    DesignCertificate cert;
    VerifyResult vr = verify_design(D);
    cert.lambda = vr.lambda;
    cert.reverified = vr.verified;
    cert.trivial_complete =
        Int(static_cast<long>(D.blocks.size())) == gauss_binom(D.n, D.k, D.q);
    cert.design = std::move(D);
    cert.provenance = std::move(provenance);
    return cert;
}

// weighted design at dimension i from a contraction-polynomial table
// evaluated at theta
DesignCertificate theta_certificate(const DualityTables& T, const std::vector<IntPoly>& tab,
                                    int t, int i, const Int& theta,
                                    std::string provenance) {
    WeightedDesign D;
    D.n = T.n;
    D.q = T.q;
    D.t = t;
    D.k = i;
    for (int id = T.idx->dim_begin(i); id < T.idx->dim_end(i); id++) {
        Int v = tab[static_cast<size_t>(id)].eval(theta);
        if (v != 0) {
            D.blocks.push_back(T.idx->at(id));
            D.weights.push_back(std::move(v));
        }
    }
    return certify(std::move(D), std::move(provenance));
}

DesignCertificate unit_certificate(const DualityTables& T, int t,
                                   std::vector<Subspace> blocks, int k,
                                   std::string provenance) {
    WeightedDesign D;
    D.n = T.n;
    D.q = T.q;
    D.t = t;
    D.k = k;
    D.weights.assign(blocks.size(), Int(1));
    D.blocks = std::move(blocks);
    return certify(std::move(D), std::move(provenance));
}

void require_full_lattice(const DualityTables& T, const char* what) {
    if (!T.idx->view().is_full())
        throw BadParams(std::string(what) + ": requires the full subspace lattice");
}

}  // namespace

AMReport am_check(const DualityTables& T, int t, const Int& theta) {
    return am_check_core(T, t, theta, false);
}

AMReport am_check(const QPolymatroid& M, int t, const Int& theta) {
    return am_check_core(DualityTables::build(M), t, theta, false);
}

AMReport am_check_symbolic(const DualityTables& T, int t) {
    return am_check_core(T, t, 0, true);
}

std::vector<DesignCertificate> designs_from_qpm(const DualityTables& T, int t,
                                                const Int& theta) {
    require_full_lattice(T, "designs_from_qpm");
    AMReport rep = am_check(T, t, theta);
    if (!rep.weak_applies)
        throw HypothesisNotSatisfied("designs_from_qpm: " +
                                     (rep.detail.empty() ? std::string("sigma* > d_M - t")
                                                         : rep.detail));
    std::vector<DesignCertificate> out;
    for (int j = rep.d_M; j <= T.n - t; j++)
        out.push_back(theta_certificate(T, T.P, t, j, theta,
                                        "nonvanishing contractions of M at dimension " +
                                            std::to_string(j)));
    if (rep.theorem_applies) {
        int d_dual = min_cocircuit_dim(T.Mstar);
        for (int j = d_dual; j <= T.n - t; j++)
            out.push_back(theta_certificate(
                T, T.Pstar, t, j, theta,
                "nonvanishing contractions of the dual at dimension " + std::to_string(j)));
    }
    return out;
}

int unique_containment_bound(const std::vector<Subspace>& family, int n) {
    int p = n;
    for (size_t i = 0; i < family.size(); i++)
        for (size_t j = i + 1; j < family.size(); j++)
            p = std::min(p, sum(family[i], family[j]).dim() - 1);
    return p;
}

std::vector<DesignCertificate> unweighted_designs_from_qmatroid(const DualityTables& T,
                                                                int t, const Int& theta) {
    require_full_lattice(T, "unweighted_designs_from_qmatroid");
    if (T.r != 1) throw BadParams("unweighted_designs_from_qmatroid: q-matroid required");
    AMReport rep = am_check(T, t, theta);
    if (!rep.theorem_applies)
        throw HypothesisNotSatisfied("unweighted_designs_from_qmatroid: " +
                                     (rep.detail.empty() ? std::string("sigma* > d_M - t")
                                                         : rep.detail));
    std::vector<Subspace> cocircs = cocircuits(T.M);
    std::vector<Subspace> circs = circuits(T.M);
    if (cocircs.empty() || circs.empty())
        throw NoCocircuits(
            "unweighted_designs_from_qmatroid: needs a circuit and a cocircuit");
    struct Family {
        const std::vector<Subspace>* members;
        int d;  // minimum dimension in the family
        const char* name;
        const char* dual_name;
    };
    int d_dual = circs.front().dim();
    for (const Subspace& X : circs) d_dual = std::min(d_dual, X.dim());
    Family fams[2] = {{&cocircs, rep.d_M, "cocircuits", "hyperplanes"},
                      {&circs, d_dual, "circuits", "hyperplanes of the dual"}};
    std::vector<DesignCertificate> out;
    for (const Family& fam : fams) {
        int p = unique_containment_bound(*fam.members, T.n);
        std::set<int> dims;
        for (int i = fam.d; i <= p; i++) dims.insert(std::min(i, T.n - t));
        for (int w : dims) {
            std::vector<Subspace> blocks;
            for (const Subspace& X : *fam.members)
                if (X.dim() == w) blocks.push_back(X);
            out.push_back(unit_certificate(T, t, blocks, w,
                                           std::string(fam.name) + " of dimension " +
                                               std::to_string(w)));
            if (w <= T.n - t) {
                DesignCertificate hp;
                hp.design = dual_design(out.back().design);
                hp.lambda = hp.design.lambda;
                hp.reverified = hp.design.verified;
                hp.trivial_complete =
                    Int(static_cast<long>(hp.design.blocks.size())) ==
                    gauss_binom(T.n, hp.design.k, T.q);
                hp.provenance = std::string(fam.dual_name) + " of dimension " +
                                std::to_string(T.n - w);
                out.push_back(std::move(hp));
            }
        }
    }
    return out;
}

namespace {

// enumerate one representative per scalar class of nonzero message vectors
// (leading nonzero coordinate fixed to 1)
void for_each_projective(const FieldPtr& F, int k,
                         const std::function<void(const std::vector<Field::Elem>&)>& fn) {
    uint32_t Q = F->order();
    std::vector<Field::Elem> c(static_cast<size_t>(k), 0);
    for (int lead = 0; lead < k; lead++) {
        std::fill(c.begin(), c.end(), 0);
        c[static_cast<size_t>(lead)] = 1;
        while (true) {
            fn(c);
            int pos = k - 1;
            while (pos > lead && c[static_cast<size_t>(pos)] == Q - 1) {
                c[static_cast<size_t>(pos)] = 0;
                pos--;
            }
            if (pos == lead) break;
            c[static_cast<size_t>(pos)]++;
        }
    }
}

}  // namespace

int minimal_codeword_bound(const VectorCode& C, const GammaBasis& gamma) {
    int bound = C.n();
    for_each_projective(C.field(), C.k(), [&](const std::vector<Field::Elem>& msg) {
        std::vector<Field::Elem> v = C.codeword(msg);
        int w = C.weight(v, gamma);
        if (w == 0 || w > bound) return;
        if (!C.is_minimal_codeword(v, gamma)) bound = w - 1;
    });
    return bound;
}

CodeAMResult am_check_code(const MatrixCode& C, int t, Int ceiling) {
    if (t < 1) throw BadParams("am_check_code: need t >= 1");
    CodeAMResult res;
    res.d = C.min_distance(ceiling);
    if (t >= res.d) throw TNotLessThanD("am_check_code: t >= d");
    std::vector<Int> Wd = C.dual().weight_distribution(ceiling);
    int n = C.n();
    for (int j = 1; j <= n - t; j++)
        if (j < static_cast<int>(Wd.size()) && Wd[static_cast<size_t>(j)] != 0)
            res.dual_weights.push_back(j);
    res.criteria_pass = static_cast<int>(res.dual_weights.size()) <= res.d - t;
    res.mrd = C.is_mrd(ceiling);
    DualityTables T = DualityTables::build(induced_qpm(C), ceiling);
    Int theta = C.field()->order();
    res.report = am_check(T, t, theta);
    if (res.criteria_pass)
        for (int i = res.d; i <= n - t; i++)
            res.certificates.push_back(theta_certificate(
                T, T.P, t, i, theta,
                "exact-support codeword counts at dimension " + std::to_string(i)));
    return res;
}

CodeAMResult am_check_code(const VectorCode& C, const GammaBasis& gamma, int t,
                           Int ceiling) {
    if (t < 1) throw BadParams("am_check_code: need t >= 1");
    CodeAMResult res;
    res.d = C.min_distance(ceiling);
    if (t >= res.d) throw TNotLessThanD("am_check_code: t >= d");
    std::vector<Int> Wd = C.dual().weight_distribution(ceiling);
    int n = C.n();
    for (int j = 1; j <= n - t; j++)
        if (j < static_cast<int>(Wd.size()) && Wd[static_cast<size_t>(j)] != 0)
            res.dual_weights.push_back(j);
    res.criteria_pass = static_cast<int>(res.dual_weights.size()) <= res.d - t;
    res.mrd = (C.n() <= C.m()) ? C.is_mrd(ceiling) : C.expand(gamma).is_mrd(ceiling);
    DualityTables T = DualityTables::build(induced_qmatroid(C), ceiling);
    Int theta = C.field()->order();  // q^m
    res.report = am_check(T, t, theta);
    if (!res.criteria_pass) return res;
    for (int i = res.d; i <= n - t; i++)
        res.certificates.push_back(theta_certificate(
            T, T.P, t, i, theta,
            "exact-support codeword counts at dimension " + std::to_string(i)));
    // minimal-codeword support designs, blocks deduplicated per dimension
    int p = minimal_codeword_bound(C, gamma);
    std::map<int, std::vector<Subspace>> min_supports, d_supports;
    std::map<int, std::unordered_map<Subspace::Key, int, Subspace::KeyHash>> seen;
    for_each_projective(C.field(), C.k(), [&](const std::vector<Field::Elem>& msg) {
        std::vector<Field::Elem> v = C.codeword(msg);
        int w = C.weight(v, gamma);
        if (w == 0) return;
        bool want_min = (w <= p);
        bool want_d = (w == res.d);
        if (!want_min && !want_d) return;
        Subspace U = C.support(v, gamma);
        if (!seen[w].emplace(U.key(), 0).second) return;
        if (want_d) d_supports[w].push_back(U);
        if (want_min && C.is_minimal_codeword(v, gamma)) min_supports[w].push_back(U);
    });
    {
        std::vector<Subspace> blocks = d_supports.count(res.d) ? d_supports[res.d]
                                                               : std::vector<Subspace>{};
        res.certificates.push_back(unit_certificate(
            T, t, std::move(blocks), res.d, "supports of minimum-weight codewords"));
    }
    std::set<int> dims;
    for (int i = res.d; i <= p; i++) dims.insert(std::min(i, n - t));
    for (int w : dims) {
        std::vector<Subspace> blocks =
            min_supports.count(w) ? min_supports[w] : std::vector<Subspace>{};
        res.certificates.push_back(
            unit_certificate(T, t, std::move(blocks), w,
                             "supports of minimal codewords of dimension " +
                                 std::to_string(w)));
    }
    return res;
}

}  // namespace qpm
