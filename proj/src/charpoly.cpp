#include "qpm/charpoly.hpp"

namespace qpm {

namespace {

// assemble sum_d sum_e sign_d q^binom(d,2) cnt[d][e] z^e
IntPoly assemble(const std::vector<std::vector<int64_t>>& cnt, const Int& q) {
    size_t width = 0;
    for (const auto& row : cnt) width = std::max(width, row.size());
    std::vector<Int> coeff(width, Int(0));
    for (size_t d = 0; d < cnt.size(); d++) {
        if (cnt[d].empty()) continue;
        Int mu = int_pow(q, static_cast<long>(d) * (static_cast<long>(d) - 1) / 2);
        if (d % 2) mu = -mu;
        for (size_t e = 0; e < cnt[d].size(); e++)
            if (cnt[d][e]) coeff[e] += mu * cnt[d][e];
    }
    return IntPoly(std::move(coeff));
}

}  // namespace

IntPoly char_poly(const QPolymatroid& M) {
    const LatticeView& lat = M.lattice();
    int rtop = M.rank_top();
    std::vector<std::vector<int64_t>> cnt(static_cast<size_t>(lat.nrel()) + 1,
                                          std::vector<int64_t>(static_cast<size_t>(rtop) + 1, 0));
    for (int d = 0; d <= lat.nrel(); d++)
        lat.for_each_reldim(d, [&](const Subspace& X) {
            cnt[static_cast<size_t>(d)][static_cast<size_t>(M.ell(X))]++;
        });
    return assemble(cnt, Int(M.ambient()->q()));
}

IntPoly char_poly_contraction(const QPolymatroid& M, const Subspace& T) {
    return char_poly(M.contraction(T));
}

IntPoly char_poly_contract_to(const QPolymatroid& M, const Subspace& X) {
    return char_poly(M.contract_to(X));
}

ContractionTable all_contraction_polys(const QPolymatroid& M, Int ceiling) {
    const auto& mat = M.materialize(ceiling);
    const LatticeIndex& idx = *mat.idx;
    const LatticeView& lat = M.lattice();
    const Int q(M.ambient()->q());
    int rtop = mat.rank_top;
    ContractionTable tab;
    tab.idx = mat.idx;
    tab.p.resize(static_cast<size_t>(idx.count()));
    std::vector<std::vector<int64_t>> cnt;
    for (int id = 0; id < idx.count(); id++) {
        int pid = idx.perp_id(id);
        const Subspace& T = idx.at(pid);
        // corank inside M/T of an element Y >= T equals the corank of Y in M,
        // so p(M.X; z) is a Moebius tally over the interval [X^perp, top]
        LatticeView iv(T, lat.top());
        cnt.assign(static_cast<size_t>(iv.nrel()) + 1,
                   std::vector<int64_t>(static_cast<size_t>(rtop) + 1, 0));
        for (int j = 0; j <= iv.nrel(); j++)
            iv.for_each_reldim(j, [&](const Subspace& Y) {
                int e = rtop - mat.ranks[static_cast<size_t>(idx.id_of(Y))];
                cnt[static_cast<size_t>(j)][static_cast<size_t>(e)]++;
            });
        tab.p[static_cast<size_t>(id)] = assemble(cnt, q);
    }
    return tab;
}

IntPoly weight_enum(const QPolymatroid& M, int i) {
    IntPoly acc;
    M.lattice().for_each_reldim(i, [&](const Subspace& X) {
        acc += char_poly_contract_to(M, X);
    });
    return acc;
}

std::vector<IntPoly> weight_enums(const ContractionTable& tab) {
    const LatticeIndex& idx = *tab.idx;
    int n = idx.view().nrel();
    std::vector<IntPoly> out(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; j++)
        for (int id = idx.dim_begin(j); id < idx.dim_end(j); id++)
            out[static_cast<size_t>(j)] += tab.p[static_cast<size_t>(id)];
    return out;
}

std::vector<IntPoly> weight_enums(const QPolymatroid& M) {
    return weight_enums(all_contraction_polys(M));
}

IntPoly weight_enum_contraction(const QPolymatroid& M, const Subspace& T, int j) {
    Subspace Tp = M.lattice().perp_rel(T);
    LatticeView sub(M.lattice().base(), Tp);
    IntPoly acc;
    sub.for_each_reldim(j, [&](const Subspace& X) {
        acc += char_poly_contract_to(M, X);
    });
    return acc;
}

}  // namespace qpm
