#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpm/subspace.hpp"

namespace qpm {

// A (q,r)-polymatroid on an interval of the subspace lattice: an integer
// r >= 1 together with a rank function on the interval satisfying
//   (R1) 0 <= rho(A) <= r * dim(A)   (dimension relative to the base)
//   (R2) A <= B implies rho(A) <= rho(B)
//   (R3) rho(A+B) + rho(A int B) <= rho(A) + rho(B)
// A q-matroid is the case r = 1.
class QPolymatroid {
  public:
    using RankFn = std::function<int(const Subspace&)>;

    QPolymatroid(LatticeView lat, int r, RankFn rho, std::string name = "");

    // uniform q-matroid U_{k,n}(q): rho(A) = min(dim A, k)
    static QPolymatroid uniform(int k, int n, uint64_t q);
    // the q-analogue of the Vamos matroid on F_q^8
    static QPolymatroid vamos(uint64_t q);
    // rank table listed in enumeration order over the full lattice
    static QPolymatroid from_table(AmbientPtr amb, int r, const std::vector<int>& table,
                                   std::string name = "", Int ceiling = 8000000);

    const LatticeView& lattice() const { return lat_; }
    const AmbientPtr& ambient() const { return lat_.ambient(); }
    int r() const { return r_; }
    int nrel() const { return lat_.nrel(); }
    const std::string& name() const { return name_; }

    int rank(const Subspace& X) const;
    int rank_top() const;
    // corank ell(A) = rho(top) - rho(A)
    int ell(const Subspace& X) const { return rank_top() - rank(X); }
    int reldim(const Subspace& X) const { return lat_.reldim(X); }

    // materialized lattice + rank table, cached; shared with dual()
    struct Materialized {
        std::shared_ptr<const LatticeIndex> idx;
        std::vector<int> ranks;
        int rank_top = 0;
    };
    const Materialized& materialize(Int ceiling = 8000000) const;
    bool is_materialized() const { return cache_ && cache_->mat.has_value(); }

    // rho*(A) = r*dim(A) - rho(top) + rho(A^perp), perp inside the interval
    QPolymatroid dual() const;
    // M|T on [base, T]
    QPolymatroid restriction(const Subspace& T) const;
    // M/T on [T, top] with rho(A) - rho(T)
    QPolymatroid contraction(const Subspace& T) const;
    // M.X = M / X^perp
    QPolymatroid contract_to(const Subspace& X) const;

  private:
    LatticeView lat_;
    int r_;
    RankFn rho_;
    std::string name_;
    struct Cache {
        std::optional<Materialized> mat;
        int rank_top = -1;
    };
    std::shared_ptr<Cache> cache_;
};

bool is_independent(const QPolymatroid& M, const Subspace& X);
bool is_loop(const QPolymatroid& M, const Subspace& X);
std::vector<Subspace> loops(const QPolymatroid& M);

// inclusion-minimal dependent spaces, by ascending dimension; stop early
// once the dimension exceeds max_dim (-1 for no limit)
std::vector<Subspace> circuits(const QPolymatroid& M, int max_dim = -1);
std::vector<Subspace> cocircuits(const QPolymatroid& M, int max_dim = -1);
// minimum dimension of a cocircuit; throws NoCocircuits when none exist
int min_cocircuit_dim(const QPolymatroid& M);

Subspace closure(const QPolymatroid& M, const Subspace& A);
// fixed points of the closure operator; the classical flat theory is only
// guaranteed to behave like matroid flats when r == 1
std::vector<Subspace> flats(const QPolymatroid& M);
std::vector<Subspace> hyperplanes(const QPolymatroid& M);

struct AxiomReport {
    bool ok = true;
    std::string detail;  // describes the first violation found
};
// checks R1 on every element and R2/R3 on every pair; the number of pairs
// must stay below pair_ceiling
AxiomReport check_axioms_exhaustive(const QPolymatroid& M, Int pair_ceiling = 30000000);
// checks R1/R2/R3 on `samples` pseudo-random subspace pairs
AxiomReport check_axioms_sampled(const QPolymatroid& M, int samples, uint64_t seed);

// rank functions agree on the whole (shared) lattice
bool same_qpm(const QPolymatroid& A, const QPolymatroid& B, Int ceiling = 8000000);

}  // namespace qpm
