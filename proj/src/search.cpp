#include "qpm/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "qpm/designs.hpp"
#include "qpm/json_io.hpp"
#include "qpm/rank_metric.hpp"
#include "qpm/subspace.hpp"

namespace qpm {

namespace {

uint64_t splitmix_step(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

// GF(q^m) as a degree-m extension of GF(q): the lexicographically first
// monic irreducible modulus, constant term first.
FieldPtr search_field(uint64_t q, int m) {
    if (m == 1) return Field::gf(q);
    FieldPtr base = Field::gf(q);
    std::vector<Field::Elem> mod(static_cast<size_t>(m) + 1, 0);
    mod[static_cast<size_t>(m)] = 1;
    for (;;) {
        try {
            return Field::extension(base, mod);
        } catch (const NotIrreducible&) {
        }
        int i = 0;
        while (i < m) {
            if (++mod[static_cast<size_t>(i)] < base->order()) break;
            mod[static_cast<size_t>(i)] = 0;
            i++;
        }
        if (i == m) throw BadParams("no irreducible modulus of the requested degree");
    }
}

namespace {

void validate_config(const SearchConfig& cfg) {
    if (cfg.q < 2 || cfg.m < 1 || cfg.n < 1 || cfg.k < 1 || cfg.t < 1)
        throw BadParams("search needs q >= 2, m >= 1 and positive n, k, t");
    if (cfg.k >= cfg.n) throw BadParams("search needs k < n");
    if (cfg.t >= cfg.n) throw BadParams("search needs t < n");
    if (cfg.count < 0) throw BadParams("search needs count >= 0");
    Int Q = int_pow(Int(cfg.q), cfg.m);
    if (Q > 65536) throw ParamsExceedCeiling("field order q^m exceeds 2^16");
    Int classes = (int_pow(Q, cfg.k) - 1) / (Q - 1);
    if (classes > cfg.ceiling)
        throw ParamsExceedCeiling("scalar-class enumeration exceeds the ceiling");
    if (lattice_size(cfg.n, Int(cfg.q)) > cfg.ceiling)
        throw ParamsExceedCeiling("subspace lattice of F_q^n exceeds the ceiling");
}

FMat standard_form(int n, int k, const FMat& A) {
    FMat G(static_cast<size_t>(k), std::vector<Field::Elem>(static_cast<size_t>(n), 0));
    for (int i = 0; i < k; i++) {
        G[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        for (int j = 0; j + k < n; j++)
            G[static_cast<size_t>(i)][static_cast<size_t>(k + j)] =
                A[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return G;
}

std::string orbit_key(const FieldPtr& ext, const FMat& A) {
    FMat rep = dedupe_galois(ext, A);
    std::string key;
    for (const auto& row : rep)
        for (Field::Elem e : row) {
            key += std::to_string(e);
            key += ',';
        }
    return key;
}

}  // namespace

uint64_t mix64(uint64_t seed, uint64_t counter) {
    return splitmix_step(splitmix_step(seed) + counter);
}

FMat candidate_matrix(const FieldPtr& ext, int k, int cols, uint64_t seed, uint64_t index) {
    uint64_t key = mix64(seed, index);
    uint64_t Q = ext->order();
    uint64_t reject_below = (0 - Q) % Q;  // 2^64 mod Q
    uint64_t counter = 0;
    auto draw = [&]() -> Field::Elem {
        for (;;) {
            uint64_t v = mix64(key, counter++);
            if (v >= reject_below) return static_cast<Field::Elem>(v % Q);
        }
    };
    FMat A(static_cast<size_t>(k), std::vector<Field::Elem>(static_cast<size_t>(cols), 0));
    for (int i = 0; i < k; i++)
        for (int j = 0; j < cols; j++) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = draw();
    return A;
}

FMat dedupe_galois(const FieldPtr& ext, const FMat& A) {
    long q = ext->base() ? ext->base()->order() : ext->order();
    FMat best = A, cur = A;
    for (int step = 1; step < ext->ext_degree(); step++) {
        for (auto& row : cur)
            for (auto& e : row) e = ext->pow(e, q);
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<Int> dual_weights_from_primal(const std::vector<Int>& W, int n, int k,
                                          const Int& q, const Int& theta) {
    if (static_cast<int>(W.size()) != n + 1)
        throw BadParams("primal weight distribution must have n+1 entries");
    std::vector<Int> Wd(static_cast<size_t>(n) + 1);
    for (int s = 0; s <= n; s++) {
        Int lhs = 0;
        for (int i = 0; i + s <= n; i++)
            lhs += gauss_binom(n - i, s, q) * W[static_cast<size_t>(i)];
        Int rhs;
        if (s >= k) {
            rhs = lhs * int_pow(theta, s - k);
        } else {
            Int div = int_pow(theta, k - s);
            if (lhs % div != 0)
                throw InconsistentKnowns("dual weight transform: non-integral quotient");
            rhs = lhs / div;
        }
        for (int i = 0; i < s; i++)
            rhs -= gauss_binom(n - i, s - i, q) * Wd[static_cast<size_t>(i)];
        if (rhs < 0) throw InconsistentKnowns("negative dual weight count");
        Wd[static_cast<size_t>(s)] = rhs;
    }
    Int total = 0;
    for (const Int& v : Wd) total += v;
    if (total != int_pow(theta, n - k))
        throw InconsistentKnowns("dual weight counts do not sum to theta^(n-k)");
    return Wd;
}

SearchRecord evaluate_candidate(const FieldPtr& ext, const SearchConfig& cfg, long id) {
    auto t0 = std::chrono::steady_clock::now();
    SearchRecord rec;
    rec.id = id;
    rec.A = candidate_matrix(ext, cfg.k, cfg.n - cfg.k, cfg.seed, static_cast<uint64_t>(id));
    VectorCode C(ext, cfg.n, standard_form(cfg.n, cfg.k, rec.A));
    rec.W = C.weight_distribution(cfg.ceiling);
    rec.W.resize(static_cast<size_t>(cfg.n) + 1);  // ranks above min(n,m) are impossible
    rec.d = 0;
    for (int j = 1; j <= cfg.n; j++)
        if (rec.W[static_cast<size_t>(j)] != 0) {
            rec.d = j;
            break;
        }
    Int theta = int_pow(Int(cfg.q), cfg.m);
    rec.Wdual = dual_weights_from_primal(rec.W, cfg.n, cfg.k, Int(cfg.q), theta);
    for (int j = 1; j <= cfg.n - cfg.t; j++)
        if (rec.Wdual[static_cast<size_t>(j)] != 0) rec.dual_weights.push_back(j);
    rec.criteria_pass = rec.d > cfg.t &&
                        static_cast<int>(rec.dual_weights.size()) <= rec.d - cfg.t;
    rec.mrd = static_cast<long>(cfg.k) * cfg.m ==
              static_cast<long>(std::max(cfg.n, cfg.m)) * (std::min(cfg.n, cfg.m) - rec.d + 1);
    rec.hit = rec.criteria_pass && !rec.mrd;
    if (rec.hit)
        rec.verdict = "hit";
    else if (rec.criteria_pass)
        rec.verdict = "mrd_trivial";
    else if (rec.d <= cfg.t)
        rec.verdict = "t_not_less_than_d";
    else
        rec.verdict = "screened_out";
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    return rec;
}

std::string header_json_line(const SearchConfig& cfg) {
    io::json j;
    j["type"] = "header";
    j["q"] = cfg.q;
    j["m"] = cfg.m;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["t"] = cfg.t;
    j["count"] = cfg.count;
    j["seed"] = cfg.seed;
    j["dedupe"] = cfg.dedupe;
    return j.dump();
}

std::string record_json_line(const SearchConfig& cfg, const FieldPtr& ext, const SearchRecord& rec) {
    io::json j;
    j["id"] = rec.id;
    if (rec.duplicate) {
        j["verdict"] = "duplicate";
        return j.dump();
    }
    j["generator"] = io::fmat_to_json(ext, standard_form(cfg.n, cfg.k, rec.A));
    io::json W = io::json::array(), Wd = io::json::array();
    for (const Int& v : rec.W) W.push_back(v.str());
    for (const Int& v : rec.Wdual) Wd.push_back(v.str());
    j["W"] = std::move(W);
    j["W_dual"] = std::move(Wd);
    j["d"] = rec.d;
    j["dual_weights"] = rec.dual_weights;
    j["criteria_pass"] = rec.criteria_pass;
    j["mrd"] = rec.mrd;
    j["trivial"] = rec.mrd && rec.criteria_pass;
    j["hit"] = rec.hit;
    j["verdict"] = rec.verdict;
    return j.dump();
}

std::string hit_json_line(const SearchConfig& cfg, const FieldPtr& ext, const SearchRecord& rec) {
    io::json j = io::json::parse(record_json_line(cfg, ext, rec));
    try {
        VectorCode C(ext, cfg.n, standard_form(cfg.n, cfg.k, rec.A));
        GammaBasis gamma = GammaBasis::polynomial(ext);
        CodeAMResult res = am_check_code(C, gamma, cfg.t, cfg.ceiling);
        j["report"] = io::am_report_to_json(res.report);
        io::json certs = io::json::array();
        for (const auto& c : res.certificates) certs.push_back(io::certificate_to_json(c));
        j["certificates"] = std::move(certs);
    } catch (const Error& e) {
        j["certification_error"] = e.what();
    }
    return j.dump();
}

SearchSummary run_search(const SearchConfig& cfg_in, std::ostream& out, std::ostream* hits,
                         std::ostream* telemetry) {
    SearchConfig cfg = cfg_in;
    if (const char* env = std::getenv("QPM_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) cfg.workers = w;
    }
    validate_config(cfg);
    FieldPtr ext = search_field(cfg.q, cfg.m);

    out << header_json_line(cfg) << "\n";
    out.flush();
    if (hits) {
        *hits << header_json_line(cfg) << "\n";
        hits->flush();
    }

    SearchSummary sum;
    std::unordered_set<std::string> seen;
    auto emit = [&](SearchRecord& rec) {
        if (cfg.dedupe && !seen.insert(orbit_key(ext, rec.A)).second) {
            rec.duplicate = true;
            rec.hit = false;
            rec.verdict = "duplicate";
        }
        sum.candidates++;
        if (rec.duplicate)
            sum.duplicates++;
        else if (rec.hit)
            sum.hits++;
        else if (rec.criteria_pass && rec.mrd)
            sum.trivial_mrd++;
        out << record_json_line(cfg, ext, rec) << "\n";
        out.flush();
        if (rec.hit && hits) {
            *hits << hit_json_line(cfg, ext, rec) << "\n";
            hits->flush();
        }
        if (telemetry) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), R"({"id":%ld,"ms":%.3f})", rec.id, rec.millis);
            *telemetry << buf << "\n";
        }
    };

    int workers = std::max(1, cfg.workers);
    if (workers == 1 || cfg.count <= 1) {
        for (long id = 0; id < cfg.count; id++) {
            SearchRecord rec = evaluate_candidate(ext, cfg, id);
            emit(rec);
        }
        return sum;
    }

    // Worker pool over candidate indices; emission stays in index order
    // through a bounded reorder buffer drained by this (writer) thread.
    std::mutex mu;
    std::condition_variable cv;
    std::map<long, SearchRecord> buffer;
    std::atomic<long> next{0};
    long emitted = 0;
    const long window = 4L * workers;

    auto work = [&]() {
        FieldPtr wext = search_field(cfg.q, cfg.m);  // worker-local tables
        for (;;) {
            long id = next.fetch_add(1);
            if (id >= cfg.count) return;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv.wait(lk, [&] { return id < emitted + window; });
            }
            SearchRecord rec = evaluate_candidate(wext, cfg, id);
            {
                std::lock_guard<std::mutex> lk(mu);
                buffer.emplace(id, std::move(rec));
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; w++) pool.emplace_back(work);
    for (long id = 0; id < cfg.count; id++) {
        SearchRecord rec;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return buffer.count(id) != 0; });
            rec = std::move(buffer.begin()->second);
            buffer.erase(buffer.begin());
            emitted = id + 1;
        }
        cv.notify_all();
        emit(rec);
    }
    for (auto& th : pool) th.join();
    return sum;
}

SearchSummary run_search_to_files(const SearchConfig& cfg) {
    std::ofstream fout, fhits, ftel;
    std::ostream* outp = &std::cout;
    std::ostream* hitsp = nullptr;
    std::ostream* telp = nullptr;

    bool to_file = !cfg.out.empty() && cfg.out != "-";
    if (to_file) {
        fout.open(cfg.out);
        if (!fout) throw BadInput("cannot open " + cfg.out);
        outp = &fout;
    }

    std::string hits_path = cfg.hits_out;
    if (hits_path.empty() && to_file) {
        auto slash = cfg.out.find_last_of('/');
        hits_path = (slash == std::string::npos ? "" : cfg.out.substr(0, slash + 1)) + "hits.jsonl";
    }
    if (!hits_path.empty()) {
        fhits.open(hits_path);
        if (!fhits) throw BadInput("cannot open " + hits_path);
        hitsp = &fhits;
    }

    std::string tel_path = cfg.telemetry;
    if (tel_path.empty() && to_file) tel_path = cfg.out + ".telemetry.jsonl";
    if (!tel_path.empty() && tel_path != "-") {
        ftel.open(tel_path);
        if (!ftel) throw BadInput("cannot open " + tel_path);
        telp = &ftel;
    }

    return run_search(cfg, *outp, hitsp, telp);
}

}  // namespace qpm
