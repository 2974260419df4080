#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpm/common.hpp"
#include "qpm/field.hpp"

namespace qpm {

// Random search over [n, k] codes C <= GF(q^m)^n with generator matrix in
// standard form (I_k | A), screening each candidate's weight data for the
// design criteria on t-dimensional spaces.
struct SearchConfig {
    uint64_t q = 2;  // base field order
    int m = 0;       // extension degree
    int n = 0;       // code length
    int k = 0;       // code dimension over GF(q^m)
    int t = 0;       // design strength to screen for
    long count = 0;  // number of candidates
    uint64_t seed = 0;
    int workers = 1;
    bool dedupe = false;       // skip Galois-orbit repeats
    std::string out;           // JSONL path; "-" means stdout
    std::string hits_out;      // defaults to <out>.hits.jsonl
    std::string telemetry;     // per-record timings; empty disables
    Int ceiling = 8000000;
};

struct SearchRecord {
    long id = 0;
    FMat A;                    // the random k x (n-k) block
    std::vector<Int> W;        // weight distribution of C, indices 0..n
    std::vector<Int> Wdual;    // weight distribution of C^perp, derived
    int d = 0;                 // minimum distance of C
    std::vector<int> dual_weights;  // distinct nonzero dual weights in 1..n-t
    bool criteria_pass = false;     // t < d and |dual_weights| <= d - t
    bool mrd = false;
    bool duplicate = false;    // only under dedupe
    bool hit = false;          // criteria_pass && !mrd
    std::string verdict;
    double millis = 0.0;       // evaluation time; telemetry only
};

struct SearchSummary {
    long candidates = 0;
    long hits = 0;
    long trivial_mrd = 0;
    long duplicates = 0;
};

// GF(q^m) as a degree-m extension of GF(q), using the lexicographically
// first monic irreducible modulus; the field the search evaluates in.
FieldPtr search_field(uint64_t q, int m);

// Counter-based generator: a fixed 64 -> 64 bit mixer applied to the pair
// (seed, counter), so any candidate index can be regenerated independently.
uint64_t mix64(uint64_t seed, uint64_t counter);

// The k x (n-k) matrix for candidate `index`, entries drawn uniformly from
// the extension field by rejection sampling.
FMat candidate_matrix(const FieldPtr& ext, int k, int cols, uint64_t seed, uint64_t index);

// Lexicographically least matrix in the orbit of A under the entrywise
// Frobenius powers x -> x^(q^i), i = 0..m-1.
FMat dedupe_galois(const FieldPtr& ext, const FMat& A);

// Solves the weight-enumerator duality relations at z = theta for the dual
// distribution, one index at a time; W has indices 0..n and the code has
// dimension k over the theta-element field. Never enumerates the dual code.
std::vector<Int> dual_weights_from_primal(const std::vector<Int>& W, int n, int k,
                                          const Int& q, const Int& theta);

// Weight data, screening verdict and MRD flag for one candidate.
SearchRecord evaluate_candidate(const FieldPtr& ext, const SearchConfig& cfg, long id);

std::string record_json_line(const SearchConfig& cfg, const FieldPtr& ext, const SearchRecord& rec);
std::string header_json_line(const SearchConfig& cfg);
// Record plus the full certification report; only computed for hits.
std::string hit_json_line(const SearchConfig& cfg, const FieldPtr& ext, const SearchRecord& rec);

SearchSummary run_search(const SearchConfig& cfg, std::ostream& out, std::ostream* hits,
                         std::ostream* telemetry);
// Opens cfg.out / cfg.hits_out / cfg.telemetry and streams into them.
SearchSummary run_search_to_files(const SearchConfig& cfg);

}  // namespace qpm
