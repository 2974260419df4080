#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qpm/designs.hpp"
#include "qpm/duality.hpp"
#include "qpm/intpoly.hpp"
#include "qpm/qpolymatroid.hpp"
#include "qpm/rank_metric.hpp"
#include "qpm/subspace.hpp"

namespace qpm::io {

// Insertion-ordered JSON so serialized output is byte-stable.
using json = nlohmann::ordered_json;

// Exact integers travel as decimal strings; small inputs may also be
// plain JSON numbers.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// Polynomials are arrays of decimal coefficient strings, constant term
// first: z^2 - 3 is ["-3", "0", "1"].
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

// A subspace is an array of basis-row strings, one digit per entry
// ("0".."9" then "a".."f"), e.g. ["1010", "0101"] in F_2^4.
json subspace_to_json(const Subspace& X);
Subspace subspace_from_json(const AmbientPtr& amb, const json& j);

// Matrices over a field are arrays of rows of element strings ("a^13").
json fmat_to_json(const FieldPtr& F, const FMat& A);
FMat fmat_from_json(const FieldPtr& F, const json& j);

// {"field": "GF(2^6)/x^6+x^4+x^3+x+1", "n": 6, "generator": [[...], ...]}
json vector_code_to_json(const VectorCode& C);
VectorCode vector_code_from_json(const json& j);

// {"field": "GF(2)", "n": 4, "m": 2, "basis": [matrix, ...]} with each
// basis codeword an n x m row-major matrix of element strings.
json matrix_code_to_json(const MatrixCode& C);
MatrixCode matrix_code_from_json(const json& j);

// q-polymatroid input forms:
//   {"name": "vamos", "q": 2}
//   {"name": "uniform", "q": 2, "n": 4, "k": 2}
//   {"q": 2, "n": 4, "r": 1, "table": [ranks in lattice enumeration order]}
//   {"vector_code": {...}}  -> induced q-matroid
//   {"matrix_code": {...}}  -> induced q-polymatroid
QPolymatroid qpm_from_json(const json& j, Int ceiling = 8000000);
json qpm_to_table_json(const QPolymatroid& M, Int ceiling = 8000000);

// {"n":4, "q":"2", "t":1, "k":2, "blocks":[subspace,...], "weights":[...]}
WeightedDesign design_from_json(const json& j);
json design_to_json(const WeightedDesign& D);

json am_report_to_json(const AMReport& r);
json certificate_to_json(const DesignCertificate& c);

json load_json_file(const std::string& path);

}  // namespace qpm::io
