#include "qpm/json_io.hpp"

#include <fstream>

namespace qpm::io {

namespace {

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
    return -1;
}

char digit_char(uint32_t v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

}  // namespace

json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw BadInput("expected an integer or a decimal string");
}

json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const Int& c : p.coeffs()) a.push_back(c.str());
    return a;
}

IntPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw BadInput("polynomial must be an array of coefficients");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(int_from_json(v));
    return IntPoly(std::move(c));
}

json subspace_to_json(const Subspace& X) {
    json a = json::array();
    for (int i = 0; i < X.dim(); i++) {
        std::string row;
        for (int j = 0; j < X.ambient()->n; j++) row += digit_char(X.entry(i, j));
        a.push_back(row);
    }
    return a;
}

Subspace subspace_from_json(const AmbientPtr& amb, const json& j) {
    if (!j.is_array()) throw BadInput("subspace must be an array of row strings");
    FMat rows;
    for (const auto& rj : j) {
        if (!rj.is_string()) throw BadInput("subspace row must be a string");
        std::string s = rj.get<std::string>();
        if (static_cast<int>(s.size()) != amb->n)
            throw BadInput("subspace row has wrong length for the ambient space");
        std::vector<Field::Elem> row;
        for (char c : s) {
            int v = digit_value(c);
            if (v < 0 || v >= static_cast<int>(amb->F->order()))
                throw BadInput(std::string("bad subspace row digit '") + c + "'");
            row.push_back(static_cast<Field::Elem>(v));
        }
        rows.push_back(std::move(row));
    }
    return Subspace::from_fmat(amb, rows);
}

json fmat_to_json(const FieldPtr& F, const FMat& A) {
    json m = json::array();
    for (const auto& row : A) {
        json r = json::array();
        for (Field::Elem e : row) r.push_back(F->to_string(e));
        m.push_back(std::move(r));
    }
    return m;
}

FMat fmat_from_json(const FieldPtr& F, const json& j) {
    if (!j.is_array()) throw BadInput("matrix must be an array of rows");
    FMat A;
    for (const auto& rj : j) {
        if (!rj.is_array()) throw BadInput("matrix row must be an array");
        std::vector<Field::Elem> row;
        for (const auto& ej : rj) {
            if (ej.is_string())
                row.push_back(F->parse(ej.get<std::string>()));
            else if (ej.is_number_integer())
                row.push_back(F->parse(std::to_string(ej.get<long long>())));
            else
                throw BadInput("matrix entry must be a string or integer");
        }
        if (!A.empty() && row.size() != A[0].size())
            throw BadInput("matrix rows have unequal lengths");
        A.push_back(std::move(row));
    }
    return A;
}

json vector_code_to_json(const VectorCode& C) {
    json j;
    j["field"] = C.field()->spec();
    j["n"] = C.n();
    j["generator"] = fmat_to_json(C.field(), C.generator());
    return j;
}

VectorCode vector_code_from_json(const json& j) {
    if (!j.contains("field") || !j.contains("n") || !j.contains("generator"))
        throw BadInput("vector code needs \"field\", \"n\" and \"generator\"");
    FieldPtr F = Field::from_spec(j.at("field").get<std::string>());
    int n = j.at("n").get<int>();
    return VectorCode(F, n, fmat_from_json(F, j.at("generator")));
}

json matrix_code_to_json(const MatrixCode& C) {
    json j;
    j["field"] = C.field()->spec();
    j["n"] = C.n();
    j["m"] = C.m();
    json basis = json::array();
    for (int i = 0; i < C.k(); i++) basis.push_back(fmat_to_json(C.field(), C.basis_matrix(i)));
    j["basis"] = std::move(basis);
    return j;
}

MatrixCode matrix_code_from_json(const json& j) {
    if (!j.contains("field") || !j.contains("n") || !j.contains("m") || !j.contains("basis"))
        throw BadInput("matrix code needs \"field\", \"n\", \"m\" and \"basis\"");
    FieldPtr F = Field::from_spec(j.at("field").get<std::string>());
    int n = j.at("n").get<int>();
    int m = j.at("m").get<int>();
    std::vector<FMat> basis;
    for (const auto& bj : j.at("basis")) basis.push_back(fmat_from_json(F, bj));
    return MatrixCode(F, n, m, basis);
}

QPolymatroid qpm_from_json(const json& j, Int ceiling) {
    if (!j.is_object()) throw BadInput("q-polymatroid input must be a JSON object");
    if (j.contains("vector_code")) return induced_qmatroid(vector_code_from_json(j.at("vector_code")));
    if (j.contains("matrix_code")) return induced_qpm(matrix_code_from_json(j.at("matrix_code")));
    if (j.contains("name")) {
        std::string name = j.at("name").get<std::string>();
        uint64_t q = j.contains("q") ? j.at("q").get<uint64_t>() : 2;
        if (name == "vamos") return QPolymatroid::vamos(q);
        if (name == "uniform") {
            if (!j.contains("n") || !j.contains("k")) throw BadInput("uniform needs \"n\" and \"k\"");
            return QPolymatroid::uniform(j.at("k").get<int>(), j.at("n").get<int>(), q);
        }
        throw BadInput("unknown q-polymatroid name \"" + name + "\"");
    }
    if (j.contains("table")) {
        if (!j.contains("q") || !j.contains("n") || !j.contains("r"))
            throw BadInput("table form needs \"q\", \"n\", \"r\" and \"table\"");
        FieldPtr F = Field::gf(j.at("q").get<uint64_t>());
        AmbientPtr amb = AmbientSpace::make(F, j.at("n").get<int>());
        std::vector<int> table;
        for (const auto& v : j.at("table")) table.push_back(v.get<int>());
        return QPolymatroid::from_table(amb, j.at("r").get<int>(), table, "", ceiling);
    }
    throw BadInput("unrecognized q-polymatroid JSON shape");
}

json qpm_to_table_json(const QPolymatroid& M, Int ceiling) {
    LatticeView lat(M.ambient());
    LatticeIndex idx(lat, ceiling);
    json j;
    j["q"] = static_cast<uint64_t>(M.ambient()->q());
    j["n"] = M.ambient()->n;
    j["r"] = M.r();
    json table = json::array();
    for (int i = 0; i < idx.count(); i++) table.push_back(M.rank(idx.at(i)));
    j["table"] = std::move(table);
    return j;
}

WeightedDesign design_from_json(const json& j) {
    for (const char* key : {"n", "q", "t", "k", "blocks", "weights"})
        if (!j.contains(key)) throw BadInput(std::string("design needs \"") + key + "\"");
    WeightedDesign D;
    D.n = j.at("n").get<int>();
    D.q = int_from_json(j.at("q"));
    D.t = j.at("t").get<int>();
    D.k = j.at("k").get<int>();
    FieldPtr F = Field::gf(D.q.convert_to<uint64_t>());
    AmbientPtr amb = AmbientSpace::make(F, D.n);
    for (const auto& bj : j.at("blocks")) D.blocks.push_back(subspace_from_json(amb, bj));
    for (const auto& wj : j.at("weights")) D.weights.push_back(int_from_json(wj));
    if (j.contains("lambda")) D.lambda = int_from_json(j.at("lambda"));
    if (j.contains("verified")) D.verified = j.at("verified").get<bool>();
    return D;
}

json design_to_json(const WeightedDesign& D) {
    json j;
    j["n"] = D.n;
    j["q"] = int_to_json(D.q);
    j["t"] = D.t;
    j["k"] = D.k;
    json blocks = json::array();
    for (const auto& B : D.blocks) blocks.push_back(subspace_to_json(B));
    j["blocks"] = std::move(blocks);
    json weights = json::array();
    for (const auto& w : D.weights) weights.push_back(int_to_json(w));
    j["weights"] = std::move(weights);
    if (D.verified) j["lambda"] = int_to_json(D.lambda);
    j["verified"] = D.verified;
    return j;
}

json am_report_to_json(const AMReport& r) {
    json j;
    j["symbolic"] = r.symbolic;
    if (!r.symbolic) j["theta"] = int_to_json(r.theta);
    j["t"] = r.t;
    j["d_M"] = r.d_M;
    j["R"] = r.R;
    j["sigma_star"] = r.sigma_star;
    j["bound_ok"] = r.bound_ok;
    j["vanishing_ok"] = r.vanishing_ok;
    j["vanishing_ok_weak"] = r.vanishing_ok_weak;
    j["theorem_applies"] = r.theorem_applies;
    j["weak_applies"] = r.weak_applies;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json certificate_to_json(const DesignCertificate& c) {
    json j;
    j["provenance"] = c.provenance;
    j["lambda"] = int_to_json(c.lambda);
    j["reverified"] = c.reverified;
    j["trivial_complete"] = c.trivial_complete;
    j["design"] = design_to_json(c.design);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(path + ": " + e.what());
    }
    return j;
}

}  // namespace qpm::io
