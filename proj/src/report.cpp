#include <hyperpath/report.hpp>

#include <cstdint>

namespace hyperpath {

using nlohmann::json;

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

json Report::to_json() const {
    json j;
    j["engine"] = kEngineVersion;
    j["command"] = command;
    json in = json::object();
    for (const auto& [name, digest] : inputs) in[name] = digest;
    j["inputs"] = in;
    j["field"] = field_name;
    j["truncation"] = truncation;
    j["result"] = payload;
    return j;
}

json betti_to_json(const BettiTable& t) {
    json j;
    j["label"] = t.label;
    j["field"] = t.field_name;
    j["max_dim"] = t.max_dim;
    j["length_bound"] = t.length_bound;
    j["dim_omega"] = t.dim_omega;
    j["rank_boundary"] = t.rank_boundary;
    j["betti"] = t.betti;
    return j;
}

json law_to_json(const LawReport& r) {
    json j;
    j["law"] = r.law;
    j["title"] = r.title;
    j["holds"] = r.holds;
    j["details"] = r.details;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

json matrix_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

json omega_to_json(const OmegaComplex& oc) {
    json dims = json::array();
    for (int n = 0; n <= oc.max_dim + 1; ++n) {
        json d;
        d["n"] = n;
        json basis_paths = json::array();
        for (const Path& p : oc.allowed[n]) basis_paths.push_back(path_str(p));
        d["allowed_paths"] = std::move(basis_paths);
        d["omega_basis"] = matrix_to_json(oc.omega_basis[n]);
        d["boundary"] = matrix_to_json(oc.boundary[n]);
        dims.push_back(std::move(d));
    }
    json j;
    j["dimensions"] = std::move(dims);
    return j;
}

} // namespace hyperpath
