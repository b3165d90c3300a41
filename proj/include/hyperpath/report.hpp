#pragma once

#include <hyperpath/laws.hpp>
#include <hyperpath/omega.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperpath {

inline constexpr const char* kEngineVersion = "hyperpath 0.1.0";

// FNV-1a over the raw bytes; stable across platforms.
std::string digest_hex(const std::string& bytes);

// Machine-readable result envelope. Serialization sorts object keys, so a
// report is byte-identical across runs with the same inputs and flags.
struct Report {
    std::vector<std::string> command;
    std::vector<std::pair<std::string, std::string>> inputs; // name -> digest
    std::string field_name = "Q";
    int truncation = 0;
    nlohmann::json payload;

    nlohmann::json to_json() const;
    std::string to_string() const { return to_json().dump(2) + "\n"; }
};

nlohmann::json betti_to_json(const BettiTable& t);
nlohmann::json law_to_json(const LawReport& r);
nlohmann::json matrix_to_json(const DenseMatrix& m);
nlohmann::json omega_to_json(const OmegaComplex& oc);

} // namespace hyperpath
