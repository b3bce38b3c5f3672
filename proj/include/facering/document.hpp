#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "facering/complex.hpp"

namespace facering {

/// On-disk form of a complex: {"name", "m", "facets", optional "metadata"}.
struct ComplexDocument {
    std::string name;
    int m = 0;
    std::vector<std::vector<int>> facets;
    nlohmann::ordered_json metadata;  // null when absent

    SimplicialComplex complex() const;
    static ComplexDocument from_complex(std::string name, const SimplicialComplex& k);

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Throws InputError naming the offending location.
ComplexDocument parse_document(const std::string& text, const std::string& source = "<input>");
ComplexDocument read_document(const std::filesystem::path& path);
std::string serialize_document(const ComplexDocument& doc);
nlohmann::ordered_json document_json(const ComplexDocument& doc);

} // namespace facering
