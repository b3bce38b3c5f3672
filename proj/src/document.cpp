#include "facering/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "facering/error.hpp"

namespace facering {

using nlohmann::ordered_json;

SimplicialComplex ComplexDocument::complex() const
{
    return SimplicialComplex::from_facets(m, facets);
}

ComplexDocument ComplexDocument::from_complex(std::string name, const SimplicialComplex& k)
{
    ComplexDocument doc{std::move(name), k.vertex_count(), {}, nullptr};
    for (Face f : k.facets())
        if (!f.empty())
            doc.facets.push_back(f.vertices());
    return doc;
}

ComplexDocument parse_document(const std::string& text, const std::string& source)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte));
    }
    if (!j.is_object())
        throw InputError(source + ": top level must be an object");
    ComplexDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw InputError(source + ": \"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw InputError(source + ": \"m\" must be an integer");
    const auto m = j["m"].get<long long>();
    if (m < 0 || m > max_vertices)
        throw InputError(source + ": \"m\" must lie in 0.." + std::to_string(max_vertices));
    doc.m = static_cast<int>(m);
    if (!j.contains("facets") || !j["facets"].is_array())
        throw InputError(source + ": \"facets\" must be an array");
    const auto& facets = j["facets"];
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string where = source + ": facets[" + std::to_string(i) + "]";
        if (!facets[i].is_array())
            throw InputError(where + " must be an array");
        std::vector<int> facet;
        for (std::size_t v = 0; v < facets[i].size(); ++v) {
            const auto& x = facets[i][v];
            if (!x.is_number_integer())
                throw InputError(where + "[" + std::to_string(v) + "] must be an integer");
            const auto label = x.get<long long>();
            if (label < 1 || label > doc.m)
                throw InputError(where + "[" + std::to_string(v) + "] = " + std::to_string(label) +
                                 " is outside 1.." + std::to_string(doc.m));
            if (std::find(facet.begin(), facet.end(), label) != facet.end())
                throw InputError(where + " repeats vertex " + std::to_string(label));
            facet.push_back(static_cast<int>(label));
        }
        doc.facets.push_back(std::move(facet));
    }
    if (j.contains("metadata"))
        doc.metadata = j["metadata"];
    try {
        (void)doc.complex();
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
    return doc;
}

ComplexDocument read_document(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path.string() + ": cannot open");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), path.string());
}

ordered_json document_json(const ComplexDocument& doc)
{
    ordered_json j;
    j["name"] = doc.name;
    j["m"] = doc.m;
    j["facets"] = doc.facets;
    if (!doc.metadata.is_null())
        j["metadata"] = doc.metadata;
    return j;
}

std::string serialize_document(const ComplexDocument& doc)
{
    // One facet per line keeps hand-edited corpora readable.
    std::string out = "{\n  \"name\": " + ordered_json(doc.name).dump() + ",\n  \"m\": " + std::to_string(doc.m) +
                      ",\n  \"facets\": [";
    for (std::size_t i = 0; i < doc.facets.size(); ++i)
        out += (i ? ",\n    " : "\n    ") + ordered_json(doc.facets[i]).dump();
    out += doc.facets.empty() ? "]" : "\n  ]";
    if (!doc.metadata.is_null())
        out += ",\n  \"metadata\": " + doc.metadata.dump();
    return out + "\n}\n";
}

} // namespace facering
