#include "facelim/report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "facelim/version.hpp"

namespace facelim {

ComplexDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "vertices" && key != "facets") throw InputError("unknown document field '" + key + "'");
    }
    if (!j.contains("vertices") || !j.contains("facets"))
        throw InputError("document needs 'vertices' and 'facets' fields");

    ComplexDocument doc;
    if (!j["vertices"].is_array()) throw InputError("'vertices' must be an array of strings");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("'vertices' must be an array of strings");
        doc.vertices.push_back(v.get<std::string>());
    }
    if (!j["facets"].is_array()) throw InputError("'facets' must be an array of arrays of strings");
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw InputError("'facets' must be an array of arrays of strings");
        std::vector<std::string> facet;
        for (const auto& v : f) {
            if (!v.is_string()) throw InputError("facet entries must be strings");
            facet.push_back(v.get<std::string>());
        }
        doc.facets.push_back(std::move(facet));
    }
    return doc;
}

ComplexDocument document_of(const SimplicialComplex& k) {
    ComplexDocument doc;
    doc.vertices = k.labels();
    for (const Face& f : k.facets()) {
        std::vector<std::string> facet;
        for (int v : f.vertices()) facet.push_back(k.labels()[v]);
        doc.facets.push_back(std::move(facet));
    }
    return doc;
}

SimplicialComplex to_complex(const ComplexDocument& doc) {
    return SimplicialComplex::from_facets(doc.vertices, doc.facets);
}

ComplexDocument normalize(const ComplexDocument& doc) {
    // round-trip through the complex: absorbs redundant facets and orders
    // everything canonically
    return document_of(to_complex(doc));
}

std::string serialize(const ComplexDocument& doc) {
    json j;
    j["vertices"] = doc.vertices;
    j["facets"] = doc.facets;
    return j.dump();
}

std::string digest(const ComplexDocument& doc) {
    std::string text = serialize(normalize(doc));
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

json make_report(const std::string& command, const ComplexDocument& doc, json result) {
    json report;
    report["command"] = command;
    report["input_digest"] = digest(doc);
    report["result"] = std::move(result);
    report["version"] = kVersion;
    return report;
}

}  // namespace facelim
