#ifndef FACELIM_REPORT_HPP
#define FACELIM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "facelim/simplicial.hpp"

namespace facelim {

using json = nlohmann::ordered_json;

/// Wire format of a complex: vertex labels plus facet label lists. Unknown
/// fields are rejected.
struct ComplexDocument {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> facets;
};

ComplexDocument parse_document(const std::string& text);
ComplexDocument document_of(const SimplicialComplex& k);

SimplicialComplex to_complex(const ComplexDocument& doc);

/// Facets sorted canonically, labels within each facet in vertex order.
/// Vertex order is preserved (it fixes the variable ordering).
ComplexDocument normalize(const ComplexDocument& doc);

std::string serialize(const ComplexDocument& doc);

/// Hex digest of the normalized serialization (64-bit FNV-1a).
std::string digest(const ComplexDocument& doc);

/// Report envelope shared by every CLI subcommand.
json make_report(const std::string& command, const ComplexDocument& doc, json result);

}  // namespace facelim

#endif
