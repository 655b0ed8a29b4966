#pragma once

#include "core/assemble.hpp"
#include "core/form_sum.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace csforge {

/// The serializable view of a potential: what the JSON schema carries.
/// Provenance is kept as a JSON fragment so documents loaded from disk
/// round-trip byte-identically even though we only interpret dimension and
/// terms.
struct OutputDocument {
    int dimension = 0;
    FormSum terms;
    bool verified = false;
    nlohmann::ordered_json provenance = nlohmann::ordered_json::array();
    std::string toolVersion;
};

OutputDocument documentFor(const CsPotential& pot, std::optional<bool> verified);

/// Factored plain-text rendering, e.g.
///   w ( (dw)^2 + 3/2 (dw) w^2 + 3/5 w^4 )
std::string renderText(const FormSum& sum);

/// Factored LaTeX rendering, e.g.
///   \omega\wedge\big((\mathrm{d}\omega)^2 + \tfrac{3}{2}(\mathrm{d}\omega)\wedge\omega^2 + \tfrac{3}{5}\omega^4\big)
std::string renderLatex(const FormSum& sum);

/// Deterministic JSON (schemaVersion 1); no trailing newline.
std::string renderJson(const OutputDocument& doc);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a schemaVersion-1 document. Unknown schema, bad dimensions, or
/// malformed terms raise ParseError with the offending term's index.
OutputDocument parseJson(const std::string& text);

} // namespace csforge
