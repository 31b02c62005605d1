#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcp/factored_poly.hpp"

namespace hcp {

/// Serializable view of a factored characteristic polynomial. All big integers
/// travel as decimal strings; factor coefficient lists run low degree to high.
struct OutputDocument {
    std::string kind = "factored";  // "factored" | "report"
    int k = 0;
    std::string lambda_exponent;
    struct Factor {
        std::vector<std::string> poly_t;  // coefficients of the t-polynomial
        std::string exponent;
    };
    std::vector<Factor> factors;  // sorted by degree, then coefficients
    std::string total_degree;
    std::string family;                   // metadata
    std::vector<std::string> parameters;  // metadata
    std::string tool_version;             // metadata
    struct Verification {
        std::string lambda0;
        std::string formula_value;
        std::string oracle_value;
        bool equal = false;
    };
    std::vector<Verification> verifications;  // present on kind == "report"
    std::vector<std::string> notes;

    bool operator==(const OutputDocument&) const = default;
};

OutputDocument make_document(const FactoredCharPoly& f, const std::string& family,
                             const std::vector<std::string>& parameters);

std::string to_json(const OutputDocument& doc);
OutputDocument from_json(const std::string& json_text);

/// Reconstructs the factored polynomial (e.g. for round-trip checks).
FactoredCharPoly document_to_poly(const OutputDocument& doc);

/// "λ^35 · (λ^3-1)^6 · (λ^3-2)^9" -- t expanded back to lambda^k.
std::string render_text(const FactoredCharPoly& f);
/// "\lambda^{35}(\lambda^{3}-1)^{6}(\lambda^{3}-2)^{9}"
std::string render_latex(const FactoredCharPoly& f);

extern const char* const kToolVersion;

}  // namespace hcp
