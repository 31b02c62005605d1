#include "hcp/output.hpp"

#include <json.hpp>

#include <sstream>

namespace hcp {

const char* const kToolVersion = "1.0.0";

using nlohmann::json;

OutputDocument make_document(const FactoredCharPoly& f, const std::string& family,
                             const std::vector<std::string>& parameters) {
    OutputDocument doc;
    doc.k = f.k();
    doc.lambda_exponent = f.lambda_exponent().get_str();
    for (const auto& [poly, e] : f.factors()) {  // map order = degree, then coefficients
        OutputDocument::Factor fac;
        for (int d = 0; d <= poly.degree(); ++d) fac.poly_t.push_back(poly.coeff(d).get_str());
        fac.exponent = e.get_str();
        doc.factors.push_back(std::move(fac));
    }
    doc.total_degree = f.total_degree().get_str();
    doc.family = family;
    doc.parameters = parameters;
    doc.tool_version = kToolVersion;
    return doc;
}

std::string to_json(const OutputDocument& doc) {
    json j;
    j["kind"] = doc.kind;
    j["k"] = doc.k;
    j["lambda_exponent"] = doc.lambda_exponent;
    j["factors"] = json::array();
    for (const auto& f : doc.factors) {
        j["factors"].push_back({{"poly_t", f.poly_t}, {"exponent", f.exponent}});
    }
    j["total_degree"] = doc.total_degree;
    j["metadata"] = {{"family", doc.family},
                     {"parameters", doc.parameters},
                     {"tool_version", doc.tool_version}};
    if (!doc.verifications.empty()) {
        j["verification"] = json::array();
        for (const auto& v : doc.verifications) {
            j["verification"].push_back({{"lambda", v.lambda0},
                                         {"formula_value", v.formula_value},
                                         {"oracle_value", v.oracle_value},
                                         {"equal", v.equal}});
        }
    }
    if (!doc.notes.empty()) j["notes"] = doc.notes;
    return j.dump(2) + "\n";
}

OutputDocument from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    OutputDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.k = j.at("k").get<int>();
    doc.lambda_exponent = j.at("lambda_exponent").get<std::string>();
    for (const auto& f : j.at("factors")) {
        OutputDocument::Factor fac;
        fac.poly_t = f.at("poly_t").get<std::vector<std::string>>();
        fac.exponent = f.at("exponent").get<std::string>();
        doc.factors.push_back(std::move(fac));
    }
    doc.total_degree = j.at("total_degree").get<std::string>();
    const auto& meta = j.at("metadata");
    doc.family = meta.at("family").get<std::string>();
    doc.parameters = meta.at("parameters").get<std::vector<std::string>>();
    doc.tool_version = meta.at("tool_version").get<std::string>();
    if (j.contains("verification")) {
        for (const auto& v : j.at("verification")) {
            OutputDocument::Verification ver;
            ver.lambda0 = v.at("lambda").get<std::string>();
            ver.formula_value = v.at("formula_value").get<std::string>();
            ver.oracle_value = v.at("oracle_value").get<std::string>();
            ver.equal = v.at("equal").get<bool>();
            doc.verifications.push_back(std::move(ver));
        }
    }
    if (j.contains("notes")) doc.notes = j.at("notes").get<std::vector<std::string>>();
    return doc;
}

FactoredCharPoly document_to_poly(const OutputDocument& doc) {
    FactoredCharPoly f(doc.k);
    f.mul_lambda_power(Int(doc.lambda_exponent));
    for (const auto& fac : doc.factors) {
        std::vector<Int> coeffs;
        coeffs.reserve(fac.poly_t.size());
        for (const auto& c : fac.poly_t) coeffs.emplace_back(c);
        f.mul_tpoly(TPoly::from_coeffs(coeffs), Int(fac.exponent));
    }
    f.finalize();
    return f;
}

namespace {

std::string lambda_factor(const TPoly& poly, int k, bool latex) {
    std::ostringstream os;
    bool first = true;
    for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
        const auto& [d, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        const int lam_deg = d * k;
        if (mag != 1 || lam_deg == 0) os << mag.get_str();
        if (lam_deg >= 1) {
            os << (latex ? "\\lambda" : u8"λ");
            if (lam_deg > 1) {
                if (latex) {
                    os << "^{" << lam_deg << "}";
                } else {
                    os << "^" << lam_deg;
                }
            }
        }
    }
    return os.str();
}

}  // namespace

std::string render_text(const FactoredCharPoly& f) {
    std::ostringstream os;
    bool first = true;
    if (f.lambda_exponent() != 0 || f.factors().empty()) {
        os << u8"λ";
        if (f.lambda_exponent() != 1) os << "^" << f.lambda_exponent().get_str();
        first = false;
    }
    for (const auto& [poly, e] : f.factors()) {
        if (!first) os << u8" · ";
        first = false;
        os << "(" << lambda_factor(poly, f.k(), false) << ")";
        if (e != 1) os << "^" << e.get_str();
    }
    if (first) os << "1";
    return os.str();
}

std::string render_latex(const FactoredCharPoly& f) {
    std::ostringstream os;
    bool first = true;
    if (f.lambda_exponent() != 0 || f.factors().empty()) {
        os << "\\lambda";
        if (f.lambda_exponent() != 1) os << "^{" << f.lambda_exponent().get_str() << "}";
        first = false;
    }
    for (const auto& [poly, e] : f.factors()) {
        first = false;
        os << "(" << lambda_factor(poly, f.k(), true) << ")";
        if (e != 1) os << "^{" << e.get_str() << "}";
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace hcp
