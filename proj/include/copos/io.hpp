#pragma once

// JSON interchange formats. Indices in files are 1-based.
//
// tensor:     {"order": m, "dim": n, "entries": [{"idx": [i_1..i_m], "val": v}, ...]}
// polynomial: {"order": m, "dim": n, "monomials": [{"exponents": [a_1..a_n], "coeff": c}, ...]}
// verdict:    {"verdict": "copositive"|"not_copositive"|"undecided"|"sigma_certified",
//              "sigma": s, "tolerance": t, "iterations": k, "max_depth": d,
//              "witness": [..] | null, "min_vertex_value": v}
// spectral:   {"rho": r, "lower": l, "upper": u, "iterations": k}

#include <string>
#include <string_view>

#include "json.hpp"

#include "copos/detector.hpp"
#include "copos/instances.hpp"
#include "copos/prescreen.hpp"
#include "copos/spectral.hpp"
#include "copos/tensor.hpp"

namespace copos::io {

using nlohmann::json;

json tensor_to_json(const SymmetricTensor& a);
/// Throws ParseError on a schema violation or a duplicate canonical index.
SymmetricTensor tensor_from_json(const json& doc);

struct PolynomialDoc {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::vector<Monomial> monomials;
};

json polynomial_to_json(const PolynomialDoc& p);
PolynomialDoc polynomial_from_json(const json& doc);

/// Accepts either a tensor or a polynomial document.
SymmetricTensor read_tensor_document(const json& doc);
SymmetricTensor read_tensor_file(const std::string& path);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& doc);

json prescreen_to_json(const PrescreenReport& r);
json spectral_to_json(const SpectralResult& r);

/// Throws ParseError with the parser's message on malformed text.
json parse(std::string_view text);

}  // namespace copos::io
