#include "copos/io.hpp"

#include <fstream>
#include <sstream>

#include "copos/errors.hpp"

namespace copos::io {

namespace {

std::size_t positive_size(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    }
    const auto v = doc[key].get<long long>();
    if (v < 1) throw ParseError(std::string("field \"") + key + "\" must be positive");
    return static_cast<std::size_t>(v);
}

const json& array_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw ParseError(std::string("missing or non-array field \"") + key + "\"");
    }
    return doc[key];
}

double number(const json& v, const char* what) {
    if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
    return v.get<double>();
}

std::vector<double> number_array(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& x : v) out.push_back(number(x, what));
    return out;
}

json vector_json(const Vector& x) { return json(x); }

}  // namespace

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

json tensor_to_json(const SymmetricTensor& a) {
    json entries = json::array();
    for (const auto& e : a.entries()) {
        std::vector<std::size_t> one_based(e.index);
        for (auto& i : one_based) ++i;
        entries.push_back({{"idx", one_based}, {"val", e.value}});
    }
    return {{"order", a.order()}, {"dim", a.dim()}, {"entries", entries}};
}

SymmetricTensor tensor_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("tensor document must be an object");
    const std::size_t order = positive_size(doc, "order");
    const std::size_t dim = positive_size(doc, "dim");
    std::vector<TensorEntry> entries;
    for (const auto& e : array_field(doc, "entries")) {
        if (!e.is_object() || !e.contains("idx") || !e.contains("val")) {
            throw ParseError("tensor entry needs \"idx\" and \"val\"");
        }
        const json& idx = e["idx"];
        if (!idx.is_array() || idx.size() != order) {
            throw ParseError("entry idx must be an array of length " + std::to_string(order));
        }
        MultiIndex index;
        for (const auto& i : idx) {
            if (!i.is_number_integer()) throw ParseError("entry idx components must be integers");
            const auto v = i.get<long long>();
            if (v < 1 || static_cast<std::size_t>(v) > dim) {
                throw ParseError("entry idx component " + std::to_string(v) + " outside 1.." + std::to_string(dim));
            }
            index.push_back(static_cast<std::size_t>(v - 1));
        }
        entries.push_back(TensorEntry{std::move(index), number(e["val"], "entry val")});
    }
    try {
        return SymmetricTensor(order, dim, std::move(entries));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json polynomial_to_json(const PolynomialDoc& p) {
    json monos = json::array();
    for (const auto& m : p.monomials) monos.push_back({{"exponents", m.exponents}, {"coeff", m.coefficient}});
    return {{"order", p.order}, {"dim", p.dim}, {"monomials", monos}};
}

PolynomialDoc polynomial_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial document must be an object");
    PolynomialDoc p;
    p.order = positive_size(doc, "order");
    p.dim = positive_size(doc, "dim");
    for (const auto& m : array_field(doc, "monomials")) {
        if (!m.is_object() || !m.contains("exponents") || !m.contains("coeff")) {
            throw ParseError("monomial needs \"exponents\" and \"coeff\"");
        }
        Monomial mono;
        for (const auto& e : m["exponents"]) {
            if (!e.is_number_integer() || e.get<long long>() < 0) {
                throw ParseError("exponents must be nonnegative integers");
            }
            mono.exponents.push_back(e.get<std::size_t>());
        }
        mono.coefficient = number(m["coeff"], "monomial coeff");
        p.monomials.push_back(std::move(mono));
    }
    return p;
}

SymmetricTensor read_tensor_document(const json& doc) {
    if (doc.is_object() && doc.contains("monomials")) {
        const PolynomialDoc p = polynomial_from_json(doc);
        try {
            return from_polynomial(p.order, p.dim, p.monomials);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return tensor_from_json(doc);
}

SymmetricTensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_tensor_document(parse(buf.str()));
}

json verdict_to_json(const Verdict& v) {
    json out = {{"verdict", std::string(to_string(v.kind))},
                {"sigma", v.sigma},
                {"tolerance", v.tolerance},
                {"iterations", v.iterations},
                {"max_depth", v.max_depth},
                {"witness", v.witness ? vector_json(*v.witness) : json(nullptr)},
                {"min_vertex_value", v.min_vertex_value}};
    if (v.certified_cells) {
        json cells = json::array();
        for (const auto& s : *v.certified_cells) cells.push_back(s.vertices());
        out["certified_cells"] = cells;
    }
    return out;
}

Verdict verdict_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("verdict document must be an object");
    Verdict v;
    const std::string kind = doc.value("verdict", "");
    if (kind == "copositive") {
        v.kind = VerdictKind::Copositive;
    } else if (kind == "sigma_certified") {
        v.kind = VerdictKind::SigmaCertified;
    } else if (kind == "not_copositive") {
        v.kind = VerdictKind::NotCopositive;
    } else if (kind == "undecided") {
        v.kind = VerdictKind::Undecided;
    } else {
        throw ParseError("unknown verdict \"" + kind + "\"");
    }
    for (const char* key : {"sigma", "tolerance", "iterations", "max_depth", "witness", "min_vertex_value"}) {
        if (!doc.contains(key)) throw ParseError(std::string("verdict is missing \"") + key + "\"");
    }
    v.sigma = number(doc["sigma"], "sigma");
    v.tolerance = number(doc["tolerance"], "tolerance");
    v.iterations = doc["iterations"].get<std::size_t>();
    v.max_depth = doc["max_depth"].get<std::size_t>();
    if (!doc["witness"].is_null()) v.witness = number_array(doc["witness"], "witness");
    v.min_vertex_value = number(doc["min_vertex_value"], "min_vertex_value");
    if (doc.contains("certified_cells")) {
        std::vector<Simplex> cells;
        for (const auto& c : doc["certified_cells"]) {
            std::vector<Vector> vertices;
            for (const auto& u : c) vertices.push_back(number_array(u, "cell vertex"));
            cells.emplace_back(std::move(vertices));
        }
        v.certified_cells = std::move(cells);
    }
    return v;
}

json prescreen_to_json(const PrescreenReport& r) {
    json out = {{"passed", r.passed}};
    out["violated_condition"] =
        r.violated_condition ? json(std::string(to_string(*r.violated_condition))) : json(nullptr);
    out["witness"] = r.witness ? vector_json(*r.witness) : json(nullptr);
    out["witness_pair"] =
        r.witness_pair ? json::array({vector_json(r.witness_pair->first), vector_json(r.witness_pair->second)})
                       : json(nullptr);
    if (r.subset) {
        std::vector<std::size_t> one_based(*r.subset);
        for (auto& i : one_based) ++i;
        out["J"] = one_based;
    } else {
        out["J"] = nullptr;
    }
    if (r.gradient_index) out["gradient_index"] = *r.gradient_index + 1;
    if (r.descent_point) out["descent_point"] = vector_json(*r.descent_point);
    if (!r.passed) out["value"] = r.value;
    return out;
}

json spectral_to_json(const SpectralResult& r) {
    json out = {{"rho", r.rho}, {"lower", r.lower}, {"upper", r.upper}, {"iterations", r.iterations}};
    if (r.shift != 0.0) out["shift"] = r.shift;
    return out;
}

}  // namespace copos::io
