#include "copos/detector.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "copos/errors.hpp"
#include "copos/instances.hpp"

namespace copos {

namespace {

// Everything about A that every cell test reuses.
struct CellEvaluator {
    const SymmetricTensor& tensor;
    DenseTensor dense;
    std::vector<std::size_t> canonical_offsets;

    explicit CellEvaluator(const SymmetricTensor& a) : tensor(a), dense(to_dense(a)) {
        for (const auto& idx : canonical_indices(a.order(), a.dim())) {
            canonical_offsets.push_back(dense.offset(idx));
        }
    }

    // The minimum over canonical coefficients of V^T A V.
    double min_coefficient(const Simplex& s) const {
        const DenseTensor t = contract_all_modes(dense, s.vertices());
        double lo = std::numeric_limits<double>::infinity();
        for (auto off : canonical_offsets) lo = std::min(lo, t.data[off]);
        return lo;
    }

    CellStatus classify(const Simplex& s, double sigma, double tol, double& min_vertex) const {
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const double v = eval_form(tensor, s.vertex(i));
            min_vertex = std::min(min_vertex, v);
            if (v < -tol) return cell::NegativeVertex{i, v};
        }
        const double lo = min_coefficient(s);
        if (lo >= -sigma - tol) return cell::Certified{lo};
        return cell::Indeterminate{lo};
    }
};

void check_shape(const SymmetricTensor& a, const Simplex& s) {
    if (s.dim() != a.dim()) throw DomainError("simplex dimension does not match tensor dimension");
}

}  // namespace

void DetectorConfig::validate() const {
    if (max_iterations < 1) throw DomainError("max_iterations must be at least 1");
    if (!(tolerance >= 0.0)) throw DomainError("tolerance must be nonnegative");
    if (!(sigma >= 0.0)) throw DomainError("sigma must be nonnegative");
    if (!(min_diameter >= 0.0)) throw DomainError("min_diameter must be nonnegative");
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Copositive: return "copositive";
        case VerdictKind::SigmaCertified: return "sigma_certified";
        case VerdictKind::NotCopositive: return "not_copositive";
        case VerdictKind::Undecided: return "undecided";
    }
    return "undecided";
}

CellStatus certify_cell(const SymmetricTensor& a, const Simplex& s, double sigma, double tolerance) {
    if (!(sigma >= 0.0) || !(tolerance >= 0.0)) throw DomainError("sigma and tolerance must be nonnegative");
    check_shape(a, s);
    double min_vertex = std::numeric_limits<double>::infinity();
    return CellEvaluator(a).classify(s, sigma, tolerance, min_vertex);
}

Verdict detect(const SymmetricTensor& a, const DetectorConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const CellEvaluator evaluator(a);

    Verdict verdict;
    verdict.sigma = cfg.sigma;
    verdict.tolerance = cfg.tolerance;
    verdict.min_vertex_value = std::numeric_limits<double>::infinity();
    std::vector<Simplex> certified;

    auto finish = [&](VerdictKind kind) {
        verdict.kind = kind;
        if (kind == VerdictKind::Copositive && cfg.sigma > 0.0) verdict.kind = VerdictKind::SigmaCertified;
        if (cfg.retain_certificate && (kind == VerdictKind::Copositive)) {
            verdict.certified_cells = std::move(certified);
        }
        verdict.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return verdict;
    };

    PartitionFrontier frontier;
    frontier.push(standard_simplex(a.dim()));
    while (!frontier.empty()) {
        if (verdict.iterations == cfg.max_iterations) return finish(VerdictKind::Undecided);
        Simplex s = *frontier.pop();
        ++verdict.iterations;
        verdict.max_depth = std::max(verdict.max_depth, s.depth());

        const CellStatus status = evaluator.classify(s, cfg.sigma, cfg.tolerance, verdict.min_vertex_value);
        if (const auto* neg = std::get_if<cell::NegativeVertex>(&status)) {
            verdict.witness = s.vertex(neg->vertex);
            return finish(VerdictKind::NotCopositive);
        }
        if (std::holds_alternative<cell::Certified>(status)) {
            if (cfg.retain_certificate) certified.push_back(std::move(s));
            continue;
        }
        if (diameter(s) < cfg.min_diameter) return finish(VerdictKind::Undecided);
        auto [first, second] = bisect_longest_edge(s);
        frontier.push(std::move(first));
        frontier.push(std::move(second));
    }
    return finish(VerdictKind::Copositive);
}

Verdict detect_with_relaxation(const SymmetricTensor& a, double sigma, const DetectorConfig& cfg) {
    if (!(sigma > 0.0)) throw DomainError("relaxation sigma must be positive");
    if (cfg.sigma != 0.0) throw DomainError("detect_with_relaxation: cfg.sigma must be zero");
    const SymmetricTensor shifted = add(a, scale(sigma, ones_tensor(a.order(), a.dim())));
    Verdict v = detect(shifted, cfg);
    v.sigma = sigma;
    if (v.kind == VerdictKind::Copositive) v.kind = VerdictKind::SigmaCertified;
    // E u^m = 1 on the simplex, so vertex values of A are those of A + sigma*E shifted down.
    v.min_vertex_value -= sigma;
    return v;
}

bool verify_witness(const SymmetricTensor& a, std::span<const double> x, double tolerance) {
    if (x.size() != a.dim()) return false;
    double sum = 0.0;
    for (double c : x) {
        if (!(c >= 0.0)) return false;
        sum += c;
    }
    if (std::fabs(sum - 1.0) > kVertexTolerance) return false;
    return eval_form(a, x) < -tolerance;
}

bool recheck_certificate(const SymmetricTensor& a, std::span<const Simplex> cells, double sigma,
                         double tolerance) {
    const CellEvaluator evaluator(a);
    for (const auto& s : cells) {
        if (s.dim() != a.dim()) return false;
        if (evaluator.min_coefficient(s) < -sigma - tolerance) return false;
    }
    return true;
}

StallDiagnostic check_boundary_zero_stall(const SymmetricTensor& a, const Verdict& verdict, double threshold) {
    StallDiagnostic d;
    d.threshold = threshold * (1.0 + frobenius_norm(a));
    if (verdict.kind != VerdictKind::Undecided) return d;
    d.applicable = true;
    d.min_vertex_value = verdict.min_vertex_value;
    d.near_zero = verdict.min_vertex_value >= -verdict.tolerance && verdict.min_vertex_value <= d.threshold;
    return d;
}

}  // namespace copos
