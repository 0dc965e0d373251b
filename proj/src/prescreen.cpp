#include "copos/prescreen.hpp"

#include <cmath>
#include <string>

#include "copos/errors.hpp"

namespace copos {

namespace {

// Compositions of `total` into r parts, each >= min_part, lexicographic.
void compositions(std::size_t r, std::size_t total, std::size_t min_part, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == r) {
        if (total >= min_part) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    const std::size_t remaining_parts = r - cur.size() - 1;
    for (std::size_t k = min_part; k + remaining_parts * min_part <= total; ++k) {
        cur.push_back(k);
        compositions(r, total - k, min_part, cur, out);
        cur.pop_back();
    }
}

std::vector<Vector> lattice(std::size_t r, std::size_t denominator, std::size_t min_part) {
    if (r == 0 || denominator == 0) throw DomainError("lattice needs a positive size and denominator");
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    compositions(r, denominator, min_part, cur, parts);
    std::vector<Vector> out;
    out.reserve(parts.size());
    for (const auto& k : parts) {
        Vector x(r);
        for (std::size_t i = 0; i < r; ++i) x[i] = static_cast<double>(k[i]) / static_cast<double>(denominator);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::string_view to_string(PrescreenCondition c) {
    switch (c) {
        case PrescreenCondition::Diagonal: return "diagonal";
        case PrescreenCondition::ZeroPointGradient: return "zero_point_gradient";
        case PrescreenCondition::SubtensorSample: return "subtensor_sample";
        case PrescreenCondition::Pencil: return "pencil";
    }
    return "diagonal";
}

std::vector<Vector> interior_lattice(std::size_t r, std::size_t denominator) { return lattice(r, denominator, 1); }

std::vector<Vector> simplex_lattice(std::size_t r, std::size_t denominator) { return lattice(r, denominator, 0); }

PrescreenReport diagonal_check(const SymmetricTensor& a, double tolerance) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a.entry(MultiIndex(a.order(), i));
        if (d < -tolerance) {
            PrescreenReport r;
            r.passed = false;
            r.violated_condition = PrescreenCondition::Diagonal;
            r.witness = Vector(a.dim(), 0.0);
            (*r.witness)[i] = 1.0;
            r.value = d;
            return r;
        }
    }
    return PrescreenReport::pass();
}

PrescreenReport zero_point_gradient_check(const SymmetricTensor& a, std::span<const double> x,
                                          double tolerance) {
    if (x.size() != a.dim()) throw DomainError("zero_point_gradient_check: dimension mismatch");
    double sum = 0.0;
    for (double c : x) {
        if (!(c >= 0.0)) throw DomainError("zero_point_gradient_check: point must be nonnegative");
        sum += c;
    }
    if (!(sum > 0.0)) throw DomainError("zero_point_gradient_check: point must be nonzero");
    Vector z(x.begin(), x.end());
    for (auto& c : z) c /= sum;

    const double f = eval_form(a, z);
    if (std::fabs(f) > tolerance) {
        throw PreconditionError("zero_point_gradient_check: A x^m = " + std::to_string(f) + " is not zero");
    }
    const Vector g = eval_gradient_form(a, z);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= -tolerance) continue;
        PrescreenReport r;
        r.passed = false;
        r.violated_condition = PrescreenCondition::ZeroPointGradient;
        r.witness = z;
        r.gradient_index = i;
        r.value = g[i];
        // A(z + t e_i)^m = m t (A z^{m-1})_i + O(t^2) < 0 for small t > 0.
        for (double t = 0.5; t > 1e-12; t *= 0.5) {
            Vector y = z;
            y[i] += t;
            for (auto& c : y) c /= 1.0 + t;
            if (eval_form(a, y) < -tolerance) {
                r.descent_point = std::move(y);
                break;
            }
        }
        return r;
    }
    return PrescreenReport::pass();
}

PrescreenReport subtensor_sample_refute(const SymmetricTensor& a, std::span<const std::size_t> subset,
                                        std::size_t grid_depth, double tolerance) {
    if (subset.empty()) throw DomainError("subtensor_sample_refute: index set is empty");
    if (grid_depth == 0) throw DomainError("subtensor_sample_refute: grid depth must be positive");
    const SymmetricTensor sub = principal_subtensor(a, subset);
    for (const auto& x : interior_lattice(subset.size(), grid_depth * subset.size())) {
        const double v = eval_form(sub, x);
        if (v < -tolerance) {
            PrescreenReport r;
            r.passed = false;
            r.violated_condition = PrescreenCondition::SubtensorSample;
            r.witness = Vector(a.dim(), 0.0);
            for (std::size_t k = 0; k < subset.size(); ++k) (*r.witness)[subset[k]] = x[k];
            r.subset = std::vector<std::size_t>(subset.begin(), subset.end());
            r.value = v;
            return r;
        }
    }
    return PrescreenReport::pass();
}

std::vector<std::pair<Vector, Vector>> lattice_pairs(std::size_t n, std::size_t depth) {
    const auto points = simplex_lattice(n, depth);
    std::vector<std::pair<Vector, Vector>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i; j < points.size(); ++j) out.emplace_back(points[i], points[j]);
    }
    return out;
}

PrescreenReport pencil_refute(const SymmetricTensor& a, const SymmetricTensor& b,
                              std::span<const std::pair<Vector, Vector>> samples, double tolerance) {
    if (!a.same_shape(b)) throw DomainError("pencil_refute: tensor shapes differ");
    for (const auto& [u, v] : samples) {
        const double sa = eval_form(a, u) + eval_form(a, v);
        if (sa >= -tolerance) continue;
        const double sb = eval_form(b, u) + eval_form(b, v);
        if (sb >= -tolerance) continue;
        PrescreenReport r;
        r.passed = false;
        r.violated_condition = PrescreenCondition::Pencil;
        r.witness_pair = std::make_pair(u, v);
        r.value = std::max(sa, sb);
        return r;
    }
    return PrescreenReport::pass();
}

PrescreenReport run_prescreen(const SymmetricTensor& a, const PrescreenOptions& options) {
    if (auto r = diagonal_check(a, options.tolerance); !r.passed) return r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const std::size_t single[] = {i};
        if (auto r = subtensor_sample_refute(a, single, options.grid_depth, options.tolerance); !r.passed) return r;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const std::size_t pair[] = {i, j};
            if (auto r = subtensor_sample_refute(a, pair, options.grid_depth, options.tolerance); !r.passed) {
                return r;
            }
        }
    }
    if (options.zero_point) return zero_point_gradient_check(a, *options.zero_point, options.tolerance);
    return PrescreenReport::pass();
}

}  // namespace copos
