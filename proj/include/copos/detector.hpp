#pragma once

// Simplicial branch-and-bound copositivity test.
//
// The search domain is the standard simplex. Each cell is tested in order:
//   1. some vertex u_i has A u_i^m < -tol          -> not copositive, witness u_i
//   2. all coefficients <A, u_i1 o ... o u_im> >= -sigma - tol
//                                                   -> cell certified, dropped
//   3. otherwise the cell is bisected along its longest edge.
// Cells are kept on a LIFO stack; the second child is processed first.

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "copos/simplex.hpp"
#include "copos/tensor.hpp"

namespace copos {

struct DetectorConfig {
    std::size_t max_iterations = 100;
    double tolerance = 1e-12;
    /// Accept cells whose coefficients are all >= -sigma; a Copositive
    /// outcome then only certifies A x^m >= -sigma on the simplex.
    double sigma = 0.0;
    /// Indeterminate cells with diameter below this end the run as Undecided.
    double min_diameter = 0.0;
    bool retain_certificate = false;

    /// Throws DomainError on a negative field or a zero iteration budget.
    void validate() const;
};

enum class VerdictKind { Copositive, SigmaCertified, NotCopositive, Undecided };

std::string_view to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    /// Relaxation level the verdict is stated for (0 for an exact run).
    double sigma = 0.0;
    double tolerance = 0.0;
    std::optional<Vector> witness;
    std::size_t iterations = 0;
    std::size_t max_depth = 0;
    /// Smallest A u^m over all cell vertices examined.
    double min_vertex_value = 0.0;
    std::optional<std::vector<Simplex>> certified_cells;
    double elapsed_seconds = 0.0;

    bool decided() const noexcept { return kind != VerdictKind::Undecided; }
};

namespace cell {
struct NegativeVertex {
    std::size_t vertex;
    double value;
};
struct Certified {
    double min_coefficient;
};
struct Indeterminate {
    double min_coefficient;
};
}  // namespace cell

using CellStatus = std::variant<cell::NegativeVertex, cell::Certified, cell::Indeterminate>;

CellStatus certify_cell(const SymmetricTensor& a, const Simplex& s, double sigma, double tolerance);

Verdict detect(const SymmetricTensor& a, const DetectorConfig& cfg = {});

/// Runs detect on A + sigma*E. A Copositive outcome is reported as
/// SigmaCertified: A x^m >= -sigma on the standard simplex. A NotCopositive
/// outcome carries a witness with A x^m < -sigma. `cfg.sigma` must be zero.
Verdict detect_with_relaxation(const SymmetricTensor& a, double sigma, const DetectorConfig& cfg = {});

/// x >= 0, sum x = 1 and A x^m < -tolerance.
bool verify_witness(const SymmetricTensor& a, std::span<const double> x, double tolerance);

/// Recomputes every retained cell's coefficient certificate.
bool recheck_certificate(const SymmetricTensor& a, std::span<const Simplex> cells, double sigma,
                         double tolerance);

struct StallDiagnostic {
    bool applicable = false;
    double min_vertex_value = 0.0;
    /// Vertex values came within `threshold` of zero without going negative:
    /// consistent with a copositive tensor that has a zero on the simplex.
    bool near_zero = false;
    double threshold = 0.0;
};

StallDiagnostic check_boundary_zero_stall(const SymmetricTensor& a, const Verdict& verdict,
                                          double threshold = 1e-2);

}  // namespace copos
