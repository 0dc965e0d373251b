#pragma once

// Necessary-condition refuters run before branch and bound. A failed check
// proves that the tensor is not copositive; a pass proves nothing.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "copos/tensor.hpp"

namespace copos {

enum class PrescreenCondition { Diagonal, ZeroPointGradient, SubtensorSample, Pencil };

std::string_view to_string(PrescreenCondition c);

struct PrescreenReport {
    bool passed = true;
    std::optional<PrescreenCondition> violated_condition;
    /// Diagonal / SubtensorSample: a point of the standard simplex with
    /// A x^m < -tol. ZeroPointGradient: the zero point x itself.
    std::optional<Vector> witness;
    /// Pencil: (u, v) with A u^m + A v^m < -tol and B u^m + B v^m < -tol.
    std::optional<std::pair<Vector, Vector>> witness_pair;
    /// SubtensorSample: the index set J that was sampled.
    std::optional<std::vector<std::size_t>> subset;
    /// ZeroPointGradient: i with (A x^{m-1})_i < -tol, and, when one was found
    /// by stepping from x along e_i, a point with a negative form value.
    std::optional<std::size_t> gradient_index;
    std::optional<Vector> descent_point;
    /// The offending value (form value, gradient component, or larger pencil sum).
    double value = 0.0;

    static PrescreenReport pass() { return {}; }
};

PrescreenReport diagonal_check(const SymmetricTensor& a, double tolerance = 1e-12);

/// x must be nonnegative and nonzero; it is rescaled to unit l1 norm. Throws
/// PreconditionError unless |A x^m| <= tolerance after rescaling.
PrescreenReport zero_point_gradient_check(const SymmetricTensor& a, std::span<const double> x,
                                          double tolerance = 1e-12);

/// Points with positive integer coordinates k_1..k_r summing to D, divided
/// by D, in lexicographic order of k. These are the relative-interior points
/// of the lattice with denominator D on an r-vertex simplex.
std::vector<Vector> interior_lattice(std::size_t r, std::size_t denominator);

/// All points k/D with nonnegative integer k summing to D.
std::vector<Vector> simplex_lattice(std::size_t r, std::size_t denominator);

/// Samples A_J on the relative interior of the face spanned by J, using the
/// lattice with denominator grid_depth * |J| (so depth 1 samples exactly the
/// face centroid). The first sample with a negative value is returned embedded
/// in n-space. J must be nonempty, strictly increasing and in range.
PrescreenReport subtensor_sample_refute(const SymmetricTensor& a, std::span<const std::size_t> subset,
                                        std::size_t grid_depth, double tolerance = 1e-12);

/// Pairs (u, v), u before or equal to v, from simplex_lattice(n, depth).
std::vector<std::pair<Vector, Vector>> lattice_pairs(std::size_t n, std::size_t depth);

/// Fails if some sample has both pencil sums below -tolerance; no convex
/// combination of A and B can then be copositive.
PrescreenReport pencil_refute(const SymmetricTensor& a, const SymmetricTensor& b,
                              std::span<const std::pair<Vector, Vector>> samples, double tolerance = 1e-12);

struct PrescreenOptions {
    std::size_t grid_depth = 4;
    double tolerance = 1e-12;
    /// A known zero of the form on the simplex, enabling the gradient check.
    std::optional<Vector> zero_point;
};

/// Diagonal, then subtensor sampling on every singleton and pair, then the
/// zero-point gradient check if a zero point is supplied. Stops at the first
/// failure.
PrescreenReport run_prescreen(const SymmetricTensor& a, const PrescreenOptions& options = {});

}  // namespace copos
