#pragma once

// Spectral radius of a nonnegative symmetric tensor by the higher-order power
// method with Collatz-type bounds
//   min_i (B x^{m-1})_i / x_i^{m-1} <= rho(B) <= max_i (B x^{m-1})_i / x_i^{m-1}.

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "copos/tensor.hpp"

namespace copos {

struct PowerIterationState {
    Vector x;  // positive, unit l1 norm
    double lower = 0.0;
    double upper = 0.0;
    std::size_t iteration = 0;
};

struct SpectralResult {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t iterations = 0;
    Vector x;
    /// delta added as delta*E when the iteration met a zero component; rho is
    /// then the spectral radius of B + delta*E.
    double shift = 0.0;
};

struct SpectralOptions {
    double tolerance = 1e-8;
    std::size_t max_iterations = 10000;
    double reducible_shift = 1e-12;
};

/// Thrown when the bounds have not closed within the iteration budget.
class SpectralBudgetError : public std::runtime_error {
public:
    SpectralBudgetError(double lower, double upper, std::size_t iterations);
    double lower;
    double upper;
    std::size_t iterations;
};

using PowerObserver = std::function<void(const PowerIterationState&)>;

/// Throws DomainError for a negative entry or a nonpositive tolerance.
SpectralResult spectral_radius(const SymmetricTensor& b, const SpectralOptions& options = {},
                               const PowerObserver& observer = {});

}  // namespace copos
