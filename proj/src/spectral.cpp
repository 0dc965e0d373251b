#include "copos/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "copos/errors.hpp"
#include "copos/instances.hpp"

namespace copos {

SpectralBudgetError::SpectralBudgetError(double lo, double up, std::size_t its)
    : std::runtime_error("power method did not converge in " + std::to_string(its) +
                         " iterations; bounds [" + std::to_string(lo) + ", " + std::to_string(up) + "]"),
      lower(lo),
      upper(up),
      iterations(its) {}

namespace {

// nullopt when some (B x^{m-1})_i is zero, i.e. the tensor looks reducible.
std::optional<SpectralResult> iterate(const SymmetricTensor& b, const SpectralOptions& opt,
                                      const PowerObserver& observer) {
    const std::size_t n = b.dim();
    const double power = static_cast<double>(b.order() - 1);
    PowerIterationState state;
    state.x.assign(n, 1.0 / static_cast<double>(n));
    for (state.iteration = 1; state.iteration <= opt.max_iterations; ++state.iteration) {
        const Vector y = eval_gradient_form(b, state.x);
        state.lower = std::numeric_limits<double>::infinity();
        state.upper = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!(y[i] > 0.0)) return std::nullopt;
            const double ratio = y[i] / std::pow(state.x[i], power);
            state.lower = std::min(state.lower, ratio);
            state.upper = std::max(state.upper, ratio);
        }
        if (observer) observer(state);
        if (state.upper - state.lower < opt.tolerance) {
            return SpectralResult{0.5 * (state.lower + state.upper), state.lower, state.upper, state.iteration,
                                  state.x, 0.0};
        }
        Vector next(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = std::pow(y[i], 1.0 / power);
            norm += next[i];
        }
        for (auto& c : next) c /= norm;
        state.x = std::move(next);
    }
    throw SpectralBudgetError(state.lower, state.upper, opt.max_iterations);
}

}  // namespace

SpectralResult spectral_radius(const SymmetricTensor& b, const SpectralOptions& options,
                               const PowerObserver& observer) {
    if (!(options.tolerance > 0.0)) throw DomainError("spectral_radius: tolerance must be positive");
    if (b.order() < 2) throw DomainError("spectral_radius: order must be at least 2");
    for (const auto& e : b.entries()) {
        if (e.value < 0.0) throw DomainError("spectral_radius: tensor has a negative entry");
    }
    if (auto r = iterate(b, options, observer)) return *r;
    const SymmetricTensor shifted = add(b, scale(options.reducible_shift, ones_tensor(b.order(), b.dim())));
    auto r = iterate(shifted, options, observer);
    if (!r) throw DomainError("spectral_radius: iteration hit a zero component after shifting");
    r->shift = options.reducible_shift;
    return *r;
}

}  // namespace copos
