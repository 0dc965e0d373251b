#pragma once

// Test tensor families: identity, all-ones, eta-shifts, seeded random
// tensors, and tensors of homogeneous polynomials.

#include <cstdint>
#include <vector>

#include "copos/tensor.hpp"

namespace copos {

SymmetricTensor identity_tensor(std::size_t order, std::size_t dim);
SymmetricTensor ones_tensor(std::size_t order, std::size_t dim);

/// eta*I - B.
SymmetricTensor eta_shift(double eta, const SymmetricTensor& b);

/// Counter-based generator: draw k of stream `seed` is splitmix64's finalizer
/// applied to seed + (k + 1) * 0x9E3779B97F4A7C15. Results are independent of
/// platform and of the order in which draws are requested.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t k) const noexcept;

    /// Uniform on the open interval (0, 1): ((bits >> 11) + 0.5) * 2^-53.
    double uniform_open(std::uint64_t k) const noexcept;

private:
    std::uint64_t seed_;
};

/// Canonical entry k (lexicographic order) is CounterRng(seed).uniform_open(k).
SymmetricTensor random_tensor(std::size_t order, std::size_t dim, std::uint64_t seed);

/// random_tensor with the entry a_{1...1} replaced by -1.
SymmetricTensor random_tensor_negative_corner(std::size_t order, std::size_t dim, std::uint64_t seed);

struct Monomial {
    std::vector<std::size_t> exponents;  // one per variable, summing to the order
    double coefficient = 0.0;
};

/// The symmetric tensor whose form is the given polynomial: each monomial's
/// coefficient is split equally over the distinct index permutations of its
/// exponent multiset. Throws DomainError on an exponent-sum mismatch, a wrong
/// exponent-vector length, or a repeated exponent vector.
SymmetricTensor from_polynomial(std::size_t order, std::size_t dim, const std::vector<Monomial>& monomials);

/// x^4 y^2 + x^2 y^4 + z^6 - 3 x^2 y^2 z^2
SymmetricTensor motzkin_tensor();
/// x^6 + y^6 + z^6 - (x^4 y^2 + x^2 y^4 + x^4 z^2 + x^2 z^4 + y^4 z^2 + y^2 z^4) + 3 x^2 y^2 z^2
SymmetricTensor robinson_tensor();
/// x^4 y^2 + y^4 z^2 + z^4 x^2 - 3 x^2 y^2 z^2
SymmetricTensor choi_lam_tensor();

std::vector<Monomial> motzkin_polynomial();
std::vector<Monomial> robinson_polynomial();
std::vector<Monomial> choi_lam_polynomial();

}  // namespace copos
