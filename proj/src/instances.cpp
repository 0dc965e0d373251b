#include "copos/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "copos/errors.hpp"

namespace copos {

SymmetricTensor identity_tensor(std::size_t order, std::size_t dim) {
    std::vector<TensorEntry> entries;
    for (std::size_t i = 0; i < dim; ++i) entries.push_back(TensorEntry{MultiIndex(order, i), 1.0});
    return SymmetricTensor(order, dim, std::move(entries));
}

SymmetricTensor ones_tensor(std::size_t order, std::size_t dim) {
    std::vector<TensorEntry> entries;
    for (auto& idx : canonical_indices(order, dim)) entries.push_back(TensorEntry{std::move(idx), 1.0});
    return SymmetricTensor(order, dim, std::move(entries));
}

SymmetricTensor eta_shift(double eta, const SymmetricTensor& b) {
    return add(scale(eta, identity_tensor(b.order(), b.dim())), scale(-1.0, b));
}

std::uint64_t CounterRng::bits(std::uint64_t k) const noexcept {
    std::uint64_t z = seed_ + (k + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform_open(std::uint64_t k) const noexcept {
    return (static_cast<double>(bits(k) >> 11) + 0.5) * 0x1.0p-53;
}

SymmetricTensor random_tensor(std::size_t order, std::size_t dim, std::uint64_t seed) {
    const CounterRng rng(seed);
    std::vector<TensorEntry> entries;
    std::uint64_t k = 0;
    for (auto& idx : canonical_indices(order, dim)) {
        entries.push_back(TensorEntry{std::move(idx), rng.uniform_open(k++)});
    }
    return SymmetricTensor(order, dim, std::move(entries));
}

SymmetricTensor random_tensor_negative_corner(std::size_t order, std::size_t dim, std::uint64_t seed) {
    return random_tensor(order, dim, seed).with_entry(MultiIndex(order, 0), -1.0);
}

SymmetricTensor from_polynomial(std::size_t order, std::size_t dim, const std::vector<Monomial>& monomials) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<TensorEntry> entries;
    for (const auto& mono : monomials) {
        if (mono.exponents.size() != dim) {
            throw DomainError("monomial has " + std::to_string(mono.exponents.size()) + " exponents, expected " +
                              std::to_string(dim));
        }
        std::size_t total = 0;
        MultiIndex idx;
        for (std::size_t i = 0; i < dim; ++i) {
            total += mono.exponents[i];
            idx.insert(idx.end(), mono.exponents[i], i);
        }
        if (total != order) {
            throw DomainError("monomial degree " + std::to_string(total) + " differs from order " +
                              std::to_string(order));
        }
        if (!seen.insert(mono.exponents).second) throw DomainError("repeated monomial in polynomial");
        const double share = mono.coefficient / permutation_count(idx);
        entries.push_back(TensorEntry{std::move(idx), share});
    }
    return SymmetricTensor(order, dim, std::move(entries));
}

std::vector<Monomial> motzkin_polynomial() {
    return {{{4, 2, 0}, 1.0}, {{2, 4, 0}, 1.0}, {{0, 0, 6}, 1.0}, {{2, 2, 2}, -3.0}};
}

std::vector<Monomial> robinson_polynomial() {
    return {{{6, 0, 0}, 1.0},  {{0, 6, 0}, 1.0},  {{0, 0, 6}, 1.0},  {{4, 2, 0}, -1.0},
            {{2, 4, 0}, -1.0}, {{4, 0, 2}, -1.0}, {{2, 0, 4}, -1.0}, {{0, 4, 2}, -1.0},
            {{0, 2, 4}, -1.0}, {{2, 2, 2}, 3.0}};
}

std::vector<Monomial> choi_lam_polynomial() {
    return {{{4, 2, 0}, 1.0}, {{0, 4, 2}, 1.0}, {{2, 0, 4}, 1.0}, {{2, 2, 2}, -3.0}};
}

SymmetricTensor motzkin_tensor() { return from_polynomial(6, 3, motzkin_polynomial()); }
SymmetricTensor robinson_tensor() { return from_polynomial(6, 3, robinson_polynomial()); }
SymmetricTensor choi_lam_tensor() { return from_polynomial(6, 3, choi_lam_polynomial()); }

}  // namespace copos
