#pragma once

// Real symmetric tensors of order m and dimension n, stored by canonical
// (nondecreasing) multi-index, and the multilinear forms evaluated on them.
//
// All indices in the C++ API are 0-based. File formats use 1-based indices.

#include <cstddef>
#include <span>
#include <vector>

namespace copos {

using Vector = std::vector<double>;
using MultiIndex = std::vector<std::size_t>;

struct TensorEntry {
    MultiIndex index;  // canonical: sorted nondecreasing
    double value = 0.0;
};

class SymmetricTensor {
public:
    /// Zero tensor.
    SymmetricTensor(std::size_t order, std::size_t dim);

    /// Indices are canonicalized (sorted). Two entries with the same canonical
    /// index are rejected with DomainError, as are out-of-range components.
    SymmetricTensor(std::size_t order, std::size_t dim, std::vector<TensorEntry> entries);

    std::size_t order() const noexcept { return order_; }
    std::size_t dim() const noexcept { return dim_; }

    /// Value at an arbitrary (not necessarily sorted) multi-index.
    double entry(std::span<const std::size_t> index) const;

    /// Stored entries, sorted by canonical index.
    std::span<const TensorEntry> entries() const noexcept { return entries_; }

    /// Number of dense positions that stored entry k stands for: m!/(c_1!...c_n!).
    double multiplicity(std::size_t k) const { return multiplicity_[k]; }

    /// Copy with one canonical entry replaced (or inserted).
    SymmetricTensor with_entry(MultiIndex index, double value) const;

    bool same_shape(const SymmetricTensor& other) const noexcept {
        return order_ == other.order_ && dim_ == other.dim_;
    }

private:
    void rebuild_multiplicities();

    std::size_t order_;
    std::size_t dim_;
    std::vector<TensorEntry> entries_;
    std::vector<double> multiplicity_;
};

/// Row-major array of all dim^order logical entries.
struct DenseTensor {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::vector<double> data;

    std::size_t offset(std::span<const std::size_t> index) const;
};

// ---- combinatorics -------------------------------------------------------

double binomial(std::size_t n, std::size_t k);

/// Number of distinct orderings of a multiset given as a multi-index.
double permutation_count(std::span<const std::size_t> index);

/// All nondecreasing multi-indices of length `order` over [0, dim), in
/// lexicographic order. There are C(dim + order - 1, order) of them.
std::vector<MultiIndex> canonical_indices(std::size_t order, std::size_t dim);

MultiIndex canonicalize(std::span<const std::size_t> index);

// ---- evaluation ----------------------------------------------------------

double get_entry(const SymmetricTensor& a, std::span<const std::size_t> index);

/// A x^m.
double eval_form(const SymmetricTensor& a, std::span<const double> x);

/// A x^{m-1}: component i is the contraction of A with x over all modes but
/// the first, with the first index fixed to i.
Vector eval_gradient_form(const SymmetricTensor& a, std::span<const double> x);

/// A x^k y^{m-k}.
double eval_mixed(const SymmetricTensor& a, std::span<const double> x, std::size_t k,
                  std::span<const double> y);

/// <A, f_1 o f_2 o ... o f_m>.
double rank_one_inner(const SymmetricTensor& a, std::span<const Vector> factors);

// ---- algebra -------------------------------------------------------------

SymmetricTensor add(const SymmetricTensor& a, const SymmetricTensor& b);
SymmetricTensor scale(double t, const SymmetricTensor& a);

/// Sum over all dim^order dense positions.
double inner_product(const SymmetricTensor& a, const SymmetricTensor& b);
double frobenius_norm(const SymmetricTensor& a);

/// A_J, relabeled so that J[k] becomes index k. J must be nonempty, strictly
/// increasing and in range.
SymmetricTensor principal_subtensor(const SymmetricTensor& a, std::span<const std::size_t> subset);

// ---- congruence by a vertex matrix --------------------------------------

DenseTensor to_dense(const SymmetricTensor& a);

/// Mode-k products of `dense` with the matrix whose columns are `columns`, for
/// every mode. Entry (j_1..j_m) of the result is <A, c_{j_1} o ... o c_{j_m}>.
DenseTensor contract_all_modes(const DenseTensor& dense, std::span<const Vector> columns);

/// V^T A V with V = [columns]: the coefficient tensor of the form in the
/// barycentric coordinates of the columns. Every canonical key is stored.
SymmetricTensor transform_by_vertex_matrix(const SymmetricTensor& a, std::span<const Vector> columns);

}  // namespace copos
