#pragma once

// Simplices inside the standard simplex {x >= 0, sum x = 1}, longest-edge
// bisection, and the LIFO frontier of unresolved cells.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "copos/tensor.hpp"

namespace copos {

inline constexpr double kVertexTolerance = 1e-10;
inline constexpr double kDegeneracyThreshold = 1e-12;

class Simplex {
public:
    /// Validates that there are n vertices of length n, each nonnegative with
    /// unit coordinate sum, and that they are affinely independent. Throws
    /// DomainError or DegenerateCellError.
    explicit Simplex(std::vector<Vector> vertices, std::size_t depth = 0);

    const std::vector<Vector>& vertices() const noexcept { return vertices_; }
    const Vector& vertex(std::size_t i) const { return vertices_[i]; }
    std::size_t dim() const noexcept { return vertices_.size(); }

    /// Number of bisections separating this cell from the root.
    std::size_t depth() const noexcept { return depth_; }

private:
    std::vector<Vector> vertices_;
    std::size_t depth_;
};

Simplex standard_simplex(std::size_t n);

/// Largest pairwise Euclidean distance between vertices.
double diameter(std::span<const Vector> vertices);
double diameter(const Simplex& s);

/// The lexicographically smallest pair (p, q), p < q, attaining the diameter.
std::pair<std::size_t, std::size_t> longest_edge(const Simplex& s);

/// Splits at the midpoint v of the longest edge [u_p, u_q]. The first child
/// has u_p replaced by v, the second has u_q replaced by v. Throws
/// DegenerateCellError when the diameter is zero.
std::pair<Simplex, Simplex> bisect_longest_edge(const Simplex& s);

/// det of the matrix whose columns are the vertices.
double vertex_determinant(std::span<const Vector> vertices);

/// |det V| / diameter^(n-1): scale-free measure of affine independence for
/// vertex sets on the unit-sum hyperplane.
double normalized_volume(std::span<const Vector> vertices);

/// Solves V lambda = x. For x on the unit-sum hyperplane the coordinates sum
/// to one; x lies in the cell iff all are nonnegative.
Vector barycentric_coordinates(const Simplex& s, std::span<const double> x);

/// Last-in first-out collection of unresolved cells.
class PartitionFrontier {
public:
    void push(Simplex s) { cells_.push_back(std::move(s)); }

    /// Most recently pushed cell, or nullopt when empty.
    std::optional<Simplex> pop();

    bool empty() const noexcept { return cells_.empty(); }
    std::size_t size() const noexcept { return cells_.size(); }
    std::span<const Simplex> cells() const noexcept { return cells_; }

private:
    std::vector<Simplex> cells_;
};

}  // namespace copos
