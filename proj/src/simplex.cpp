#include "copos/simplex.hpp"

#include <cmath>
#include <string>

#include "copos/errors.hpp"

namespace copos {

namespace {

double distance(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Column-major square matrix from column vectors, LU with partial pivoting.
// Returns false if a zero pivot is met.
bool lu_decompose(std::vector<double>& a, std::size_t n, std::vector<std::size_t>& perm, int& sign) {
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    sign = 1;
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[c * n + r]; };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::fabs(at(r, k)) > std::fabs(at(piv, k))) piv = r;
        }
        if (at(piv, k) == 0.0) return false;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            at(r, k) /= at(k, k);
            const double f = at(r, k);
            for (std::size_t c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
        }
    }
    return true;
}

std::vector<double> column_major(std::span<const Vector> columns) {
    const std::size_t n = columns.size();
    std::vector<double> a(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[c * n + r] = columns[c][r];
    }
    return a;
}

}  // namespace

Simplex::Simplex(std::vector<Vector> vertices, std::size_t depth)
    : vertices_(std::move(vertices)), depth_(depth) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw DomainError("simplex needs at least one vertex");
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& u = vertices_[i];
        if (u.size() != n) {
            throw DomainError("simplex vertex " + std::to_string(i) + " has length " + std::to_string(u.size()) +
                              ", expected " + std::to_string(n));
        }
        double sum = 0.0;
        for (double c : u) {
            if (!(c >= -kVertexTolerance)) {
                throw DomainError("simplex vertex " + std::to_string(i) + " has a negative coordinate");
            }
            sum += c;
        }
        if (std::fabs(sum - 1.0) > kVertexTolerance) {
            throw DomainError("simplex vertex " + std::to_string(i) + " does not have unit coordinate sum");
        }
    }
    if (normalized_volume(vertices_) < kDegeneracyThreshold) {
        throw DegenerateCellError("simplex vertices are affinely dependent");
    }
}

Simplex standard_simplex(std::size_t n) {
    if (n < 2) throw DomainError("standard simplex requires n >= 2");
    std::vector<Vector> vertices(n, Vector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) vertices[i][i] = 1.0;
    return Simplex(std::move(vertices));
}

double diameter(std::span<const Vector> vertices) {
    double best = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            best = std::max(best, distance(vertices[i], vertices[j]));
        }
    }
    return best;
}

double diameter(const Simplex& s) { return diameter(s.vertices()); }

std::pair<std::size_t, std::size_t> longest_edge(const Simplex& s) {
    const auto& u = s.vertices();
    std::pair<std::size_t, std::size_t> best{0, 0};
    double best_len = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const double len = distance(u[i], u[j]);
            // Edges equal up to rounding count as ties; the earlier pair wins.
            if (len > best_len * (1.0 + 1e-12)) {
                best_len = len;
                best = {i, j};
            }
        }
    }
    return best;
}

std::pair<Simplex, Simplex> bisect_longest_edge(const Simplex& s) {
    if (diameter(s) == 0.0) throw DegenerateCellError("cannot bisect a simplex of zero diameter");
    const auto [p, q] = longest_edge(s);
    const Vector& up = s.vertex(p);
    const Vector& uq = s.vertex(q);
    Vector mid(up.size());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (up[i] + uq[i]);

    std::vector<Vector> first = s.vertices();
    first[p] = mid;
    std::vector<Vector> second = s.vertices();
    second[q] = std::move(mid);
    return {Simplex(std::move(first), s.depth() + 1), Simplex(std::move(second), s.depth() + 1)};
}

double vertex_determinant(std::span<const Vector> vertices) {
    const std::size_t n = vertices.size();
    std::vector<double> a = column_major(vertices);
    std::vector<std::size_t> perm;
    int sign = 1;
    if (!lu_decompose(a, n, perm, sign)) return 0.0;
    double det = sign;
    for (std::size_t k = 0; k < n; ++k) det *= a[k * n + k];
    return det;
}

double normalized_volume(std::span<const Vector> vertices) {
    const std::size_t n = vertices.size();
    const double det = std::fabs(vertex_determinant(vertices));
    if (n == 1) return det;
    const double d = diameter(vertices);
    if (d == 0.0) return 0.0;
    return det / std::pow(d, static_cast<double>(n - 1));
}

Vector barycentric_coordinates(const Simplex& s, std::span<const double> x) {
    const std::size_t n = s.dim();
    if (x.size() != n) throw DomainError("barycentric_coordinates: dimension mismatch");
    std::vector<double> a = column_major(s.vertices());
    std::vector<std::size_t> perm;
    int sign = 1;
    if (!lu_decompose(a, n, perm, sign)) throw DegenerateCellError("singular vertex matrix");
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[perm[i]];
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) y[r] -= a[c * n + r] * y[c];
    }
    for (std::size_t r = n; r-- > 0;) {
        for (std::size_t c = r + 1; c < n; ++c) y[r] -= a[c * n + r] * y[c];
        y[r] /= a[r * n + r];
    }
    return y;
}

std::optional<Simplex> PartitionFrontier::pop() {
    if (cells_.empty()) return std::nullopt;
    Simplex top = std::move(cells_.back());
    cells_.pop_back();
    return top;
}

}  // namespace copos
