#include "copos/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "copos/detail/compensated_sum.hpp"
#include "copos/errors.hpp"

namespace copos {

namespace {

void require_dim(const SymmetricTensor& a, std::span<const double> x, const char* what) {
    if (x.size() != a.dim()) {
        throw DomainError(std::string(what) + ": vector has length " + std::to_string(x.size()) +
                          ", tensor dimension is " + std::to_string(a.dim()));
    }
}

void require_same_shape(const SymmetricTensor& a, const SymmetricTensor& b, const char* what) {
    if (!a.same_shape(b)) {
        throw DomainError(std::string(what) + ": tensor shapes differ");
    }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

bool less_index(const TensorEntry& e, const MultiIndex& idx) { return e.index < idx; }

}  // namespace

// ---- combinatorics -------------------------------------------------------

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(r);
}

double permutation_count(std::span<const std::size_t> index) {
    MultiIndex sorted(index.begin(), index.end());
    std::sort(sorted.begin(), sorted.end());
    // m!/(c_1!...c_r!) as a product of binomials C(placed + c, c)
    double count = 1.0;
    std::size_t placed = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const std::size_t run = j - i;
        placed += run;
        count *= binomial(placed, run);
        i = j;
    }
    return count;
}

std::vector<MultiIndex> canonical_indices(std::size_t order, std::size_t dim) {
    std::vector<MultiIndex> out;
    if (dim == 0) return out;
    MultiIndex idx(order, 0);
    out.push_back(idx);
    if (order == 0) return out;
    for (;;) {
        // rightmost position that can still be incremented
        std::size_t pos = order;
        while (pos > 0 && idx[pos - 1] == dim - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = idx[pos - 1] + 1;
        for (std::size_t k = pos - 1; k < order; ++k) idx[k] = v;
        out.push_back(idx);
    }
    return out;
}

MultiIndex canonicalize(std::span<const std::size_t> index) {
    MultiIndex out(index.begin(), index.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---- SymmetricTensor -----------------------------------------------------

SymmetricTensor::SymmetricTensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
    if (order == 0 || dim == 0) throw DomainError("tensor order and dimension must be positive");
}

SymmetricTensor::SymmetricTensor(std::size_t order, std::size_t dim, std::vector<TensorEntry> entries)
    : SymmetricTensor(order, dim) {
    for (auto& e : entries) {
        if (e.index.size() != order_) {
            throw DomainError("entry index has length " + std::to_string(e.index.size()) + ", expected " +
                              std::to_string(order_));
        }
        for (auto i : e.index) {
            if (i >= dim_) throw DomainError("entry index component " + std::to_string(i) + " out of range");
        }
        std::sort(e.index.begin(), e.index.end());
    }
    std::sort(entries.begin(), entries.end(),
              [](const TensorEntry& l, const TensorEntry& r) { return l.index < r.index; });
    for (std::size_t k = 1; k < entries.size(); ++k) {
        if (entries[k].index == entries[k - 1].index) {
            throw DomainError("duplicate canonical index in tensor entries");
        }
    }
    entries_ = std::move(entries);
    rebuild_multiplicities();
}

void SymmetricTensor::rebuild_multiplicities() {
    multiplicity_.resize(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        multiplicity_[k] = permutation_count(entries_[k].index);
    }
}

double SymmetricTensor::entry(std::span<const std::size_t> index) const {
    if (index.size() != order_) {
        throw DomainError("index has length " + std::to_string(index.size()) + ", expected " +
                          std::to_string(order_));
    }
    for (auto i : index) {
        if (i >= dim_) throw DomainError("index component " + std::to_string(i) + " out of range");
    }
    const MultiIndex key = canonicalize(index);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, less_index);
    if (it != entries_.end() && it->index == key) return it->value;
    return 0.0;
}

SymmetricTensor SymmetricTensor::with_entry(MultiIndex index, double value) const {
    (void)entry(index);  // validates
    std::sort(index.begin(), index.end());
    SymmetricTensor out = *this;
    auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), index, less_index);
    if (it != out.entries_.end() && it->index == index) {
        it->value = value;
        return out;
    }
    out.entries_.insert(it, TensorEntry{std::move(index), value});
    out.rebuild_multiplicities();
    return out;
}

std::size_t DenseTensor::offset(std::span<const std::size_t> index) const {
    std::size_t off = 0;
    for (auto i : index) off = off * dim + i;
    return off;
}

// ---- evaluation ----------------------------------------------------------

double get_entry(const SymmetricTensor& a, std::span<const std::size_t> index) { return a.entry(index); }

double eval_form(const SymmetricTensor& a, std::span<const double> x) {
    require_dim(a, x, "eval_form");
    detail::CompensatedSum sum;
    const auto entries = a.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        double term = entries[k].value * a.multiplicity(k);
        for (auto i : entries[k].index) term *= x[i];
        sum.add(term);
    }
    return sum.value();
}

Vector eval_gradient_form(const SymmetricTensor& a, std::span<const double> x) {
    require_dim(a, x, "eval_gradient_form");
    const double m = static_cast<double>(a.order());
    std::vector<detail::CompensatedSum> sums(a.dim());
    const auto entries = a.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const MultiIndex& idx = entries[k].index;
        // Each distinct index value i with count c_i receives
        // value * (m-1)!/(c_1!..(c_i-1)!..c_n!) * prod x / x_i, and the
        // multiplicity factor equals multiplicity * c_i / m.
        for (std::size_t p = 0; p < idx.size();) {
            std::size_t q = p;
            while (q < idx.size() && idx[q] == idx[p]) ++q;
            const double count = static_cast<double>(q - p);
            double term = entries[k].value * a.multiplicity(k) * count / m;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                if (r != p) term *= x[idx[r]];
            }
            sums[idx[p]].add(term);
            p = q;
        }
    }
    Vector out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sums[i].value();
    return out;
}

double rank_one_inner(const SymmetricTensor& a, std::span<const Vector> factors) {
    if (factors.size() != a.order()) {
        throw DomainError("rank_one_inner: expected " + std::to_string(a.order()) + " factors, got " +
                          std::to_string(factors.size()));
    }
    for (const auto& f : factors) require_dim(a, f, "rank_one_inner");
    const std::size_t n = a.dim();
    std::vector<double> data = to_dense(a).data;
    // Contract the last mode with the last factor until a scalar remains.
    for (std::size_t r = factors.size(); r-- > 0;) {
        const Vector& f = factors[r];
        std::vector<double> next(data.size() / n, 0.0);
        for (std::size_t outer = 0; outer < next.size(); ++outer) {
            double s = 0.0;
            const double* row = data.data() + outer * n;
            for (std::size_t i = 0; i < n; ++i) s += row[i] * f[i];
            next[outer] = s;
        }
        data = std::move(next);
    }
    return data.front();
}

double eval_mixed(const SymmetricTensor& a, std::span<const double> x, std::size_t k,
                  std::span<const double> y) {
    if (k > a.order()) {
        throw DomainError("eval_mixed: k = " + std::to_string(k) + " exceeds order " +
                          std::to_string(a.order()));
    }
    require_dim(a, x, "eval_mixed");
    require_dim(a, y, "eval_mixed");
    if (k == a.order()) return eval_form(a, x);
    if (k == 0) return eval_form(a, y);
    std::vector<Vector> factors;
    factors.reserve(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        factors.emplace_back(i < k ? Vector(x.begin(), x.end()) : Vector(y.begin(), y.end()));
    }
    return rank_one_inner(a, factors);
}

// ---- algebra -------------------------------------------------------------

SymmetricTensor add(const SymmetricTensor& a, const SymmetricTensor& b) {
    require_same_shape(a, b, "add");
    std::vector<TensorEntry> out;
    const auto ea = a.entries();
    const auto eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].index < eb[j].index)) {
            out.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].index < ea[i].index) {
            out.push_back(eb[j++]);
        } else {
            out.push_back(TensorEntry{ea[i].index, ea[i].value + eb[j].value});
            ++i;
            ++j;
        }
    }
    return SymmetricTensor(a.order(), a.dim(), std::move(out));
}

SymmetricTensor scale(double t, const SymmetricTensor& a) {
    std::vector<TensorEntry> out(a.entries().begin(), a.entries().end());
    for (auto& e : out) e.value *= t;
    return SymmetricTensor(a.order(), a.dim(), std::move(out));
}

double inner_product(const SymmetricTensor& a, const SymmetricTensor& b) {
    require_same_shape(a, b, "inner_product");
    detail::CompensatedSum sum;
    const auto ea = a.entries();
    const auto eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].index < eb[j].index) {
            ++i;
        } else if (eb[j].index < ea[i].index) {
            ++j;
        } else {
            sum.add(a.multiplicity(i) * ea[i].value * eb[j].value);
            ++i;
            ++j;
        }
    }
    return sum.value();
}

double frobenius_norm(const SymmetricTensor& a) { return std::sqrt(inner_product(a, a)); }

SymmetricTensor principal_subtensor(const SymmetricTensor& a, std::span<const std::size_t> subset) {
    if (subset.empty()) throw DomainError("principal_subtensor: index set is empty");
    std::vector<std::size_t> position(a.dim(), a.dim());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] >= a.dim()) throw DomainError("principal_subtensor: index out of range");
        if (k > 0 && subset[k] <= subset[k - 1]) {
            throw DomainError("principal_subtensor: index set must be strictly increasing");
        }
        position[subset[k]] = k;
    }
    std::vector<TensorEntry> out;
    for (const auto& e : a.entries()) {
        MultiIndex relabeled;
        relabeled.reserve(e.index.size());
        bool inside = true;
        for (auto i : e.index) {
            if (position[i] == a.dim()) {
                inside = false;
                break;
            }
            relabeled.push_back(position[i]);
        }
        if (inside) out.push_back(TensorEntry{std::move(relabeled), e.value});
    }
    return SymmetricTensor(a.order(), subset.size(), std::move(out));
}

// ---- congruence ----------------------------------------------------------

DenseTensor to_dense(const SymmetricTensor& a) {
    DenseTensor d{a.order(), a.dim(), std::vector<double>(ipow(a.dim(), a.order()), 0.0)};
    for (const auto& e : a.entries()) {
        MultiIndex perm = e.index;  // sorted, so next_permutation visits each arrangement once
        do {
            d.data[d.offset(perm)] = e.value;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return d;
}

DenseTensor contract_all_modes(const DenseTensor& dense, std::span<const Vector> columns) {
    const std::size_t n = dense.dim;
    if (columns.size() != n) throw DomainError("vertex matrix must have as many columns as the tensor dimension");
    for (const auto& c : columns) {
        if (c.size() != n) throw DomainError("vertex matrix column has wrong length");
    }
    DenseTensor cur = dense;
    std::vector<double> next(cur.data.size());
    for (std::size_t mode = 0; mode < dense.order; ++mode) {
        const std::size_t stride = ipow(n, dense.order - 1 - mode);
        const std::size_t blocks = cur.data.size() / (stride * n);
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            const std::size_t base = blk * n * stride;
            for (std::size_t j = 0; j < n; ++j) {
                double* dst = next.data() + base + j * stride;
                for (std::size_t i = 0; i < n; ++i) {
                    const double w = columns[j][i];
                    if (w == 0.0) continue;
                    const double* src = cur.data.data() + base + i * stride;
                    for (std::size_t t = 0; t < stride; ++t) dst[t] += w * src[t];
                }
            }
        }
        cur.data.swap(next);
    }
    return cur;
}

SymmetricTensor transform_by_vertex_matrix(const SymmetricTensor& a, std::span<const Vector> columns) {
    const DenseTensor transformed = contract_all_modes(to_dense(a), columns);
    std::vector<TensorEntry> out;
    for (auto& idx : canonical_indices(a.order(), a.dim())) {
        const double v = transformed.data[transformed.offset(idx)];
        out.push_back(TensorEntry{std::move(idx), v});
    }
    return SymmetricTensor(a.order(), a.dim(), std::move(out));
}

}  // namespace copos
