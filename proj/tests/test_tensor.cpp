#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "copos/errors.hpp"
#include "copos/instances.hpp"
#include "copos/tensor.hpp"
#include "oracle.hpp"

using namespace copos;

namespace {
const MultiIndex i000{0, 0, 0};
}

TEST_CASE("get_entry reads canonical values in any order") {
    const auto eye = identity_tensor(3, 3);
    CHECK(get_entry(eye, MultiIndex{1, 1, 1}) == 1.0);
    CHECK(get_entry(eye, MultiIndex{0, 1, 2}) == 0.0);

    const auto motzkin = motzkin_tensor();
    CHECK(get_entry(motzkin, MultiIndex{0, 0, 0, 0, 1, 1}) == doctest::Approx(1.0 / 15.0).epsilon(1e-15));
    CHECK(get_entry(motzkin, MultiIndex{1, 0, 1, 0, 0, 0}) == get_entry(motzkin, MultiIndex{0, 0, 0, 0, 1, 1}));

    CHECK_THROWS_AS(get_entry(eye, MultiIndex{0, 0, 3}), DomainError);
    CHECK_THROWS_AS(get_entry(eye, MultiIndex{0, 0}), DomainError);
}

TEST_CASE("construction canonicalizes and rejects duplicates") {
    SymmetricTensor a(3, 2, {{{1, 0, 0}, 2.5}});
    REQUIRE(a.entries().size() == 1);
    CHECK(a.entries()[0].index == MultiIndex{0, 0, 1});
    CHECK(a.multiplicity(0) == 3.0);
    CHECK_THROWS_AS(SymmetricTensor(3, 2, {{{1, 0, 0}, 1.0}, {{0, 1, 0}, 2.0}}), DomainError);
    CHECK_THROWS_AS(SymmetricTensor(3, 2, {{{2, 0, 0}, 1.0}}), DomainError);
    CHECK_THROWS_AS(SymmetricTensor(0, 2), DomainError);
}

TEST_CASE("storage stays within the canonical key count") {
    const auto e = ones_tensor(6, 3);
    CHECK(e.entries().size() == 28);  // C(8, 6)
    CHECK(canonical_indices(6, 3).size() == 28);
    CHECK(canonical_indices(4, 4).size() == 35);
    double total = 0.0;
    for (std::size_t k = 0; k < e.entries().size(); ++k) total += e.multiplicity(k);
    CHECK(total == 729.0);  // 3^6
}

TEST_CASE("eval_form examples") {
    CHECK(eval_form(identity_tensor(3, 3), Vector{1, 1, 1}) == doctest::Approx(3.0));
    CHECK(eval_form(ones_tensor(3, 3), Vector{0.5, 0.5, 0}) == doctest::Approx(1.0));
    CHECK(std::fabs(eval_form(motzkin_tensor(), Vector{1, 1, 1})) < 1e-14);
    CHECK_THROWS_AS(eval_form(identity_tensor(3, 3), Vector{1, 1}), DomainError);
}

TEST_CASE("eval_gradient_form examples") {
    const auto g1 = eval_gradient_form(identity_tensor(3, 2), Vector{1, 2});
    CHECK(g1[0] == doctest::Approx(1.0));
    CHECK(g1[1] == doctest::Approx(4.0));
    const auto g2 = eval_gradient_form(ones_tensor(3, 2), Vector{1, 1});
    CHECK(g2[0] == doctest::Approx(4.0));
    CHECK(g2[1] == doctest::Approx(4.0));
    const auto g3 = eval_gradient_form(motzkin_tensor(), Vector{0, 0, 1});
    CHECK(g3[0] == 0.0);
    CHECK(g3[1] == 0.0);
    CHECK(g3[2] == doctest::Approx(1.0));
    CHECK_THROWS_AS(eval_gradient_form(ones_tensor(3, 2), Vector{1}), DomainError);
}

TEST_CASE("eval_mixed examples") {
    const auto e = ones_tensor(3, 2);
    CHECK(eval_mixed(e, Vector{1, 0}, 1, Vector{1, 1}) == doctest::Approx(4.0));
    CHECK(eval_mixed(identity_tensor(3, 2), Vector{1, 0}, 2, Vector{0, 1}) == 0.0);
    CHECK(eval_mixed(e, Vector{0.3, 0.2}, 3, Vector{5, 7}) == doctest::Approx(eval_form(e, Vector{0.3, 0.2})));
    CHECK(eval_mixed(e, Vector{5, 7}, 0, Vector{0.3, 0.2}) == doctest::Approx(eval_form(e, Vector{0.3, 0.2})));
    CHECK_THROWS_AS(eval_mixed(e, Vector{1, 0}, 4, Vector{1, 1}), DomainError);
}

TEST_CASE("rank_one_inner examples") {
    const Vector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(rank_one_inner(ones_tensor(3, 3), std::vector<Vector>{e1, e2, e3}) == doctest::Approx(1.0));
    CHECK(rank_one_inner(identity_tensor(3, 3), std::vector<Vector>{e1, e1, e2}) == 0.0);
    const Vector x{0.2, -0.7, 1.3};
    const auto a = eta_shift(2.0, ones_tensor(3, 3));
    CHECK(rank_one_inner(a, std::vector<Vector>(3, x)) == doctest::Approx(eval_form(a, x)));
    CHECK_THROWS_AS(rank_one_inner(a, std::vector<Vector>{e1, e2}), DomainError);
    CHECK_THROWS_AS(rank_one_inner(a, std::vector<Vector>{e1, e2, Vector{1, 0}}), DomainError);
}

TEST_CASE("add and scale") {
    const auto eye = identity_tensor(3, 3);
    const auto e = ones_tensor(3, 3);
    const auto sum = add(eye, scale(0.0, e));
    for (const auto& idx : canonical_indices(3, 3)) CHECK(get_entry(sum, idx) == get_entry(eye, idx));
    CHECK(get_entry(scale(-1.0, e), i000) == -1.0);
    const auto shifted = add(scale(9.0, eye), scale(-1.0, e));
    CHECK(get_entry(shifted, i000) == 8.0);
    CHECK(get_entry(shifted, MultiIndex{0, 0, 1}) == -1.0);
    CHECK_THROWS_AS(add(eye, ones_tensor(3, 2)), DomainError);
    CHECK_THROWS_AS(add(eye, ones_tensor(4, 3)), DomainError);
}

TEST_CASE("inner product counts dense multiplicities") {
    const auto eye = identity_tensor(3, 3);
    const auto e = ones_tensor(3, 3);
    CHECK(inner_product(eye, eye) == doctest::Approx(3.0));
    CHECK(frobenius_norm(eye) == doctest::Approx(std::sqrt(3.0)));
    CHECK(inner_product(eye, e) == doctest::Approx(3.0));
    CHECK(frobenius_norm(e) == doctest::Approx(std::sqrt(27.0)));
    CHECK_THROWS_AS(inner_product(eye, ones_tensor(3, 4)), DomainError);
}

TEST_CASE("principal_subtensor") {
    std::mt19937_64 rng(11);
    const auto a = oracle::random_symmetric(3, 3, rng);
    const std::size_t all[] = {0, 1, 2};
    const auto full = principal_subtensor(a, all);
    for (const auto& idx : canonical_indices(3, 3)) CHECK(get_entry(full, idx) == get_entry(a, idx));

    const std::size_t first[] = {0};
    const auto single = principal_subtensor(a, first);
    CHECK(single.dim() == 1);
    CHECK(get_entry(single, i000) == get_entry(a, i000));

    // Motzkin restricted to {x, y} is x^4 y^2 + x^2 y^4.
    const std::size_t xy[] = {0, 1};
    const auto m2 = principal_subtensor(motzkin_tensor(), xy);
    const auto expected = from_polynomial(6, 2, {{{4, 2}, 1.0}, {{2, 4}, 1.0}});
    for (const auto& idx : canonical_indices(6, 2)) {
        CHECK(get_entry(m2, idx) == doctest::Approx(get_entry(expected, idx)).epsilon(1e-15));
    }

    // Evaluation with zeros embedded outside J agrees.
    const std::size_t odd[] = {0, 2};
    const auto sub = principal_subtensor(a, odd);
    CHECK(eval_form(sub, Vector{0.3, 0.9}) == doctest::Approx(eval_form(a, Vector{0.3, 0.0, 0.9})));

    CHECK_THROWS_AS(principal_subtensor(a, std::span<const std::size_t>{}), DomainError);
    const std::size_t bad[] = {0, 3};
    CHECK_THROWS_AS(principal_subtensor(a, bad), DomainError);
    const std::size_t unsorted[] = {1, 0};
    CHECK_THROWS_AS(principal_subtensor(a, unsorted), DomainError);
}

TEST_CASE("transform_by_vertex_matrix examples") {
    std::mt19937_64 rng(5);
    const auto a = oracle::random_symmetric(4, 3, rng);
    const std::vector<Vector> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto same = transform_by_vertex_matrix(a, id);
    for (const auto& idx : canonical_indices(4, 3)) CHECK(get_entry(same, idx) == doctest::Approx(get_entry(a, idx)));

    const std::vector<Vector> v{{1, 0}, {0.5, 0.5}};
    const auto te = transform_by_vertex_matrix(ones_tensor(3, 2), v);
    for (const auto& idx : canonical_indices(3, 2)) CHECK(get_entry(te, idx) == doctest::Approx(1.0));
    const auto ti = transform_by_vertex_matrix(identity_tensor(3, 2), v);
    CHECK(get_entry(ti, MultiIndex{1, 1, 1}) == doctest::Approx(0.25));

    CHECK_THROWS_AS(transform_by_vertex_matrix(a, v), DomainError);
}

TEST_CASE("with_entry replaces or inserts") {
    const auto eye = identity_tensor(3, 2);
    const auto b = eye.with_entry({0, 0, 0}, -1.0).with_entry({1, 0, 0}, 0.5);
    CHECK(get_entry(b, i000) == -1.0);
    CHECK(get_entry(b, MultiIndex{0, 1, 0}) == 0.5);
    CHECK(get_entry(b, MultiIndex{1, 1, 1}) == 1.0);
    CHECK(get_entry(eye, i000) == 1.0);
}

TEST_CASE("combinatorics") {
    CHECK(binomial(8, 6) == 28.0);
    CHECK(binomial(3, 5) == 0.0);
    CHECK(permutation_count(MultiIndex{0, 0, 0, 0, 1, 1}) == 15.0);
    CHECK(permutation_count(MultiIndex{0, 0, 1, 1, 2, 2}) == 90.0);
    CHECK(permutation_count(MultiIndex{2, 1, 0}) == 6.0);
}

// ---- properties ----------------------------------------------------------

TEST_CASE("property: entry lookup is permutation invariant") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        const auto a = oracle::random_symmetric(m, n, rng);
        MultiIndex idx(m);
        for (auto& i : idx) i = rng() % n;
        const double ref = get_entry(a, idx);
        std::sort(idx.begin(), idx.end());
        do {
            CHECK(get_entry(a, idx) == ref);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("property: evaluations agree with brute force") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        const auto a = oracle::random_symmetric(m, n, rng);
        const auto b = oracle::random_symmetric(m, n, rng);
        const Vector x = oracle::random_vector(n, rng);
        const Vector y = oracle::random_vector(n, rng);
        CHECK(oracle::rel_err(eval_form(a, x), oracle::form(a, x)) < 1e-10);
        const Vector g = eval_gradient_form(a, x);
        const Vector gref = oracle::gradient(a, x);
        for (std::size_t i = 0; i < n; ++i) CHECK(oracle::rel_err(g[i], gref[i]) < 1e-10);
        const std::size_t k = rng() % (m + 1);
        CHECK(oracle::rel_err(eval_mixed(a, x, k, y), oracle::mixed(a, x, k, y)) < 1e-10);
        CHECK(oracle::rel_err(inner_product(a, b), oracle::inner(a, b)) < 1e-10);
    }
}

TEST_CASE("property: binomial expansion of A(x+y)^m") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 4;
        const auto a = oracle::random_symmetric(m, n, rng);
        const Vector x = oracle::random_vector(n, rng);
        const Vector y = oracle::random_vector(n, rng);
        Vector xy(n);
        for (std::size_t i = 0; i < n; ++i) xy[i] = x[i] + y[i];
        double expansion = 0.0;
        for (std::size_t k = 0; k <= m; ++k) expansion += binomial(m, k) * eval_mixed(a, x, m - k, y);
        CHECK(oracle::rel_err(eval_form(a, xy), expansion) < 1e-10);
    }
}

TEST_CASE("property: contraction consistency") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        const auto a = oracle::random_symmetric(m, n, rng);
        const Vector x = oracle::random_vector(n, rng);
        const Vector g = eval_gradient_form(a, x);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += x[i] * g[i];
        CHECK(oracle::rel_err(dot, eval_form(a, x)) < 1e-10);
        CHECK(oracle::rel_err(rank_one_inner(a, std::vector<Vector>(m, x)), eval_form(a, x)) < 1e-10);
    }
}

TEST_CASE("property: congruence identity and coefficient oracle") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        const auto a = oracle::random_symmetric(m, n, rng);
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < n; ++j) cols.push_back(oracle::random_vector(n, rng));
        const auto t = transform_by_vertex_matrix(a, cols);

        const Vector lambda = oracle::random_vector(n, rng);
        Vector vl(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) vl[i] += cols[j][i] * lambda[j];
        }
        CHECK(oracle::rel_err(eval_form(t, lambda), eval_form(a, vl)) < 1e-10);

        for (const auto& idx : canonical_indices(m, n)) {
            std::vector<Vector> f;
            for (auto j : idx) f.push_back(cols[j]);
            CHECK(oracle::rel_err(get_entry(t, idx), oracle::rank_one(a, f)) < 1e-10);
        }
    }
}
