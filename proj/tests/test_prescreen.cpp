#include <cmath>
#include <random>

#include "doctest.h"

#include "copos/detector.hpp"
#include "copos/errors.hpp"
#include "copos/instances.hpp"
#include "copos/prescreen.hpp"
#include "oracle.hpp"

using namespace copos;

TEST_CASE("diagonal_check") {
    CHECK(diagonal_check(random_tensor(3, 3, 1)).passed);
    CHECK(diagonal_check(identity_tensor(3, 3)).passed);
    const auto r = diagonal_check(random_tensor_negative_corner(3, 3, 1));
    CHECK_FALSE(r.passed);
    CHECK(r.violated_condition == PrescreenCondition::Diagonal);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Vector{1, 0, 0});
    CHECK(r.value == -1.0);
}

TEST_CASE("zero_point_gradient_check") {
    const auto motzkin = zero_point_gradient_check(motzkin_tensor(), Vector{1, 1, 1});
    CHECK(motzkin.passed);
    const auto g = eval_gradient_form(motzkin_tensor(), Vector{1.0 / 3, 1.0 / 3, 1.0 / 3});
    for (double c : g) CHECK(std::fabs(c) < 1e-15);

    const auto a9 = eta_shift(9.0, ones_tensor(3, 3));
    CHECK(zero_point_gradient_check(a9, Vector{1.0 / 3, 1.0 / 3, 1.0 / 3}).passed);
    const auto g9 = eval_gradient_form(a9, Vector{1.0 / 3, 1.0 / 3, 1.0 / 3});
    for (double c : g9) CHECK(std::fabs(c) < 1e-14);

    CHECK_THROWS_AS(zero_point_gradient_check(identity_tensor(3, 3), Vector{1, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(zero_point_gradient_check(identity_tensor(3, 3), Vector{-1, 1, 1}), DomainError);
    CHECK_THROWS_AS(zero_point_gradient_check(identity_tensor(3, 3), Vector{0, 0, 0}), DomainError);
}

TEST_CASE("zero_point_gradient_check fails on a zero with a descending direction") {
    // f = x^2 y - x y^2 vanishes at e_1 and e_2. The gradient form is
    // (0, 1/3) at e_1 and (-1/3, 0) at e_2, so only e_2 refutes.
    const auto a = from_polynomial(3, 2, {{{2, 1}, 1.0}, {{1, 2}, -1.0}});
    CHECK(zero_point_gradient_check(a, Vector{1, 0}).passed);
    const auto r = zero_point_gradient_check(a, Vector{0, 1});
    CHECK_FALSE(r.passed);
    CHECK(r.violated_condition == PrescreenCondition::ZeroPointGradient);
    REQUIRE(r.gradient_index.has_value());
    CHECK(*r.gradient_index == 0);
    CHECK(r.value == doctest::Approx(-1.0 / 3.0));
    REQUIRE(r.descent_point.has_value());
    CHECK(verify_witness(a, *r.descent_point, 1e-12));
}

TEST_CASE("lattices") {
    CHECK(interior_lattice(2, 2) == std::vector<Vector>{{0.5, 0.5}});
    CHECK(interior_lattice(3, 3).size() == 1);
    CHECK(interior_lattice(3, 6).size() == 10);  // C(5, 2)
    CHECK(simplex_lattice(3, 2).size() == 6);
    CHECK(lattice_pairs(3, 1).size() == 6);
    CHECK(interior_lattice(1, 4) == std::vector<Vector>{{1.0}});
}

TEST_CASE("subtensor_sample_refute") {
    const auto neg = scale(-1.0, ones_tensor(3, 4));
    const std::size_t j12[] = {0, 1};
    const auto r = subtensor_sample_refute(neg, j12, 1);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Vector{0.5, 0.5, 0, 0});
    CHECK(r.subset == std::vector<std::size_t>{0, 1});

    const std::size_t j3[] = {0, 2, 3};
    for (std::size_t depth : {1, 2, 5}) CHECK(subtensor_sample_refute(ones_tensor(3, 4), j3, depth).passed);

    const auto a1 = eta_shift(1.0, ones_tensor(3, 3));
    const auto r1 = subtensor_sample_refute(a1, j12, 1);
    CHECK_FALSE(r1.passed);
    CHECK(*r1.witness == Vector{0.5, 0.5, 0});
    CHECK(r1.value == doctest::Approx(-0.75));

    CHECK_THROWS_AS(subtensor_sample_refute(a1, std::span<const std::size_t>{}, 1), DomainError);
}

TEST_CASE("pencil_refute") {
    const auto neg = scale(-1.0, ones_tensor(3, 3));
    const std::vector<std::pair<Vector, Vector>> s1{{{1, 0, 0}, {1, 0, 0}}};
    const auto r = pencil_refute(neg, neg, s1);
    CHECK_FALSE(r.passed);
    CHECK(r.violated_condition == PrescreenCondition::Pencil);
    CHECK(r.value == doctest::Approx(-2.0));

    std::mt19937_64 rng(51);
    const auto arbitrary = oracle::random_symmetric(3, 3, rng);
    CHECK(pencil_refute(ones_tensor(3, 3), arbitrary, lattice_pairs(3, 3)).passed);

    const auto a1 = eta_shift(1.0, ones_tensor(3, 3));
    const Vector uniform{1.0 / 3, 1.0 / 3, 1.0 / 3};
    CHECK(eval_form(a1, uniform) * 2 == doctest::Approx(-16.0 / 9.0));
    const std::vector<std::pair<Vector, Vector>> su{{uniform, uniform}};
    CHECK(pencil_refute(a1, ones_tensor(3, 3), su).passed);

    CHECK_THROWS_AS(pencil_refute(a1, ones_tensor(3, 2), su), DomainError);
}

TEST_CASE("run_prescreen order and short-circuit") {
    CHECK(run_prescreen(eta_shift(9.01, ones_tensor(3, 3))).passed);
    const auto diag = run_prescreen(random_tensor_negative_corner(4, 3, 3));
    CHECK(diag.violated_condition == PrescreenCondition::Diagonal);
    const auto pair = run_prescreen(eta_shift(1.0, ones_tensor(3, 3)));
    CHECK(pair.violated_condition == PrescreenCondition::SubtensorSample);

    PrescreenOptions opt;
    opt.zero_point = Vector{1, 1, 1};
    CHECK(run_prescreen(motzkin_tensor(), opt).passed);
}

TEST_CASE("property: prescreen failures are genuine and agree with detect") {
    std::mt19937_64 rng(52);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + rng() % 3, n = 2 + rng() % 3;
        const auto b = oracle::random_symmetric(m, n, rng, -0.3, 1.0);
        const auto report = run_prescreen(b);
        DetectorConfig cfg;
        cfg.max_iterations = 2000;
        const Verdict v = detect(b, cfg);
        if (!report.passed) {
            ++failures;
            REQUIRE(report.witness.has_value());
            CHECK(verify_witness(b, *report.witness, 1e-12));
            CHECK(v.kind != VerdictKind::Copositive);
        }
        if (report.violated_condition == PrescreenCondition::Diagonal) {
            CHECK(v.kind == VerdictKind::NotCopositive);
            CHECK(v.iterations == 1);
        }
        if (v.kind == VerdictKind::NotCopositive && v.iterations == 1) {
            // A negative vertex of the root cell is a negative diagonal entry.
            CHECK(report.violated_condition == PrescreenCondition::Diagonal);
        }
    }
    CHECK(failures > 0);
}
