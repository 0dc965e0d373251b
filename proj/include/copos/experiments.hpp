#pragma once

// Benchmark experiments, with reference iteration counts carried alongside
// for comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copos/detector.hpp"

namespace copos::experiments {

/// Yes / No / "> budget".
enum class Expected { Yes, No, Unfinished };

struct EtaOnesRow {
    std::size_t order;
    std::size_t dim;
    double eta;
    Expected expected;
    std::optional<std::size_t> reference_iterations;  // nullopt for "> 100"
    Verdict verdict;
};

/// eta*I - E for the eight benchmark (m, n, eta) combinations.
std::vector<EtaOnesRow> run_eta_ones(const DetectorConfig& cfg = {});

struct RelaxationRow {
    std::string name;
    double sigma;
    std::size_t reference_iterations;
    Verdict verdict;
};

/// Default-budget plain runs of the Motzkin, Robinson and Choi-Lam tensors.
struct PlainPolynomialRun {
    std::string name;
    Verdict verdict;
};

std::vector<PlainPolynomialRun> run_polynomial_plain(const DetectorConfig& cfg = {});
std::vector<RelaxationRow> run_polynomial_relaxation(const DetectorConfig& cfg = {});

struct RandomShiftRow {
    std::size_t order = 0;
    std::size_t dim = 0;
    double offset = 0.0;  // eta = rho + offset
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t undecided = 0;
    std::size_t min_iterations = 0;
    std::size_t max_iterations = 0;
    std::size_t reference_min = 0;
    std::size_t reference_max = 0;
    Expected expected = Expected::Yes;
    std::vector<Verdict> verdicts;
    std::vector<double> rhos;
};

/// Seed of trial t for shape (m, n): seed_base + 1000 m + 100 n + t.
std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t order, std::size_t dim, std::size_t trial);

/// (rho-1) I - B, (rho+1) I - B, (rho+10) I - B over seeded random B.
std::vector<RandomShiftRow> run_random_shift(std::uint64_t seed_base = 2016, std::size_t trials = 10,
                                             std::size_t max_iterations = 1000);

struct RandomSignRow {
    std::size_t order = 0;
    std::size_t dim = 0;
    bool negative_corner = false;  // a_{1..1} = -1
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t undecided = 0;
    std::size_t min_iterations = 0;
    std::size_t max_iterations = 0;
    std::vector<Verdict> verdicts;
};

std::vector<RandomSignRow> run_random_sign(std::uint64_t seed_base = 2016, std::size_t trials = 10,
                                           const DetectorConfig& cfg = {});

/// Shapes used by the random experiments.
const std::vector<std::pair<std::size_t, std::size_t>>& random_shapes();

std::string to_string(Expected e);

/// Whether a verdict matches the reference outcome.
bool matches(Expected e, const Verdict& v);

}  // namespace copos::experiments
