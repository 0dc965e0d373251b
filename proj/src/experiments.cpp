#include "copos/experiments.hpp"

#include <algorithm>
#include <limits>

#include "copos/instances.hpp"
#include "copos/spectral.hpp"

namespace copos::experiments {

namespace {

struct EtaCase {
    std::size_t m, n;
    double eta;
    Expected expected;
    std::optional<std::size_t> iterations;
};

const EtaCase kEtaCases[] = {
    {3, 3, 1.0, Expected::No, 2},       {3, 3, 8.99, Expected::No, 43},  {3, 3, 9.0, Expected::Unfinished, {}},
    {3, 3, 9.01, Expected::Yes, 59},    {3, 3, 19.0, Expected::Yes, 11}, {4, 4, 10.0, Expected::No, 14},
    {4, 4, 64.0, Expected::Yes, 63},    {4, 4, 74.0, Expected::Yes, 63},
};

struct RelaxCase {
    const char* name;
    double sigma;
    std::size_t iterations;
};

const RelaxCase kRelaxCases[] = {
    {"motzkin", 0.01, 11},  {"motzkin", 0.001, 27},  {"motzkin", 0.0001, 71},
    {"robinson", 0.01, 11}, {"robinson", 0.001, 27}, {"robinson", 0.0001, 83},
    {"choi-lam", 0.01, 5},  {"choi-lam", 0.001, 27}, {"choi-lam", 0.0001, 41},
};

// Reference MinIT/MaxIT for (rho-1, rho+1, rho+10), per shape.
struct ShiftReference {
    std::size_t m, n;
    std::size_t range[3][2];
};

const ShiftReference kShiftReference[] = {
    {3, 3, {{6, 25}, {19, 19}, {11, 11}}}, {3, 4, {{21, 65}, {63, 75}, {49, 53}}},
    {4, 3, {{17, 17}, {27, 31}, {19, 19}}}, {4, 4, {{21, 25}, {65, 91}, {63, 63}}},
    {6, 3, {{20, 28}, {43, 47}, {27, 27}}},
};

SymmetricTensor named_polynomial(const std::string& name) {
    if (name == "motzkin") return motzkin_tensor();
    if (name == "robinson") return robinson_tensor();
    return choi_lam_tensor();
}

template <typename Row>
void tally(Row& row, const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Copositive:
        case VerdictKind::SigmaCertified: ++row.yes; break;
        case VerdictKind::NotCopositive: ++row.no; break;
        case VerdictKind::Undecided: ++row.undecided; break;
    }
    if (row.verdicts.empty()) {
        row.min_iterations = row.max_iterations = v.iterations;
    } else {
        row.min_iterations = std::min(row.min_iterations, v.iterations);
        row.max_iterations = std::max(row.max_iterations, v.iterations);
    }
    row.verdicts.push_back(v);
}

}  // namespace

std::string to_string(Expected e) {
    switch (e) {
        case Expected::Yes: return "Yes";
        case Expected::No: return "No";
        case Expected::Unfinished: return ">100";
    }
    return "";
}

bool matches(Expected e, const Verdict& v) {
    switch (e) {
        case Expected::Yes: return v.kind == VerdictKind::Copositive || v.kind == VerdictKind::SigmaCertified;
        case Expected::No: return v.kind == VerdictKind::NotCopositive;
        case Expected::Unfinished: return v.kind == VerdictKind::Undecided;
    }
    return false;
}

const std::vector<std::pair<std::size_t, std::size_t>>& random_shapes() {
    static const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{3, 3}, {3, 4}, {4, 3}, {4, 4}, {6, 3}};
    return shapes;
}

std::vector<EtaOnesRow> run_eta_ones(const DetectorConfig& cfg) {
    std::vector<EtaOnesRow> rows;
    for (const auto& c : kEtaCases) {
        const SymmetricTensor a = eta_shift(c.eta, ones_tensor(c.m, c.n));
        rows.push_back(EtaOnesRow{c.m, c.n, c.eta, c.expected, c.iterations, detect(a, cfg)});
    }
    return rows;
}

std::vector<PlainPolynomialRun> run_polynomial_plain(const DetectorConfig& cfg) {
    std::vector<PlainPolynomialRun> out;
    for (const char* name : {"motzkin", "robinson", "choi-lam"}) {
        out.push_back(PlainPolynomialRun{name, detect(named_polynomial(name), cfg)});
    }
    return out;
}

std::vector<RelaxationRow> run_polynomial_relaxation(const DetectorConfig& cfg) {
    std::vector<RelaxationRow> out;
    for (const auto& c : kRelaxCases) {
        out.push_back(RelaxationRow{c.name, c.sigma, c.iterations,
                                    detect_with_relaxation(named_polynomial(c.name), c.sigma, cfg)});
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t order, std::size_t dim, std::size_t trial) {
    return seed_base + 1000 * order + 100 * dim + trial;
}

std::vector<RandomShiftRow> run_random_shift(std::uint64_t seed_base, std::size_t trials,
                                             std::size_t max_iterations) {
    DetectorConfig cfg;
    cfg.max_iterations = max_iterations;
    const double offsets[] = {-1.0, 1.0, 10.0};
    std::vector<RandomShiftRow> rows;
    for (const auto& ref : kShiftReference) {
        std::vector<SymmetricTensor> tensors;
        std::vector<double> rhos;
        for (std::size_t t = 0; t < trials; ++t) {
            tensors.push_back(random_tensor(ref.m, ref.n, trial_seed(seed_base, ref.m, ref.n, t)));
            rhos.push_back(spectral_radius(tensors.back()).rho);
        }
        for (std::size_t k = 0; k < 3; ++k) {
            RandomShiftRow row;
            row.order = ref.m;
            row.dim = ref.n;
            row.offset = offsets[k];
            row.reference_min = ref.range[k][0];
            row.reference_max = ref.range[k][1];
            row.expected = offsets[k] < 0 ? Expected::No : Expected::Yes;
            row.rhos = rhos;
            for (std::size_t t = 0; t < trials; ++t) {
                tally(row, detect(eta_shift(rhos[t] + offsets[k], tensors[t]), cfg));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<RandomSignRow> run_random_sign(std::uint64_t seed_base, std::size_t trials, const DetectorConfig& cfg) {
    std::vector<RandomSignRow> rows;
    for (const auto& [m, n] : random_shapes()) {
        for (bool negative : {false, true}) {
            RandomSignRow row;
            row.order = m;
            row.dim = n;
            row.negative_corner = negative;
            for (std::size_t t = 0; t < trials; ++t) {
                const std::uint64_t seed = trial_seed(seed_base, m, n, t);
                const SymmetricTensor a =
                    negative ? random_tensor_negative_corner(m, n, seed) : random_tensor(m, n, seed);
                tally(row, detect(a, cfg));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace copos::experiments
