#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raagdyn/automorphism.hpp"
#include "raagdyn/diagram.hpp"

namespace raagdyn {

inline constexpr std::size_t kDefaultKMax = 25;
inline constexpr std::uint64_t kDefaultLengthCap = 10'000'000;
// An estimated dilatation at or above this value, measured with k_max >= 20,
// declares exponential growth; anything weaker stays inconclusive.
inline constexpr double kExponentialThreshold = 0.05;
inline constexpr std::size_t kMinKMaxForExponential = 20;

struct OrbitLengths {
    VertexId generator;
    std::vector<std::uint64_t> lengths; // lengths[k] = |phi^k(generator)|, lengths[0] = 1
    bool truncated;                     // orbit stopped because the cap was hit
};

// Iterate every generator's orbit, recording reduced lengths. A generator
// stops early (truncated) once its next length would exceed length_cap.
// Orbits are independent and computed in parallel; RAAGDYN_THREADS caps the
// worker count.
std::vector<OrbitLengths> iterate_lengths(const Automorphism& phi, std::size_t k_max,
                                          std::uint64_t length_cap = kDefaultLengthCap);

struct DilatationEstimate {
    struct PerGenerator {
        double lambda_hat;
        std::size_t window_begin, window_end; // inclusive index range of the fit
    };
    std::vector<PerGenerator> per_generator;
    double lambda_phi_hat;     // max over generators
    VertexId argmax_generator; // earliest generator attaining the max
};

// Least-squares slope of ln(length) against k over the tail half of each
// orbit (at least 3 points), clamped at zero. Throws ValidationError when an
// orbit has fewer than 4 recorded lengths.
DilatationEstimate estimate_dilatation(const std::vector<OrbitLengths>& orbits);

struct DegreeFit {
    double degree_hat;
    double residual; // RMS of the log-log fit
};

// Least-squares slope of ln(length) against ln(k) for k >= 2 on the tail
// window. Requires at least 5 recorded lengths.
DegreeFit fit_polynomial_degree(const OrbitLengths& orbit);

enum class GrowthKind { PolynomialByTheorem, PerGeneratorMixed, Inconclusive };

struct GeneratorGrowth {
    VertexId generator;
    bool downset_acyclic;
    std::optional<std::size_t> degree_bound; // terminal-partition height of the down-set
    double lambda_hat;
    std::optional<DegreeFit> fit;
};

struct GrowthReport {
    GrowthKind kind;
    std::optional<std::size_t> degree_bound; // set for PolynomialByTheorem
    std::vector<GeneratorGrowth> per_generator;
    std::optional<DilatationEstimate> estimates;
    std::vector<OrbitLengths> orbits;
    std::optional<InvariantSubgraphResult> invariant_subgraph;
    std::vector<std::string> warnings;
};

// Full growth classification: the acyclic-diagram theorem gives polynomial
// growth with degree bounded by the terminal-partition height; otherwise
// generators split into polynomially growing ones (acyclic down-set) and
// candidates for exponential growth, decided by the dilatation estimate.
// A strong estimate triggers extraction of the invariant subgraph from the
// maximizing generator.
GrowthReport classify_growth(const SimplicialGraph& g, const Automorphism& phi,
                             std::size_t k_max = kDefaultKMax,
                             std::uint64_t length_cap = kDefaultLengthCap);

} // namespace raagdyn
