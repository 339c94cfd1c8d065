#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "raagdyn/automorphism.hpp"

// Seeded generation of random graphs and random compositions of
// Laurence-Servatius generators, for the property suites.
namespace sampler {

using raagdyn::Automorphism;
using raagdyn::LSGenerator;
using raagdyn::SimplicialGraph;

class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }
    bool coin() { return below(2) == 0; }

    // graph with 2..max_vertices vertices named g0, g1, ...; each edge
    // present with probability 1/2
    SimplicialGraph graph(std::size_t max_vertices);

    // uniform choice among the valid generators of one random type;
    // positive_only restricts to transvections and graph symmetries
    std::optional<LSGenerator> generator(const SimplicialGraph& g, bool positive_only = false);

    // composition of 1..max_generators random generators
    Automorphism automorphism(const SimplicialGraph& g, std::size_t max_generators,
                              bool positive_only = false);

    // random word of exactly the given length (not necessarily reduced)
    raagdyn::Word word(const SimplicialGraph& g, std::size_t length);

private:
    std::mt19937_64 rng_;
};

// Occurrence-count transition matrix bound: substitution without any
// cancellation, so an upper bound for |phi^k(s)|. Returns nullopt on
// overflow past the cap.
std::optional<std::uint64_t> power_length_bound(const Automorphism& phi, std::uint64_t k,
                                                std::uint64_t cap);

// pure_power guarded by the length bound at the actual mod-2 order, so the
// materialized images stay below image_cap letters; nullopt when they would
// not.
std::optional<raagdyn::PurePowerResult> bounded_pure_power(const Automorphism& phi,
                                                           std::uint64_t image_cap);

} // namespace sampler
