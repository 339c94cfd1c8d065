#include "raagdyn/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "raagdyn/errors.hpp"

namespace raagdyn {

namespace {

std::size_t worker_count(std::size_t jobs) {
    std::size_t limit = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RAAGDYN_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed > 0)
            limit = std::min(limit, static_cast<std::size_t>(parsed));
    }
    return std::max<std::size_t>(1, std::min(limit, jobs));
}

// Substitute-and-reduce with an early stop once the output buffer passes the
// cap; nullopt means the next word would not fit.
std::optional<Word> apply_capped(const Automorphism& phi, const Word& w, std::uint64_t cap) {
    ReducedWordBuilder builder(phi.graph());
    for (Letter l : w) {
        builder.push_word(phi.image(l.vertex()), l.sign());
        if (builder.size() > cap)
            return std::nullopt;
    }
    return builder.take();
}

OrbitLengths orbit_of(const Automorphism& phi, VertexId s, std::size_t k_max,
                      std::uint64_t length_cap) {
    OrbitLengths orbit{s, {1}, false};
    Word w = reduce(phi.graph(), Word::single(s));
    for (std::size_t k = 1; k <= k_max; ++k) {
        auto next = apply_capped(phi, w, length_cap);
        if (!next) {
            orbit.truncated = true;
            break;
        }
        orbit.lengths.push_back(next->size());
        w = std::move(*next);
    }
    return orbit;
}

struct Fit {
    double slope;
    double residual;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double sq = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (slope * xs[i] + intercept);
        sq += e * e;
    }
    return {slope, std::sqrt(sq / n)};
}

double safe_log(std::uint64_t length) { return std::log(double(std::max<std::uint64_t>(1, length))); }

} // namespace

std::vector<OrbitLengths> iterate_lengths(const Automorphism& phi, std::size_t k_max,
                                          std::uint64_t length_cap) {
    if (k_max < 1)
        throw ValidationError("k_max must be at least 1");
    if (length_cap < 1)
        throw ValidationError("length_cap must be at least 1");

    const std::size_t n = phi.graph().vertex_count();
    std::vector<OrbitLengths> orbits(n);
    const std::size_t workers = worker_count(n);
    if (workers <= 1) {
        for (VertexId s = 0; s < n; ++s)
            orbits[s] = orbit_of(phi, s, k_max, length_cap);
        return orbits;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t s = next.fetch_add(1); s < n; s = next.fetch_add(1))
                orbits[s] = orbit_of(phi, VertexId(s), k_max, length_cap);
        });
    }
    for (auto& thread : pool)
        thread.join();
    return orbits;
}

DilatationEstimate estimate_dilatation(const std::vector<OrbitLengths>& orbits) {
    DilatationEstimate est;
    est.lambda_phi_hat = 0.0;
    est.argmax_generator = 0;
    bool first = true;
    for (const auto& orbit : orbits) {
        const std::size_t n = orbit.lengths.size();
        if (n < 4)
            throw ValidationError("orbit too short: dilatation estimation needs at least 4 points");
        std::size_t begin = n / 2;
        if (n - begin < 3)
            begin = n - 3;
        std::vector<double> xs, ys;
        for (std::size_t k = begin; k < n; ++k) {
            xs.push_back(double(k));
            ys.push_back(safe_log(orbit.lengths[k]));
        }
        const double lambda = std::max(0.0, least_squares(xs, ys).slope);
        est.per_generator.push_back({lambda, begin, n - 1});
        if (first || lambda > est.lambda_phi_hat) {
            est.lambda_phi_hat = lambda;
            est.argmax_generator = orbit.generator;
            first = false;
        }
    }
    return est;
}

DegreeFit fit_polynomial_degree(const OrbitLengths& orbit) {
    const std::size_t n = orbit.lengths.size();
    if (n < 5)
        throw ValidationError("orbit too short: degree fitting needs at least 5 points");
    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k < n; ++k)
        ks.push_back(k);
    std::size_t begin = ks.size() / 2;
    if (ks.size() - begin < 3)
        begin = ks.size() >= 3 ? ks.size() - 3 : 0;
    std::vector<double> xs, ys;
    for (std::size_t i = begin; i < ks.size(); ++i) {
        xs.push_back(std::log(double(ks[i])));
        ys.push_back(safe_log(orbit.lengths[ks[i]]));
    }
    const Fit fit = least_squares(xs, ys);
    return {fit.slope, fit.residual};
}

GrowthReport classify_growth(const SimplicialGraph& g, const Automorphism& phi, std::size_t k_max,
                             std::uint64_t length_cap) {
    if (!(g == phi.graph()))
        throw ValidationError("graph does not match the automorphism's ambient graph");

    GrowthReport report;
    if (!phi.verified())
        report.warnings.emplace_back("unverified-automorphism");
    const PurityReport purity = is_pure(phi);
    if (!purity.pure)
        report.warnings.emplace_back("not-pure");
    if (!is_square(phi).square)
        report.warnings.emplace_back("not-square");

    const AutomorphismDiagram diagram = build_diagram(phi);
    report.orbits = iterate_lengths(phi, k_max, length_cap);
    for (const auto& orbit : report.orbits)
        if (orbit.truncated)
            report.warnings.emplace_back("orbit-truncated:" + g.vertex_name(orbit.generator));

    bool estimable = true;
    for (const auto& orbit : report.orbits)
        estimable = estimable && orbit.lengths.size() >= 4;
    if (estimable)
        report.estimates = estimate_dilatation(report.orbits);
    else
        report.warnings.emplace_back("orbits-too-short-for-estimation");

    bool acyclic = true;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        GeneratorGrowth entry;
        entry.generator = s;
        const VertexSet down = down_set(diagram, s);
        entry.downset_acyclic = trim(diagram, down).empty();
        if (entry.downset_acyclic)
            entry.degree_bound = terminal_partition_within(diagram, down).height();
        else
            acyclic = false;
        entry.lambda_hat =
            report.estimates ? report.estimates->per_generator[s].lambda_hat : 0.0;
        // degree fits only mean something for polynomially growing orbits
        if (entry.downset_acyclic && report.orbits[s].lengths.size() >= 5)
            entry.fit = fit_polynomial_degree(report.orbits[s]);
        report.per_generator.push_back(std::move(entry));
    }

    if (acyclic) {
        report.kind = GrowthKind::PolynomialByTheorem;
        report.degree_bound = terminal_partition(diagram).height();
        return report;
    }

    const bool horizon_ok = k_max >= kMinKMaxForExponential;
    const bool exponential = report.estimates && horizon_ok &&
                             report.estimates->lambda_phi_hat >= kExponentialThreshold;
    if (exponential) {
        report.kind = GrowthKind::PerGeneratorMixed;
        std::vector<double> lambdas(g.vertex_count());
        for (VertexId s = 0; s < g.vertex_count(); ++s)
            lambdas[s] = report.estimates->per_generator[s].lambda_hat;
        report.invariant_subgraph =
            invariant_subgraph(g, phi, report.estimates->argmax_generator, &lambdas);
    } else {
        report.kind = GrowthKind::Inconclusive;
        if (!horizon_ok)
            report.warnings.emplace_back("k-max-below-exponential-horizon");
    }
    return report;
}

} // namespace raagdyn
