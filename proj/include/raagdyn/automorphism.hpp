#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "raagdyn/graph.hpp"
#include "raagdyn/word.hpp"

namespace raagdyn {

// ---- Laurence-Servatius generators ----

struct Inversion {
    VertexId v; // v -> v^-1
    bool operator==(const Inversion&) const = default;
};

struct GraphSymmetry {
    std::vector<VertexId> perm; // perm[v] = image vertex; must preserve edges
    bool operator==(const GraphSymmetry&) const = default;
};

struct Transvection {
    VertexId v, w; // v -> w v, requires lk(v) subset of st(w)
    bool operator==(const Transvection&) const = default;
};

struct PartialConjugation {
    VertexSet component; // a connected component of the graph minus st(w)
    VertexId w;          // members -> w member w^-1
    bool operator==(const PartialConjugation&) const = default;
};

using LSGenerator = std::variant<Inversion, GraphSymmetry, Transvection, PartialConjugation>;

// ---- mod-2 abelianization ----

// Square 0/1 matrix over Z/2, indexed by vertex ids.
class Mod2Matrix {
public:
    explicit Mod2Matrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
    static Mod2Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t row, std::size_t col) const { return bits_[row * n_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool value) { bits_[row * n_ + col] = value ? 1 : 0; }

    Mod2Matrix operator*(const Mod2Matrix& other) const;
    bool operator==(const Mod2Matrix& other) const = default;

    bool is_identity() const;
    bool invertible() const; // Gaussian elimination over Z/2

private:
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

// Smallest k >= 1 with m^k = I, or nullopt past max_exponent.
std::optional<std::uint64_t> multiplicative_order(const Mod2Matrix& m, std::uint64_t max_exponent);

// ---- automorphisms ----

enum class Verification {
    HomomorphismOnly, // relations verified, no inverse known
    Automorphism,     // inverse supplied or derived, composition identities verified
};

// An endomorphism of the group given by a generator-image table. Images are
// stored reduced. Construction always verifies that the defining relations
// are preserved; supplying inverse images upgrades the object to a verified
// automorphism. Objects without a verified inverse stay usable for forward
// dynamics and carry the HomomorphismOnly flag into reports.
class Automorphism {
public:
    static Automorphism identity(SimplicialGraph g);
    static Automorphism from_images(SimplicialGraph g, std::vector<Word> images,
                                    std::optional<std::vector<Word>> inverse_images = {});
    // Composite of the listed generators, first listed applied first.
    // The inverse is assembled from the reversed, inverted sequence.
    static Automorphism from_generators(SimplicialGraph g, std::vector<LSGenerator> generators);

    const SimplicialGraph& graph() const { return graph_; }
    const Word& image(VertexId v) const { return images_.at(v); }
    const std::vector<Word>& images() const { return images_; }
    bool has_inverse() const { return inverse_images_.has_value(); }
    const std::vector<Word>& inverse_images() const;
    Verification verification() const { return verification_; }
    bool verified() const { return verification_ == Verification::Automorphism; }
    const std::optional<std::vector<LSGenerator>>& generator_sequence() const { return generators_; }

    // Substitute each letter v^e by image(v)^e and reduce.
    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;

    Automorphism compose(const Automorphism& inner) const; // this after inner
    Automorphism power(std::uint64_t k) const;
    // g * phi(.) * g^-1
    Automorphism conjugate_by(const Word& g) const;
    Automorphism inverse() const;

private:
    Automorphism(SimplicialGraph g, std::vector<Word> images,
                 std::optional<std::vector<Word>> inverse_images, Verification verification)
        : graph_(std::move(g)),
          images_(std::move(images)),
          inverse_images_(std::move(inverse_images)),
          verification_(verification) {}

    SimplicialGraph graph_;
    std::vector<Word> images_;
    std::optional<std::vector<Word>> inverse_images_;
    Verification verification_;
    std::optional<std::vector<LSGenerator>> generators_;
};

bool is_positive(const Automorphism& phi);

// The purity conditions are reported separately: downstream theorems only
// need the support clause, while the definition also asks every image to be
// cyclically reduced.
struct PurityReport {
    bool pure;
    std::vector<bool> support_ok;            // s in supp(phi(s))
    std::vector<bool> cyclically_reduced_ok; // phi(s) cyclically reduced
};
PurityReport is_pure(const Automorphism& phi);

struct SquareWitness {
    VertexId edge_u, edge_v;       // edge of the graph
    VertexId support_u, support_v; // non-commuting pair from the image supports
};
struct SquareReport {
    bool square;
    std::optional<SquareWitness> witness;
};
SquareReport is_square(const Automorphism& phi);

// Entry (v,s) = exponent sum of v in phi(s), mod 2.
Mod2Matrix mod2_matrix(const Automorphism& phi);

struct PurePowerResult {
    std::uint64_t exponent; // multiplicative order of the mod-2 matrix
    PurityReport purity;    // purity report of phi^exponent
    Automorphism power;     // phi^exponent
};
// Throws ValidationError for a singular mod-2 matrix (not an automorphism)
// and when the order search exceeds max_exponent.
PurePowerResult pure_power(const Automorphism& phi, std::uint64_t max_exponent = 1u << 20);

} // namespace raagdyn
