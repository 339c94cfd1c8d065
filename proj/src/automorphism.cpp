#include "raagdyn/automorphism.hpp"

#include <algorithm>

#include "raagdyn/errors.hpp"

namespace raagdyn {

namespace {

Word apply_map(const SimplicialGraph& g, const std::vector<Word>& images, const Word& w) {
    ReducedWordBuilder builder(g);
    for (Letter l : w) {
        if (l.vertex() >= images.size())
            throw ValidationError("word uses a generator outside the ambient graph");
        builder.push_word(images[l.vertex()], l.sign());
    }
    return builder.take();
}

void check_relations(const SimplicialGraph& g, const std::vector<Word>& images) {
    for (const auto& [u, v] : g.edges()) {
        if (!words_equal(g, concat(images[u], images[v]), concat(images[v], images[u])))
            throw ValidationError("images do not preserve the relation [" + g.vertex_name(u) +
                                  "," + g.vertex_name(v) + "]");
    }
}

void check_mutually_inverse(const SimplicialGraph& g, const std::vector<Word>& images,
                            const std::vector<Word>& inverses) {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        const Word generator = Word::single(s);
        if (!(apply_map(g, images, inverses[s]) == reduce(g, generator)))
            throw ValidationError("inverse check failed: phi(phi^-1(" + g.vertex_name(s) +
                                  ")) is not " + g.vertex_name(s));
        if (!(apply_map(g, inverses, images[s]) == reduce(g, generator)))
            throw ValidationError("inverse check failed: phi^-1(phi(" + g.vertex_name(s) +
                                  ")) is not " + g.vertex_name(s));
    }
}

std::vector<Word> identity_images(const SimplicialGraph& g) {
    std::vector<Word> images;
    images.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        images.push_back(reduce(g, Word::single(v)));
    return images;
}

struct GeneratorMaps {
    std::vector<Word> forward;
    std::vector<Word> backward;
};

GeneratorMaps generator_maps(const SimplicialGraph& g, const LSGenerator& generator) {
    GeneratorMaps maps{identity_images(g), identity_images(g)};

    if (const auto* inv = std::get_if<Inversion>(&generator)) {
        if (inv->v >= g.vertex_count())
            throw ValidationError("inversion vertex out of range");
        maps.forward[inv->v] = reduce(g, Word::single(inv->v, -1));
        maps.backward[inv->v] = maps.forward[inv->v];
        return maps;
    }

    if (const auto* sym = std::get_if<GraphSymmetry>(&generator)) {
        const std::size_t n = g.vertex_count();
        if (sym->perm.size() != n)
            throw ValidationError("graph symmetry permutation has wrong size");
        std::vector<std::uint8_t> hit(n, 0);
        for (VertexId image : sym->perm) {
            if (image >= n || hit[image])
                throw ValidationError("graph symmetry is not a permutation");
            hit[image] = 1;
        }
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(sym->perm[u], sym->perm[v]))
                    throw ValidationError("graph symmetry does not preserve the edge relation");
        for (VertexId v = 0; v < n; ++v) {
            maps.forward[v] = reduce(g, Word::single(sym->perm[v]));
            maps.backward[sym->perm[v]] = reduce(g, Word::single(v));
        }
        return maps;
    }

    if (const auto* tv = std::get_if<Transvection>(&generator)) {
        if (tv->v >= g.vertex_count() || tv->w >= g.vertex_count())
            throw ValidationError("transvection vertex out of range");
        if (tv->v == tv->w)
            throw ValidationError("transvection requires distinct vertices");
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            if (g.adjacent(x, tv->v) && x != tv->w && !g.adjacent(x, tv->w))
                throw ValidationError("transvection side condition lk(" + g.vertex_name(tv->v) +
                                      ") within st(" + g.vertex_name(tv->w) + ") fails at '" +
                                      g.vertex_name(x) + "'");
        }
        maps.forward[tv->v] =
            reduce(g, Word({Letter(tv->w, 1), Letter(tv->v, 1)}));
        maps.backward[tv->v] =
            reduce(g, Word({Letter(tv->w, -1), Letter(tv->v, 1)}));
        return maps;
    }

    const auto& pc = std::get<PartialConjugation>(generator);
    if (pc.w >= g.vertex_count())
        throw ValidationError("partial conjugation vertex out of range");
    VertexSet component = set_sorted_unique(pc.component);
    if (component.empty())
        throw ValidationError("partial conjugation needs a nonempty component");
    const VertexSet star = neighborhood(g, pc.w).star;
    const VertexSet outside = set_difference(g.all_vertices(), star);
    const auto comps = components_within(g, outside);
    const bool matches = std::any_of(comps.begin(), comps.end(),
                                     [&](const VertexSet& c) { return c == component; });
    if (!matches)
        throw ValidationError("the given set is not a connected component of the graph minus st(" +
                              g.vertex_name(pc.w) + ")");
    for (VertexId c : component) {
        maps.forward[c] =
            reduce(g, Word({Letter(pc.w, 1), Letter(c, 1), Letter(pc.w, -1)}));
        maps.backward[c] =
            reduce(g, Word({Letter(pc.w, -1), Letter(c, 1), Letter(pc.w, 1)}));
    }
    return maps;
}

} // namespace

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
    Mod2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& other) const {
    if (n_ != other.n_)
        throw ValidationError("mod-2 matrix size mismatch");
    Mod2Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            if (!get(i, k))
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.bits_[i * n_ + j] ^= other.bits_[k * n_ + j];
        }
    }
    return out;
}

bool Mod2Matrix::is_identity() const { return *this == identity(n_); }

bool Mod2Matrix::invertible() const {
    Mod2Matrix m = *this;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && !m.get(pivot, col))
            ++pivot;
        if (pivot == n_)
            return false;
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m.bits_[pivot * n_ + j], m.bits_[col * n_ + j]);
            }
        for (std::size_t row = 0; row < n_; ++row) {
            if (row != col && m.get(row, col))
                for (std::size_t j = 0; j < n_; ++j)
                    m.bits_[row * n_ + j] ^= m.bits_[col * n_ + j];
        }
    }
    return true;
}

std::optional<std::uint64_t> multiplicative_order(const Mod2Matrix& m, std::uint64_t max_exponent) {
    Mod2Matrix acc = m;
    for (std::uint64_t k = 1; k <= max_exponent; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc * m;
    }
    return std::nullopt;
}

Automorphism Automorphism::identity(SimplicialGraph g) {
    auto images = identity_images(g);
    auto inverses = images;
    return Automorphism(std::move(g), std::move(images), std::move(inverses),
                        Verification::Automorphism);
}

Automorphism Automorphism::from_images(SimplicialGraph g, std::vector<Word> images,
                                       std::optional<std::vector<Word>> inverse_images) {
    if (images.size() != g.vertex_count())
        throw ValidationError("expected one image per vertex");
    for (auto& w : images)
        w = reduce(g, w);
    check_relations(g, images);

    Verification level = Verification::HomomorphismOnly;
    if (inverse_images) {
        if (inverse_images->size() != g.vertex_count())
            throw ValidationError("expected one inverse image per vertex");
        for (auto& w : *inverse_images)
            w = reduce(g, w);
        check_relations(g, *inverse_images);
        check_mutually_inverse(g, images, *inverse_images);
        level = Verification::Automorphism;
    }
    return Automorphism(std::move(g), std::move(images), std::move(inverse_images), level);
}

Automorphism Automorphism::from_generators(SimplicialGraph g, std::vector<LSGenerator> generators) {
    std::vector<Word> images = identity_images(g);
    std::vector<Word> inverses = identity_images(g);
    for (const auto& generator : generators) {
        GeneratorMaps maps = generator_maps(g, generator);
        // composite so far = gen_k ... gen_1 (first listed acts first)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            images[v] = apply_map(g, maps.forward, images[v]);
        std::vector<Word> next_inverses(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            next_inverses[v] = apply_map(g, inverses, maps.backward[v]);
        inverses = std::move(next_inverses);
    }
    check_relations(g, images);
    Automorphism phi(std::move(g), std::move(images), std::move(inverses),
                     Verification::Automorphism);
    phi.generators_ = std::move(generators);
    return phi;
}

const std::vector<Word>& Automorphism::inverse_images() const {
    if (!inverse_images_)
        throw ValidationError("automorphism has no verified inverse");
    return *inverse_images_;
}

Word Automorphism::apply(const Word& w) const { return apply_map(graph_, images_, w); }

Word Automorphism::apply_inverse(const Word& w) const {
    return apply_map(graph_, inverse_images(), w);
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
    if (!(graph_ == inner.graph_))
        throw ValidationError("cannot compose automorphisms over different graphs");
    std::vector<Word> images(graph_.vertex_count());
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
        images[v] = apply_map(graph_, images_, inner.images_[v]);
    std::optional<std::vector<Word>> inverses;
    if (inverse_images_ && inner.inverse_images_) {
        inverses.emplace(graph_.vertex_count());
        for (VertexId v = 0; v < graph_.vertex_count(); ++v)
            (*inverses)[v] = apply_map(graph_, *inner.inverse_images_, (*inverse_images_)[v]);
    }
    const Verification level = (inverses) ? Verification::Automorphism
                                          : Verification::HomomorphismOnly;
    // compositions of verified homomorphisms preserve the relations
    return Automorphism(graph_, std::move(images), std::move(inverses), level);
}

Automorphism Automorphism::power(std::uint64_t k) const {
    Automorphism acc = identity(graph_);
    Automorphism base = *this;
    while (k > 0) {
        if (k & 1)
            acc = acc.compose(base);
        k >>= 1;
        if (k > 0)
            base = base.compose(base);
    }
    return acc;
}

Automorphism Automorphism::conjugate_by(const Word& g) const {
    std::vector<Word> images(graph_.vertex_count());
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
        ReducedWordBuilder builder(graph_);
        builder.push_word(g, 1);
        builder.push_word(images_[v], 1);
        builder.push_word(g, -1);
        images[v] = builder.take();
    }
    std::optional<std::vector<Word>> inverses;
    if (inverse_images_) {
        // (c_g phi)^-1 = c_h phi^-1 with h = phi^-1(g^-1)
        const Word h = apply_map(graph_, *inverse_images_, g.inverse());
        inverses.emplace(graph_.vertex_count());
        for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
            ReducedWordBuilder builder(graph_);
            builder.push_word(h, 1);
            builder.push_word((*inverse_images_)[v], 1);
            builder.push_word(h, -1);
            (*inverses)[v] = builder.take();
        }
    }
    return Automorphism(graph_, std::move(images), std::move(inverses), verification_);
}

Automorphism Automorphism::inverse() const {
    if (!inverse_images_)
        throw ValidationError("automorphism has no verified inverse");
    return Automorphism(graph_, *inverse_images_, images_, Verification::Automorphism);
}

bool is_positive(const Automorphism& phi) {
    for (const Word& image : phi.images())
        for (Letter l : image)
            if (l.sign() < 0)
                return false;
    return true;
}

PurityReport is_pure(const Automorphism& phi) {
    const auto& g = phi.graph();
    PurityReport report;
    report.pure = true;
    report.support_ok.resize(g.vertex_count());
    report.cyclically_reduced_ok.resize(g.vertex_count());
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        const Word& image = phi.image(s);
        const auto sl = support_and_length(g, image);
        report.support_ok[s] = set_contains(sl.support, s);
        report.cyclically_reduced_ok[s] = cyclically_reduce(g, image).conjugator.empty();
        report.pure = report.pure && report.support_ok[s] && report.cyclically_reduced_ok[s];
    }
    return report;
}

SquareReport is_square(const Automorphism& phi) {
    const auto& g = phi.graph();
    for (const auto& [u, v] : g.edges()) {
        const VertexSet su = support_and_length(g, phi.image(u)).support;
        const VertexSet sv = support_and_length(g, phi.image(v)).support;
        for (VertexId p : su) {
            for (VertexId q : sv) {
                if (p != q && !g.adjacent(p, q))
                    return {false, SquareWitness{u, v, p, q}};
            }
        }
    }
    return {true, std::nullopt};
}

Mod2Matrix mod2_matrix(const Automorphism& phi) {
    const std::size_t n = phi.graph().vertex_count();
    Mod2Matrix m(n);
    for (VertexId s = 0; s < n; ++s) {
        for (Letter l : phi.image(s)) {
            // occurrence parity equals exponent-sum parity
            m.set(l.vertex(), s, !m.get(l.vertex(), s));
        }
    }
    return m;
}

PurePowerResult pure_power(const Automorphism& phi, std::uint64_t max_exponent) {
    const Mod2Matrix m = mod2_matrix(phi);
    if (!m.invertible())
        throw ValidationError(
            "mod-2 abelianization is singular: the map is not an automorphism");
    const auto order = multiplicative_order(m, max_exponent);
    if (!order)
        throw ValidationError("mod-2 matrix order exceeds the exponent cap");
    Automorphism power = phi.power(*order);
    PurityReport purity = is_pure(power);
    return {*order, std::move(purity), std::move(power)};
}

} // namespace raagdyn
