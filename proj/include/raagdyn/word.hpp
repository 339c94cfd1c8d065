#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raagdyn/graph.hpp"

namespace raagdyn {

// One signed occurrence of a generator, packed into 4 bytes.
class Letter {
public:
    Letter(VertexId v, int sign) : code_(sign < 0 ? -std::int32_t(v + 1) : std::int32_t(v + 1)) {}

    VertexId vertex() const { return VertexId(std::abs(code_)) - 1; }
    int sign() const { return code_ < 0 ? -1 : 1; }
    Letter inverse() const { return Letter(-code_); }

    friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
    friend bool operator<(Letter a, Letter b) { return a.code_ < b.code_; }

private:
    explicit Letter(std::int32_t code) : code_(code) {}
    std::int32_t code_;
};

// A word over the generators of a fixed graph. The letter sequence is the
// semantic model; reduced() reports whether a reduction already ran on it,
// so repeated reductions short-circuit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static Word single(VertexId v, int sign = 1) { return Word({Letter(v, sign)}); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    bool reduced() const { return reduced_; }

    Word inverse() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    bool reduced_ = false;

    friend class ReducedWordBuilder;
    friend Word mark_reduced(std::vector<Letter> letters);
};

// Plain concatenation, no reduction.
Word concat(const Word& a, const Word& b);

// Wrap letters that are already known to be reduced.
Word mark_reduced(std::vector<Letter> letters);

// Incremental shuffle-cancel reduction. Appending x^e to a reduced prefix
// scans backward: a trailing x^-e whose interposed letters all commute with
// x cancels; a same-generator letter or a non-commuting letter stops the
// scan. The buffer is reduced after every push.
class ReducedWordBuilder {
public:
    explicit ReducedWordBuilder(const SimplicialGraph& g) : g_(&g) {}

    void push(Letter l);
    // Append w (sign=+1) or w^-1 (sign=-1), letter by letter.
    void push_word(const Word& w, int sign = 1);

    std::size_t size() const { return out_.size(); }
    void reserve(std::size_t n) { out_.reserve(n); }
    Word take();

private:
    const SimplicialGraph* g_;
    std::vector<Letter> out_;
};

// Shortest form of w; same group element, reduced flag set.
Word reduce(const SimplicialGraph& g, const Word& w);

struct CyclicForm {
    Word core;       // cyclically reduced
    Word conjugator; // conjugator * core * conjugator^-1 == w
};

CyclicForm cyclically_reduce(const SimplicialGraph& g, const Word& w);

struct SupportLength {
    VertexSet support;
    std::size_t length;
};

// Support and length of the reduced form of w.
SupportLength support_and_length(const SimplicialGraph& g, const Word& w);

// Deterministic normal form: reduce, then repeatedly pull the least
// movable letter to the front. Two words are equal in the group iff their
// canonical forms coincide letter for letter.
Word canonical_form(const SimplicialGraph& g, const Word& w);

bool words_equal(const SimplicialGraph& g, const Word& a, const Word& b);

// Token grammar: whitespace-separated NAME or NAME^INT tokens, INT a
// nonzero decimal integer; NAME^k expands to |k| signed copies. The empty
// word is spelled "1".
Word parse_word(const SimplicialGraph& g, std::string_view text);
std::string format_word(const SimplicialGraph& g, const Word& w);

} // namespace raagdyn
