#include "raagdyn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "raagdyn/errors.hpp"

namespace raagdyn {

namespace {

void check_letters(const SimplicialGraph& g, const Word& w) {
    for (Letter l : w)
        if (l.vertex() >= g.vertex_count())
            throw ValidationError("word uses a generator outside the ambient graph");
}

} // namespace

Word mark_reduced(std::vector<Letter> letters) {
    Word w(std::move(letters));
    w.reduced_ = true;
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back(it->inverse());
    Word w(std::move(inv));
    w.reduced_ = reduced_; // the inverse of a reduced word is reduced
    return w;
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> letters;
    letters.reserve(a.size() + b.size());
    letters.insert(letters.end(), a.begin(), a.end());
    letters.insert(letters.end(), b.begin(), b.end());
    return Word(std::move(letters));
}

void ReducedWordBuilder::push(Letter l) {
    const VertexId x = l.vertex();
    for (std::size_t i = out_.size(); i-- > 0;) {
        const Letter y = out_[i];
        if (y.vertex() == x) {
            if (y.sign() != l.sign()) {
                out_.erase(out_.begin() + std::ptrdiff_t(i));
                return;
            }
            break; // same-sign occurrence blocks any deeper partner
        }
        if (!g_->adjacent(y.vertex(), x))
            break;
    }
    out_.push_back(l);
}

void ReducedWordBuilder::push_word(const Word& w, int sign) {
    if (sign >= 0) {
        for (Letter l : w)
            push(l);
    } else {
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            push(it->inverse());
    }
}

Word ReducedWordBuilder::take() {
    Word w(std::move(out_));
    w.reduced_ = true;
    out_.clear();
    return w;
}

Word reduce(const SimplicialGraph& g, const Word& w) {
    check_letters(g, w);
    if (w.reduced())
        return w;
    ReducedWordBuilder builder(g);
    builder.reserve(w.size());
    builder.push_word(w);
    return builder.take();
}

CyclicForm cyclically_reduce(const SimplicialGraph& g, const Word& w) {
    Word r = reduce(g, w);
    std::vector<Letter> core(r.begin(), r.end());
    std::vector<Letter> conj;

    auto commutes = [&](Letter a, Letter b) {
        return a.vertex() != b.vertex() && g.adjacent(a.vertex(), b.vertex());
    };

    bool stripped = true;
    while (stripped && core.size() >= 2) {
        stripped = false;
        for (VertexId v = 0; v < g.vertex_count() && !stripped; ++v) {
            std::size_t first = core.size(), last = core.size();
            for (std::size_t i = 0; i < core.size(); ++i) {
                if (core[i].vertex() == v) {
                    if (first == core.size())
                        first = i;
                    last = i;
                }
            }
            if (first >= last)
                continue;
            if (core[first].sign() == core[last].sign())
                continue;
            bool front_movable = true;
            for (std::size_t i = 0; i < first && front_movable; ++i)
                front_movable = commutes(core[i], core[first]);
            if (!front_movable)
                continue;
            bool back_movable = true;
            for (std::size_t i = last + 1; i < core.size() && back_movable; ++i)
                back_movable = commutes(core[i], core[last]);
            if (!back_movable)
                continue;
            conj.push_back(core[first]);
            core.erase(core.begin() + std::ptrdiff_t(last));
            core.erase(core.begin() + std::ptrdiff_t(first));
            stripped = true;
        }
    }

    CyclicForm form;
    form.core = mark_reduced(std::move(core));
    form.conjugator = mark_reduced(std::move(conj));
    return form;
}

SupportLength support_and_length(const SimplicialGraph& g, const Word& w) {
    Word r = reduce(g, w);
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    for (Letter l : r)
        seen[l.vertex()] = 1;
    SupportLength out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (seen[v])
            out.support.push_back(v);
    out.length = r.size();
    return out;
}

Word canonical_form(const SimplicialGraph& g, const Word& w) {
    Word r = reduce(g, w);
    std::vector<Letter> rem(r.begin(), r.end());
    std::vector<Letter> out;
    out.reserve(rem.size());

    // blocker masks: a letter of generator v blocks everything that does not
    // commute with v, including v itself
    const std::size_t n = g.vertex_count();
    const std::size_t blocks = (n + 63) / 64;
    std::vector<std::uint64_t> blocker(n * blocks, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId h = 0; h < n; ++h)
            if (h == v || !g.adjacent(h, v))
                blocker[v * blocks + h / 64] |= std::uint64_t(1) << (h % 64);

    std::vector<std::uint64_t> blocked(blocks);
    while (!rem.empty()) {
        std::fill(blocked.begin(), blocked.end(), 0);
        std::size_t best = rem.size();
        for (std::size_t i = 0; i < rem.size(); ++i) {
            const VertexId v = rem[i].vertex();
            const bool movable = !(blocked[v / 64] >> (v % 64) & 1);
            if (movable && (best == rem.size() || v < rem[best].vertex()))
                best = i;
            for (std::size_t b = 0; b < blocks; ++b)
                blocked[b] |= blocker[v * blocks + b];
        }
        out.push_back(rem[best]);
        rem.erase(rem.begin() + std::ptrdiff_t(best));
    }
    return mark_reduced(std::move(out));
}

bool words_equal(const SimplicialGraph& g, const Word& a, const Word& b) {
    Word ra = reduce(g, a);
    Word rb = reduce(g, b);
    if (ra.size() != rb.size())
        return false;
    if (ra == rb)
        return true;
    // all reduced spellings of an element share one letter multiset
    auto key = [](const Word& w) {
        std::vector<std::pair<VertexId, int>> k;
        k.reserve(w.size());
        for (Letter l : w)
            k.emplace_back(l.vertex(), l.sign());
        std::sort(k.begin(), k.end());
        return k;
    };
    if (key(ra) != key(rb))
        return false;
    return canonical_form(g, ra) == canonical_form(g, rb);
}

Word parse_word(const SimplicialGraph& g, std::string_view text) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;

        if (token == "1")
            continue; // identity token

        std::string_view name = token;
        long long exponent = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            name = token.substr(0, caret);
            std::string_view num = token.substr(caret + 1);
            if (!num.empty() && num.front() == '+')
                num.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exponent);
            if (ec != std::errc() || ptr != num.data() + num.size() || exponent == 0)
                throw ParseError("bad exponent in word token '" + std::string(token) + "'");
            if (std::llabs(exponent) > 1'000'000)
                throw ParseError("exponent in word token '" + std::string(token) +
                                 "' exceeds the 10^6 letter limit");
        }
        auto v = g.find_vertex(name);
        if (!v)
            throw ParseError("unknown generator '" + std::string(name) + "' in word token '" +
                             std::string(token) + "'");
        const int sign = exponent < 0 ? -1 : 1;
        for (long long i = 0; i < std::llabs(exponent); ++i)
            letters.emplace_back(*v, sign);
    }
    return Word(std::move(letters));
}

std::string format_word(const SimplicialGraph& g, const Word& w) {
    if (w.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = i + 1;
        while (run < w.size() && w[run] == w[i])
            ++run;
        if (!out.empty())
            out += ' ';
        out += g.vertex_name(w[i].vertex());
        const long long exponent = w[i].sign() * static_cast<long long>(run - i);
        if (exponent != 1)
            out += '^' + std::to_string(exponent);
        i = run;
    }
    return out;
}

} // namespace raagdyn
