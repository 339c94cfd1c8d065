#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "raagdyn/word.hpp"

// Brute-force rewriting oracle, independent of the library's reduction path.
// The rewriting relation is the literal one: swap adjacent letters whose
// generators commute, cancel adjacent x x^-1 pairs.
namespace oracle {

using Letters = std::vector<raagdyn::Letter>;

// All words of minimal length reachable from w (the reduced spellings).
std::set<Letters> minimal_forms(const raagdyn::SimplicialGraph& g, const raagdyn::Word& w);

// Equality decided purely by rewriting closure overlap.
bool equal(const raagdyn::SimplicialGraph& g, const raagdyn::Word& a, const raagdyn::Word& b);

// Exhaustive sweep for one graph: enumerate every word of length <= max_len
// over all signed generators, partition them into rewriting classes with
// union-find, and cross-check reduce / canonical_form / words_equal against
// the classes. Returns the number of words checked; throws on any mismatch.
std::size_t sweep_graph(const raagdyn::SimplicialGraph& g, std::size_t max_len,
                        std::size_t equality_samples, std::uint64_t seed);

} // namespace oracle
