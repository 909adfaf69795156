#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/graphs.hpp"
#include "wordrep/locality.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Letters occurring more than k+1 times in a k-local word. Each of them is
/// checked to alternate with no other letter (InternalError otherwise).
///
/// Without a `witness` the k-locality of `word` is established by search.
/// Throws InvalidArgument if the word is not k-local (or not with `witness`).
std::set<Letter> oversized_letters(const Word& word, std::size_t k,
                                   const std::optional<MarkingSequence>& witness = std::nullopt);

struct WitnessedWord {
  Word word;
  MarkingSequence sequence;
};

/// Rewrites a k-local word into one that is still k-local under the returned
/// sequence, uses every letter at most k+1 times and represents the same
/// graph.
///
/// Every oversized letter is deleted and re-inserted as a doubled prefix
/// `aabb...`; the prefix letters are marked last, right to left.
WitnessedWord uniformize(const Word& word, std::size_t k, const MarkingSequence& sequence);

/// A 2-local word, two occurrences per letter, representing the disjoint
/// union of cliques given by `partition`: the parts in order, then the parts
/// again in reverse part order. The innermost part is marked in order, every
/// other part in reverse order, from the inside out.
WitnessedWord represent_clique_partition(const CliquePartition& partition);

enum class GraphClass {
  L,  ///< represented by a k-local word
  R,  ///< k-representable
};

enum class Verdict { Member, NonMember, Inconclusive };

struct SearchBudget {
  std::size_t max_nodes = 5;
  /// Longest candidate word; 0 means the class bound (see word_length_bound).
  std::size_t max_word_length = 0;
  /// Candidate-prefix extensions before giving up; 0 means unlimited.
  std::uint64_t max_steps = 0;
};

struct MembershipQuery {
  Graph graph;
  GraphClass kind = GraphClass::L;
  std::size_t k = 1;
  SearchBudget budget;
};

struct MembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Word> witness;
  /// k-local marking sequence of the witness (class L only).
  std::optional<MarkingSequence> sequence;
  std::uint64_t steps = 0;
  std::string note;
};

/// Longest word the exhaustive search needs: k*n for R^k (at most k copies
/// of each letter), (k+1)*n for L^k (at most k+1 copies in a k-local word).
std::size_t word_length_bound(GraphClass kind, std::size_t k, std::size_t nodes);

/// Exhaustive search for a representing word over the graph's nodes, by
/// length, then lexicographically; the witness is therefore the smallest
/// among the shortest. Exhausted budgets yield Verdict::Inconclusive, never
/// NonMember. Throws InvalidArgument if k < 1.
MembershipResult decide_membership(const MembershipQuery& query);

const char* to_string(GraphClass kind);
const char* to_string(Verdict verdict);

}  // namespace wordrep
