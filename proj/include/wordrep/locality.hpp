#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/label.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// An enumeration of (some) alphabet: the order in which letters get marked.
class MarkingSequence {
 public:
  MarkingSequence() = default;
  /// Throws InvalidArgument on a repeated letter.
  explicit MarkingSequence(std::vector<Letter> order);

  /// Comma-separated letters, e.g. "p,e,r". Surrounding blanks are ignored.
  static MarkingSequence parse(std::string_view text);

  const std::vector<Letter>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  const Letter& operator[](std::size_t i) const { return order_[i]; }

  /// Whether this is a permutation of `word`'s alphabet.
  bool covers(const Word& word) const;

  /// Comma-separated form accepted by `parse`.
  std::string str() const;

  friend bool operator==(const MarkingSequence&, const MarkingSequence&) = default;

 private:
  std::vector<Letter> order_;
};

/// 1-based, inclusive span of word positions.
struct Interval {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Block structure of a word after one marking stage.
struct StageTrace {
  std::size_t stage = 0;  ///< 1-based
  Letter marked;          ///< the letter marked at this stage
  std::vector<Interval> blocks;
  /// Block j of the previous stage lies inside block old_to_new[j] here.
  std::vector<std::size_t> old_to_new;
  /// Occurrences per block, for every letter marked so far.
  std::map<Letter, std::vector<std::size_t>> profile;

  std::size_t block_count() const noexcept { return blocks.size(); }

  /// All-zero for letters not yet marked.
  std::vector<std::size_t> profile_of(const Letter& letter) const;

  /// Previous-stage blocks contained in block j (empty for a brand-new block).
  std::vector<std::size_t> sources(std::size_t j) const;
  bool is_new_block(std::size_t j) const { return sources(j).empty(); }
};

/// Marks the letters of `word` in the order of `sequence`, one stage per
/// letter. Throws InvalidArgument unless `sequence` covers the alphabet.
std::vector<StageTrace> simulate_marking(const Word& word,
                                         const MarkingSequence& sequence);

/// Block count of every stage; same preconditions as simulate_marking.
std::vector<std::size_t> stage_block_counts(const Word& word,
                                            const MarkingSequence& sequence);

/// Largest block count over all stages (0 for the empty word).
std::size_t max_block_count(const Word& word, const MarkingSequence& sequence);

/// Throws InvalidArgument if k < 1 or the sequence does not fit the word.
bool is_k_local_with(const Word& word, const MarkingSequence& sequence,
                     std::size_t k);

struct LocalityResult {
  std::size_t k = 0;
  MarkingSequence witness;
};

inline constexpr std::size_t kDefaultLocalityLetterBudget = 12;

/// Exact locality by branch and bound over marking sequences. The witness
/// is the lexicographically smallest optimal sequence.
///
/// Throws InvalidArgument for the empty word and BudgetExceeded when the
/// alphabet has more than `max_letters` letters.
LocalityResult locality(const Word& word,
                        std::size_t max_letters = kDefaultLocalityLetterBudget);

/// Some marking order (as letter codes) keeping at most `k` blocks at every
/// stage, the lexicographically smallest one; nullopt if there is none.
std::optional<std::vector<std::uint32_t>> find_local_order(
    std::span<const std::uint32_t> codes, std::size_t alphabet_size,
    std::size_t k);

/// Σ_k label of every marked letter at the stage of `trace`. Throws
/// InvalidArgument if the stage has more than k blocks.
std::map<Letter, Label> block_labels(const StageTrace& trace, std::size_t k);

}  // namespace wordrep
