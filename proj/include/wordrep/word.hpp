#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// A letter is either one Unicode scalar (UTF-8 encoded) or an arbitrary
/// whitespace-free token.
using Letter = std::string;

enum class WordMode {
  Scalars,  ///< every Unicode scalar value is one letter
  Tokens,   ///< whitespace-separated tokens are letters
};

/// Finite sequence of letters.
///
/// The alphabet is derived: the sorted set of distinct letters. Each
/// position also carries a dense code (its letter's index in `alphabet()`),
/// which the search routines work on.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Throws ParseError on malformed UTF-8.
  static Word parse(std::string_view text, WordMode mode = WordMode::Scalars);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  std::span<const std::uint32_t> codes() const noexcept { return codes_; }

  /// Index of `letter` in `alphabet()`, or alphabet().size() when absent.
  std::size_t code_of(const Letter& letter) const;
  bool contains(const Letter& letter) const {
    return code_of(letter) < alphabet_.size();
  }
  std::size_t count(const Letter& letter) const;
  std::size_t count_code(std::size_t code) const { return counts_[code]; }

  /// Concatenation when every letter is a single scalar, otherwise the
  /// letters joined by single spaces.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::vector<Letter> alphabet_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::size_t> counts_;
};

/// Splits UTF-8 text into its scalar values. Throws ParseError.
std::vector<Letter> utf8_scalars(std::string_view text);

/// Subsequence of `word` made of the letters in `keep`.
Word project(const Word& word, const std::set<Letter>& keep);

/// Whether two distinct letters of `word` alternate. Throws InvalidArgument
/// if a == b or either letter is missing from the alphabet.
bool alternates(const Word& word, const Letter& a, const Letter& b);

/// The graph represented by `word`: its alphabet, with an edge for every
/// alternating pair.
Graph graph_of_word(const Word& word);

/// Alternation matrix over dense letter codes (row-major, size n*n, zero
/// diagonal). `codes` must only use values below `alphabet_size`.
std::vector<std::uint8_t> alternation_matrix(std::span<const std::uint32_t> codes,
                                             std::size_t alphabet_size);

}  // namespace wordrep
