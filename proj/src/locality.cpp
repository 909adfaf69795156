#include "wordrep/locality.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

// Block counter over a word, marking whole letters at a time. unmark() must
// undo mark() calls in reverse order.
class BlockCounter {
 public:
  BlockCounter(std::span<const std::uint32_t> codes, std::size_t alphabet_size)
      : marked_(codes.size(), 0), occurrences_(alphabet_size) {
    for (std::size_t p = 0; p < codes.size(); ++p) occurrences_[codes[p]].push_back(p);
  }

  std::size_t blocks() const noexcept { return blocks_; }

  void mark(std::size_t letter) {
    for (std::size_t p : occurrences_[letter]) {
      const bool left = p > 0 && marked_[p - 1] != 0;
      const bool right = p + 1 < marked_.size() && marked_[p + 1] != 0;
      marked_[p] = 1;
      blocks_ = blocks_ + 1 - static_cast<std::size_t>(left) - static_cast<std::size_t>(right);
    }
  }

  void unmark(std::size_t letter) {
    const auto& occ = occurrences_[letter];
    for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
      const std::size_t p = *it;
      marked_[p] = 0;
      const bool left = p > 0 && marked_[p - 1] != 0;
      const bool right = p + 1 < marked_.size() && marked_[p + 1] != 0;
      blocks_ = blocks_ + static_cast<std::size_t>(left) + static_cast<std::size_t>(right) - 1;
    }
  }

 private:
  std::vector<std::uint8_t> marked_;
  std::vector<std::vector<std::size_t>> occurrences_;
  std::size_t blocks_ = 0;
};

void require_cover(const Word& word, const MarkingSequence& sequence) {
  if (!sequence.covers(word)) {
    throw InvalidArgument("marking sequence '" + sequence.str() +
                          "' is not a permutation of the word's alphabet");
  }
}

// Branch and bound: letters are tried in code order, so the first optimum
// reached is the lexicographically smallest one.
class LocalitySearch {
 public:
  LocalitySearch(std::span<const std::uint32_t> codes, std::size_t alphabet_size)
      : counter_(codes, alphabet_size), used_(alphabet_size, 0) {
    order_.reserve(alphabet_size);
  }

  void run(std::size_t running_max) {
    const std::size_t n = used_.size();
    if (order_.size() == n) {
      if (running_max < best_) {
        best_ = running_max;
        best_order_ = order_;
      }
      return;
    }
    for (std::size_t x = 0; x < n && best_ > 1; ++x) {
      if (used_[x] != 0) continue;
      counter_.mark(x);
      const std::size_t m = std::max(running_max, counter_.blocks());
      if (m < best_) {
        used_[x] = 1;
        order_.push_back(static_cast<std::uint32_t>(x));
        run(m);
        order_.pop_back();
        used_[x] = 0;
      }
      counter_.unmark(x);
    }
  }

  std::size_t best() const noexcept { return best_; }
  const std::vector<std::uint32_t>& best_order() const noexcept { return best_order_; }

 private:
  BlockCounter counter_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> best_order_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
};

bool find_order(BlockCounter& counter, std::vector<std::uint8_t>& used,
                std::vector<std::uint32_t>& order, std::size_t k) {
  if (order.size() == used.size()) return true;
  for (std::size_t x = 0; x < used.size(); ++x) {
    if (used[x] != 0) continue;
    counter.mark(x);
    if (counter.blocks() <= k) {
      used[x] = 1;
      order.push_back(static_cast<std::uint32_t>(x));
      if (find_order(counter, used, order, k)) return true;
      order.pop_back();
      used[x] = 0;
    }
    counter.unmark(x);
  }
  return false;
}

}  // namespace

MarkingSequence::MarkingSequence(std::vector<Letter> order) : order_(std::move(order)) {
  std::set<Letter> seen;
  for (const auto& letter : order_) {
    if (letter.empty()) throw InvalidArgument("empty letter in marking sequence");
    if (!seen.insert(letter).second) {
      throw InvalidArgument("letter '" + letter + "' repeats in marking sequence");
    }
  }
}

MarkingSequence MarkingSequence::parse(std::string_view text) {
  std::vector<Letter> order;
  if (trim(text).empty()) return MarkingSequence();
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = trim(text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
    if (piece.empty()) throw ParseError("empty letter in marking sequence", start);
    order.push_back(std::move(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MarkingSequence(std::move(order));
}

bool MarkingSequence::covers(const Word& word) const {
  if (order_.size() != word.alphabet().size()) return false;
  return std::all_of(order_.begin(), order_.end(),
                     [&](const Letter& l) { return word.contains(l); });
}

std::string MarkingSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i > 0) out += ',';
    out += order_[i];
  }
  return out;
}

std::vector<std::size_t> StageTrace::profile_of(const Letter& letter) const {
  auto it = profile.find(letter);
  if (it == profile.end()) return std::vector<std::size_t>(blocks.size(), 0);
  return it->second;
}

std::vector<std::size_t> StageTrace::sources(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t old = 0; old < old_to_new.size(); ++old) {
    if (old_to_new[old] == j) out.push_back(old);
  }
  return out;
}

std::vector<StageTrace> simulate_marking(const Word& word,
                                         const MarkingSequence& sequence) {
  require_cover(word, sequence);
  std::vector<std::vector<std::size_t>> positions(word.alphabet().size());
  for (std::size_t p = 0; p < word.size(); ++p) positions[word.codes()[p]].push_back(p + 1);

  std::vector<StageTrace> traces;
  traces.reserve(sequence.size());
  std::vector<Interval> blocks;
  std::set<std::uint32_t> marked_codes;
  for (std::size_t stage = 0; stage < sequence.size(); ++stage) {
    const auto code = static_cast<std::uint32_t>(word.code_of(sequence[stage]));
    marked_codes.insert(code);
    const std::vector<Interval> previous = blocks;
    for (std::size_t p : positions[code]) {
      auto it = std::lower_bound(blocks.begin(), blocks.end(), p,
                                 [](const Interval& iv, std::size_t q) { return iv.last < q; });
      const bool join_right = it != blocks.end() && it->first == p + 1;
      const bool join_left = it != blocks.begin() && std::prev(it)->last + 1 == p;
      if (join_left && join_right) {
        std::prev(it)->last = it->last;
        blocks.erase(it);
      } else if (join_left) {
        std::prev(it)->last = p;
      } else if (join_right) {
        it->first = p;
      } else {
        blocks.insert(it, Interval{p, p});
      }
    }

    StageTrace trace;
    trace.stage = stage + 1;
    trace.marked = sequence[stage];
    trace.blocks = blocks;
    for (const auto& old : previous) {
      auto it = std::lower_bound(blocks.begin(), blocks.end(), old.first,
                                 [](const Interval& iv, std::size_t q) { return iv.last < q; });
      trace.old_to_new.push_back(static_cast<std::size_t>(it - blocks.begin()));
    }
    for (std::uint32_t c : marked_codes) {
      std::vector<std::size_t> counts(blocks.size(), 0);
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        for (std::size_t p = blocks[j].first; p <= blocks[j].last; ++p) {
          if (word.codes()[p - 1] == c) ++counts[j];
        }
      }
      trace.profile.emplace(word.alphabet()[c], std::move(counts));
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

std::vector<std::size_t> stage_block_counts(const Word& word,
                                            const MarkingSequence& sequence) {
  require_cover(word, sequence);
  BlockCounter counter(word.codes(), word.alphabet().size());
  std::vector<std::size_t> counts;
  counts.reserve(sequence.size());
  for (const auto& letter : sequence.order()) {
    counter.mark(word.code_of(letter));
    counts.push_back(counter.blocks());
  }
  return counts;
}

std::size_t max_block_count(const Word& word, const MarkingSequence& sequence) {
  auto counts = stage_block_counts(word, sequence);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool is_k_local_with(const Word& word, const MarkingSequence& sequence, std::size_t k) {
  if (k < 1) throw InvalidArgument("locality bound k must be at least 1");
  return max_block_count(word, sequence) <= k;
}

LocalityResult locality(const Word& word, std::size_t max_letters) {
  if (word.empty()) throw InvalidArgument("locality of the empty word is undefined");
  const std::size_t n = word.alphabet().size();
  if (n > max_letters) {
    throw BudgetExceeded("exact locality search limited to " + std::to_string(max_letters) +
                         " letters, word has " + std::to_string(n));
  }
  LocalitySearch search(word.codes(), n);
  search.run(0);
  std::vector<Letter> order;
  for (auto c : search.best_order()) order.push_back(word.alphabet()[c]);
  return LocalityResult{search.best(), MarkingSequence(std::move(order))};
}

std::optional<std::vector<std::uint32_t>> find_local_order(
    std::span<const std::uint32_t> codes, std::size_t alphabet_size, std::size_t k) {
  BlockCounter counter(codes, alphabet_size);
  std::vector<std::uint8_t> used(alphabet_size, 0);
  std::vector<std::uint32_t> order;
  if (find_order(counter, used, order, k)) return order;
  return std::nullopt;
}

std::map<Letter, Label> block_labels(const StageTrace& trace, std::size_t k) {
  if (k < 1) throw InvalidArgument("locality bound k must be at least 1");
  if (trace.block_count() > k) {
    throw InvalidArgument("stage " + std::to_string(trace.stage) + " has " +
                          std::to_string(trace.block_count()) + " blocks, more than k = " +
                          std::to_string(k));
  }
  std::map<Letter, Label> labels;
  for (const auto& [letter, counts] : trace.profile) {
    if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c >= 2; })) {
      labels.emplace(letter, Label::two());
      continue;
    }
    std::vector<std::uint8_t> bits(k, 0);
    for (std::size_t j = 0; j < counts.size(); ++j) bits[j] = counts[j] == 1 ? 1 : 0;
    labels.emplace(letter, Label::tuple(std::move(bits)));
  }
  return labels;
}

}  // namespace wordrep
