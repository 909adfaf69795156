#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordrep {

/// Node label of a clique-width expression.
///
/// Expressions built from local words use Σ_k = {0,1}^k ∪ {two}: a 0/1
/// tuple with one component per marked block, or the absorbing label `two`
/// for letters that occur at least twice inside one block. The all-zero
/// tuple is reserved for the node currently being added. Plain numbered
/// labels are accepted for hand-written expressions.
class Label {
 public:
  enum class Kind : std::uint8_t { Tuple, Number, Two };

  static Label tuple(std::vector<std::uint8_t> bits);
  static Label zero(std::size_t k) { return tuple(std::vector<std::uint8_t>(k, 0)); }
  static Label two() { return Label(Kind::Two, {}, 0); }
  static Label number(std::uint32_t value) { return Label(Kind::Number, {}, value); }

  Kind kind() const noexcept { return kind_; }
  bool is_two() const noexcept { return kind_ == Kind::Two; }
  bool is_tuple() const noexcept { return kind_ == Kind::Tuple; }
  bool is_zero_tuple() const noexcept;

  /// Components of a tuple label; empty for other kinds.
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::uint32_t value() const noexcept { return value_; }

  /// Whether the label lies in Σ_k.
  bool in_sigma(std::size_t k) const noexcept {
    return is_two() || (is_tuple() && bits_.size() == k);
  }

  /// `two`, `(1 0)` or a decimal number.
  std::string str() const;

  auto operator<=>(const Label&) const = default;

 private:
  Label(Kind kind, std::vector<std::uint8_t> bits, std::uint32_t value)
      : kind_(kind), bits_(std::move(bits)), value_(value) {}

  Kind kind_;
  std::vector<std::uint8_t> bits_;
  std::uint32_t value_;
};

}  // namespace wordrep
