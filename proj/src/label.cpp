#include "wordrep/label.hpp"

#include <algorithm>

#include "wordrep/error.hpp"

namespace wordrep {

Label Label::tuple(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw InvalidArgument("tuple label needs at least one component");
  if (std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b > 1; })) {
    throw InvalidArgument("tuple label components must be 0 or 1");
  }
  return Label(Kind::Tuple, std::move(bits), 0);
}

bool Label::is_zero_tuple() const noexcept {
  return is_tuple() &&
         std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string Label::str() const {
  switch (kind_) {
    case Kind::Two:
      return "two";
    case Kind::Number:
      return std::to_string(value_);
    case Kind::Tuple:
      break;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i > 0) out += ' ';
    out += static_cast<char>('0' + bits_[i]);
  }
  return out + ")";
}

}  // namespace wordrep
