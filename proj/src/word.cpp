#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>

#include "wordrep/error.hpp"

namespace wordrep {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  alphabet_ = letters_;
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
  counts_.assign(alphabet_.size(), 0);
  codes_.reserve(letters_.size());
  for (const auto& letter : letters_) {
    if (letter.empty()) throw InvalidArgument("empty letter");
    auto code = static_cast<std::uint32_t>(code_of(letter));
    codes_.push_back(code);
    ++counts_[code];
  }
}

Word Word::parse(std::string_view text, WordMode mode) {
  if (mode == WordMode::Scalars) return Word(utf8_scalars(text));
  std::vector<Letter> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return Word(std::move(tokens));
}

std::size_t Word::code_of(const Letter& letter) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), letter);
  if (it == alphabet_.end() || *it != letter) return alphabet_.size();
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t Word::count(const Letter& letter) const {
  std::size_t code = code_of(letter);
  return code < alphabet_.size() ? counts_[code] : 0;
}

std::string Word::str() const {
  bool scalars = std::all_of(alphabet_.begin(), alphabet_.end(),
                             [](const Letter& l) {
                               auto s = utf8_scalars(l);
                               return s.size() == 1 &&
                                      !std::isspace(static_cast<unsigned char>(l[0]));
                             });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!scalars && i > 0) out += ' ';
    out += letters_[i];
  }
  return out;
}

std::vector<Letter> utf8_scalars(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    } else {
      throw ParseError("invalid UTF-8 lead byte", i);
    }
    if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence", i);
    for (std::size_t j = 1; j < len; ++j) {
      auto cont = static_cast<unsigned char>(text[i + j]);
      if ((cont & 0xC0) != 0x80) {
        throw ParseError("invalid UTF-8 continuation byte", i + j);
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw ParseError("invalid Unicode scalar", i);
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Word project(const Word& word, const std::set<Letter>& keep) {
  std::vector<Letter> out;
  for (const auto& letter : word.letters()) {
    if (keep.count(letter) != 0) out.push_back(letter);
  }
  return Word(std::move(out));
}

bool alternates(const Word& word, const Letter& a, const Letter& b) {
  if (a == b) throw InvalidArgument("alternation needs two distinct letters");
  if (!word.contains(a)) throw InvalidArgument("letter '" + a + "' not in word");
  if (!word.contains(b)) throw InvalidArgument("letter '" + b + "' not in word");
  const Letter* previous = nullptr;
  for (const auto& letter : word.letters()) {
    if (letter != a && letter != b) continue;
    if (previous != nullptr && *previous == letter) return false;
    previous = &letter;
  }
  return true;
}

std::vector<std::uint8_t> alternation_matrix(std::span<const std::uint32_t> codes,
                                             std::size_t alphabet_size) {
  const std::size_t n = alphabet_size;
  std::vector<std::uint8_t> alt(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) alt[i * n + i] = 0;
  // last[x] is one past the most recent position of x, 0 if unseen.
  std::vector<std::size_t> last(n, 0);
  for (std::size_t p = 0; p < codes.size(); ++p) {
    const std::size_t x = codes[p];
    if (last[x] != 0) {
      // x repeats against every y not seen since x's previous occurrence.
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && last[y] < last[x]) {
          alt[x * n + y] = 0;
          alt[y * n + x] = 0;
        }
      }
    }
    last[x] = p + 1;
  }
  return alt;
}

Graph graph_of_word(const Word& word) {
  return Graph::from_matrix(word.alphabet(),
                            alternation_matrix(word.codes(), word.alphabet().size()));
}

}  // namespace wordrep
