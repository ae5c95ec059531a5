#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simwords {

// 1-based letter code. Values outside {1..k} are reserved for the codec's
// mask symbols below.
using Letter = std::int32_t;

inline constexpr Letter kStar = -1;  // masked LCS position in an X/Y block
inline constexpr Letter kZero = 0;   // non-LCS position in a Y block

// Sequence over {kStar} + letters (X side) or {kStar, kZero} (Y side).
using StarWord = std::vector<Letter>;

// Finite word over the alphabet {1..k}.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  // Transcribes a digit string: '1'..'9' map to codes 1..9, '0' to code 10.
  static Word from_digits(std::string_view digits, int alphabet_size = 10);

  int alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> span() const { return letters_; }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 1;
};

// Space-separated letter codes, e.g. "1 2 10 2".
std::string format_word(std::span<const Letter> letters);
inline std::string format_word(const Word& word) { return format_word(word.span()); }

// Whitespace-separated letter codes.
std::vector<Letter> parse_letters(std::string_view text);

}  // namespace simwords
