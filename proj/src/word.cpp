#include "simwords/word.hpp"

#include <charconv>
#include <sstream>

#include "simwords/error.hpp"

namespace simwords {

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1) {
    fail(ErrorKind::kInvalidParams, "alphabet size must be at least 1");
  }
  for (const Letter c : letters_) {
    if (c < 1 || c > alphabet_size_) {
      fail(ErrorKind::kLetterOutOfRange,
           "letter " + std::to_string(c) + " outside {1.." +
               std::to_string(alphabet_size_) + "}");
    }
  }
}

Word Word::from_digits(std::string_view digits, int alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      fail(ErrorKind::kInvalidParams,
           std::string("non-digit character '") + c + "' in digit word");
    }
    letters.push_back(c == '0' ? 10 : c - '0');
  }
  return Word(std::move(letters), alphabet_size);
}

std::string format_word(std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    Letter value = 0;
    const auto result =
        std::from_chars(text.data() + i, text.data() + text.size(), value, 10);
    if (result.ec != std::errc{}) {
      fail(ErrorKind::kMalformedInput, "cannot parse letter list");
    }
    letters.push_back(value);
    i = static_cast<std::size_t>(result.ptr - text.data());
  }
  return letters;
}

}  // namespace simwords
