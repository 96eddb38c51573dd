#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sigrate {

// A word over the alphabet {1, .., d}: the index of one signature coefficient.
// The empty word indexes the level-0 (scalar) slot.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  // Parses a digit string such as "1122". Only d <= 9 is supported, so one
  // digit per letter is unambiguous. The empty string is the empty word.
  static Word from_digits(const std::string& digits);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  std::string digits() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

bool word_in_alphabet(const Word& w, int d);
void require_in_alphabet(const Word& w, int d);

// d^level, as a dense block size.
std::size_t block_size(int d, int level);

// Dense position of w inside its level block: base-d digits, first letter
// most significant.
std::size_t word_index(const Word& w, int d);

// Inverse of word_index for a given (d, level).
Word word_at(int d, int level, std::size_t index);

Word concat(const Word& a, const Word& b);

}  // namespace sigrate
