#include "sigrate/word.hpp"

#include <stdexcept>

namespace sigrate {

Word Word::from_digits(const std::string& digits) {
  Word w;
  w.letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("word digit out of range: " + digits);
    w.letters.push_back(c - '0');
  }
  return w;
}

std::string Word::digits() const {
  std::string out;
  out.reserve(letters.size());
  for (int l : letters) out.push_back(static_cast<char>('0' + l));
  return out;
}

bool word_in_alphabet(const Word& w, int d) {
  for (int l : w.letters)
    if (l < 1 || l > d) return false;
  return true;
}

void require_in_alphabet(const Word& w, int d) {
  if (!word_in_alphabet(w, d))
    throw std::invalid_argument("word " + w.digits() + " has letters outside {1..." +
                                std::to_string(d) + "}");
}

std::size_t block_size(int d, int level) {
  std::size_t size = 1;
  for (int i = 0; i < level; ++i) size *= static_cast<std::size_t>(d);
  return size;
}

std::size_t word_index(const Word& w, int d) {
  require_in_alphabet(w, d);
  std::size_t index = 0;
  for (int l : w.letters) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(l - 1);
  return index;
}

Word word_at(int d, int level, std::size_t index) {
  Word w;
  w.letters.assign(static_cast<std::size_t>(level), 1);
  for (int pos = level - 1; pos >= 0; --pos) {
    w.letters[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::size_t>(d)) + 1;
    index /= static_cast<std::size_t>(d);
  }
  if (index != 0) throw std::invalid_argument("word index out of range for level");
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

}  // namespace sigrate
