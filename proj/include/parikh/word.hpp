#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/error.hpp"

namespace parikh {

/// Letter index within an ordered alphabet; the order is the index order.
using Letter = std::uint8_t;

/// Exact occurrence count. Every arithmetic step on it is overflow-checked.
using Count = std::uint64_t;

/// A totally ordered finite alphabet a_0 < a_1 < ... < a_{s-1}.
///
/// Internally only the size matters. Each letter also carries a glyph used for
/// rendering; a fresh alphabet uses 'a', 'b', ... and a projected alphabet keeps
/// the glyphs of the letters it was cut from, so pi_{a,c}(bacdabc) prints "acac".
class OrderedAlphabet {
 public:
  static constexpr std::size_t kMaxSize = 26;

  explicit OrderedAlphabet(std::size_t size);
  static OrderedAlphabet from_glyphs(std::string glyphs);

  std::size_t size() const noexcept { return glyphs_.size(); }
  char glyph(Letter letter) const { return glyphs_.at(letter); }
  const std::string& glyphs() const noexcept { return glyphs_; }

  /// Index of `glyph`, or -1 when it is not a letter of this alphabet.
  int index_of(char glyph) const noexcept;

  friend bool operator==(const OrderedAlphabet&, const OrderedAlphabet&) = default;

 private:
  OrderedAlphabet() = default;
  std::string glyphs_;
};

class LetterSet;

/// A finite word over an ordered alphabet. The empty word is allowed.
class Word {
 public:
  explicit Word(OrderedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(OrderedAlphabet alphabet, std::vector<Letter> letters);

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Concatenation; both words must share an alphabet.
  Word operator+(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic by letter index. Only meaningful over a common alphabet.
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  OrderedAlphabet alphabet_;
  std::vector<Letter> letters_;
};

/// A subset of an alphabet's letters, kept in the inherited order.
class LetterSet {
 public:
  explicit LetterSet(const OrderedAlphabet& alphabet) : alphabet_size_(alphabet.size()) {}
  LetterSet(const OrderedAlphabet& alphabet, std::vector<Letter> letters);

  static LetterSet full(const OrderedAlphabet& alphabet);
  /// Parses glyphs such as "ac"; order in the text is irrelevant.
  static LetterSet parse(std::string_view glyphs, const OrderedAlphabet& alphabet);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool contains(Letter letter) const noexcept;

  LetterSet intersect(const LetterSet& other) const;

  friend bool operator==(const LetterSet&, const LetterSet&) = default;

 private:
  std::size_t alphabet_size_;
  std::vector<Letter> letters_;
};

/// Expands the exponent notation used for words, e.g. "ab^11cbabcb^5".
///
/// Grammar: word := { letter [ '^' uint ] }, whitespace allowed between tokens.
/// `^k` repeats the single preceding letter k times; k = 0 is rejected.
Word parse_word(std::string_view text, const OrderedAlphabet& alphabet);

/// Inverse of parse_word: runs of four or more equal letters become letter^k.
std::string render(const Word& w);
std::string render(const LetterSet& set, const OrderedAlphabet& alphabet);

/// Deletes every letter outside `keep`. The result lives over `keep`, re-indexed
/// in the inherited order.
Word projection(const Word& w, const LetterSet& keep);

/// Collapses each maximal run of equal letters to a single letter.
Word print_word(const Word& w);

/// Number of index-increasing embeddings of `pattern` into `text`.
///
/// Both are raw letter sequences; |text|_lambda = 1. Throws OverflowError
/// rather than wrapping.
Count subword_count(std::span<const Letter> text, std::span<const Letter> pattern);
Count subword_count(const Word& w, const Word& pattern);

/// Per-letter occurrence counts.
std::vector<Count> parikh_vector(const Word& w);

}  // namespace parikh
