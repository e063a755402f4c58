#include "parikh/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace parikh {

OrderedAlphabet::OrderedAlphabet(std::size_t size) {
  if (size < 1 || size > kMaxSize) {
    throw DomainError("alphabet size must be in 1.." + std::to_string(kMaxSize) + ", got " +
                      std::to_string(size));
  }
  glyphs_.resize(size);
  for (std::size_t i = 0; i < size; ++i) glyphs_[i] = static_cast<char>('a' + i);
}

OrderedAlphabet OrderedAlphabet::from_glyphs(std::string glyphs) {
  // An empty glyph string is the alphabet of pi_emptyset; it only ever holds lambda.
  if (glyphs.size() > kMaxSize) throw DomainError("alphabet too large");
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    if (glyphs.find(glyphs[i], i + 1) != std::string::npos) {
      throw DomainError(std::string("duplicate letter '") + glyphs[i] + "'");
    }
  }
  OrderedAlphabet out;
  out.glyphs_ = std::move(glyphs);
  return out;
}

int OrderedAlphabet::index_of(char glyph) const noexcept {
  auto pos = glyphs_.find(glyph);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Word::Word(OrderedAlphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l >= alphabet_.size()) {
      throw DomainError("letter index " + std::to_string(l) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

Word Word::operator+(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw DomainError("concatenation across alphabets");
  std::vector<Letter> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(out));
}

LetterSet::LetterSet(const OrderedAlphabet& alphabet, std::vector<Letter> letters)
    : alphabet_size_(alphabet.size()), letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
  if (!letters_.empty() && letters_.back() >= alphabet_size_) {
    throw DomainError("letter set is not a subset of the alphabet");
  }
}

LetterSet LetterSet::full(const OrderedAlphabet& alphabet) {
  std::vector<Letter> all(alphabet.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Letter>(i);
  return LetterSet(alphabet, std::move(all));
}

LetterSet LetterSet::parse(std::string_view glyphs, const OrderedAlphabet& alphabet) {
  std::vector<Letter> letters;
  for (char g : glyphs) {
    if (g == ',' || std::isspace(static_cast<unsigned char>(g))) continue;
    int idx = alphabet.index_of(g);
    if (idx < 0) throw ParseError(std::string("letter '") + g + "' not in alphabet");
    letters.push_back(static_cast<Letter>(idx));
  }
  return LetterSet(alphabet, std::move(letters));
}

bool LetterSet::contains(Letter letter) const noexcept {
  return std::binary_search(letters_.begin(), letters_.end(), letter);
}

LetterSet LetterSet::intersect(const LetterSet& other) const {
  if (alphabet_size_ != other.alphabet_size_) throw DomainError("letter sets over different alphabets");
  LetterSet out(*this);
  out.letters_.clear();
  std::set_intersection(letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end(),
                        std::back_inserter(out.letters_));
  return out;
}

Word parse_word(std::string_view text, const OrderedAlphabet& alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
    }
    int idx = alphabet.index_of(c);
    if (idx < 0) {
      throw ParseError(std::string("letter '") + c + "' is not in the alphabet {" + alphabet.glyphs() + "}");
    }
    ++i;
    skip_space();
    std::size_t repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      std::size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == i) throw ParseError("exponent missing after '^' at offset " + std::to_string(i));
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, repeat);
      if (ec != std::errc() || ptr != text.data() + end) throw ParseError("malformed exponent");
      if (repeat == 0) throw ParseError("exponent 0 is not allowed");
      if (repeat > 1'000'000) throw ParseError("exponent too large");
      i = end;
      skip_space();
    }
    letters.insert(letters.end(), repeat, static_cast<Letter>(idx));
  }
  return Word(alphabet, std::move(letters));
}

std::string render(const Word& w) {
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    char g = w.alphabet().glyph(letters[i]);
    std::size_t run = j - i;
    if (run >= 4) {
      out += g;
      out += '^';
      out += std::to_string(run);
    } else {
      out.append(run, g);
    }
    i = j;
  }
  return out;
}

std::string render(const LetterSet& set, const OrderedAlphabet& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += alphabet.glyph(set.letters()[i]);
  }
  return out + "}";
}

Word projection(const Word& w, const LetterSet& keep) {
  if (keep.alphabet_size() != w.alphabet().size()) {
    throw DomainError("projection set is not a subset of the word's alphabet");
  }
  std::vector<int> remap(w.alphabet().size(), -1);
  std::string glyphs;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    remap[keep.letters()[k]] = static_cast<int>(k);
    glyphs += w.alphabet().glyph(keep.letters()[k]);
  }
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (remap[l] >= 0) out.push_back(static_cast<Letter>(remap[l]));
  }
  return Word(OrderedAlphabet::from_glyphs(std::move(glyphs)), std::move(out));
}

Word print_word(const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (out.empty() || out.back() != l) out.push_back(l);
  }
  return Word(w.alphabet(), std::move(out));
}

Count subword_count(std::span<const Letter> text, std::span<const Letter> pattern) {
  // table[k] = embeddings of pattern[0..k) into the prefix of text read so far.
  std::vector<Count> table(pattern.size() + 1, 0);
  table[0] = 1;
  for (Letter x : text) {
    for (std::size_t k = pattern.size(); k > 0; --k) {
      if (pattern[k - 1] == x) table[k] = checked_add(table[k], table[k - 1]);
    }
  }
  return table[pattern.size()];
}

Count subword_count(const Word& w, const Word& pattern) {
  for (Letter l : pattern.letters()) {
    if (l >= w.alphabet().size()) throw DomainError("pattern letter outside the word's alphabet");
  }
  return subword_count(w.letters(), pattern.letters());
}

std::vector<Count> parikh_vector(const Word& w) {
  std::vector<Count> out(w.alphabet().size(), 0);
  for (Letter l : w.letters()) ++out[l];
  return out;
}

}  // namespace parikh
