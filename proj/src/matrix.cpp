#include "parikh/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace parikh {

namespace {

void require_same_alphabet(const Word& w, const Word& w2) {
  if (w.alphabet() != w2.alphabet()) throw DomainError("words are over different alphabets");
}

// Calls fn(span) for every subset of {0..s-1} of exactly `k` letters, lexicographically.
template <class Fn>
bool for_each_subset(std::size_t s, std::size_t k, Fn&& fn) {
  std::vector<Letter> pick(k);
  std::iota(pick.begin(), pick.end(), Letter{0});
  if (k > s) return true;
  while (true) {
    if (!fn(std::span<const Letter>(pick))) return false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == s - k + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = static_cast<Letter>(pick[j - 1] + 1);
  }
}

}  // namespace

ParikhMatrix generator(const OrderedAlphabet& alphabet, Letter letter) {
  if (letter >= alphabet.size()) throw DomainError("letter outside alphabet");
  const auto dim = static_cast<Eigen::Index>(alphabet.size() + 1);
  ParikhMatrix g = ParikhMatrix::Identity(dim, dim);
  g(letter, letter + 1) = 1;
  return g;
}

ParikhMatrix parikh_matrix(const Word& w) {
  const auto dim = static_cast<Eigen::Index>(w.alphabet().size() + 1);
  ParikhMatrix m = ParikhMatrix::Identity(dim, dim);
  for (Letter q : w.letters()) {
    for (Eigen::Index i = 0; i <= q; ++i) m(i, q + 1) = checked_add(m(i, q + 1), m(i, q));
  }
#ifndef NDEBUG
  assert(m == parikh_matrix_from_counts(w));
#endif
  return m;
}

ParikhMatrix parikh_matrix_from_counts(const Word& w) {
  const std::size_t s = w.alphabet().size();
  const auto dim = static_cast<Eigen::Index>(s + 1);
  ParikhMatrix m = ParikhMatrix::Identity(dim, dim);
  std::vector<Letter> run;
  for (std::size_t i = 0; i < s; ++i) {
    run.clear();
    for (std::size_t j = i; j < s; ++j) {
      run.push_back(static_cast<Letter>(j));
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = subword_count(w.letters(), run);
    }
  }
  return m;
}

ParikhMatrix matrix_multiply(const ParikhMatrix& lhs, const ParikhMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw DomainError("matrix dimension mismatch");
  if (!is_unit_upper_triangular(lhs) || !is_unit_upper_triangular(rhs)) {
    throw DomainError("operand is not unit upper-triangular");
  }
  return checked_product(lhs, rhs);
}

bool m_equivalent(const Word& w, const Word& w2) {
  require_same_alphabet(w, w2);
  return w.size() == w2.size() && parikh_matrix(w) == parikh_matrix(w2);
}

bool strong_m_equivalent(const Word& w, const Word& w2) {
  require_same_alphabet(w, w2);
  const std::size_t s = w.alphabet().size();
  // Walk every injective letter sequence via permutations of every subset.
  for (std::size_t len = 1; len <= s; ++len) {
    bool equal = for_each_subset(s, len, [&](std::span<const Letter> subset) {
      std::vector<Letter> seq(subset.begin(), subset.end());
      do {
        if (subword_count(w.letters(), seq) != subword_count(w2.letters(), seq)) return false;
      } while (std::next_permutation(seq.begin(), seq.end()));
      return true;
    });
    if (!equal) return false;
  }
  return true;
}

bool p_equivalent(const Word& w, const Word& w2) {
  require_same_alphabet(w, w2);
  const std::size_t s = w.alphabet().size();
  for (std::size_t len = 1; len <= s; ++len) {
    bool equal = for_each_subset(s, len, [&](std::span<const Letter> seq) {
      return subword_count(w.letters(), seq) == subword_count(w2.letters(), seq);
    });
    if (!equal) return false;
  }
  return true;
}

std::optional<LetterSet> p_distinct(const Word& w, const Word& w2) {
  require_same_alphabet(w, w2);
  const std::size_t s = w.alphabet().size();
  // Singletons and the empty set only compare letter counts; skip them when the
  // Parikh vectors already agree.
  const bool vectors_match = parikh_vector(w) == parikh_vector(w2);
  std::optional<LetterSet> witness;
  for (std::size_t len = vectors_match ? 2 : 0; len <= s && !witness; ++len) {
    for_each_subset(s, len, [&](std::span<const Letter> subset) {
      LetterSet set(w.alphabet(), {subset.begin(), subset.end()});
      Word lhs = projection(w, set);
      Word rhs = projection(w2, set);
      if (lhs.size() != rhs.size() || parikh_matrix(lhs) != parikh_matrix(rhs)) {
        witness = std::move(set);
        return false;
      }
      return true;
    });
  }
  return witness;
}

std::string to_json_rows(const ParikhMatrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace parikh
