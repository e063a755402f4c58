#pragma once

// Brute-force reference implementations. Deliberately slow and share no code
// with the library's counting, matrix or search paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parikh/word.hpp"

namespace oracle {

using Letters = std::vector<parikh::Letter>;

/// Counts embeddings by trying every index subset of `text` of the right size.
inline std::uint64_t count_by_subsets(const Letters& text, const Letters& pattern) {
  const std::size_t n = text.size();
  const std::size_t k = pattern.size();
  if (k == 0) return 1;
  if (k > n) return 0;
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::size_t next = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask >> i & 1) ok = text[i] == pattern[next++];
    }
    total += ok;
  }
  return total;
}

/// Counts embeddings by plain recursion: first letter used or skipped.
inline std::uint64_t count_recursive(const Letters& text, std::size_t from, const Letters& pattern, std::size_t at) {
  if (at == pattern.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = from; i < text.size(); ++i) {
    if (text[i] == pattern[at]) total += count_recursive(text, i + 1, pattern, at + 1);
  }
  return total;
}

inline std::uint64_t count(const Letters& text, const Letters& pattern) {
  return count_recursive(text, 0, pattern, 0);
}

/// Matrix from its defining counts, as nested vectors (row-major, 0-based).
inline std::vector<std::vector<std::uint64_t>> matrix(std::size_t s, const Letters& w) {
  std::vector<std::vector<std::uint64_t>> m(s + 1, std::vector<std::uint64_t>(s + 1, 0));
  for (std::size_t i = 0; i <= s; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < s; ++i) {
    Letters run;
    for (std::size_t j = i; j < s; ++j) {
      run.push_back(static_cast<parikh::Letter>(j));
      m[i][j + 1] = count(w, run);
    }
  }
  return m;
}

/// All distinct rearrangements of `w` sharing its matrix, sorted.
inline std::vector<Letters> klass(std::size_t s, const Letters& w) {
  const auto target = matrix(s, w);
  Letters perm = w;
  std::sort(perm.begin(), perm.end());
  std::vector<Letters> out;
  do {
    if (matrix(s, perm) == target) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Letters random_letters(std::mt19937_64& rng, std::size_t s, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(s) - 1);
  Letters out(n);
  for (auto& l : out) l = static_cast<parikh::Letter>(pick(rng));
  return out;
}

inline parikh::Word random_word(std::mt19937_64& rng, std::size_t s, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  return parikh::Word(parikh::OrderedAlphabet(s), random_letters(rng, s, len(rng)));
}

inline Letters letters_of(const parikh::Word& w) { return Letters(w.letters().begin(), w.letters().end()); }

/// Every word of length n over s letters, in lexicographic order.
template <class Fn>
void for_each_word(std::size_t s, std::size_t n, Fn&& fn) {
  Letters w(n, 0);
  if (n == 0) {
    fn(w);
    return;
  }
  while (true) {
    fn(w);
    std::size_t k = n;
    while (k > 0 && w[k - 1] == s - 1) w[--k] = 0;
    if (k == 0) return;
    ++w[k - 1];
  }
}

}  // namespace oracle
