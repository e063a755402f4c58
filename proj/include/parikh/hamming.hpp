#pragma once

#include <utility>

#include "parikh/mclass.hpp"

namespace parikh {

struct HammingResult {
  std::size_t distance = 0;
  std::pair<Word, Word> witness_pair;
};

/// Number of positions where two equal-length words differ.
std::size_t hamming_distance(const Word& w, const Word& w2);

/// Minimal distance over distinct member pairs of an ambiguous class; the
/// witness is the lexicographically least pair attaining it.
HammingResult min_hamming(const MClass& cls);

}  // namespace parikh
