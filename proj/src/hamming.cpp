#include "parikh/hamming.hpp"

#include <limits>

namespace parikh {

std::size_t hamming_distance(const Word& w, const Word& w2) {
  if (w.alphabet() != w2.alphabet()) throw DomainError("words are over different alphabets");
  if (w.size() != w2.size()) throw DomainError("Hamming distance needs words of equal length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] != w2[i];
  return d;
}

HammingResult min_hamming(const MClass& cls) {
  if (!cls.ambiguous()) {
    throw DomainError("minimal Hamming distance needs an M-ambiguous class; [" + render(cls.representative) +
                      "] is a singleton");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t bi = 0, bj = 1;
  const auto& m = cls.members;
  for (std::size_t i = 0; i < m.size() && best > 2; ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      std::size_t d = hamming_distance(m[i], m[j]);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
        // Two distinct words with equal Parikh vectors differ in at least two places.
        if (best == 2) break;
      }
    }
  }
  return {best, {m[bi], m[bj]}};
}

}  // namespace parikh
