#pragma once

#include <optional>
#include <utility>

#include "parikh/mclass.hpp"

namespace parikh {

/// A member of a class together with the index of an adjacent pair of letters
/// that are not neighbours in the alphabet order.
struct TrivialWitness {
  Word member;
  std::size_t position;
};

/// P-distinguishability verdict for an M-ambiguous class.
struct DistinguishReport {
  std::size_t class_size = 0;
  bool distinguishable = false;
  bool trivially_distinguishable = false;
  std::optional<std::pair<Word, Word>> witness_pair;
  std::optional<LetterSet> witness_subset;
  std::optional<TrivialWitness> trivial_witness;
};

/// Position of the first adjacent pair a_i a_j with |i - j| >= 2, if any.
std::optional<std::size_t> first_nonconsecutive_pair(const Word& w);

/// Classifies [w]. The class must be ambiguous; a singleton raises DomainError.
/// Witnesses are the lexicographically least pair and the least subset by
/// (size, lex).
DistinguishReport classify(const MClass& cls);

/// Whether pi_{a,c}(w) contains a c^n a or c a^n c with n >= 2. Ternary only.
bool check_lemma_acna(const Word& w);

}  // namespace parikh
