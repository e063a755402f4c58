#include "parikh/distinguish.hpp"

#include <bit>
#include <numeric>

namespace parikh {

namespace {

// Counts of every strictly increasing letter sequence of length >= 2. Two words
// of one M-class are P-equivalent iff these agree.
std::vector<Count> increasing_signature(const Word& w) {
  const std::size_t s = w.alphabet().size();
  std::vector<Count> sig;
  std::vector<Letter> seq;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    if (std::popcount(mask) < 2) continue;
    seq.clear();
    for (std::size_t l = 0; l < s; ++l) {
      if (mask & (1u << l)) seq.push_back(static_cast<Letter>(l));
    }
    sig.push_back(subword_count(w.letters(), seq));
  }
  return sig;
}

}  // namespace

std::optional<std::size_t> first_nonconsecutive_pair(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    int gap = static_cast<int>(w[p]) - static_cast<int>(w[p + 1]);
    if (gap >= 2 || gap <= -2) return p;
  }
  return std::nullopt;
}

DistinguishReport classify(const MClass& cls) {
  if (!cls.ambiguous()) {
    throw DomainError("P-distinguishability is only defined for M-ambiguous words; [" +
                      render(cls.representative) + "] is a singleton");
  }
  if (cls.representative.alphabet().size() > 20) throw DomainError("alphabet too large for signature scan");

  DistinguishReport report;
  report.class_size = cls.size();

  for (const Word& m : cls.members) {
    if (auto pos = first_nonconsecutive_pair(m)) {
      report.trivially_distinguishable = true;
      report.trivial_witness = TrivialWitness{m, *pos};
      break;
    }
  }

  std::vector<std::vector<Count>> sigs;
  sigs.reserve(cls.size());
  for (const Word& m : cls.members) sigs.push_back(increasing_signature(m));
  for (std::size_t i = 0; i < sigs.size() && !report.distinguishable; ++i) {
    for (std::size_t j = i + 1; j < sigs.size(); ++j) {
      if (sigs[i] != sigs[j]) {
        report.distinguishable = true;
        report.witness_pair = std::make_pair(cls.members[i], cls.members[j]);
        report.witness_subset = p_distinct(cls.members[i], cls.members[j]);
        break;
      }
    }
  }
  return report;
}

bool check_lemma_acna(const Word& w) {
  if (w.alphabet().size() != 3) throw DomainError("check_lemma_acna needs a ternary alphabet");
  const Word ac = projection(w, LetterSet(w.alphabet(), {0, 2}));
  // Runs of one letter of length >= 2, bordered on both sides by the other letter.
  const auto letters = ac.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (i > 0 && j < letters.size() && j - i >= 2) return true;
    i = j;
  }
  return false;
}

}  // namespace parikh
