#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parikh/distinguish.hpp"
#include "parikh/hamming.hpp"

using namespace parikh;

namespace {

Word w3(const char* text) { return parse_word(text, OrderedAlphabet(3)); }

}  // namespace

TEST_CASE("hamming_distance") {
  CHECK(hamming_distance(w3("abcabbc"), w3("abcabbc")) == 0);
  CHECK(hamming_distance(w3("abbabc"), w3("baabbc")) == 4);
  const OrderedAlphabet abcd(4);
  CHECK(hamming_distance(parse_word("bcbabccdcbbabbccdccb", abcd), parse_word("cbbabbccdccbabbcdcbc", abcd)) == 12);
  CHECK_THROWS_AS(hamming_distance(w3("ab"), w3("abc")), DomainError);
}

TEST_CASE("metric properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = rng() % 15;
    const OrderedAlphabet al(3);
    const Word x(al, oracle::random_letters(rng, 3, n));
    const Word y(al, oracle::random_letters(rng, 3, n));
    const Word z(al, oracle::random_letters(rng, 3, n));
    CHECK(hamming_distance(x, y) == hamming_distance(y, x));
    CHECK((hamming_distance(x, y) == 0) == (x == y));
    CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
  }
}

TEST_CASE("min_hamming examples") {
  const HammingResult big = min_hamming(enumerate_class(w3("ab^11cbabcb^5")));
  CHECK(big.distance == 7);
  CHECK(hamming_distance(big.witness_pair.first, big.witness_pair.second) == 7);
  CHECK(big.witness_pair.first < big.witness_pair.second);

  CHECK(min_hamming(enumerate_class(w3("acb"))).distance == 2);
  CHECK(min_hamming(enumerate_class(w3("abbabc"))).distance == 4);

  const OrderedAlphabet abcd(4);
  CHECK(min_hamming(enumerate_class(parse_word("bcbabcbcdcbbabbccdccb", abcd))).distance == 14);
  CHECK(min_hamming(enumerate_class(parse_word("bcbabcbcdcbbabcbccdccb", abcd))).distance == 16);

  CHECK_THROWS_AS(min_hamming(enumerate_class(w3("abc"))), DomainError);
}

TEST_CASE("min_hamming equals the brute-force pairwise minimum") {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t s = 2 + trial % 3;
    const Word w = oracle::random_word(rng, s, 4, 9);
    const auto members = oracle::klass(s, oracle::letters_of(w));
    if (members.size() < 2) continue;
    ++seen;
    std::size_t best = w.size() + 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        std::size_t d = 0;
        for (std::size_t k = 0; k < w.size(); ++k) d += members[i][k] != members[j][k];
        best = std::min(best, d);
      }
    }
    CHECK(min_hamming(enumerate_class(w)).distance == best);
  }
  CHECK(seen > 50);
}

TEST_CASE("binary ambiguous classes all sit at distance 4") {
  const OrderedAlphabet ab(2);
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    oracle::for_each_word(2, n, [&](const oracle::Letters& letters) {
      const Word w(ab, letters);
      const MClass cls = enumerate_class(w);
      if (!cls.ambiguous() || !(cls.members.front() == w)) return;
      ++classes;
      CHECK(min_hamming(cls).distance == 4);
      CHECK_FALSE(classify(cls).trivially_distinguishable);
    });
  }
  CHECK(classes > 100);
}

TEST_CASE("trivially distinguishable iff distance 2; never 1 or 3") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1500; ++trial) {
    const Word w = oracle::random_word(rng, 3 + trial % 2, 3, 12);
    const MClass cls = enumerate_class(w);
    if (!cls.ambiguous()) continue;
    const std::size_t d = min_hamming(cls).distance;
    CHECK(d != 1);
    CHECK(d != 3);
    CHECK(classify(cls).trivially_distinguishable == (d == 2));
  }
}
