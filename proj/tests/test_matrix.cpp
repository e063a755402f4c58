#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parikh/matrix.hpp"
#include "parikh/mclass.hpp"

using namespace parikh;

namespace {

Word w3(const char* text) { return parse_word(text, OrderedAlphabet(3)); }

ParikhMatrix rows(std::initializer_list<std::initializer_list<Count>> r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  ParikhMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (Count v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ParikhMatrix from_oracle(const std::vector<std::vector<std::uint64_t>>& o) {
  const auto n = static_cast<Eigen::Index>(o.size());
  ParikhMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = o[i][j];
  return m;
}

}  // namespace

TEST_CASE("generator and multiply") {
  const OrderedAlphabet ab(2);
  const ParikhMatrix ga = generator(ab, 0);
  CHECK(matrix_multiply(ParikhMatrix::Identity(3, 3), ga) == ga);
  CHECK(matrix_multiply(ga, ga)(0, 1) == 2);
  CHECK_THROWS_AS(matrix_multiply(ga, ParikhMatrix::Identity(4, 4)), DomainError);
  ParikhMatrix bad = ga;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(matrix_multiply(bad, ga), DomainError);
}

TEST_CASE("checked_product overflows loudly") {
  ParikhMatrix m = ParikhMatrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<Count>::max();
  CHECK_THROWS_AS(checked_product(m, m), OverflowError);
}

TEST_CASE("checked_product works on other scalar types") {
  BasicParikhMatrix<std::uint32_t> m = BasicParikhMatrix<std::uint32_t>::Identity(3, 3);
  m(0, 1) = 2;
  m(1, 2) = 3;
  auto sq = checked_product(m, m);
  CHECK(sq(0, 2) == 6);
  CHECK(sq(0, 1) == 4);
  CHECK(is_unit_upper_triangular(sq));
}

TEST_CASE("Example 2.3 matrix, by generator product and by counts") {
  const Word w = w3("abcabbc");
  const ParikhMatrix expected = rows({{1, 2, 5, 6}, {0, 1, 3, 4}, {0, 0, 1, 2}, {0, 0, 0, 1}});
  CHECK(parikh_matrix(w) == expected);
  CHECK(parikh_matrix_from_counts(w) == expected);

  ParikhMatrix folded = ParikhMatrix::Identity(4, 4);
  for (Letter q : w.letters()) folded = matrix_multiply(folded, generator(w.alphabet(), q));
  CHECK(folded == expected);
}

TEST_CASE("empty word maps to the identity") {
  CHECK(parikh_matrix(w3("")) == ParikhMatrix::Identity(4, 4));
}

TEST_CASE("Example 3.10 matrix") {
  const Word w = parse_word("bcbabcbcdcbcbbabcbccdccbb", OrderedAlphabet(4));
  const ParikhMatrix expected = rows({{1, 2, 13, 51, 36},
                                      {0, 1, 11, 61, 51},
                                      {0, 0, 1, 10, 11},
                                      {0, 0, 0, 1, 2},
                                      {0, 0, 0, 0, 1}});
  CHECK(parikh_matrix(w) == expected);
  CHECK(parikh_matrix_from_counts(w) == expected);
}

TEST_CASE("m_equivalent examples") {
  const Word w = w3("abcabbc");
  CHECK(m_equivalent(w, w));
  // Example 2.9 instance alpha=2, k=1, beta=gamma=1, delta=2.
  CHECK(m_equivalent(w3("abbcbabcbba"), w3("bacbabbbcba")));
  CHECK(from_oracle(oracle::matrix(3, oracle::letters_of(w3("abbcbabcbba")))) ==
        from_oracle(oracle::matrix(3, oracle::letters_of(w3("bacbabbbcba")))));
  CHECK(m_equivalent(w3("abbabc"), w3("baabbc")));
  CHECK_FALSE(m_equivalent(w3("abc"), w3("acb")));
  CHECK_THROWS_AS(m_equivalent(w3("ab"), parse_word("ab", OrderedAlphabet(2))), DomainError);
}

TEST_CASE("strong_m_equivalent examples") {
  const OrderedAlphabet ab(2);
  CHECK(strong_m_equivalent(w3("abcabbc"), w3("abcabbc")));
  CHECK(strong_m_equivalent(parse_word("abba", ab), parse_word("baab", ab)));
  CHECK_FALSE(strong_m_equivalent(w3("acb"), w3("cab")));
}

TEST_CASE("p_equivalent and p_distinct examples") {
  const Word w = w3("abcabbc");
  CHECK(p_equivalent(w, w));
  CHECK_FALSE(p_distinct(w, w).has_value());
  CHECK(p_equivalent(w3("abbabc"), w3("baabbc")));

  const auto witness = p_distinct(w3("acb"), w3("cab"));
  REQUIRE(witness);
  CHECK(render(*witness, OrderedAlphabet(3)) == "{a,c}");

  const OrderedAlphabet abcd(4);
  const Word x = parse_word("bcbabcbcdcbcbbabcbccdccbb", abcd);
  const Word y = parse_word("cbbabbcbcdccbcbabcbcdcbcb", abcd);
  CHECK_FALSE(p_equivalent(x, y));
  const auto ex = p_distinct(x, y);
  REQUIRE(ex);
  CHECK(render(*ex, abcd) == "{a,c}");
  for (const char* pat : {"ac", "bd", "acd", "abd"}) {
    CHECK(subword_count(x, parse_word(pat, abcd)) != subword_count(y, parse_word(pat, abcd)));
  }
}

TEST_CASE("p_distinct without the Parikh-vector shortcut") {
  // Different letter counts: the witness must be a singleton (or smaller).
  const auto witness = p_distinct(w3("aab"), w3("abb"));
  REQUIRE(witness);
  CHECK(witness->size() == 1);
}

TEST_CASE("properties over random words") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t s = 1 + trial % 4;
    const Word u = oracle::random_word(rng, s, 0, 10);
    const Word v = oracle::random_word(rng, s, 0, 10);

    CHECK(parikh_matrix(u + v) == matrix_multiply(parikh_matrix(u), parikh_matrix(v)));
    CHECK(parikh_matrix(u) == parikh_matrix_from_counts(u));
    CHECK(parikh_matrix(u) == from_oracle(oracle::matrix(s, oracle::letters_of(u))));
    CHECK(is_unit_upper_triangular(parikh_matrix(u)));

    // The two P-equivalence routes: counts on increasing sequences vs projected matrices.
    CHECK(p_equivalent(u, v) == !p_distinct(u, v).has_value());
  }
}

TEST_CASE("rewriting rules preserve equivalences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word w = oracle::random_word(rng, 2 + trial % 3, 2, 14);
    for (Rule rule : {Rule::E1, Rule::E2}) {
      for (const auto& occ : find_rule_occurrences(w, rule)) {
        const Word r = apply_rule(w, occ);
        CHECK(m_equivalent(w, r));
      }
    }
  }
}

TEST_CASE("refinement chain on amiable pairs") {
  // Pairs from enumerated classes, so both sides of each implication get exercised.
  std::mt19937_64 rng(5);
  int p_eq = 0;
  int strong = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = oracle::random_word(rng, 2 + trial % 2, 4, 10);
    const MClass cls = enumerate_class(w);
    for (const Word& x : cls.members) {
      if (p_equivalent(w, x)) {
        ++p_eq;
        CHECK(m_equivalent(w, x));
      }
      if (strong_m_equivalent(w, x)) {
        ++strong;
        CHECK(m_equivalent(w, x));
      }
    }
  }
  CHECK(p_eq > 0);
  CHECK(strong > 0);
}
