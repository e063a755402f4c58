#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parikh/word.hpp"

using namespace parikh;

namespace {

Word w3(const char* text) { return parse_word(text, OrderedAlphabet(3)); }

}  // namespace

TEST_CASE("parse_word expands exponents") {
  const OrderedAlphabet abc(3);
  CHECK(render(parse_word("abcabbc", abc)) == "abcabbc");
  CHECK(parse_word("abcabbc", abc).size() == 7);

  const Word w = parse_word("ab^11cbabcb^5", abc);
  CHECK(w.size() == 22);
  CHECK(w == parse_word("abbbbbbbbbbbcbabcbbbbb", abc));
  CHECK(parse_word(" a b ^ 2  c ", abc) == parse_word("abbc", abc));
  CHECK(parse_word("", abc).empty());
}

TEST_CASE("parse_word rejects bad input") {
  const OrderedAlphabet abc(3);
  CHECK_THROWS_AS(parse_word("b^0a", abc), ParseError);
  CHECK_THROWS_AS(parse_word("abd", abc), ParseError);
  CHECK_THROWS_AS(parse_word("a^", abc), ParseError);
  CHECK_THROWS_AS(parse_word("a^x", abc), ParseError);
  CHECK_THROWS_AS(parse_word("^3", abc), ParseError);
  CHECK_THROWS_AS(parse_word("A", abc), ParseError);
}

TEST_CASE("alphabet bounds") {
  CHECK_THROWS_AS(OrderedAlphabet(0), DomainError);
  CHECK_THROWS_AS(OrderedAlphabet(27), DomainError);
  CHECK(OrderedAlphabet(26).glyph(25) == 'z');
  CHECK_THROWS_AS(Word(OrderedAlphabet(2), {0, 2}), DomainError);
}

TEST_CASE("render compresses runs of four or more") {
  CHECK(render(w3("aaabbbbc")) == "aaab^4c");
  CHECK(render(w3("ab^11cbabcb^5")) == "ab^11cbabcb^5");
  CHECK(render(w3("")) == "");
}

TEST_CASE("projection") {
  const OrderedAlphabet abcd(4);
  const Word w = parse_word("bacdabc", abcd);
  CHECK(render(projection(w, LetterSet::parse("ac", abcd))) == "acac");
  CHECK(projection(w, LetterSet::full(abcd)) == w);
  CHECK(projection(w, LetterSet(abcd)).empty());
  CHECK_THROWS_AS(projection(w, LetterSet::full(OrderedAlphabet(3))), DomainError);
}

TEST_CASE("print_word") {
  CHECK(render(print_word(parse_word("aabba", OrderedAlphabet(2)))) == "aba");
  CHECK(print_word(w3("")).empty());
  const Word w = w3("ab^11cbabcb^5");
  const Word printed = print_word(projection(w, LetterSet::parse("ac", w.alphabet())));
  CHECK(render(printed) == "acac");
  CHECK(printed.size() == 4);
}

TEST_CASE("subword_count published values") {
  const OrderedAlphabet ab(2);
  CHECK(subword_count(parse_word("aababb", ab), parse_word("ab", ab)) == 8);
  CHECK(subword_count(w3("bcacabcba"), w3("abc")) == 2);
  const Word w = w3("abcabbc");
  CHECK(subword_count(w, w) == 1);
  CHECK(subword_count(w, w3("")) == 1);
  CHECK(subword_count(w3(""), w3("a")) == 0);
}

TEST_CASE("subword_count overflow is an error, not a wrap") {
  // |a^n b^n|_{ab} = n^2 is fine, but C(128, 64) > 2^64 for the middle pattern.
  const OrderedAlphabet a(1);
  const Word text = parse_word("a^128", a);
  const Word pattern = parse_word("a^64", a);
  CHECK_THROWS_AS(subword_count(text, pattern), OverflowError);
  CHECK(subword_count(parse_word("a^60", a), parse_word("a^30", a)) == 118264581564861424ULL);
}

TEST_CASE("subword_count agrees with subset enumeration") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t s = 1 + trial % 4;
    auto text = oracle::random_letters(rng, s, rng() % 13);
    auto pattern = oracle::random_letters(rng, s, rng() % 4);
    CHECK(subword_count(text, pattern) == oracle::count_by_subsets(text, pattern));
  }
}

TEST_CASE("single-letter counts are occurrence counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = oracle::random_word(rng, 4, 0, 20);
    const auto vec = parikh_vector(w);
    for (Letter x = 0; x < 4; ++x) {
      const Letter one[] = {x};
      CHECK(subword_count(w.letters(), one) == vec[x]);
    }
  }
}

TEST_CASE("projection composes; print is idempotent; render round-trips") {
  std::mt19937_64 rng(11);
  const OrderedAlphabet abcd(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = oracle::random_word(rng, 4, 0, 24);
    const LetterSet s(abcd, oracle::random_letters(rng, 4, rng() % 5));
    const LetterSet t(abcd, oracle::random_letters(rng, 4, rng() % 5));
    // pi_S(pi_T(w)) compared by glyphs: the inner projection re-indexes letters.
    const Word inner = projection(w, t);
    std::string s_glyphs;
    for (Letter l : s.letters()) s_glyphs += abcd.glyph(l);
    const LetterSet s_in_t = LetterSet::parse(
        [&] {
          std::string kept;
          for (char g : s_glyphs)
            if (inner.alphabet().index_of(g) >= 0) kept += g;
          return kept;
        }(),
        inner.alphabet());
    CHECK(render(projection(inner, s_in_t)) == render(projection(w, s.intersect(t))));

    const Word p = print_word(w);
    CHECK(print_word(p) == p);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] != p[i - 1]);

    CHECK(parse_word(render(w), abcd) == w);
  }
}
