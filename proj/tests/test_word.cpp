#include <functional>

#include "doctest.h"
#include "qreflect/word.hpp"

using namespace qreflect;

namespace {

std::vector<Word> sample_words(int max_letters, long max_coeff) {
  std::vector<Word> out;
  const char alphabet[3] = {'x', 'y', 'z'};
  for (int n = 0; n <= max_letters; ++n) {
    std::vector<int> lpick(n, 0);
    while (true) {
      std::vector<char> letters(n);
      for (int i = 0; i < n; ++i) letters[i] = alphabet[lpick[i]];
      std::vector<long> coeffs(n + 1, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == coeffs.size()) {
          out.push_back(Word{coeffs, letters});
          return;
        }
        for (long v = 0; v <= max_coeff; ++v) {
          coeffs[pos] = v;
          rec(pos + 1);
        }
      };
      rec(0);
      int i = 0;
      while (i < n && ++lpick[i] == 3) lpick[i++] = 0;
      if (i == n || n == 0) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("word serialization") {
  CHECK(to_string(parse_word("2x3")) == "2x3");
  CHECK(to_string(parse_word("0z0")) == "0z0");
  CHECK(to_string(parse_word("1x1y2")) == "1x1y2");
  CHECK(to_string(parse_word("17")) == "17");
  CHECK_THROWS_AS(parse_word("x1"), Error);
  CHECK_THROWS_AS(parse_word("1w1"), Error);
  for (const Word& w : sample_words(2, 2)) CHECK(parse_word(to_string(w)) == w);
}

TEST_CASE("word multiplication") {
  CHECK(word_mult(parse_word("1"), parse_word("0x0")) == parse_word("1x0"));
  CHECK(word_mult(parse_word("0x0"), parse_word("1")) == parse_word("0x1"));
  CHECK(word_mult(parse_word("0"), parse_word("0")) == parse_word("0"));
  CHECK(word_mult(parse_word("2x3"), parse_word("1y2")) == parse_word("2x4y2"));

  auto sample = sample_words(1, 2);
  for (const Word& a : sample)
    for (const Word& b : sample) {
      CHECK(word_mult(a, b).letter_count() == a.letter_count() + b.letter_count());
      for (const Word& c : sample)
        CHECK(word_mult(word_mult(a, b), c) == word_mult(a, word_mult(b, c)));
    }
}

TEST_CASE("word order") {
  for (long k = 0; k <= 5; ++k) {
    Word kzk = make_word({k, k}, {'z'});
    CHECK(word_leq(parse_word("0z0"), kzk));
  }
  CHECK(word_leq(parse_word("1x1"), parse_word("0z0")));
  CHECK(word_leq(parse_word("1y1"), parse_word("0z0")));
  CHECK(!word_leq(parse_word("0"), parse_word("1")));
  CHECK(!word_leq(parse_word("1z1"), parse_word("0z0")));  // equal letters, c in Z fails
  CHECK(!word_leq(parse_word("0x0"), parse_word("0y0")));

  auto sample = sample_words(2, 2);
  for (const Word& a : sample) {
    CHECK(word_leq(a, a));
    for (const Word& b : sample) {
      if (word_leq(a, b) && word_leq(b, a)) CHECK(a == b);
      for (const Word& c : sample)
        if (word_leq(a, b) && word_leq(b, c)) CHECK(word_leq(a, c));
    }
  }
}

TEST_CASE("order is compatible with multiplication") {
  auto sample = sample_words(1, 2);
  for (const Word& a1 : sample)
    for (const Word& b1 : sample) {
      if (!word_leq(a1, b1)) continue;
      for (const Word& a2 : sample)
        for (const Word& b2 : sample)
          if (word_leq(a2, b2))
            CHECK(word_leq(word_mult(a1, a2), word_mult(b1, b2)));
    }
}

TEST_CASE("two-sided translation of the critical pair") {
  Word one = parse_word("1");
  std::vector<Word> M{parse_word("0x0"), parse_word("0y0")};
  std::vector<Word> translated;
  for (const Word& m : M)
    translated.push_back(word_mult(one, word_mult(m, one)));
  CHECK(translated ==
        std::vector<Word>{parse_word("1x1"), parse_word("1y1")});
}

TEST_CASE("bounded join") {
  auto j = bounded_join({parse_word("0x0"), parse_word("0y0")}, {1, 3});
  REQUIRE(j);
  CHECK(*j == parse_word("0z0"));

  auto single = bounded_join({parse_word("2x3")}, {2, 4});
  REQUIRE(single);
  CHECK(*single == parse_word("2x3"));

  CHECK(!bounded_join({parse_word("0"), parse_word("1")}, {2, 5}).has_value());

  auto shifted = bounded_join({parse_word("1x1"), parse_word("1y1")}, {1, 3});
  REQUIRE(shifted);
  CHECK(*shifted == parse_word("0z0"));
}

TEST_CASE("distributivity on one side only") {
  Report r = word_example_checks();
  INFO(r.to_string());
  CHECK(r.ok());
  CHECK(r.find("v{0x0,0y0} = 0z0")->passed());
  CHECK(r.find("a(vM) = v(aM) over the sample")->passed());
  CHECK(r.find("(vM)a = v(Ma) over the sample")->passed());
  CHECK(r.find("1(vM)1 = 1z1")->passed());
  CHECK(r.find("v(1M1) = 0z0")->passed());
  CHECK(r.find("v(1M1) < 1(vM)1 strictly")->passed());
}
