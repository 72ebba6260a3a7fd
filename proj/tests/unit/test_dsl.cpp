#include <doctest.h>

#include "ltree/dsl.hpp"
#include "ltree/error.hpp"
#include "support.hpp"

using namespace ltree;
using testing::lam;

TEST_CASE("parsing finite words") {
  Alphabet alphabet({"a", "b", "c"});
  const Word w = parse_word("a b^-1 c", alphabet, 1);
  CHECK(format_word(w, alphabet) == "ab^-1c");
  CHECK(same_word(parse_word("ab^-1c", alphabet, 1), w));
  CHECK(parse_word("(ab)^3", alphabet, 1).length() == lam(6));
  CHECK(format_word(parse_word("(ab)^-2", alphabet, 1), alphabet) == "b^-1a^-1b^-1a^-1");
  CHECK(parse_word("1", alphabet, 1).empty());
  CHECK(parse_word("\xCE\xB5", alphabet, 1).empty());
  CHECK(parse_word("", alphabet, 1).empty());
  CHECK(format_word(Word(1), alphabet) == "\xCE\xB5");
  CHECK(parse_word("(a^0)", alphabet, 1).empty());
}

TEST_CASE("multi-character names") {
  Alphabet alphabet({"x1", "x12", "y"});
  const Word w = parse_word("x1 x12^-1 y", alphabet, 1);
  CHECK(w.letters().size() == 3);
  CHECK(format_word(w, alphabet) == "x1x12^-1y");
  CHECK(same_word(parse_word(format_word(w, alphabet), alphabet, 1), w));
}

TEST_CASE("extending the alphabet") {
  Alphabet alphabet;
  const Word w = parse_word("b a tail(front=\"c\", back=\"d\")", alphabet, 2, true);
  CHECK(alphabet.names() == std::vector<std::string>{"b", "a", "c", "d"});
  CHECK(w.length() == lam(2, 1));
}

TEST_CASE("tail blocks") {
  Alphabet alphabet({"a", "b"});
  const Word s = parse_word("tail(front=\"ab\", back=\"ab\")", alphabet, 2);
  CHECK(s.length() == lam(0, 1));
  CHECK(format_word(s, alphabet) == "tail(front=\"ab\", back=\"ab\")");
  CHECK(block_shape(s) == "T");
  const Word shifted = parse_word("tail(front=ab, back=ba, offset=-3)", alphabet, 2);
  CHECK(shifted.length() == lam(-3, 1));
  CHECK(same_word(parse_word(format_word(shifted, alphabet), alphabet, 2), shifted));
  CHECK(block_shape(parse_word("a tail(front=\"ab\", back=\"ab\") b a", alphabet, 2)) == "F1 T F2");
  CHECK(block_shape(Word(2)) == "empty");
}

TEST_CASE("parse errors") {
  Alphabet alphabet({"a", "b"});
  CHECK_THROWS_AS(parse_word("a c", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("(a b", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("a)", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("a^", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("a^2000000", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("a $", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("tail(front=\"\", back=\"a\")", alphabet, 2), ParseError);
  CHECK_THROWS_AS(parse_word("tail(front=\"a\", back=\"a\")", alphabet, 1), ParseError);
  CHECK_THROWS_AS(parse_word("tail(front=\"aba^-1\", back=\"a\")", alphabet, 2), ParseError);
  CHECK_THROWS_AS(parse_word("tail(front=\"a\", back=\"a\", offset=x)", alphabet, 2), ParseError);
  CHECK_THROWS_AS(parse_word("tail(front=\"a\", colour=\"a\")", alphabet, 2), ParseError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), ParseError);
}

TEST_CASE("tail without parentheses is four letters") {
  Alphabet alphabet;
  const Word w = parse_word("tail", alphabet, 1, true);
  CHECK(w.length() == lam(4));
  CHECK(alphabet.names() == std::vector<std::string>{"t", "a", "i", "l"});
}

TEST_CASE("printer round trip on random Z^2 words") {
  Alphabet alphabet({"a", "b"});
  const Word gens[] = {parse_word("a", alphabet, 2), parse_word("b", alphabet, 2),
                       parse_word("tail(front=\"ab\", back=\"ab\")", alphabet, 2)};
  testing::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Word w(2);
    for (std::uint64_t k = rng.below(7); k > 0; --k) {
      const Word& g = gens[rng.below(3)];
      w = product(w, rng.below(2) ? g : inverse(g));
    }
    const std::string text = format_word(w, alphabet);
    const Word back = parse_word(text, alphabet, 2);
    CHECK_MESSAGE(same_word(back, w), text);
    CHECK(format_word(back, alphabet) == text);
  }
}
