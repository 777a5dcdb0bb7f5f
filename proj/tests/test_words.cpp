#include <doctest.h>

#include <paff/words.hpp>

#include <random>

#include "generators.hpp"

using namespace paff;

namespace {

const QuadIrr kAlpha = QuadIrr::sqrt2_minus_1();

Word w(std::initializer_list<Letter> ls) { return Word(ls); }

}  // namespace

TEST_SUITE("words") {

TEST_CASE("concat, invert, power") {
  Word g = w({{"g", 1}});
  CHECK(invert(g) == w({{"g", -1}}));
  CHECK(power(g, -2) == w({{"g", -1}, {"g", -1}}));
  CHECK(power(g, 0).empty());
  CHECK(word_length(power(g, 5)) == 5);
  Word u = w({{"a", 1}, {"b", -1}});
  CHECK(concat(u, invert(u)) == w({{"a", 1}, {"b", -1}, {"b", 1}, {"a", -1}}));
  CHECK(free_reduce(concat(u, invert(u))).empty());
  CHECK(invert(invert(u)) == u);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(w({{"g", 1}, {"g", -1}})).empty());
  CHECK(free_reduce(w({{"a", 1}, {"g", 1}, {"g", -1}, {"b", 1}})) == w({{"a", 1}, {"b", 1}}));
  // cancellations can cascade
  CHECK(free_reduce(w({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}})).empty());
}

TEST_CASE("substitution") {
  // H1 -> x^-2 f1 x^2 f1^-1 expands a single letter into six
  std::map<std::string, Word> defs{
      {"H1", w({{"x", -1}, {"x", -1}, {"f1", 1}, {"x", 1}, {"x", 1}, {"f1", -1}})}};
  Word u = substitute(w({{"H1", 1}}), defs);
  CHECK(word_length(u) == 6);
  CHECK(net_exponent(u, "x") == 0);
  CHECK(substitute(u, {}) == u);
  // inverted letters substitute the inverted definition
  CHECK(substitute(w({{"H1", -1}}), defs) ==
        w({{"f1", 1}, {"x", -1}, {"x", -1}, {"f1", -1}, {"x", 1}, {"x", 1}}));
  // nested definitions expand recursively
  defs["H2"] = w({{"H1", 1}, {"t", 1}, {"H1", -1}});
  CHECK(word_length(substitute(w({{"H2", 1}}), defs)) == 13);
  // cycles are named
  std::map<std::string, Word> bad{{"a", w({{"b", 1}})}, {"b", w({{"a", 1}})}};
  CHECK_THROWS_WITH_AS(substitute(w({{"a", 1}}), bad),
                       doctest::Contains("cyclic"), std::invalid_argument);
}

TEST_CASE("net exponent and length") {
  Word u = w({{"x", 1}, {"g", 1}, {"x", 1}, {"x", -1}, {"g", 1}, {"x", 1}});
  CHECK(net_exponent(u, "x") == 2);
  CHECK(net_exponent(u, "g") == 2);
  CHECK(net_exponent({}, "g") == 0);
  CHECK(word_length(u) == 6);
}

TEST_CASE("evaluation") {
  Assignment env;
  env.gens.emplace("x", PAHomeo::rotation(AlphaVal(Rational(1, 2048)), kAlpha));
  CHECK(evaluate({}, env, kAlpha) == PAHomeo::identity());
  CHECK(evaluate(w({{"x", 1}, {"x", 1}}), env, kAlpha) ==
        PAHomeo::rotation(AlphaVal(Rational(1, 1024)), kAlpha));
  CHECK_THROWS_WITH_AS(evaluate(w({{"y", 1}}), env, kAlpha), doctest::Contains("'y'"),
                       std::invalid_argument);
}

TEST_CASE("text format round-trips") {
  Word u = w({{"T_alpha", 1}, {"h_f1", -1}, {"r_f1", 1}, {"x", -1}});
  CHECK(word_to_text(u) == "T_alpha h_f1^-1 r_f1 x^-1");
  CHECK(word_from_text(word_to_text(u)) == u);
  CHECK(word_from_text("").empty());
  CHECK(word_to_text({}) == "");
  CHECK_THROWS_AS(word_from_text("a b$c"), std::invalid_argument);
}

TEST_CASE("evaluation is a homomorphism on random words") {
  std::mt19937_64 rng(0x50F7);
  Assignment env;
  env.gens.emplace("p", paff::testing::random_map(rng, kAlpha));
  env.gens.emplace("q", paff::testing::random_map(rng, kAlpha));
  env.gens.emplace("r", PAHomeo::rotation(AlphaVal::alpha_times(1), kAlpha));

  auto random_word = [&](int len) {
    Word u;
    const char* names[] = {"p", "q", "r"};
    for (int i = 0; i < len; ++i)
      u.push_back(Letter{names[rng() % 3], rng() % 2 == 0 ? 1 : -1});
    return u;
  };

  for (int i = 0; i < 150; ++i) {
    Word u = random_word(static_cast<int>(rng() % 8));
    Word v = random_word(static_cast<int>(rng() % 8));
    PAHomeo eu = evaluate(u, env, kAlpha);
    PAHomeo ev = evaluate(v, env, kAlpha);
    CHECK(evaluate(concat(u, v), env, kAlpha) == compose(eu, ev, kAlpha));
    CHECK(evaluate(invert(u), env, kAlpha) == inverse(eu, kAlpha));
    CHECK(evaluate(free_reduce(u), env, kAlpha) == eu);
  }
}

}  // TEST_SUITE
