#include <doctest.h>

#include <paff/pamap.hpp>

#include <random>

#include "generators.hpp"

using namespace paff;

namespace {

const QuadIrr kAlpha = QuadIrr::sqrt2_minus_1();

Rational rq(long n, long d) { return make_rational(Int(n), Int(d)); }
CirclePoint pt(long n, long d) { return CirclePoint{AlphaVal(rq(n, d))}; }

PAHomeo sample_f1() {
  // identity outside [0.4, 0.9], slope 2 on [0.4, 0.6], slope 1/3 on [0.6, 0.9]
  return PAHomeo::from_breakpoints({{pt(0, 1), AlphaVal()},
                                    {pt(2, 5), AlphaVal(rq(2, 5))},
                                    {pt(3, 5), AlphaVal(rq(4, 5))},
                                    {pt(9, 10), AlphaVal(rq(9, 10))}},
                                   kAlpha);
}

// Total rise of the lift over one period; must be exactly 1.
Rational total_rise(const PAHomeo& f) {
  Rational rise = 0;
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    AlphaVal next = (i + 1 < ps.size()) ? ps[i + 1].left : ps[0].left + AlphaVal(Rational(1));
    AlphaVal len = next - ps[i].left;
    CHECK(len.b == 0);  // rises of rational-breakpoint test maps stay rational
    rise += ps[i].slope * len.a;
  }
  return rise;
}

}  // namespace

TEST_SUITE("pamap") {

TEST_CASE("identity and rotations") {
  CHECK(PAHomeo::rotation(AlphaVal(), kAlpha) == PAHomeo::identity());
  PAHomeo half = PAHomeo::rotation(AlphaVal(rq(1, 2)), kAlpha);
  CHECK(compose(half, half, kAlpha) == PAHomeo::identity());
  // rotation(2*beta) at 0, beta = 1/2048
  PAHomeo r = PAHomeo::rotation(AlphaVal(rq(1, 1024)), kAlpha);
  CHECK(eval(r, pt(0, 1), kAlpha) == pt(1, 1024));
  // angle reduced mod 1
  CHECK(PAHomeo::rotation(AlphaVal(rq(5, 4)), kAlpha) ==
        PAHomeo::rotation(AlphaVal(rq(1, 4)), kAlpha));
  CHECK(PAHomeo::rotation(AlphaVal(rq(0, 1), rq(1, 1)), kAlpha).pieces()[0].image ==
        AlphaVal::alpha_times(1));
}

TEST_CASE("from_breakpoints") {
  CHECK(PAHomeo::from_breakpoints({{pt(0, 1), AlphaVal()}, {pt(1, 2), AlphaVal(rq(1, 2))}},
                                  kAlpha) == PAHomeo::identity());

  PAHomeo f1 = sample_f1();
  CHECK(f1.piece_count() == 4);
  CHECK(eval(f1, pt(1, 2), kAlpha) == pt(3, 5));

  PAHomeo two = PAHomeo::from_breakpoints(
      {{pt(0, 1), AlphaVal()}, {pt(1, 2), AlphaVal(rq(1, 4))}}, kAlpha);
  CHECK(two.piece_count() == 2);
  CHECK(two.pieces()[0].slope == rq(1, 2));
  CHECK(two.pieces()[1].slope == rq(3, 2));

  CHECK_THROWS_AS(PAHomeo::from_breakpoints(
                      {{pt(1, 2), AlphaVal()}, {pt(1, 4), AlphaVal(rq(1, 2))}}, kAlpha),
                  std::invalid_argument);
  CHECK_THROWS_AS(PAHomeo::from_breakpoints(
                      {{pt(0, 1), AlphaVal(rq(1, 2))}, {pt(1, 2), AlphaVal(rq(1, 4))}}, kAlpha),
                  std::invalid_argument);
  CHECK_THROWS_AS(PAHomeo::from_breakpoints({}, kAlpha), std::invalid_argument);
}

TEST_CASE("a one-sample map is a rotation") {
  PAHomeo r = PAHomeo::from_breakpoints({{pt(3, 10), AlphaVal(rq(7, 10))}}, kAlpha);
  CHECK(r == PAHomeo::rotation(AlphaVal(rq(2, 5)), kAlpha));
}

TEST_CASE("compose") {
  PAHomeo a = PAHomeo::rotation(AlphaVal(rq(3, 4)), kAlpha);
  PAHomeo b = PAHomeo::rotation(AlphaVal(rq(1, 2)), kAlpha);
  CHECK(compose(a, b, kAlpha) == PAHomeo::rotation(AlphaVal(rq(1, 4)), kAlpha));

  PAHomeo f1 = sample_f1();
  CHECK(compose(f1, inverse(f1, kAlpha), kAlpha) == PAHomeo::identity());
  CHECK(compose(inverse(f1, kAlpha), f1, kAlpha) == PAHomeo::identity());

  // f1(0.45 + 1/1024) = 0.4 + 2*(0.05 + 1/1024)
  PAHomeo r2b = PAHomeo::rotation(AlphaVal(rq(1, 1024)), kAlpha);
  PAHomeo c = compose(f1, r2b, kAlpha);
  AlphaVal expected(rq(2, 5) + 2 * (rq(1, 20) + rq(1, 1024)));
  CHECK(eval(c, pt(9, 20), kAlpha) == CirclePoint{expected});
}

TEST_CASE("composing with a rotation that hits a breakpoint exactly") {
  PAHomeo f1 = sample_f1();
  PAHomeo r = PAHomeo::rotation(AlphaVal(rq(2, 5)), kAlpha);  // lands on f1's breakpoint
  PAHomeo c = compose(f1, r, kAlpha);
  // the two identity arcs of f1 become adjacent after the shift and merge
  CHECK(c.piece_count() == 3);
  CHECK(c.pieces()[1].left == AlphaVal(rq(1, 5)));
  CHECK(c.pieces()[2].left == AlphaVal(rq(1, 2)));
  CHECK(eval(c, pt(0, 1), kAlpha) == pt(2, 5));
  CHECK(eval(c, pt(1, 10), kAlpha) == pt(3, 5));
  CHECK(compose(c, inverse(r, kAlpha), kAlpha) == f1);
}

TEST_CASE("inverse") {
  PAHomeo r = PAHomeo::rotation(AlphaVal(rq(1, 3)), kAlpha);
  CHECK(inverse(r, kAlpha) == PAHomeo::rotation(AlphaVal(rq(2, 3)), kAlpha));
  CHECK(inverse(PAHomeo::identity(), kAlpha) == PAHomeo::identity());

  PAHomeo f1 = sample_f1();
  CHECK(eval(inverse(f1, kAlpha), pt(3, 5), kAlpha) == pt(1, 2));
  CHECK(inverse(inverse(f1, kAlpha), kAlpha) == f1);
}

TEST_CASE("eval") {
  PAHomeo f1 = sample_f1();
  CHECK(eval(PAHomeo::identity(), pt(7, 13), kAlpha) == pt(7, 13));
  CHECK(eval(f1, pt(19, 20), kAlpha) == pt(19, 20));  // identity on [0.9, 1.1]
  CHECK(eval(f1, pt(7, 10), kAlpha) == pt(5, 6));     // slope-1/3 piece through (0.6, 0.8)
}

TEST_CASE("agrees_on") {
  PAHomeo f1 = sample_f1();
  PAHomeo id = PAHomeo::identity();
  CHECK(agrees_on(f1, id, pt(9, 10), pt(1, 10), kAlpha));   // wrapping arc [0.9, 1.1]
  CHECK(agrees_on(f1, id, pt(1, 10), pt(2, 5), kAlpha));
  CHECK_FALSE(agrees_on(f1, id, pt(1, 10), pt(1, 2), kAlpha));
  CHECK_FALSE(agrees_on(f1, id, pt(85, 100), pt(95, 100), kAlpha));
  CHECK(agrees_on(f1, f1, pt(0, 1), pt(99, 100), kAlpha));
  CHECK_THROWS_AS(agrees_on(f1, id, pt(1, 2), pt(1, 2), kAlpha), std::invalid_argument);

  // rotations differing by an integer lift agree everywhere
  PAHomeo q = PAHomeo::rotation(AlphaVal(rq(1, 4)), kAlpha);
  CHECK(agrees_on(q, q, pt(1, 2), pt(1, 4), kAlpha));
}

TEST_CASE("serialization") {
  PAHomeo r = PAHomeo::rotation(AlphaVal(rq(1, 2)), kAlpha);
  CHECK(to_string(r) == "(0/1+0/1*alpha, 1/1, 1/2+0/1*alpha)\n");
}

TEST_CASE("algebra properties on random maps") {
  std::mt19937_64 rng(0xC1AC1E);
  for (int i = 0; i < 200; ++i) {
    PAHomeo f = paff::testing::random_map(rng, kAlpha);
    PAHomeo g = paff::testing::random_map(rng, kAlpha);
    PAHomeo h = paff::testing::random_map(rng, kAlpha);

    CHECK(compose(f, inverse(f, kAlpha), kAlpha) == PAHomeo::identity());
    CHECK(compose(compose(f, g, kAlpha), h, kAlpha) ==
          compose(f, compose(g, h, kAlpha), kAlpha));

    PAHomeo fg = compose(f, g, kAlpha);
    CHECK(fg.piece_count() <= f.piece_count() + g.piece_count());
    CHECK(total_rise(fg) == 1);
    CHECK(total_rise(inverse(f, kAlpha)) == 1);

    CirclePoint x = paff::testing::random_point(rng, kAlpha);
    CHECK(eval(fg, x, kAlpha) == eval(f, eval(g, x, kAlpha), kAlpha));
  }
}

}  // TEST_SUITE
