#include "paff/tower.hpp"

#include <stdexcept>

namespace paff {

namespace {

const Rational kHalf(1, 2);

CirclePoint pt(long n, long d) { return CirclePoint{AlphaVal(make_rational(n, d))}; }

void require_beta_range(const AlphaVal& beta, const QuadIrr& alpha) {
  if (sign(beta, alpha) <= 0 ||
      compare(beta, AlphaVal(make_rational(1, 1000)), alpha) >= 0)
    throw std::invalid_argument("tower: beta must lie in (0, 1/1000), got " + to_string(beta));
}

struct Tower {
  PAHomeo f1, f2, t_half;
  PAHomeo level[5];
  Word word[5];
};

Tower build_tower(const AlphaVal& beta, const QuadIrr& alpha) {
  require_beta_range(beta, alpha);
  Tower t;
  t.f1 = make_f1(alpha);
  t.f2 = make_f2(alpha);
  t.t_half = PAHomeo::rotation(AlphaVal(kHalf), alpha);
  PAHomeo t2b = PAHomeo::rotation(beta + beta, alpha);

  t.level[0] = compose(inverse(t2b, alpha), t.f1, t2b, inverse(t.f1, alpha), alpha);
  t.level[1] = compose(t.t_half, inverse(t.level[0], alpha), t.t_half, t.level[0], alpha);
  t.level[2] = compose(t2b, t.level[1], alpha);
  t.level[3] = compose(inverse(t.f2, alpha), t.level[2], t.f2, alpha);
  t.level[4] = compose(t.t_half, t.level[3], t.t_half, t.level[3], alpha);

  Word x{{"x", 1}};
  Word th{{"t_half", 1}};
  t.word[0] = concat({power(x, -2), {{"f1", 1}}, power(x, 2), {{"f1", -1}}});
  t.word[1] = concat({th, invert(t.word[0]), th, t.word[0]});
  t.word[2] = concat(power(x, 2), t.word[1]);
  t.word[3] = concat({{{"f2", -1}}, t.word[2], {{"f2", 1}}});
  t.word[4] = concat({th, t.word[3], th, t.word[3]});
  return t;
}

// x -> m(2x)/2 on [0, 1/2), identity on [1/2, 1). Only continuous when
// m(0) = 0; from_pieces rejects it otherwise.
PAHomeo half_scale_lower(const PAHomeo& m, const QuadIrr& alpha) {
  std::vector<AffinePiece> ps;
  for (const auto& p : m.pieces())
    ps.push_back(AffinePiece{p.left * kHalf, p.slope, p.image * kHalf});
  ps.push_back(AffinePiece{AlphaVal(kHalf), Rational(1), AlphaVal(kHalf)});
  return PAHomeo::from_pieces(std::move(ps), alpha);
}

// Two half-scale copies of m: x -> m(2x)/2 below 1/2, x -> m(2x-1)/2 + 1/2
// above.
PAHomeo half_scale_double(const PAHomeo& m, const QuadIrr& alpha) {
  std::vector<AffinePiece> ps;
  for (const auto& p : m.pieces())
    ps.push_back(AffinePiece{p.left * kHalf, p.slope, p.image * kHalf});
  for (const auto& p : m.pieces())
    ps.push_back(AffinePiece{p.left * kHalf + AlphaVal(kHalf), p.slope,
                             p.image * kHalf + AlphaVal(kHalf)});
  return PAHomeo::from_pieces(std::move(ps), alpha);
}

}  // namespace

PAHomeo make_f1(const QuadIrr& alpha) {
  return PAHomeo::from_breakpoints({{pt(0, 1), AlphaVal()},
                                    {pt(2, 5), AlphaVal(make_rational(2, 5))},
                                    {pt(3, 5), AlphaVal(make_rational(4, 5))},
                                    {pt(9, 10), AlphaVal(make_rational(9, 10))}},
                                   alpha);
}

PAHomeo make_f2(const QuadIrr& alpha) {
  return PAHomeo::from_breakpoints({{pt(0, 1), AlphaVal()},
                                    {pt(49, 100), AlphaVal(make_rational(49, 50))},
                                    {pt(197, 200), AlphaVal(make_rational(197, 200))}},
                                   alpha);
}

TowerLevel tower_level(int level, const AlphaVal& beta, const QuadIrr& alpha) {
  if (level < 1 || level > 5)
    throw std::invalid_argument("tower_level: level must be 1..5");
  Tower t = build_tower(beta, alpha);
  return TowerLevel{t.level[level - 1], t.word[level - 1]};
}

bool TowerReport::check(const std::string& name) const {
  for (const auto& [n, ok] : checks)
    if (n == name) return ok;
  throw std::invalid_argument("TowerReport: no check named '" + name + "'");
}

TowerReport verify_tower(const AlphaVal& beta, const QuadIrr& alpha) {
  Tower t = build_tower(beta, alpha);
  const PAHomeo id = PAHomeo::identity();
  const AlphaVal two_beta = beta + beta;

  TowerReport report;
  report.beta = beta;
  auto add = [&](const std::string& name, bool ok) { report.checks.emplace_back(name, ok); };

  add("H1_shift", agrees_on(t.level[0], PAHomeo::rotation(two_beta, alpha), pt(41, 100),
                            pt(79, 100), alpha));
  add("H1_fix", agrees_on(t.level[0], id, pt(91, 100), pt(9, 100), alpha));
  add("H2_shift", agrees_on(t.level[1], PAHomeo::rotation(-two_beta, alpha), pt(95, 100),
                            pt(0, 1), alpha));
  add("H2_involution", compose(t.t_half, t.level[1], t.t_half, t.level[1], alpha) == id);
  add("H3_fix", agrees_on(t.level[2], id, pt(95, 100), pt(0, 1), alpha));
  {
    PAHomeo fwd = PAHomeo::rotation(two_beta + AlphaVal(kHalf), alpha);
    PAHomeo bwd = PAHomeo::rotation(-two_beta - AlphaVal(kHalf), alpha);
    add("eq3", compose(fwd, t.level[2], bwd, t.level[2], alpha) ==
                   PAHomeo::rotation(two_beta + two_beta, alpha));
  }
  auto structural = [&](const char* name, auto&& build, const PAHomeo& got) {
    bool ok = false;
    try {
      ok = build() == got;
    } catch (const std::invalid_argument&) {
      ok = false;  // the scaled pieces do not even close up into a circle map
    }
    add(name, ok);
  };
  structural("H4_structure", [&] { return half_scale_lower(t.level[2], alpha); }, t.level[3]);
  structural("H5_structure", [&] { return half_scale_double(t.level[2], alpha); }, t.level[4]);
  {
    PAHomeo fwd = PAHomeo::rotation(beta + AlphaVal(make_rational(1, 4)), alpha);
    PAHomeo bwd = PAHomeo::rotation(-beta - AlphaVal(make_rational(1, 4)), alpha);
    add("eq5", compose(fwd, t.level[4], bwd, t.level[4], alpha) ==
                   PAHomeo::rotation(two_beta, alpha));
  }

  report.overall = true;
  for (const auto& [name, ok] : report.checks) report.overall = report.overall && ok;
  return report;
}

IdentityEquation identity_equation() {
  Word x{{"x", 1}};
  Word th{{"t_half", 1}};
  Word w1 = concat({power(x, -2), {{"f1", 1}}, power(x, 2), {{"f1", -1}}});
  Word w2 = concat({th, invert(w1), th, w1});
  Word w3 = concat(power(x, 2), w2);
  Word w4 = concat({{{"f2", -1}}, w3, {{"f2", 1}}});
  Word w5 = concat({th, w4, th, w4});

  IdentityEquation eq;
  eq.lhs = concat({x, {{"t_quarter", 1}}, w5, invert(x), {{"t_quarter", -1}}, w5});
  eq.rhs = power(x, 2);
  eq.k = 2;

  long acc = 0, sum = 0;
  for (const auto& l : eq.lhs) {
    if (l.gen == "x") {
      acc += l.exp;
    } else {
      eq.factors.emplace_back(acc, l);
      sum += acc;
      acc = 0;
    }
  }
  if (acc != 0) throw std::logic_error("identity_equation: trailing rotation block");
  eq.m = eq.k - sum;
  return eq;
}

}  // namespace paff
