#pragma once

// Randomized inputs for the property suites: piecewise-affine circle maps
// with rational data (optionally with small irrational breakpoint offsets)
// and circle points. Deterministic given the caller's seeded engine.

#include <paff/pamap.hpp>

#include <random>
#include <utility>
#include <vector>

namespace paff::testing {

inline Rational random_fraction(std::mt19937_64& rng, long max_den = 64) {
  std::uniform_int_distribution<long> den(2, max_den);
  long d = den(rng);
  std::uniform_int_distribution<long> num(0, d - 1);
  return make_rational(Int(num(rng)), Int(d));
}

inline CirclePoint random_point(std::mt19937_64& rng, const QuadIrr& alpha,
                                bool allow_irrational = true) {
  AlphaVal x(random_fraction(rng, 512));
  if (allow_irrational && rng() % 3 == 0) {
    std::uniform_int_distribution<long> small(1, 40);
    x = x + AlphaVal::alpha_times(Rational(1, small(rng)));
  }
  return CirclePoint::reduce(x, alpha);
}

// A random orientation-preserving PA circle homeomorphism with up to
// `max_breaks` breakpoints: random sample points with random positive rises
// normalized to total exactly 1.
inline PAHomeo random_map(std::mt19937_64& rng, const QuadIrr& alpha, int max_breaks = 6) {
  std::uniform_int_distribution<int> count(1, max_breaks);
  int k = count(rng);
  std::vector<AlphaVal> xs;
  for (int i = 0; i < k; ++i) xs.push_back(random_point(rng, alpha, false).v);
  std::sort(xs.begin(), xs.end(),
            [&](const AlphaVal& a, const AlphaVal& b) { return compare(a, b, alpha) < 0; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::uniform_int_distribution<long> rise(1, 20);
  std::vector<Rational> rises;
  Rational total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rises.push_back(Rational(rise(rng)));
    total += rises.back();
  }
  AlphaVal y(random_fraction(rng));
  std::vector<std::pair<CirclePoint, AlphaVal>> samples;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    samples.push_back({CirclePoint{xs[i]}, y});
    y = y + AlphaVal(rises[i] / total);
  }
  return PAHomeo::from_breakpoints(samples, alpha);
}

}  // namespace paff::testing
