#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace paff {

using Int = mpz_class;
using Rational = mpq_class;

/// Reduced rational n/d. The raw two-argument mpq constructor neither
/// canonicalizes nor rejects a zero denominator; this one does both.
inline Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" into a reduced rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Renders a rational as "p/q" with the denominator always spelled out.
std::string rational_to_string(const Rational& r);

Int floor_div(const Int& a, const Int& b);

/// A fixed quadratic irrational alpha = (p + sqrt(d)) / q with 0 < alpha < 1.
/// All order decisions against alpha reduce to integer arithmetic, so every
/// comparison in the library is exact.
class QuadIrr {
 public:
  QuadIrr(Int p, Int q, Int d);

  static QuadIrr sqrt2_minus_1() { return QuadIrr(-1, 1, 2); }

  /// Parses "quad:P,Q,D".
  static QuadIrr parse(const std::string& text);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& d() const { return d_; }

  std::string to_string() const;

  bool operator==(const QuadIrr& other) const = default;

 private:
  Int p_, q_, d_;
};

/// Exact sign of c + v*sqrt(d) for integers c, v and positive nonsquare d.
int sign_linear_in_sqrt(const Int& c, const Int& v, const Int& d);

/// An element a + b*alpha of the module Q + Q*alpha. Addition, negation and
/// rational scaling stay inside the module, which is all the rest of the
/// library ever needs. The representation (a, b) is unique because alpha is
/// irrational. The components must be canonical mpq values; anything built
/// by mpq arithmetic, parse_rational or make_rational is.
struct AlphaVal {
  Rational a;  // rational part
  Rational b;  // coefficient of alpha

  AlphaVal() : a(0), b(0) {}
  AlphaVal(Rational ra) : a(std::move(ra)), b(0) {}
  AlphaVal(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static AlphaVal alpha_times(Rational rb) { return AlphaVal(Rational(0), std::move(rb)); }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  bool operator==(const AlphaVal& other) const { return a == other.a && b == other.b; }
};

AlphaVal operator+(const AlphaVal& x, const AlphaVal& y);
AlphaVal operator-(const AlphaVal& x, const AlphaVal& y);
AlphaVal operator-(const AlphaVal& x);
AlphaVal operator*(const Rational& c, const AlphaVal& x);
AlphaVal operator*(const AlphaVal& x, const Rational& c);

/// Exact sign of a + b*alpha, in {-1, 0, +1}; 0 iff a = b = 0.
int sign(const AlphaVal& x, const QuadIrr& alpha);

/// sign(x - y).
int compare(const AlphaVal& x, const AlphaVal& y, const QuadIrr& alpha);

struct FloorFrac {
  Int floor;
  AlphaVal frac;  // in [0, 1)
};

/// Splits x = n + f with f in [0, 1), exactly. Uses integer square roots
/// plus at most one sign correction; no floating point anywhere.
FloorFrac floor_frac(const AlphaVal& x, const QuadIrr& alpha);

/// Serialized as "a_num/a_den+b_num/b_den*alpha".
std::string to_string(const AlphaVal& x);

/// Decimal rendering with the given number of significant digits, suitable
/// for CSV output: fixed-point, round half away from zero, deterministic.
std::string to_decimal(const AlphaVal& x, const QuadIrr& alpha, int significant_digits);

/// Streams the continued-fraction convergents p/q of alpha. The expansion of
/// a quadratic irrational is eventually periodic and the stream never ends.
/// side below means q*alpha - p > 0; sides alternate strictly.
class ConvergentStream {
 public:
  struct Convergent {
    Int p;
    Int q;
    bool below;
  };

  explicit ConvergentStream(const QuadIrr& alpha);

  Convergent next();

 private:
  QuadIrr alpha_;
  Int cp_, cq_;          // complete quotient state: (cp_ + sqrt(cd_)) / cq_
  Int cd_;
  Int pm1_, pm2_, qm1_, qm2_;
};

/// First `count` convergent denominators q of alpha with q*alpha - p in
/// (0, beta0), in increasing order. Membership is decided exactly.
std::vector<long long> orbit_entries(const QuadIrr& alpha, const Rational& beta0, int count);

}  // namespace paff
