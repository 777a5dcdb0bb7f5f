#include "paff/numbers.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace paff {

namespace {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  Int n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int sign_linear_in_sqrt(const Int& c, const Int& v, const Int& d) {
  int sv = sgn(v);
  if (sv == 0) return sgn(c);
  if (sv > 0) {
    if (c >= 0) return 1;
    return sgn(v * v * d - c * c);
  }
  if (c <= 0) return -1;
  return sgn(c * c - v * v * d);
}

namespace {

// Exact floor of (c + v*sqrt(d)) / w for integers with w != 0, v != 0.
// Starts from an isqrt-based candidate and corrects with one sign test.
Int floor_linear_over(const Int& c, const Int& v, const Int& d, const Int& w) {
  Int g;  // floor(v * sqrt(d))
  Int s = isqrt(v * v * d);
  if (v > 0)
    g = s;
  else
    g = -s - 1;  // v*sqrt(d) is never an integer here (d nonsquare, v != 0)

  // (c + v*sqrt(d)) lies in (c + g, c + g + 1), so the floor of the quotient
  // is one of the two floors below (in either order depending on sgn(w)).
  Int lo = floor_div(c + g, w);
  Int hi = floor_div(c + g + 1, w);
  if (lo > hi) std::swap(lo, hi);
  if (lo == hi) return lo;
  // value >= hi  iff  sign((c - hi*w) + v*sqrt(d)) * sgn(w) >= 0
  int rel = sign_linear_in_sqrt(c - hi * w, v, d) * sgn(w);
  return rel >= 0 ? hi : lo;
}

}  // namespace

QuadIrr::QuadIrr(Int p, Int q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) throw std::invalid_argument("QuadIrr: q must be nonzero");
  if (d_ <= 0) throw std::invalid_argument("QuadIrr: d must be positive");
  if (mpz_perfect_square_p(d_.get_mpz_t()))
    throw std::invalid_argument("QuadIrr: d = " + d_.get_str() + " is a perfect square");
  // require 0 < (p + sqrt(d)) / q < 1
  int above0 = sign_linear_in_sqrt(p_, 1, d_) * sgn(q_);
  int below1 = sign_linear_in_sqrt(p_ - q_, 1, d_) * sgn(q_);
  if (above0 <= 0 || below1 >= 0)
    throw std::invalid_argument("QuadIrr: value (" + p_.get_str() + "+sqrt(" + d_.get_str() +
                                "))/" + q_.get_str() + " is not in (0,1)");
}

QuadIrr QuadIrr::parse(const std::string& text) {
  const std::string prefix = "quad:";
  if (text.rfind(prefix, 0) != 0)
    throw std::invalid_argument("QuadIrr: expected 'quad:P,Q,D', got '" + text + "'");
  std::string body = text.substr(prefix.size());
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma == std::string::npos ? comma : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw std::invalid_argument("QuadIrr: expected three comma-separated integers in '" + text +
                                "'");
  Rational p = parse_rational(parts[0]), q = parse_rational(parts[1]), d = parse_rational(parts[2]);
  if (p.get_den() != 1 || q.get_den() != 1 || d.get_den() != 1)
    throw std::invalid_argument("QuadIrr: P, Q, D must be integers in '" + text + "'");
  return QuadIrr(p.get_num(), q.get_num(), d.get_num());
}

std::string QuadIrr::to_string() const {
  return "quad:" + p_.get_str() + "," + q_.get_str() + "," + d_.get_str();
}

AlphaVal operator+(const AlphaVal& x, const AlphaVal& y) { return {x.a + y.a, x.b + y.b}; }
AlphaVal operator-(const AlphaVal& x, const AlphaVal& y) { return {x.a - y.a, x.b - y.b}; }
AlphaVal operator-(const AlphaVal& x) { return {-x.a, -x.b}; }
AlphaVal operator*(const Rational& c, const AlphaVal& x) { return {c * x.a, c * x.b}; }
AlphaVal operator*(const AlphaVal& x, const Rational& c) { return c * x; }

int sign(const AlphaVal& x, const QuadIrr& alpha) {
  if (x.b == 0) return sgn(x.a);
  // a + b(p + sqrt(d))/q has the sign of sgn(q) * (u + v*sqrt(d)) with
  // u = a_num*b_den*q + b_num*a_den*p and v = b_num*a_den (positive common
  // denominator a_den*b_den*|q| dropped).
  const Int& an = x.a.get_num();
  const Int& ad = x.a.get_den();
  const Int& bn = x.b.get_num();
  const Int& bd = x.b.get_den();
  Int u = an * bd * alpha.q() + bn * ad * alpha.p();
  Int v = bn * ad;
  return sign_linear_in_sqrt(u, v, alpha.d()) * sgn(alpha.q());
}

int compare(const AlphaVal& x, const AlphaVal& y, const QuadIrr& alpha) {
  return sign(x - y, alpha);
}

FloorFrac floor_frac(const AlphaVal& x, const QuadIrr& alpha) {
  Int n;
  if (x.b == 0) {
    n = floor_div(x.a.get_num(), x.a.get_den());
  } else {
    // x = (u + v*sqrt(d)) / w over a common denominator.
    const Int& an = x.a.get_num();
    const Int& ad = x.a.get_den();
    const Int& bn = x.b.get_num();
    const Int& bd = x.b.get_den();
    Int u = an * bd * alpha.q() + bn * ad * alpha.p();
    Int v = bn * ad;
    Int w = ad * bd * alpha.q();
    n = floor_linear_over(u, v, alpha.d(), w);
  }
  AlphaVal frac = x - AlphaVal(Rational(n));
  return {std::move(n), std::move(frac)};
}

std::string to_string(const AlphaVal& x) {
  return rational_to_string(x.a) + "+" + rational_to_string(x.b) + "*alpha";
}

namespace {

// floor(|x| * 10^t) for x = (u + v*sqrt(d))/w given with w > 0 and x > 0.
Int floor_scaled_abs(const Int& u, const Int& v, const Int& d, const Int& w, unsigned long t) {
  Int p = pow10(t);
  if (v == 0) return floor_div(u * p, w);
  Int a = u * p;
  Int s = isqrt(v * v * d * p * p);
  a += (v > 0) ? s : -s - 1;
  Int n0 = floor_div(a, w);
  // candidate correction: value*10^t >= n0+1 ?
  int rel = sign_linear_in_sqrt(u * p - (n0 + 1) * w, v * p, d);
  if (rel >= 0) n0 += 1;
  return n0;
}

}  // namespace

std::string to_decimal(const AlphaVal& x, const QuadIrr& alpha, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal: need >= 1 digit");
  int s = sign(x, alpha);
  if (s == 0) return "0";

  // |x| = (u + v*sqrt(d)) / w with w > 0.
  const Int& an = x.a.get_num();
  const Int& ad = x.a.get_den();
  const Int& bn = x.b.get_num();
  const Int& bd = x.b.get_den();
  Int u = an * bd * alpha.q() + bn * ad * alpha.p();
  Int v = bn * ad;
  Int w = ad * bd * alpha.q();
  if (w < 0) {
    u = -u;
    v = -v;
    w = -w;
  }
  if (s < 0) {
    u = -u;
    v = -v;
  }

  const unsigned long sig = static_cast<unsigned long>(significant_digits);
  unsigned long t = sig + 30;
  Int scaled = floor_scaled_abs(u, v, alpha.d(), w, t);
  while (scaled.get_str().size() < sig + 2) {  // tiny value: rescale until enough digits
    t *= 2;
    scaled = floor_scaled_abs(u, v, alpha.d(), w, t);
  }

  std::string digits = scaled.get_str();
  long point = static_cast<long>(digits.size()) - static_cast<long>(t);  // integer digits

  // Round to `sig` digits. For irrational x the truncated tail is strictly
  // below the true value, so an apparent tie rounds up; for rational x ties
  // round half away from zero.
  Int keep(digits.substr(0, sig), 10);
  Int rest(digits.substr(sig), 10);
  Int unit = pow10(static_cast<unsigned long>(digits.size() - sig));
  if (cmp(2 * rest, unit) >= 0) keep += 1;
  std::string kd = keep.get_str();
  if (kd.size() > sig) {  // 999... rolled over
    kd.pop_back();
    point += 1;
  }

  std::string out;
  if (s < 0) out += "-";
  if (point >= static_cast<long>(sig)) {
    out += kd;
    out.append(static_cast<std::size_t>(point) - sig, '0');
  } else if (point > 0) {
    out += kd.substr(0, static_cast<std::size_t>(point));
    out += ".";
    out += kd.substr(static_cast<std::size_t>(point));
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += kd;
  }
  return out;
}

ConvergentStream::ConvergentStream(const QuadIrr& alpha)
    : alpha_(alpha), cp_(alpha.p()), cq_(alpha.q()), cd_(alpha.d()),
      pm1_(1), pm2_(0), qm1_(0), qm2_(1) {
  // The classical recurrence needs cq | (cd - cp^2); rescale once if not.
  if ((cd_ - cp_ * cp_) % cq_ != 0) {
    Int aq = abs(cq_);
    cp_ *= aq;
    cd_ *= aq * aq;
    cq_ *= aq;
  }
}

ConvergentStream::Convergent ConvergentStream::next() {
  Int a = floor_linear_over(cp_, 1, cd_, cq_);
  Int p = a * pm1_ + pm2_;
  Int q = a * qm1_ + qm2_;
  pm2_ = pm1_;
  pm1_ = p;
  qm2_ = qm1_;
  qm1_ = q;
  // complete quotient step
  cp_ = a * cq_ - cp_;
  cq_ = (cd_ - cp_ * cp_) / cq_;
  // side decided exactly: below iff q*alpha - p > 0
  bool below = sign(AlphaVal(Rational(-p), Rational(q)), alpha_) > 0;
  return {std::move(p), std::move(q), below};
}

std::vector<long long> orbit_entries(const QuadIrr& alpha, const Rational& beta0, int count) {
  if (!(beta0 > 0)) throw std::invalid_argument("orbit_entries: beta0 must be positive");
  if (count < 1) throw std::invalid_argument("orbit_entries: count must be >= 1");
  std::vector<long long> out;
  ConvergentStream stream(alpha);
  while (static_cast<int>(out.size()) < count) {
    auto c = stream.next();
    if (!c.below) continue;
    // frac(q*alpha) = q*alpha - p; keep q iff it is < beta0
    AlphaVal frac(Rational(-c.p), Rational(c.q));
    if (sign(AlphaVal(beta0) - frac, alpha) > 0) {
      if (!c.q.fits_slong_p())
        throw std::overflow_error("orbit_entries: denominator exceeds machine range");
      out.push_back(c.q.get_si());
    }
  }
  return out;
}

}  // namespace paff
