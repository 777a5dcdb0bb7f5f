#include "paff/rotation_words.hpp"

#include <stdexcept>

namespace paff {

namespace {

Int int_from(long long v) {
  static_assert(sizeof(long long) == sizeof(long), "needs 64-bit long");
  return Int(static_cast<long>(v));
}

}  // namespace

PAHomeo make_halving_map(const Rational& a, long m, const QuadIrr& alpha) {
  if (m < 1) throw std::invalid_argument("make_halving_map: m must be >= 1");
  if (!(a > 0)) throw std::invalid_argument("make_halving_map: a must be positive");
  Rational c = a + make_rational(2, m);
  if (!(c < 1))
    throw std::invalid_argument("make_halving_map: a + 2/m < 1 required, got " +
                                rational_to_string(c));
  return PAHomeo::from_breakpoints(
      {{CirclePoint{}, AlphaVal()}, {CirclePoint{AlphaVal(c)}, AlphaVal(c * make_rational(1, 2))}},
      alpha);
}

RotationWordCtx::RotationWordCtx(AlphaVal gamma, Rational a, long m, Names names,
                                 const QuadIrr& alpha, bool allow_rational_gamma)
    : gamma_(std::move(gamma)),
      a_(std::move(a)),
      m_(m),
      names_(std::move(names)),
      alpha_(alpha),
      h_map_(make_halving_map(a_, m_, alpha_)),
      r_map_(PAHomeo::rotation(AlphaVal(make_rational(1, m_)), alpha_)),
      t_map_(PAHomeo::rotation(gamma_, alpha_)) {
  if (sign(gamma_, alpha_) <= 0 || compare(gamma_, AlphaVal(Rational(1)), alpha_) >= 0)
    throw std::invalid_argument("RotationWordCtx: gamma must lie in (0, 1)");
  if (gamma_.is_rational() && !allow_rational_gamma)
    throw std::invalid_argument("RotationWordCtx: gamma is rational; pass the test-only flag");
}

RotationWordCtx::RotationWordCtx(const RotationWordCtx& base, mirror_tag)
    : gamma_(AlphaVal(Rational(1)) - base.gamma_),
      a_(base.a_),
      m_(base.m_),
      names_(base.names_),
      alpha_(base.alpha_),
      t_sign_(-base.t_sign_),
      h_map_(base.h_map_),
      r_map_(base.r_map_),
      t_map_(base.t_map_) {}

void RotationWordCtx::add_to(Assignment& env) const {
  auto put = [&](const std::string& name, const PAHomeo& map) {
    auto [it, inserted] = env.gens.emplace(name, map);
    if (!inserted && !(it->second == map))
      throw std::invalid_argument("RotationWordCtx: generator '" + name +
                                  "' already bound to a different map");
  };
  put(names_.t, t_map_);
  put(names_.h, h_map_);
  put(names_.r, r_map_);
}

long RotationWordCtx::choose_k(long long n) const {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("choose_k: n must be even and >= 2");
  // With m*frac(n*gamma/2) = j + rho, the unique k is m - j: then
  // frac(n*gamma/2 + k/m) = rho/m, inside [0, 1/m).
  AlphaVal phi = floor_frac(gamma_ * Rational(int_from(n / 2)), alpha_).frac;
  auto mphi = floor_frac(phi * Rational(m_), alpha_);
  if (mphi.frac.is_zero())
    throw std::invalid_argument("choose_k: frac(n*gamma/2) is an exact multiple of 1/m");
  long j = mphi.floor.get_si();  // in [0, m-1] since phi is in [0, 1)
  long k = m_ - j;
  // frac(phi + k/m) must land in [0, 1/m)
  AlphaVal shifted = floor_frac(phi + AlphaVal(make_rational(k, m_)), alpha_).frac;
  if (!(compare(shifted, AlphaVal(make_rational(1, m_)), alpha_) < 0))
    throw std::logic_error("choose_k: postcondition failed");
  return k;
}

Word RotationWordCtx::h_word(long long n) const {
  if (n < 0) throw std::invalid_argument("h_word: n must be >= 0");
  if (n == 0) return {};
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  }
  Word w;
  if (n % 2 == 1) {
    w = concat(Word{{names_.t, t_sign_}}, h_word(n - 1));
  } else {
    long k = choose_k(n);
    Word r{{names_.r, 1}};
    w = concat({power(r, -2 * k), {{names_.h, -1}}, power(r, k), h_word(n / 2),
                {{names_.h, 1}}});
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(n, std::move(w)).first->second;
}

long RotationWordCtx::length_bound(long long n) const {
  if (n <= 0) return 0;
  long log2n = 0;
  for (long long v = n; v > 1; v /= 2) ++log2n;
  return (3 * m_ + 3) * (log2n + 1) + 1;
}

Word RotationWordCtx::conj_word(long long n, const Letter& g, const PAHomeo& g_map) const {
  if (g_map.piece_count() == 1) return {g};  // rotations commute
  if (!agrees_on(g_map, PAHomeo::identity(), CirclePoint{AlphaVal(a_)}, CirclePoint{}, alpha_))
    throw std::invalid_argument("conj_word: generator '" + g.gen +
                                "' is not trivial on the arc (a, 1)");
  if (n == 0) return {g};
  if (n < 0) return mirror().conj_word(-n, g, g_map);
  Word w = h_word(n);
  return concat({w, {g}, invert(w)});
}

const RotationWordCtx& RotationWordCtx::mirror() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!mirror_) mirror_.reset(new RotationWordCtx(*this, mirror_tag{}));
  return *mirror_;
}

}  // namespace paff
