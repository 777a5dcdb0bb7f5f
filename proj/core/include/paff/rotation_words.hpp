#pragma once

#include "paff/words.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace paff {

/// The 2-piece map h with h(x) = x/2 on [0, a + 2/m), extended affinely to
/// close the circle. Requires a + 2/m < 1; throws citing that bound.
PAHomeo make_halving_map(const Rational& a, long m, const QuadIrr& alpha);

/// Produces short words over three generators
///   t = rotation by gamma, h = halving map, r = rotation by 1/m
/// realizing rotation powers: h_word(n) evaluates to a homeomorphism that
/// agrees with rotation(n * gamma) on the whole arc (0, a) while spending
/// only O(log n) letters, via the halving recursion
///   h_word(2n) = r^-2k h^-1 r^k h_word(n) h,   h_word(2n+1) = t h_word(2n).
/// Conjugates rotation(n gamma) g rotation(-n gamma) of maps g trivial on
/// (a, 1) then cost two such words plus one letter.
class RotationWordCtx {
 public:
  struct Names {
    std::string t, h, r;
  };

  /// gamma must lie in (0,1) and be irrational (b-component nonzero) unless
  /// the context is explicitly flagged for rational test angles.
  RotationWordCtx(AlphaVal gamma, Rational a, long m, Names names, const QuadIrr& alpha,
                  bool allow_rational_gamma = false);

  RotationWordCtx(const RotationWordCtx&) = delete;
  RotationWordCtx& operator=(const RotationWordCtx&) = delete;

  const AlphaVal& gamma() const { return gamma_; }
  const Rational& threshold() const { return a_; }
  long steps() const { return m_; }
  const Names& names() const { return names_; }
  const QuadIrr& alpha() const { return alpha_; }
  const PAHomeo& halving_map() const { return h_map_; }

  /// Inserts this context's generator maps into env. The t generator always
  /// maps to the rotation by the base (unmirrored) angle. Throws if a name
  /// is already bound to a different map.
  void add_to(Assignment& env) const;

  /// The unique k in {1..m} with frac(n*gamma/2 + k/m) in [0, 1/m), for even
  /// n >= 2. Throws when frac(n*gamma/2) is an exact multiple of 1/m, which
  /// can only happen for rational test angles.
  long choose_k(long long n) const;

  /// Word over {t, h, r} whose evaluation agrees with rotation(n * gamma) on
  /// the arc (0, a); n >= 0. Memoized per context; thread safe.
  Word h_word(long long n) const;

  /// word_length(h_word(n)) <= length_bound(n) = (3m+3)(floor(log2 n)+1)+1
  /// for n >= 1; length_bound(0) = 0.
  long length_bound(long long n) const;

  /// Word evaluating exactly to rotation(n gamma) o map(g) o rotation(-n gamma).
  /// If map(g) is itself a rotation the conjugation collapses to [g]; otherwise
  /// map(g) must be trivial on (a, 1) (checked, throws if not). Negative n
  /// runs the mirrored context.
  Word conj_word(long long n, const Letter& g, const PAHomeo& g_map) const;

  /// Context for the reversed angle 1 - gamma, whose t letters are this
  /// context's inverted. Built lazily, shares the generator maps; its memo
  /// persists for the lifetime of this context.
  const RotationWordCtx& mirror() const;

 private:
  struct mirror_tag {};
  RotationWordCtx(const RotationWordCtx& base, mirror_tag);

  AlphaVal gamma_;
  Rational a_;
  long m_;
  Names names_;
  QuadIrr alpha_;
  int t_sign_ = 1;
  PAHomeo h_map_, r_map_, t_map_;  // t_map_ is the base-angle rotation

  mutable std::mutex mu_;
  mutable std::unordered_map<long long, Word> memo_;
  mutable std::unique_ptr<RotationWordCtx> mirror_;
};

}  // namespace paff
