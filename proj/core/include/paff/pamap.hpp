#pragma once

#include "paff/numbers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace paff {

/// A point of the circle R/Z, stored as the canonical representative in [0,1).
struct CirclePoint {
  AlphaVal v;

  static CirclePoint reduce(const AlphaVal& x, const QuadIrr& alpha) {
    return CirclePoint{floor_frac(x, alpha).frac};
  }
  bool operator==(const CirclePoint& other) const { return v == other.v; }
};

/// One affine piece of a lift: on [left, next_left) the lift is
/// image + slope * (x - left).
struct AffinePiece {
  AlphaVal left;    // in [0,1)
  Rational slope;   // > 0
  AlphaVal image;   // lift value at left

  bool operator==(const AffinePiece& other) const {
    return left == other.left && slope == other.slope && image == other.image;
  }
};

/// An orientation-preserving piecewise-affine circle homeomorphism, stored as
/// a degree-one lift F with F(x+1) = F(x) + 1 over the fundamental domain
/// [0,1). Canonical form:
///   - pieces sorted by left endpoint, the first always at 0,
///   - no two consecutive pieces share a slope (so every interior breakpoint
///     is a genuine slope change; 0 itself may be an artificial anchor),
///   - the lift is normalized with F(0) in [0,1).
/// Two maps are equal as circle homeomorphisms iff their canonical forms are
/// identical, field by field. No tolerances anywhere.
class PAHomeo {
 public:
  PAHomeo() : PAHomeo(identity()) {}

  static PAHomeo identity();
  static PAHomeo rotation(const AlphaVal& t, const QuadIrr& alpha);

  /// The unique piecewise-affine interpolant through the given samples
  /// (point, lift value), closed up around the circle with total rise 1.
  /// Throws std::invalid_argument on non-monotone input, naming the pair.
  static PAHomeo from_breakpoints(const std::vector<std::pair<CirclePoint, AlphaVal>>& samples,
                                  const QuadIrr& alpha);

  /// Validates a raw piece list (sorted lefts in [0,1), positive slopes,
  /// continuity around the circle, rise exactly 1) and canonicalizes it.
  static PAHomeo from_pieces(std::vector<AffinePiece> pieces, const QuadIrr& alpha);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  bool is_identity() const;

  bool operator==(const PAHomeo& other) const { return pieces_ == other.pieces_; }

 private:
  struct raw_tag {};
  PAHomeo(std::vector<AffinePiece> pieces, raw_tag) : pieces_(std::move(pieces)) {}

  static PAHomeo canonicalize(std::vector<AffinePiece> pieces, const QuadIrr& alpha);

  friend PAHomeo compose(const PAHomeo&, const PAHomeo&, const QuadIrr&);
  friend PAHomeo inverse(const PAHomeo&, const QuadIrr&);

  std::vector<AffinePiece> pieces_;
};

/// Exact composition f after g; piece_count(result) <= piece_count(f) +
/// piece_count(g).
PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const QuadIrr& alpha);
PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const PAHomeo& h, const QuadIrr& alpha);
PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const PAHomeo& h, const PAHomeo& k,
                const QuadIrr& alpha);

PAHomeo inverse(const PAHomeo& f, const QuadIrr& alpha);

CirclePoint eval(const PAHomeo& f, const CirclePoint& x, const QuadIrr& alpha);

/// Lift value F(t) for arbitrary t.
AlphaVal eval_lift(const PAHomeo& f, const AlphaVal& t, const QuadIrr& alpha);

/// Slope of f on the piece containing the circle point t (pieces are closed
/// on the left).
Rational slope_at(const PAHomeo& f, const AlphaVal& t, const QuadIrr& alpha);

/// Whether f and g coincide, as functions, on the whole positively-oriented
/// closed arc from `lo` to `hi` (wrapping through 0 when hi <= lo). Decided
/// piecewise, not by sampling. Throws on a degenerate arc (lo == hi).
bool agrees_on(const PAHomeo& f, const PAHomeo& g, const CirclePoint& lo, const CirclePoint& hi,
               const QuadIrr& alpha);

/// One "(left, slope, image)" line per piece, in the exact serialization of
/// the numbers module.
std::string to_string(const PAHomeo& f);

}  // namespace paff
