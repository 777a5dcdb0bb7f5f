#include "paff/pamap.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace paff {

namespace {

const Rational kOne = 1;

// Largest i with pieces[i].left <= x, for x in [0,1). pieces[0].left == 0.
std::size_t piece_index(const std::vector<AffinePiece>& pieces, const AlphaVal& x,
                        const QuadIrr& alpha) {
  std::size_t lo = 0, hi = pieces.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (compare(pieces[mid].left, x, alpha) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

PAHomeo PAHomeo::identity() {
  std::vector<AffinePiece> pieces{{AlphaVal(), kOne, AlphaVal()}};
  return PAHomeo(std::move(pieces), raw_tag{});
}

PAHomeo PAHomeo::rotation(const AlphaVal& t, const QuadIrr& alpha) {
  std::vector<AffinePiece> pieces{{AlphaVal(), kOne, floor_frac(t, alpha).frac}};
  return PAHomeo(std::move(pieces), raw_tag{});
}

bool PAHomeo::is_identity() const {
  return pieces_.size() == 1 && pieces_[0].slope == 1 && pieces_[0].image.is_zero();
}

PAHomeo PAHomeo::canonicalize(std::vector<AffinePiece> pieces, const QuadIrr& alpha) {
  if (pieces.empty()) throw std::invalid_argument("PAHomeo: empty piece list");

  // Anchor the fundamental domain at 0: split the wrap piece if needed.
  if (!pieces.front().left.is_zero()) {
    const AffinePiece& last = pieces.back();
    AlphaVal image_at_0 =
        last.image + last.slope * (AlphaVal(Rational(1)) - last.left) - AlphaVal(Rational(1));
    pieces.insert(pieces.begin(), AffinePiece{AlphaVal(), last.slope, std::move(image_at_0)});
  }

  // Drop interior breakpoints where the slope does not change; continuity
  // makes equal-slope neighbours collinear. The anchor at 0 always stays.
  std::vector<AffinePiece> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty() && merged.back().slope == p.slope) continue;
    merged.push_back(std::move(p));
  }

  // Normalize the lift so that F(0) lands in [0,1). Internal constructions
  // keep the first image within [-1, 2), so probe the unit shifts before
  // falling back to the exact generic floor.
  const AlphaVal& front = merged.front().image;
  Int shift;
  if (sign(front, alpha) >= 0) {
    if (compare(front, AlphaVal(Rational(1)), alpha) < 0)
      shift = 0;
    else if (compare(front, AlphaVal(Rational(2)), alpha) < 0)
      shift = 1;
    else
      shift = floor_frac(front, alpha).floor;
  } else if (compare(front, AlphaVal(Rational(-1)), alpha) >= 0) {
    shift = -1;
  } else {
    shift = floor_frac(front, alpha).floor;
  }
  if (shift != 0) {
    AlphaVal delta{Rational(shift)};
    for (auto& p : merged) p.image = p.image - delta;
  }
  return PAHomeo(std::move(merged), raw_tag{});
}

PAHomeo PAHomeo::from_pieces(std::vector<AffinePiece> pieces, const QuadIrr& alpha) {
  if (pieces.empty()) throw std::invalid_argument("PAHomeo: empty piece list");
  const AlphaVal one{Rational(1)};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!(p.slope > 0))
      throw std::invalid_argument("PAHomeo: slope must be positive, got " +
                                  rational_to_string(p.slope));
    if (sign(p.left, alpha) < 0 || compare(p.left, one, alpha) >= 0)
      throw std::invalid_argument("PAHomeo: breakpoint " + to_string(p.left) + " outside [0,1)");
    if (i > 0 && compare(pieces[i - 1].left, p.left, alpha) >= 0)
      throw std::invalid_argument("PAHomeo: breakpoints not strictly increasing at " +
                                  to_string(p.left));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    bool wrap = i + 1 == pieces.size();
    AlphaVal next_left = wrap ? pieces.front().left + one : pieces[i + 1].left;
    AlphaVal next_image = wrap ? pieces.front().image + one : pieces[i + 1].image;
    AlphaVal reached = p.image + p.slope * (next_left - p.left);
    if (!(reached == next_image))
      throw std::invalid_argument("PAHomeo: discontinuity after breakpoint " + to_string(p.left));
  }
  return canonicalize(std::move(pieces), alpha);
}

PAHomeo PAHomeo::from_breakpoints(const std::vector<std::pair<CirclePoint, AlphaVal>>& samples,
                                  const QuadIrr& alpha) {
  if (samples.empty()) throw std::invalid_argument("from_breakpoints: no samples");
  const AlphaVal one{Rational(1)};
  std::vector<AffinePiece> pieces;
  pieces.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    bool wrap = i + 1 == samples.size();
    const AlphaVal& x0 = samples[i].first.v;
    const AlphaVal& y0 = samples[i].second;
    AlphaVal x1 = wrap ? samples.front().first.v + one : samples[i + 1].first.v;
    AlphaVal y1 = wrap ? samples.front().second + one : samples[i + 1].second;
    AlphaVal dx = x1 - x0;
    AlphaVal dy = y1 - y0;
    if (compare(x1, x0, alpha) <= 0)
      throw std::invalid_argument("from_breakpoints: points not strictly increasing between " +
                                  to_string(x0) + " and " + to_string(x1));
    if (sign(dy, alpha) <= 0)
      throw std::invalid_argument("from_breakpoints: images not strictly increasing between " +
                                  to_string(y0) + " and " + to_string(y1));
    // The slope dy/dx must be rational: dy = r * dx componentwise.
    if (!(dy.a * dx.b == dy.b * dx.a))
      throw std::invalid_argument("from_breakpoints: irrational slope between " + to_string(x0) +
                                  " and " + to_string(x1));
    Rational r = (dx.a != 0) ? Rational(dy.a / dx.a) : Rational(dy.b / dx.b);
    pieces.push_back(AffinePiece{x0, std::move(r), y0});
  }
  return from_pieces(std::move(pieces), alpha);
}

PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const QuadIrr& alpha) {
  const auto& fp = f.pieces_;
  const auto& gp = g.pieces_;
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;

  // A one-piece map is a rotation (slope 1 is forced by the unit rise), and
  // rotations compose by plain shifts; these paths carry most of the work of
  // evaluating long words.
  if (fp.size() == 1) {
    // f o g shifts every image of g by c
    const AlphaVal& c = fp[0].image;
    std::vector<AffinePiece> out;
    out.reserve(gp.size());
    for (const auto& p : gp) out.push_back(AffinePiece{p.left, p.slope, p.image + c});
    return PAHomeo::canonicalize(std::move(out), alpha);
  }
  if (gp.size() == 1) {
    // f o g pulls every breakpoint of f back by c
    const AlphaVal& c = gp[0].image;
    const AlphaVal one{Rational(1)};
    std::size_t j0 = piece_index(fp, c, alpha);
    std::vector<AffinePiece> out;
    out.reserve(fp.size() + 1);
    out.push_back(AffinePiece{AlphaVal(), fp[j0].slope,
                              fp[j0].image + fp[j0].slope * (c - fp[j0].left)});
    for (std::size_t j = j0 + 1; j < fp.size(); ++j)
      out.push_back(AffinePiece{fp[j].left - c, fp[j].slope, fp[j].image});
    bool j0_splits = !(fp[j0].left == c);  // exact left == c means no wrap copy
    for (std::size_t j = 0; j < j0 + (j0_splits ? 1 : 0); ++j)
      out.push_back(AffinePiece{fp[j].left - c + one, fp[j].slope, fp[j].image + one});
    return PAHomeo::canonicalize(std::move(out), alpha);
  }

  const std::size_t kf = fp.size();
  const std::size_t kg = gp.size();
  const AlphaVal& v0 = gp[0].image;  // G(0), in [0,1)

  // Sweep the f piece containing the running lift position G(x). `fshift`
  // is the integer translate applied to f's fundamental domain; `next_pos`
  // caches the lift position of the next f breakpoint.
  std::size_t fj = piece_index(fp, v0, alpha);
  AlphaVal fshift;
  auto advance = [&]() {
    if (++fj == kf) {
      fj = 0;
      fshift = fshift + AlphaVal(Rational(1));
    }
  };
  auto next_pos = [&]() {
    return (fj + 1 < kf) ? fp[fj + 1].left + fshift : AlphaVal(Rational(1)) + fshift;
  };

  std::vector<AffinePiece> out;
  out.reserve(kf + kg);
  AlphaVal next = next_pos();
  for (std::size_t i = 0; i < kg; ++i) {
    const AlphaVal& w = gp[i].image;
    AlphaVal w_end = (i + 1 < kg) ? gp[i + 1].image : v0 + AlphaVal(Rational(1));
    while (compare(next, w, alpha) <= 0) {
      advance();
      next = next_pos();
    }
    out.push_back(AffinePiece{gp[i].left, gp[i].slope * fp[fj].slope,
                              fp[fj].image + fshift + fp[fj].slope * (w - fp[fj].left - fshift)});
    while (compare(next, w_end, alpha) < 0) {
      AlphaVal x = gp[i].left + (next - w) * (kOne / gp[i].slope);
      advance();
      out.push_back(AffinePiece{std::move(x), gp[i].slope * fp[fj].slope,
                                fp[fj].image + fshift});
      next = next_pos();
    }
  }
  return PAHomeo::canonicalize(std::move(out), alpha);
}

PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const PAHomeo& h, const QuadIrr& alpha) {
  return compose(compose(f, g, alpha), h, alpha);
}

PAHomeo compose(const PAHomeo& f, const PAHomeo& g, const PAHomeo& h, const PAHomeo& k,
                const QuadIrr& alpha) {
  return compose(compose(compose(f, g, alpha), h, alpha), k, alpha);
}

PAHomeo inverse(const PAHomeo& f, const QuadIrr& alpha) {
  const auto& fp = f.pieces_;
  const AlphaVal one{Rational(1)};
  // Lift values v_i increase through [v_0, v_0 + 1) with v_0 in [0,1); the
  // inverse's breakpoints are their reductions mod 1, which come out sorted
  // when the tail with v_i >= 1 is rotated to the front.
  std::size_t t = fp.size();
  for (std::size_t i = 1; i < fp.size(); ++i) {
    if (compare(fp[i].image, one, alpha) >= 0) {
      t = i;
      break;
    }
  }
  std::vector<AffinePiece> out;
  out.reserve(fp.size());
  for (std::size_t i = t; i < fp.size(); ++i)
    out.push_back(AffinePiece{fp[i].image - one, kOne / fp[i].slope, fp[i].left - one});
  for (std::size_t i = 0; i < t; ++i)
    out.push_back(AffinePiece{fp[i].image, kOne / fp[i].slope, fp[i].left});
  return PAHomeo::canonicalize(std::move(out), alpha);
}

CirclePoint eval(const PAHomeo& f, const CirclePoint& x, const QuadIrr& alpha) {
  const auto& fp = f.pieces();
  std::size_t i = piece_index(fp, x.v, alpha);
  AlphaVal y = fp[i].image + fp[i].slope * (x.v - fp[i].left);
  // y lies in [F(0), F(0)+1), a subset of [0,2)
  if (compare(y, AlphaVal(Rational(1)), alpha) >= 0) y = y - AlphaVal(Rational(1));
  return CirclePoint{std::move(y)};
}

AlphaVal eval_lift(const PAHomeo& f, const AlphaVal& t, const QuadIrr& alpha) {
  auto ff = floor_frac(t, alpha);
  const auto& fp = f.pieces();
  std::size_t i = piece_index(fp, ff.frac, alpha);
  return fp[i].image + fp[i].slope * (ff.frac - fp[i].left) + AlphaVal(Rational(ff.floor));
}

Rational slope_at(const PAHomeo& f, const AlphaVal& t, const QuadIrr& alpha) {
  AlphaVal frac = floor_frac(t, alpha).frac;
  return f.pieces()[piece_index(f.pieces(), frac, alpha)].slope;
}

bool agrees_on(const PAHomeo& f, const PAHomeo& g, const CirclePoint& lo, const CirclePoint& hi,
               const QuadIrr& alpha) {
  if (lo == hi) throw std::invalid_argument("agrees_on: degenerate arc");
  const AlphaVal one{Rational(1)};
  const AlphaVal& L = lo.v;
  AlphaVal H = (compare(hi.v, lo.v, alpha) > 0) ? hi.v : hi.v + one;

  // The lifts must differ by an integer at the arc's start...
  AlphaVal d = eval_lift(f, L, alpha) - eval_lift(g, L, alpha);
  if (!floor_frac(d, alpha).frac.is_zero()) return false;

  // ...and the slopes must match on every breakpoint-free subinterval.
  std::vector<AlphaVal> cuts;
  for (const PAHomeo* m : {&f, &g}) {
    for (const auto& p : m->pieces()) {
      for (int shift : {0, 1}) {
        AlphaVal c = p.left + AlphaVal(Rational(shift));
        if (compare(c, L, alpha) > 0 && compare(c, H, alpha) < 0) cuts.push_back(std::move(c));
      }
    }
  }
  cuts.push_back(L);
  std::sort(cuts.begin(), cuts.end(),
            [&](const AlphaVal& x, const AlphaVal& y) { return compare(x, y, alpha) < 0; });
  for (const auto& c : cuts) {
    if (!(slope_at(f, c, alpha) == slope_at(g, c, alpha))) return false;
  }
  return true;
}

std::string to_string(const PAHomeo& f) {
  std::string out;
  for (const auto& p : f.pieces()) {
    out += "(" + to_string(p.left) + ", " + rational_to_string(p.slope) + ", " +
           to_string(p.image) + ")\n";
  }
  return out;
}

}  // namespace paff
