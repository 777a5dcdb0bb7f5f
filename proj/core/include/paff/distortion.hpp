#pragma once

#include "paff/rotation_words.hpp"
#include "paff/tower.hpp"

#include <iosfwd>
#include <memory>
#include <vector>

namespace paff {

/// The fixed nine-generator set over a chosen quadratic irrational alpha:
/// {T_alpha, f1, f2, t_half, t_quarter} plus the generators {h_f1, r_f1} and
/// {h_f2, r_f2} of the two rotation-word contexts (f1 is trivial on
/// (9/10, 1) with m = 21; f2 on (197/200, 1) with m = 134).
class GenSet {
 public:
  explicit GenSet(const QuadIrr& alpha);

  const QuadIrr& alpha() const { return alpha_; }
  const Assignment& assignment() const { return env_; }
  const IdentityEquation& equation() const { return eq_; }
  const RotationWordCtx& ctx_f1() const { return *ctx_f1_; }
  const RotationWordCtx& ctx_f2() const { return *ctx_f2_; }

 private:
  QuadIrr alpha_;
  IdentityEquation eq_;
  std::unique_ptr<RotationWordCtx> ctx_f1_, ctx_f2_;
  Assignment env_;
};

inline GenSet build_genset(const QuadIrr& alpha) { return GenSet(alpha); }

/// Word over the generating set that evaluates exactly to the rotation by
/// frac(n * m * alpha), with m = equation().m: each factor of the conjugated
/// form of the identity is replaced by a logarithmic-length conjugation word.
/// Requires frac(n * alpha) in (0, 10^-3), checked exactly.
Word distortion_word(long long n, const GenSet& gs);

/// True iff w evaluates, in canonical form, to the rotation by
/// frac(n * m * alpha) — a one-piece exact equality.
bool verify_distortion_word(long long n, const Word& w, const GenSet& gs);

/// Certified constructive upper bound on word_length(distortion_word(n)).
long distortion_length_bound(long long n, const GenSet& gs);

struct DistortionRow {
  long long n = 0;
  AlphaVal frac_n_alpha;
  long long target_power = 0;  // n * m (the word realizes this rotation power)
  long word_len = 0;
  double ratio_log = 0;     // word_len / log2(n)
  Rational ratio_linear;    // word_len / (|m| * n)
  bool verified = false;
};

/// Rows for the first `count` orbit entries (convergent denominators n with
/// frac(n alpha) in (0, 10^-3)), each verified by exact evaluation.
std::vector<DistortionRow> distortion_table(const QuadIrr& alpha, int count);

/// CSV columns, in order: n, frac_n_alpha_decimal, target_power, word_len,
/// log2_n, ratio_log, ratio_linear, verified. Decimal fields use 12
/// significant digits; output is byte-deterministic for fixed inputs.
void write_csv(const std::vector<DistortionRow>& rows, const QuadIrr& alpha, std::ostream& out);

}  // namespace paff
