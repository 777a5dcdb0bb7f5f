#include "paff/distortion.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace paff {

namespace {

Int int_from(long long v) {
  static_assert(sizeof(long long) == sizeof(long), "needs 64-bit long");
  return Int(static_cast<long>(v));
}

AlphaVal frac_n_alpha(long long n, const QuadIrr& alpha) {
  return floor_frac(AlphaVal::alpha_times(Rational(int_from(n))), alpha).frac;
}

const Rational& beta0() {
  static const Rational b = make_rational(1, 1000);
  return b;
}

const RotationWordCtx& ctx_for(const GenSet& gs, const std::string& gen) {
  if (gen == "f1") return gs.ctx_f1();
  if (gen == "f2") return gs.ctx_f2();
  throw std::logic_error("GenSet: no rotation-word context for generator '" + gen + "'");
}

}  // namespace

GenSet::GenSet(const QuadIrr& alpha) : alpha_(alpha), eq_(identity_equation()) {
  AlphaVal gamma = AlphaVal::alpha_times(1);
  ctx_f1_ = std::make_unique<RotationWordCtx>(
      gamma, make_rational(9, 10), 21, RotationWordCtx::Names{"T_alpha", "h_f1", "r_f1"},
      alpha_);
  ctx_f2_ = std::make_unique<RotationWordCtx>(
      gamma, make_rational(197, 200), 134, RotationWordCtx::Names{"T_alpha", "h_f2", "r_f2"},
      alpha_);
  env_.gens.emplace("f1", make_f1(alpha_));
  env_.gens.emplace("f2", make_f2(alpha_));
  env_.gens.emplace("t_half", PAHomeo::rotation(AlphaVal(make_rational(1, 2)), alpha_));
  env_.gens.emplace("t_quarter", PAHomeo::rotation(AlphaVal(make_rational(1, 4)), alpha_));
  ctx_f1_->add_to(env_);
  ctx_f2_->add_to(env_);
}

Word distortion_word(long long n, const GenSet& gs) {
  AlphaVal frac = frac_n_alpha(n, gs.alpha());
  if (sign(frac, gs.alpha()) <= 0 ||
      compare(frac, AlphaVal(beta0()), gs.alpha()) >= 0)
    throw std::invalid_argument(
        "distortion_word: frac(n*alpha) must lie in (0, 1/1000); n is not in the orbit "
        "subsequence");

  Word out;
  long long s = 0;
  for (const auto& [ki, gi] : gs.equation().factors) {
    s += ki;
    const PAHomeo& g_map = gs.assignment().gens.at(gi.gen);
    if (g_map.piece_count() == 1) {  // rotation letters conjugate to themselves
      out.push_back(gi);
      continue;
    }
    Word conj = ctx_for(gs, gi.gen).conj_word(n * s, gi, g_map);
    out.insert(out.end(), conj.begin(), conj.end());
  }
  return out;
}

bool verify_distortion_word(long long n, const Word& w, const GenSet& gs) {
  long long target = n * gs.equation().m;
  PAHomeo want = PAHomeo::rotation(frac_n_alpha(target, gs.alpha()), gs.alpha());
  return evaluate(w, gs.assignment(), gs.alpha()) == want;
}

long distortion_length_bound(long long n, const GenSet& gs) {
  long bound = 0;
  long long s = 0;
  for (const auto& [ki, gi] : gs.equation().factors) {
    s += ki;
    const PAHomeo& g_map = gs.assignment().gens.at(gi.gen);
    if (g_map.piece_count() == 1) {
      bound += 1;
      continue;
    }
    long long reach = n * s;
    if (reach < 0) reach = -reach;
    bound += 2 * ctx_for(gs, gi.gen).length_bound(reach) + 1;
  }
  return bound;
}

std::vector<DistortionRow> distortion_table(const QuadIrr& alpha, int count) {
  GenSet gs(alpha);
  std::vector<DistortionRow> rows;
  for (long long n : orbit_entries(alpha, beta0(), count)) {
    Word w = distortion_word(n, gs);
    DistortionRow row;
    row.n = n;
    row.frac_n_alpha = frac_n_alpha(n, alpha);
    row.target_power = n * gs.equation().m;
    row.word_len = static_cast<long>(word_length(w));
    row.ratio_log = static_cast<double>(row.word_len) / std::log2(static_cast<double>(n));
    long long denom = n * gs.equation().m;
    if (denom < 0) denom = -denom;
    row.ratio_linear = make_rational(row.word_len, int_from(denom));
    row.verified = verify_distortion_word(n, w, gs);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_csv(const std::vector<DistortionRow>& rows, const QuadIrr& alpha, std::ostream& out) {
  out << "n,frac_n_alpha_decimal,target_power,word_len,log2_n,ratio_log,ratio_linear,verified\n";
  for (const auto& row : rows) {
    double log2n = std::log2(static_cast<double>(row.n));
    out << row.n << ',' << to_decimal(row.frac_n_alpha, alpha, 12) << ',' << row.target_power
        << ',' << row.word_len << ',' << format_g12(log2n) << ',' << format_g12(row.ratio_log)
        << ',' << to_decimal(AlphaVal(row.ratio_linear), alpha, 12) << ','
        << (row.verified ? "true" : "false") << '\n';
  }
}

}  // namespace paff
