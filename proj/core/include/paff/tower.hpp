#pragma once

#include "paff/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace paff {

/// Slope-2 map on [0.4, 0.6], identity on [0.9, 1.1] (wrapping) and on
/// [0.1, 0.4]; the minimal 4-piece extension with a slope-1/3 connector.
PAHomeo make_f1(const QuadIrr& alpha);

/// Doubling map on [0, 0.49], identity on [0.985, 1]; 3-piece extension with
/// a slope-1/99 connector, so f2 is trivial on the arc (0.985, 1).
PAHomeo make_f2(const QuadIrr& alpha);

/// One level of the tower built over the generator x = T_beta:
///   level 1: x^-2 f1 x^2 f1^-1
///   level 2: t_half L1^-1 t_half L1
///   level 3: x^2 L2
///   level 4: f2^-1 L3 f2
///   level 5: t_half L4 t_half L4
/// Returns both the composed map and its defining word over
/// {x, f1, f2, t_half}.
struct TowerLevel {
  PAHomeo map;
  Word word;
};

/// Builds the given level (1..5). Requires 0 < beta < 10^-3, checked
/// exactly; throws std::invalid_argument outside that range.
TowerLevel tower_level(int level, const AlphaVal& beta, const QuadIrr& alpha);

/// Named results of the nine exact identity checks on the tower.
struct TowerReport {
  AlphaVal beta;
  std::vector<std::pair<std::string, bool>> checks;
  bool overall = false;

  bool check(const std::string& name) const;
};

/// Runs every check, all with exact arithmetic: the level-1 shift and fixed
/// arcs, the level-2 shift and involution, the level-3 fixed arc and its
/// rotation identity, the scaled structure of levels 4 and 5, and the final
/// identity producing T_{2 beta}. Failures land in the report, not in
/// exceptions.
TowerReport verify_tower(const AlphaVal& beta, const QuadIrr& alpha);

/// The relation x^{k_1} g_1 x^{k_2} g_2 ... x^{k_l} g_l = x^k satisfied by
/// x = T_beta for every sufficiently small beta > 0, with the g_i independent
/// of beta and k != k_1 + ... + k_l. Obtained by expanding the tower's final
/// identity symbolically; m = k - sum k_i drives the distortion pipeline.
struct IdentityEquation {
  Word lhs;  // over {x, f1, f2, t_half, t_quarter}
  Word rhs;  // x^2
  std::vector<std::pair<long, Letter>> factors;  // (k_i, g_i), in order
  long k = 0;
  long m = 0;
};

IdentityEquation identity_equation();

}  // namespace paff
