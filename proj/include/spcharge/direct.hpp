#pragma once

// Direct construction of the cocyclage iterates of a symplectic row tableau:
// the tableau T_alpha, the partner algorithm producing T_k, its refinement
// T_{k,s} on locally shifted shapes, and the closed-form charge.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shapes.hpp"
#include "tableaux.hpp"
#include "typec.hpp"

namespace spcharge {

/// Shape used for T_alpha after k weighted shifts: the weighted shift itself,
/// or its simplification.
enum class AlphaMode { Literal, Reduced };

struct TAlpha {
  Composition alpha;
  Partition nu;
  std::vector<Letter> entries;  // weakly increasing, |alpha| letters
  int nred = 0;
  int R = 1;
};

inline std::pair<Composition, Partition> weighted_shape(const SymplecticRowSpec& s, int k, AlphaMode mode) {
  if (k < 0) throw std::invalid_argument("step count must be nonnegative");
  auto st = wshift_power(row_shape(s.p), s.mu, k);
  if (mode == AlphaMode::Reduced) st = simp(st.first, st.second);
  return st;
}

/// Deletes mu_{i-bar} copies of i-bar for i = R..n from the row, then moves
/// unbarred letters up and barred letters down by nred.
inline TAlpha compute_T_alpha(const SymplecticRowSpec& s, int k, AlphaMode mode = AlphaMode::Literal) {
  validate(s);
  auto [alpha, nu] = weighted_shape(s, k, mode);
  TAlpha t{alpha, nu, {}, s.mu.length() - nu.length(), 0};
  t.R = s.n - t.nred + 1;
  std::vector<Letter> row = row_letters(s);
  for (int i = t.R; i <= s.n; ++i)
    for (int c = 0; c < s.mu_bar(i); ++c) row.erase(std::find(row.begin(), row.end(), -i));
  for (Letter& v : row) v = v > 0 ? v + t.nred : v - t.nred;
  if (static_cast<int>(row.size()) != alpha.size()) throw std::logic_error("T_alpha size does not match its shape");
  t.entries = std::move(row);
  return t;
}

enum class BoxRole { Partner, Single, Copied };

/// Output of the partner algorithm on labels 1..|alpha|.
struct PartnerFilling {
  std::vector<Letter> entries;
  std::vector<int> partner;  // partner label, or 0
  std::vector<BoxRole> role;
};

using LabelDistance = std::function<int(int, int)>;

/// The partner algorithm: unbarred labels D scan upward while barred labels
/// D' scan downward. Each unbarred letter either pairs with D' at content
/// X = T_alpha(D) + delta(D', D), or first a block of mu_{M-bar} single boxes
/// below D' receives (M + nred)-bar. Remaining labels copy T_alpha.
inline PartnerFilling run_partner_algorithm(const std::vector<Letter>& ta, const LabelDistance& delta, int nred,
                                            int R, const std::function<int(int)>& mu_bar) {
  const int L = static_cast<int>(ta.size());
  PartnerFilling f{std::vector<Letter>(static_cast<std::size_t>(L), 0), std::vector<int>(static_cast<std::size_t>(L), 0),
                   std::vector<BoxRole>(static_cast<std::size_t>(L), BoxRole::Copied)};
  auto at = [](auto& v, int label) -> auto& { return v[static_cast<std::size_t>(label - 1)]; };
  int D = L + 1;
  for (int d = 1; d <= L; ++d)
    if (ta[static_cast<std::size_t>(d - 1)] > 0) {
      D = d;
      break;
    }
  int Dp = 0;
  for (int d = L; d >= 1; --d)
    if (ta[static_cast<std::size_t>(d - 1)] < 0) {
      Dp = d;
      break;
    }
  int M = 1;
  while (D <= L) {
    if (Dp < 1) throw std::logic_error("unbarred letter without a barred partner");
    const int X = at(ta, D) + delta(Dp, D);
    if (X < M + nred || M >= R) {
      at(f.entries, Dp) = -X;
      at(f.entries, D) = X;
      at(f.partner, Dp) = D;
      at(f.partner, D) = Dp;
      at(f.role, Dp) = BoxRole::Partner;
      at(f.role, D) = BoxRole::Partner;
      ++D;
      --Dp;
    } else {
      const int m = mu_bar(M);
      for (int t = Dp - m + 1; t <= Dp; ++t) {
        at(f.entries, t) = -(M + nred);
        at(f.role, t) = BoxRole::Single;
      }
      Dp -= m;
      ++M;
    }
  }
  for (int t = 1; t <= Dp; ++t) at(f.entries, t) = at(ta, t);
  return f;
}

struct PartneredTableau {
  Tableau tableau;
  std::vector<int> partner;
  std::vector<BoxRole> role;
  Composition alpha;
  std::vector<Letter> t_alpha;
  int nred = 0;
  int R = 1;
};

/// T_k: the partner algorithm on the shape after k weighted shifts with the
/// box distance of that shape.
inline PartneredTableau compute_Tk(const SymplecticRowSpec& s, int k, AlphaMode mode = AlphaMode::Literal) {
  const TAlpha ta = compute_T_alpha(s, k, mode);
  const auto boxes = natural_order(ta.alpha);
  const LabelDistance delta = [&](int x, int y) {
    return distance(boxes[static_cast<std::size_t>(x - 1)], boxes[static_cast<std::size_t>(y - 1)]);
  };
  auto f = run_partner_algorithm(ta.entries, delta, ta.nred, ta.R, [&](int M) { return s.mu_bar(M); });
  return {Tableau(ta.alpha, std::move(f.entries)), std::move(f.partner), std::move(f.role), ta.alpha, ta.entries,
          ta.nred, ta.R};
}

/// Labels of the locally shifted shape alpha^s and the distance they inherit
/// from alpha. c is the label of b_- in alpha^s.
struct AugmentedDistanceContext {
  Composition alpha;
  int s = 1;
  int c = 1;
  bool c_barred = true;  // whether T_alpha(c) is barred
};

inline int pos_map(const AugmentedDistanceContext& ctx, int x) {
  if (x < 1 || x > ctx.alpha.size()) throw std::invalid_argument("label out of range");
  return (ctx.c + 1 - ctx.s <= x && x < ctx.c) ? x + 1 : x;
}

inline int delta_augmented(const AugmentedDistanceContext& ctx, int x, int y) {
  if (x >= y) throw std::invalid_argument("delta_augmented requires x < y");
  const auto boxes = natural_order(ctx.alpha);
  auto d = [&](int a, int b) {
    return distance(boxes[static_cast<std::size_t>(a - 1)], boxes[static_cast<std::size_t>(b - 1)]);
  };
  if (ctx.s == 1 || (x != ctx.c && y != ctx.c)) return d(pos_map(ctx, x), pos_map(ctx, y));
  const int ref = ctx.c_barred ? ctx.c : ctx.c + 1;
  if (y == ctx.c) return d(pos_map(ctx, x), ref);
  return d(ref, pos_map(ctx, y));
}

/// Number of local shifts r with localshift^r(alpha) = shift(alpha), for the
/// simplified shape after k weighted shifts.
inline int local_steps(const SymplecticRowSpec& s, int k) {
  return localshift_closing_steps(weighted_shape(s, k, AlphaMode::Reduced).first);
}

/// Shape alpha^s = localshift^s(alpha).
inline LocalShiftResult localshift_power(const Composition& alpha, int s) {
  LocalShiftResult cur = alpha;
  for (int i = 0; i < s; ++i)
    cur = std::visit([](const auto& a) { return localshift_shape(a); }, cur);
  return cur;
}

struct AugmentedPartneredTableau {
  AnyTableau tableau;
  std::vector<int> partner;  // on labels of alpha^s, b_- before b_+
  std::vector<BoxRole> role;
  AugmentedDistanceContext context;
  std::vector<Letter> t_alpha;
  int nred = 0;
  int R = 1;
};

/// T_{k,s} for 1 <= s <= r. At s = r the local shifts have closed up and
/// the result is T_{k+1}.
inline AugmentedPartneredTableau compute_Tks(const SymplecticRowSpec& s, int k, int step) {
  const TAlpha ta = compute_T_alpha(s, k, AlphaMode::Reduced);
  if (is_column_shape(ta.alpha)) throw std::invalid_argument("no local shifts remain on a column");
  const int r = localshift_closing_steps(ta.alpha);
  if (step < 1 || step > r) throw std::invalid_argument("s must lie in [1, r]");
  if (step == r) {
    auto next = compute_Tk(s, k + 1);
    AugmentedDistanceContext ctx{next.alpha, step, 0, false};
    return {next.tableau, next.partner, next.role, ctx, next.t_alpha, next.nred, next.R};
  }
  const auto shape = std::get<AugmentedComposition>(localshift_power(ta.alpha, step));
  const int c = label_of(shape.base, shape.split);
  AugmentedDistanceContext ctx{ta.alpha, step, c, ta.entries[static_cast<std::size_t>(c - 1)] < 0};
  const LabelDistance delta = [&](int x, int y) { return delta_augmented(ctx, x, y); };
  auto f = run_partner_algorithm(ta.entries, delta, ta.nred, ta.R, [&](int M) { return s.mu_bar(M); });
  AugmentedTableau a = augmented_from_entries(shape, f.entries);
  return {a, std::move(f.partner), std::move(f.role), ctx, ta.entries, ta.nred, ta.R};
}

/// T_n(mu) = sum over i of (n - i) mu_{i-bar}.
inline int t_statistic(const Partition& mu) {
  int total = 0;
  for (int i = 0; i < mu.length(); ++i) total += i * mu[static_cast<std::size_t>(i)];
  return total;
}

/// theta_n = sum over i of (2(n - i) + 1) k_i.
inline int theta_statistic(const SymplecticRowSpec& s) {
  int total = 0;
  for (int i = 1; i <= s.n; ++i) total += (2 * (s.n - i) + 1) * s.k_of(i);
  return total;
}

inline int charge_c_closed(const SymplecticRowSpec& s) {
  validate(s);
  return t_statistic(s.mu) + theta_statistic(s);
}

/// Orbit length of a row tableau: T_n(mu) + K(2K + 2 l(mu) - 1) with K = sum k_i.
inline int orbit_length_closed(const SymplecticRowSpec& s) {
  int K = 0;
  for (int v : s.k) K += v;
  return t_statistic(s.mu) + K * (2 * K + 2 * s.mu.length() - 1);
}

}  // namespace spcharge
