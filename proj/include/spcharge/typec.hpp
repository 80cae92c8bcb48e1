#pragma once

// Symplectic (type C) machinery for row-shape tableaux and their cocyclage
// orbits: column insertion, local insertion, reduction, cocyclage and charge.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shapes.hpp"
#include "tableaux.hpp"

namespace spcharge {

using CColumn = std::vector<Letter>;

inline bool is_strictly_increasing(const CColumn& c) {
  return std::adjacent_find(c.begin(), c.end(), std::greater_equal<Letter>()) == c.end();
}

inline bool contains(const CColumn& c, Letter x) { return std::find(c.begin(), c.end(), x) != c.end(); }

/// Which branch of the closed-form insertion produced a result. The
/// recursive rule leaves non-append results unclassified.
enum class InsertionCase { Unclassified, Append, Case1, Case2_1, Case2_2, Case2_3, Case3_1, Case3_2 };

inline const char* to_string(InsertionCase c) {
  switch (c) {
    case InsertionCase::Unclassified: return "unclassified";
    case InsertionCase::Append: return "append";
    case InsertionCase::Case1: return "1";
    case InsertionCase::Case2_1: return "2.1";
    case InsertionCase::Case2_2: return "2.2";
    case InsertionCase::Case2_3: return "2.3";
    case InsertionCase::Case3_1: return "3.1";
    case InsertionCase::Case3_2: return "3.2";
  }
  return "?";
}

/// Result of inserting a letter into one column. When a letter is bumped,
/// it leaves from the row of the column entry at index `position`; on an
/// append `position` is the index of the new bottom entry.
struct ColumnInsertion {
  CColumn column;
  std::optional<Letter> bumped;
  std::size_t position = 0;
  InsertionCase kind = InsertionCase::Append;

  bool same_outcome(const ColumnInsertion& o) const {
    return column == o.column && bumped == o.bumped && position == o.position;
  }
};

class InsertionRejected : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct TwoColumn {
  Letter top;
  Letter bottom;
  Letter bumped;
  bool from_lower;
};

/// Insertion of u into the two-letter column (a, y) by rules I1 to I4.
inline TwoColumn insert_two(Letter u, Letter a, Letter y) {
  if (a < u && u <= y && y != -a) return {a, u, y, true};
  if (u <= a && a < y && y != -u) return {u, y, a, false};
  if (a == -y && -y <= u && u <= y) return {-(y + 1), u, y + 1, true};
  if (u == -y && -y < a && a < y) return {-(y - 1), y - 1, a, false};
  throw InsertionRejected("no insertion rule applies to " + std::to_string(u) + " -> (" + std::to_string(a) + "," +
                          std::to_string(y) + ")");
}

inline ColumnInsertion insert_recursive(Letter x, const CColumn& c) {
  if (c.empty() || x > c.back()) {
    CColumn out = c;
    out.push_back(x);
    return {out, std::nullopt, c.size(), InsertionCase::Append};
  }
  if (c.size() == 1) return {{x}, c[0], 0, InsertionCase::Unclassified};
  if (c.size() == 2) {
    const auto r = insert_two(x, c[0], c[1]);
    return {{r.top, r.bottom}, r.bumped, r.from_lower ? std::size_t{1} : std::size_t{0},
            InsertionCase::Unclassified};
  }
  const CColumn tail(c.begin() + 1, c.end());
  auto sub = insert_recursive(x, tail);
  if (!sub.bumped) throw std::logic_error("inner insertion must bump");
  const auto r = insert_two(sub.column[0], c[0], *sub.bumped);
  CColumn out{r.top, r.bottom};
  out.insert(out.end(), sub.column.begin() + 1, sub.column.end());
  return {out, r.bumped, r.from_lower ? sub.position + 1 : 0, InsertionCase::Unclassified};
}

/// Replaces the run -y, -(y+1), ... read upward from index t by its successor
/// letters and returns the letter that finally leaves the column.
inline Letter raise_bar_chain(CColumn& c, std::ptrdiff_t t, Letter y) {
  while (t >= 0 && c[static_cast<std::size_t>(t)] == -y) {
    c[static_cast<std::size_t>(t)] = -(y + 1);
    ++y;
    --t;
  }
  return y;
}

inline std::size_t first_at_least(const CColumn& c, std::size_t top, Letter x) {
  for (std::size_t i = 0; i < top; ++i)
    if (c[i] >= x) return i;
  throw std::logic_error("no entry at least the inserted letter");
}

inline std::ptrdiff_t index_in(const CColumn& c, std::size_t top, Letter x) {
  for (std::size_t i = 0; i < top; ++i)
    if (c[i] == x) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

}  // namespace detail

/// Column insertion defined through the two-letter rules and induction on length.
inline ColumnInsertion insert_column_recursive(Letter x, const CColumn& c) {
  if (x == 0) throw std::invalid_argument("letters must be nonzero");
  if (!is_strictly_increasing(c)) throw std::invalid_argument("column must be strictly increasing");
  return detail::insert_recursive(x, c);
}

/// Closed-form column insertion, split by whether x is barred and whether
/// its unbarred counterpart occurs in the column.
inline ColumnInsertion insert_column_closed(Letter x, const CColumn& c) {
  if (x == 0) throw std::invalid_argument("letters must be nonzero");
  if (!is_strictly_increasing(c)) throw std::invalid_argument("column must be strictly increasing");
  if (c.empty() || x > c.back()) {
    CColumn out = c;
    out.push_back(x);
    return {out, std::nullopt, c.size(), InsertionCase::Append};
  }
  CColumn out = c;
  if (x > 0) {
    const std::size_t p = detail::first_at_least(out, out.size(), x);
    Letter y = out[p];
    out[p] = x;
    const auto q = detail::index_in(out, out.size(), -y);
    if (q >= 0) y = detail::raise_bar_chain(out, q, y);
    return {out, y, p, InsertionCase::Case1};
  }
  Letter i = -x;
  std::size_t top = out.size();
  bool cascaded = false;
  while (true) {
    const auto q = detail::index_in(out, top, i);
    if (q < 0) {
      const std::size_t p = detail::first_at_least(out, top, -i);
      Letter y = out[p];
      out[p] = -i;
      if (y > 0) {
        const auto r = detail::index_in(out, p, -y);
        if (r >= 0) y = detail::raise_bar_chain(out, r, y);
      }
      const InsertionCase kind =
          cascaded ? InsertionCase::Case2_3 : (y < 0 ? InsertionCase::Case3_1 : InsertionCase::Case3_2);
      return {out, y, p, kind};
    }
    const auto qi = static_cast<std::size_t>(q);
    const std::size_t p = detail::first_at_least(out, top, -i);
    if (p == qi) {
      out[qi] = -i;
      return {out, i, qi, cascaded ? InsertionCase::Case2_3 : InsertionCase::Case2_1};
    }
    if (out[qi - 1] == -i) {
      out[qi] = -i;
      const Letter y = detail::raise_bar_chain(out, q - 1, i);
      return {out, y, qi, cascaded ? InsertionCase::Case2_3 : InsertionCase::Case2_2};
    }
    out[qi] = i - 1;
    i = i - 1;
    top = qi;
    cascaded = true;
  }
}

/// The insertion result after gravity: the column, with the bumped letter
/// (if any) in the top row of a second column.
inline Tableau insertion_tableau(const ColumnInsertion& r) {
  std::vector<std::vector<Letter>> cols{r.column};
  if (r.bumped) cols.push_back({*r.bumped});
  return from_top_aligned_columns(cols);
}

// ---------------------------------------------------------------------------
// Multi-column insertion on composition-shape tableaux.

/// Called with every (letter, column) pair passed to column insertion.
using InsertionObserver = std::function<void(Letter, const CColumn&)>;

namespace detail {

using Rows = std::vector<std::vector<Letter>>;

inline Rows rows_of(const Tableau& t) { return t.rows(); }

struct ColumnView {
  std::vector<std::size_t> rows;  // 0-based row indices, consecutive
  CColumn entries;
};

inline std::size_t num_cols(const Rows& t) {
  std::size_t n = 0;
  for (const auto& r : t) n = std::max(n, r.size());
  return n;
}

inline ColumnView column_view(const Rows& t, std::size_t c) {
  ColumnView v;
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t[r].size() > c) {
      if (!v.rows.empty() && v.rows.back() + 1 != r) throw std::logic_error("column with a gap");
      v.rows.push_back(r);
      v.entries.push_back(t[r][c]);
    }
  return v;
}

inline void write_column(Rows& t, std::size_t c, const ColumnView& v, const CColumn& entries) {
  for (std::size_t i = 0; i < v.rows.size(); ++i) t[v.rows[i]][c] = entries[i];
}

/// Puts x at the end of row r (0-based), which must currently have length c.
inline void place(Rows& t, std::size_t r, std::size_t c, Letter x) {
  if (r == t.size()) t.emplace_back();
  if (r > t.size() || t[r].size() != c) throw std::logic_error("box placement leaves a hole");
  t[r].push_back(x);
}

inline Tableau to_tableau(const Rows& t) { return Tableau::from_rows(t); }

}  // namespace detail

/// Local insertion step on an augmented tableau: the b_- entry is inserted
/// into the column of the split box. The result is a tableau once the
/// insertion closes, and otherwise an augmented tableau whose split sits in
/// the next column at the row of the letter bumped there.
inline AnyTableau locins(const AugmentedTableau& a, const InsertionObserver& observe = {}) {
  if (!in_diagram(a.plus.shape(), a.split)) throw std::invalid_argument("split box outside the diagram");
  detail::Rows t = a.plus.rows();
  const auto m = static_cast<std::size_t>(a.split.col - 1);
  const auto cv = detail::column_view(t, m);
  if (observe) observe(a.minus, cv.entries);
  const auto ins = insert_column_recursive(a.minus, cv.entries);
  if (!ins.bumped) {
    detail::place(t, cv.rows.back() + 1, m, a.minus);
    return detail::to_tableau(t);
  }
  detail::write_column(t, m, cv, ins.column);
  const std::size_t rho = cv.rows[ins.position];
  const Letter b = *ins.bumped;
  if (m + 1 >= detail::num_cols(t)) {
    detail::place(t, rho, m + 1, b);
    return detail::to_tableau(t);
  }
  const auto cv2 = detail::column_view(t, m + 1);
  if (observe) observe(b, cv2.entries);
  const auto ins2 = insert_column_recursive(b, cv2.entries);
  if (!ins2.bumped) {
    detail::place(t, cv2.rows.back() + 1, m + 1, b);
    return detail::to_tableau(t);
  }
  const int row = static_cast<int>(cv2.rows[ins2.position]) + 1;
  return AugmentedTableau{detail::to_tableau(t), Box{static_cast<int>(m) + 2, row}, b};
}

/// Inserts x into a tableau by running local insertion from the first column.
inline Tableau insert_into_tableau(Letter x, const Tableau& t, const InsertionObserver& observe = {}) {
  if (x == 0) throw std::invalid_argument("letters must be nonzero");
  if (t.empty()) return Tableau::from_rows({{x}});
  AnyTableau cur = AugmentedTableau{t, Box{1, 1}, x};
  for (int guard = 0; guard <= t.num_columns() + 1; ++guard) {
    if (auto* done = std::get_if<Tableau>(&cur)) return *done;
    cur = locins(std::get<AugmentedTableau>(cur), observe);
  }
  throw std::logic_error("local insertion did not close");
}

/// Local shift of a tableau: the last entry of the first longest row becomes
/// the b_- entry of a split at the start of the next row. Without a next row
/// it moves to a new row, which coincides with the shift.
inline AnyTableau localshift_tableau(const Tableau& t) {
  if (t.is_column()) throw std::invalid_argument("localshift is undefined on a column");
  detail::Rows rs = t.rows();
  const auto j = static_cast<std::size_t>(first_max_row(t.shape()) - 1);
  const Letter x = rs[j].back();
  rs[j].pop_back();
  if (j + 1 == rs.size()) {
    rs.push_back({x});
    return detail::to_tableau(rs);
  }
  return AugmentedTableau{detail::to_tableau(rs), Box{1, static_cast<int>(j) + 2}, x};
}

// ---------------------------------------------------------------------------
// Weights, row descriptors and enumeration.

/// The vector (a_{n-bar}, ..., a_{1-bar}) with a_{i-bar} = #(i-bar) - #(i).
inline std::vector<int> weight_c(const Tableau& t, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (Letter x : t.entries()) {
    const int i = std::abs(x);
    if (i > n) throw std::invalid_argument("letter exceeds the rank");
    w[static_cast<std::size_t>(n - i)] += x < 0 ? 1 : -1;
  }
  return w;
}

inline int bar_excess(const Tableau& t, int i) {
  int a = 0;
  for (Letter x : t.entries()) a += (x == -i) - (x == i);
  return a;
}

inline bool is_weight_zero(const Tableau& t) {
  int top = 0;
  for (Letter x : t.entries()) top = std::max(top, std::abs(x));
  for (int i = 1; i <= top; ++i)
    if (bar_excess(t, i) != 0) return false;
  return true;
}

/// Row tableau data: rank n, length p, mu = (mu_{n-bar}, ..., mu_{1-bar})
/// largest first, and k = (k_1, ..., k_n).
struct SymplecticRowSpec {
  int n = 1;
  int p = 0;
  Partition mu;
  std::vector<int> k;

  /// mu_{i-bar}: zero beyond the length of mu.
  int mu_bar(int i) const {
    const int idx = n - i;
    return (idx >= 0 && idx < mu.length()) ? mu[static_cast<std::size_t>(idx)] : 0;
  }
  int k_of(int i) const { return k.at(static_cast<std::size_t>(i - 1)); }
  bool operator==(const SymplecticRowSpec&) const = default;
};

inline void validate(const SymplecticRowSpec& s) {
  if (s.n < 1) throw std::invalid_argument("rank must be positive");
  if (!is_partition(s.mu)) throw std::invalid_argument("mu must be a partition");
  if (s.mu.length() > s.n) throw std::invalid_argument("mu has more parts than the rank");
  if (static_cast<int>(s.k.size()) != s.n) throw std::invalid_argument("k must have n entries");
  int total = s.mu.size();
  for (int v : s.k) {
    if (v < 0) throw std::invalid_argument("k entries must be nonnegative");
    total += 2 * v;
  }
  if (total != s.p) throw std::invalid_argument("row length does not match mu and k");
}

/// The weakly increasing row with n-bar^{k_n + mu_n-bar} ... 1-bar^{k_1 + mu_1-bar} 1^{k_1} ... n^{k_n}.
inline std::vector<Letter> row_letters(const SymplecticRowSpec& s) {
  std::vector<Letter> row;
  for (int i = s.n; i >= 1; --i) row.insert(row.end(), static_cast<std::size_t>(s.k_of(i) + s.mu_bar(i)), -i);
  for (int i = 1; i <= s.n; ++i) row.insert(row.end(), static_cast<std::size_t>(s.k_of(i)), i);
  return row;
}

inline Tableau row_tableau(const SymplecticRowSpec& s) {
  validate(s);
  return Tableau(row_shape(s.p), row_letters(s));
}

/// All row descriptors of rank n and length p with weight mu, with the
/// k-vectors in lexicographically decreasing order.
inline std::vector<SymplecticRowSpec> enumerate_row_symplectic(int n, int p, const Partition& mu) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (!is_partition(mu)) throw std::invalid_argument("mu must be a partition");
  if (mu.length() > n) throw std::invalid_argument("mu has more parts than the rank");
  std::vector<SymplecticRowSpec> out;
  const int d = p - mu.size();
  if (d < 0 || d % 2 != 0) return out;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == k.size()) {
      k[i] = left;
      out.push_back({n, p, mu, k});
      return;
    }
    for (int v = left; v >= 0; --v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d / 2);
  return out;
}

/// Reads the row descriptor of a weakly increasing row tableau over C_n.
inline SymplecticRowSpec spec_of_row(const Tableau& t, int n) {
  if (t.num_rows() > 1) throw std::invalid_argument("expected a row tableau");
  if (!is_natural(t)) throw std::invalid_argument("row must be weakly increasing");
  const auto w = weight_c(t, n);
  std::vector<int> mu;
  for (int v : w) {
    if (v < 0) throw std::invalid_argument("row weight is not dominant");
    mu.push_back(v);
  }
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (Letter x : t.entries())
    if (x > 0) ++k[static_cast<std::size_t>(x - 1)];
  SymplecticRowSpec s{n, t.size(), make_partition(mu), k};
  validate(s);
  return s;
}

// ---------------------------------------------------------------------------
// Reduction and cocyclage.

/// Cocyclage is blocked exactly when a_{n-bar} equals the number of columns.
inline bool is_authorized(const Tableau& t, int n) { return bar_excess(t, n) != t.num_columns(); }

/// Removes every n-bar while cocyclage is blocked. Each pass deletes the
/// first longest row of the shape, renumbers i -> i+1 and i-bar -> (i+1)-bar
/// for 0 < i < n, and refills the remaining letters in natural order. The
/// rank is unchanged.
inline Tableau red_c(const Tableau& t, int n) {
  Tableau cur = t;
  while (!cur.empty() && !is_authorized(cur, n)) {
    const int ncols = cur.num_columns();
    std::vector<Letter> flat = cur.entries();
    if (std::count(flat.begin(), flat.end(), -n) != ncols) throw std::logic_error("reduction found stray letters");
    std::erase(flat, -n);
    for (Letter& v : flat) {
      if (v > 0 && v < n)
        ++v;
      else if (v < 0 && v > -n)
        --v;
    }
    cur = Tableau(remove_part(cur.shape(), ncols), std::move(flat));
  }
  return cur;
}

/// Cocyclage: reduce, lift the top entry of the last column and insert it
/// back, then reduce again.
inline Tableau cocyc_c(const Tableau& t, int n, const InsertionObserver& observe = {}) {
  if (t.is_column()) return red_c(t, n);
  const Tableau r = red_c(t, n);
  if (r.empty()) return r;
  detail::Rows rs = r.rows();
  const auto j = static_cast<std::size_t>(first_max_row(r.shape()) - 1);
  const Letter x = rs[j].back();
  rs[j].pop_back();
  return red_c(insert_into_tableau(x, detail::to_tableau(rs), observe), n);
}

inline bool is_weight_zero_column(const Tableau& t) { return t.is_column() && is_weight_zero(t); }

/// The cocyclage orbit up to its terminal column. steps[0] is the input and
/// steps[i+1] = cocyc_c(steps[i]); m is the first index whose reduction is a
/// weight-zero column, and terminal is that column.
struct Orbit {
  std::vector<Tableau> steps;
  int m = 0;
  Tableau terminal;
};

inline Orbit orbit(const Tableau& t, int n, int max_steps) {
  Orbit o;
  o.steps.push_back(t);
  for (int k = 0; k <= max_steps; ++k) {
    const Tableau r = red_c(o.steps.back(), n);
    if (is_weight_zero_column(r)) {
      o.m = k;
      o.terminal = r;
      return o;
    }
    o.steps.push_back(cocyc_c(o.steps.back(), n));
  }
  throw std::logic_error("cocyclage orbit exceeded its step bound");
}

/// Orbit of a row tableau, bounded by the closed-form step count.
inline Orbit orbit(const Tableau& t, int n) {
  if (t.num_rows() <= 1 && is_natural(t)) {
    const auto w = weight_c(t, n);
    if (std::is_sorted(w.begin(), w.end(), std::greater<int>()) && (w.empty() || w.back() >= 0)) {
      const auto s = spec_of_row(t, n);
      return orbit(t, n, m_mu_closed(s.p, s.mu) + 1);
    }
  }
  return orbit(t, n, 100000);
}

/// 2 * sum of (n - i) over the letters i > 0 of the column with i + 1 absent.
inline int charge_column(const Tableau& c, int n) {
  if (!c.is_column()) throw std::invalid_argument("charge_column expects a column");
  if (!is_weight_zero(c)) throw std::invalid_argument("charge_column expects weight zero");
  const auto& e = c.entries();
  int total = 0;
  for (Letter i : e)
    if (i > 0 && std::find(e.begin(), e.end(), i + 1) == e.end()) total += 2 * (n - i);
  return total;
}

/// Positive letters i of the column with i + 1 absent.
inline std::vector<Letter> run_tops(const Tableau& c) {
  std::vector<Letter> out;
  const auto& e = c.entries();
  for (Letter i : e)
    if (i > 0 && std::find(e.begin(), e.end(), i + 1) == e.end()) out.push_back(i);
  return out;
}

inline int charge_c_lecouvey(const Tableau& t, int n) {
  const Orbit o = orbit(t, n);
  return o.m + charge_column(o.terminal, n);
}

}  // namespace spcharge
