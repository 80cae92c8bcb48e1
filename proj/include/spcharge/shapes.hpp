#pragma once

// Compositions, diagrams and the shape-level operators that drive cocyclage:
// gravity, shift, local shift, simplification and the weighted shift.
//
// Rows and columns are 1-based. Rows are counted downward from the top row.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace spcharge {

/// A finite sequence of positive integers. Trailing zeros are dropped on
/// construction and internal zeros are rejected.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

  /// Part in the given 1-based row; zero beyond the last row.
  int row_length(int row) const {
    return (row >= 1 && row <= length()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  int operator[](std::size_t i) const { return parts_.at(i); }

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
};

/// Partitions share the representation of compositions.
using Partition = Composition;

inline bool is_partition(const Composition& c) {
  return std::is_sorted(c.parts().begin(), c.parts().end(), std::greater<int>());
}

inline Partition make_partition(std::vector<int> parts) {
  Partition p(std::move(parts));
  if (!is_partition(p)) throw std::invalid_argument("parts of a partition must be weakly decreasing");
  return p;
}

/// A column of the form (1,1,...,1), including the empty composition.
inline bool is_column_shape(const Composition& c) {
  return std::all_of(c.parts().begin(), c.parts().end(), [](int p) { return p == 1; });
}

/// Parts weakly increase and then weakly decrease.
inline bool is_unimodal(const Composition& c) {
  const auto& v = c.parts();
  std::size_t i = 1;
  while (i < v.size() && v[i - 1] <= v[i]) ++i;
  while (i < v.size() && v[i - 1] >= v[i]) ++i;
  return i >= v.size();
}

/// 1-based index of the first maximal part; zero for the empty composition.
inline int first_max_row(const Composition& c) {
  if (c.empty()) return 0;
  auto it = std::max_element(c.parts().begin(), c.parts().end());
  return static_cast<int>(it - c.parts().begin()) + 1;
}

/// The composition with the first part equal to i removed (unchanged if absent).
inline Composition remove_part(const Composition& c, int i) {
  std::vector<int> v = c.parts();
  auto it = std::find(v.begin(), v.end(), i);
  if (it != v.end()) v.erase(it);
  return Composition(std::move(v));
}

/// A box of a diagram.
struct Box {
  int col = 1;
  int row = 1;
  bool operator==(const Box&) const = default;
};

/// Strict natural order: row-major with the top row first.
inline bool natural_less(const Box& a, const Box& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

inline bool in_diagram(const Composition& c, const Box& b) {
  return b.col >= 1 && b.row >= 1 && b.col <= c.row_length(b.row);
}

/// All boxes of the diagram in natural order; element c-1 is the c-th box.
inline std::vector<Box> natural_order(const Composition& c) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (int r = 1; r <= c.length(); ++r)
    for (int col = 1; col <= c.row_length(r); ++col) out.push_back({col, r});
  return out;
}

/// 1-based natural-order label of a box.
inline int label_of(const Composition& c, const Box& b) {
  if (!in_diagram(c, b)) throw std::invalid_argument("box outside the diagram");
  int label = 0;
  for (int r = 1; r < b.row; ++r) label += c.row_length(r);
  return label + b.col;
}

/// Distance between boxes b < b2: the row difference, reduced by one when b
/// does not lie strictly left of b2.
inline int distance(const Box& b, const Box& b2) {
  if (!natural_less(b, b2)) throw std::invalid_argument("distance requires b < b2 in natural order");
  return b2.row - b.row - (b.col >= b2.col ? 1 : 0);
}

inline int distance(const Composition& c, const Box& b, const Box& b2) {
  if (!in_diagram(c, b) || !in_diagram(c, b2)) throw std::invalid_argument("box outside the diagram");
  return distance(b, b2);
}

/// Sorts the parts in decreasing order.
inline Partition grav_shape(const Composition& c) {
  std::vector<int> v = c.parts();
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

/// Moves the rightmost box of the first maximal row one row down. Columns are fixed.
inline Composition shift_shape(const Composition& c) {
  if (is_column_shape(c)) return c;
  std::vector<int> v = c.parts();
  const auto i = static_cast<std::size_t>(first_max_row(c) - 1);
  v[i] -= 1;
  if (i + 1 < v.size())
    v[i + 1] += 1;
  else
    v.push_back(1);
  // A part can only vanish when it was 1, which a non-column maximum never is.
  return Composition(std::move(v));
}

/// A composition with one split box.
struct AugmentedComposition {
  Composition base;
  Box split;
  bool operator==(const AugmentedComposition&) const = default;
  /// Number of labelled boxes, the split box counting twice.
  int size() const { return base.size() + 1; }
};

using LocalShiftResult = std::variant<Composition, AugmentedComposition>;

/// Local shift of a plain composition: the rightmost box of the first maximal
/// row is removed and the first box of the next row is split. When there is no
/// next row the box lands directly in a new row, which equals shift.
inline LocalShiftResult localshift_shape(const Composition& c) {
  if (is_column_shape(c)) throw std::invalid_argument("localshift is undefined on a column");
  const int j = first_max_row(c);
  if (j == c.length()) return shift_shape(c);
  std::vector<int> v = c.parts();
  v[static_cast<std::size_t>(j - 1)] -= 1;
  return AugmentedComposition{Composition(std::move(v)), Box{1, j + 1}};
}

/// Local shift of an augmented composition: the split moves one column right,
/// or closes and gains a box to its right at the end of its row.
inline LocalShiftResult localshift_shape(const AugmentedComposition& a) {
  if (!in_diagram(a.base, a.split)) throw std::invalid_argument("split box outside the diagram");
  if (a.split.col < a.base.row_length(a.split.row))
    return AugmentedComposition{a.base, Box{a.split.col + 1, a.split.row}};
  std::vector<int> v = a.base.parts();
  v[static_cast<std::size_t>(a.split.row - 1)] += 1;
  return Composition(std::move(v));
}

/// Number r with localshift^r(c) = shift(c): one more than the length of the
/// row below the first maximal row.
inline int localshift_closing_steps(const Composition& c) {
  if (is_column_shape(c)) throw std::invalid_argument("localshift is undefined on a column");
  return c.row_length(first_max_row(c) + 1) + 1;
}

/// Removes maximal rows while the largest part equals the leading part of mu.
inline std::pair<Composition, Partition> simp(const Composition& alpha, const Partition& mu) {
  std::vector<int> beta = alpha.parts();
  std::vector<int> nu = mu.parts();
  while (!beta.empty() && !nu.empty()) {
    auto it = std::max_element(beta.begin(), beta.end());
    if (*it != nu.front()) break;
    beta.erase(it);
    nu.erase(nu.begin());
  }
  return {Composition(std::move(beta)), Partition(std::move(nu))};
}

/// Weighted shift: simplify, then shift.
inline std::pair<Composition, Partition> wshift_shape(const Composition& alpha, const Partition& mu) {
  auto [beta, nu] = simp(alpha, mu);
  return {shift_shape(beta), nu};
}

inline std::pair<Composition, Partition> wshift_power(Composition alpha, Partition mu, int k) {
  for (int i = 0; i < k; ++i) std::tie(alpha, mu) = wshift_shape(alpha, mu);
  return {alpha, mu};
}

/// The starting shape of the orbit of a row of length p: (p), or empty for p = 0.
inline Composition row_shape(int p) {
  if (p < 0) throw std::invalid_argument("negative row length");
  return p == 0 ? Composition{} : Composition{p};
}

/// Number of weighted shifts needed to stabilise, measured on simplified
/// states: the least m with simp(wshift^{m+1}) = simp(wshift^m).
inline int m_mu_iterative(const Composition& alpha, const Partition& mu) {
  auto state = simp(alpha, mu);
  for (int m = 0;; ++m) {
    auto next = wshift_shape(state.first, state.second);
    next = simp(next.first, next.second);
    if (next == state) return m;
    state = std::move(next);
  }
}

/// Closed form of m_mu for a single row of length p.
inline int m_mu_closed(int p, const Partition& mu) {
  const int rest = p - mu.size();
  if (rest < 0) throw std::invalid_argument("|mu| exceeds p");
  int total = 0;
  for (int i = 0; i < mu.length(); ++i) total += i * mu[static_cast<std::size_t>(i)];
  return total + rest * (rest + 2 * mu.length() - 1) / 2;
}

/// Parses "3,1,2"; the empty string is the empty composition.
inline Composition parse_composition(const std::string& text) {
  std::vector<int> v;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad composition entry '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad composition entry '" + item + "'");
      v.push_back(value);
    }
  }
  return Composition(std::move(v));
}

inline std::string format_composition(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.parts()[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << "(" << format_composition(c) << ")";
}

}  // namespace spcharge
