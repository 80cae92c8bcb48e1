#pragma once

// Fillings of composition diagrams over the letters of the alphabet C.
//
// A letter is a nonzero int: v > 0 is the unbarred letter v and v < 0 is the
// barred letter |v|. Integer order realises n-bar < ... < 1-bar < 1 < ... < n.
// Entries are stored flat in natural box order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shapes.hpp"

namespace spcharge {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter bar(Letter x) { return -x; }

/// A column of a tableau: its first row and its entries top-down.
struct Column {
  int top_row = 1;
  std::vector<Letter> entries;
  int bottom_row() const { return top_row + static_cast<int>(entries.size()) - 1; }
};

class Tableau {
public:
  Tableau() = default;
  Tableau(Composition shape, std::vector<Letter> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.size())
      throw std::invalid_argument("entry count does not match the shape");
    for (Letter x : entries_)
      if (x == 0) throw std::invalid_argument("letters must be nonzero");
  }

  static Tableau from_rows(const std::vector<std::vector<Letter>>& rows) {
    std::vector<int> parts;
    std::vector<Letter> flat;
    for (const auto& r : rows) {
      if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
      parts.push_back(static_cast<int>(r.size()));
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Tableau(Composition(std::move(parts)), std::move(flat));
  }

  const Composition& shape() const { return shape_; }
  const std::vector<Letter>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int num_rows() const { return shape_.length(); }
  int num_columns() const { return shape_.max_part(); }

  /// Entry with the given 1-based natural-order label.
  Letter label(int c) const { return entries_.at(static_cast<std::size_t>(c - 1)); }
  Letter at(const Box& b) const { return label(label_of(shape_, b)); }

  std::vector<std::vector<Letter>> rows() const {
    std::vector<std::vector<Letter>> out;
    auto it = entries_.begin();
    for (int p : shape_.parts()) {
      out.emplace_back(it, it + p);
      it += p;
    }
    return out;
  }

  /// Columns left to right. Boxes of a column must occupy consecutive rows.
  std::vector<Column> columns() const {
    std::vector<Column> out(static_cast<std::size_t>(num_columns()));
    const auto rs = rows();
    for (int r = 0; r < static_cast<int>(rs.size()); ++r) {
      for (std::size_t c = 0; c < rs[static_cast<std::size_t>(r)].size(); ++c) {
        Column& col = out[c];
        if (col.entries.empty())
          col.top_row = r + 1;
        else if (col.bottom_row() != r)
          throw std::logic_error("column with a gap");
        col.entries.push_back(rs[static_cast<std::size_t>(r)][c]);
      }
    }
    return out;
  }

  bool is_column() const { return num_columns() <= 1; }

  bool operator==(const Tableau&) const = default;

private:
  Composition shape_;
  std::vector<Letter> entries_;
};

/// Fills the diagram of a shape with the given entries in natural order.
inline Tableau fill_natural(const Composition& shape, std::vector<Letter> entries) {
  return Tableau(shape, std::move(entries));
}

/// Entries weakly increase along the natural order.
inline bool is_natural(const Tableau& t) {
  return std::is_sorted(t.entries().begin(), t.entries().end());
}

/// Rows weakly increase and columns strictly increase.
inline bool is_semistandard(const Tableau& t) {
  for (const auto& r : t.rows())
    if (!std::is_sorted(r.begin(), r.end())) return false;
  std::vector<Column> cols;
  try {
    cols = t.columns();
  } catch (const std::logic_error&) {
    return false;
  }
  for (const auto& c : cols)
    if (std::adjacent_find(c.entries.begin(), c.entries.end(), std::greater_equal<Letter>()) != c.entries.end())
      return false;
  return true;
}

/// Weight over the positive alphabet: part i is the multiplicity of letter i.
inline Composition weight_a(const Tableau& t) {
  int top = 0;
  for (Letter x : t.entries()) {
    if (x < 0) throw std::invalid_argument("weight_a expects unbarred letters");
    top = std::max(top, x);
  }
  std::vector<int> w(static_cast<std::size_t>(top), 0);
  for (Letter x : t.entries()) ++w[static_cast<std::size_t>(x - 1)];
  // Absent letters leave zeros; only a gap-free content forms a composition.
  while (!w.empty() && w.back() == 0) w.pop_back();
  for (int v : w)
    if (v == 0) throw std::invalid_argument("content has a gap and is not a composition");
  return Composition(std::move(w));
}

/// Columns read from right to left, each top to bottom.
inline Word column_word_ne(const Tableau& t) {
  Word w;
  const auto cols = t.columns();
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) w.insert(w.end(), it->entries.begin(), it->entries.end());
  return w;
}

/// Rows read from bottom to top, each left to right.
inline Word row_word_sw(const Tableau& t) {
  Word w;
  const auto rs = t.rows();
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

/// Builds a tableau from columns whose boxes start at row 1.
inline Tableau from_top_aligned_columns(const std::vector<std::vector<Letter>>& cols) {
  std::vector<std::vector<Letter>> rs;
  for (const auto& c : cols) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (r >= rs.size()) rs.emplace_back();
      rs[r].push_back(c[r]);
    }
  }
  return Tableau::from_rows(rs);
}

/// Lifts every column to start at the top row.
inline Tableau grav_tableau(const Tableau& t) {
  std::vector<std::vector<Letter>> cols;
  for (const auto& c : t.columns()) cols.push_back(c.entries);
  return from_top_aligned_columns(cols);
}

inline Tableau shift_tableau(const Tableau& t) {
  if (!is_natural(t)) throw std::invalid_argument("shift_tableau expects a natural tableau");
  return Tableau(shift_shape(t.shape()), t.entries());
}

/// Weighted shift on natural tableaux. Each simplification step deletes the
/// smallest letter together with a maximal row and renumbers the larger letters.
inline Tableau wshift_tableau(const Tableau& t, const Partition& mu) {
  if (!is_natural(t)) throw std::invalid_argument("wshift_tableau expects a natural tableau");
  if (!is_partition(weight_a(t))) throw std::invalid_argument("wshift_tableau expects a partition weight");
  std::vector<int> beta = t.shape().parts();
  std::vector<int> nu = mu.parts();
  std::vector<Letter> flat = t.entries();
  while (!beta.empty() && !nu.empty()) {
    auto it = std::max_element(beta.begin(), beta.end());
    if (*it != nu.front()) break;
    const Letter low = *std::min_element(flat.begin(), flat.end());
    if (std::count(flat.begin(), flat.end(), low) != nu.front())
      throw std::invalid_argument("weight does not match mu");
    std::erase(flat, low);
    for (Letter& x : flat)
      if (x > low) --x;
    beta.erase(it);
    nu.erase(nu.begin());
  }
  return Tableau(shift_shape(Composition(std::move(beta))), std::move(flat));
}

/// A tableau with one split box. The base tableau holds the b_+ entry at the
/// split box and the extra entry is the b_- entry.
struct AugmentedTableau {
  Tableau plus;
  Box split;
  Letter minus = 0;

  AugmentedComposition shape() const { return {plus.shape(), split}; }

  /// The tableau obtained by putting the b_- entry at the split box.
  Tableau minus_tableau() const {
    std::vector<Letter> e = plus.entries();
    e[static_cast<std::size_t>(label_of(plus.shape(), split) - 1)] = minus;
    return Tableau(plus.shape(), std::move(e));
  }

  /// Entries in natural order with the b_- entry immediately before b_+.
  std::vector<Letter> entries() const {
    std::vector<Letter> e = plus.entries();
    e.insert(e.begin() + (label_of(plus.shape(), split) - 1), minus);
    return e;
  }

  bool operator==(const AugmentedTableau&) const = default;
};

/// Builds an augmented tableau from the flat natural-order list.
inline AugmentedTableau augmented_from_entries(const AugmentedComposition& shape, const std::vector<Letter>& flat) {
  if (static_cast<int>(flat.size()) != shape.size())
    throw std::invalid_argument("entry count does not match the augmented shape");
  const auto c = static_cast<std::size_t>(label_of(shape.base, shape.split));
  std::vector<Letter> plus(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(c - 1));
  plus.insert(plus.end(), flat.begin() + static_cast<std::ptrdiff_t>(c), flat.end());
  return {Tableau(shape.base, std::move(plus)), shape.split, flat[c - 1]};
}

using AnyTableau = std::variant<Tableau, AugmentedTableau>;

// Text format: rows separated by ';', entries by ','; barred letters are
// negative. Augmented tableaux append "|split=<row>,<col>,<minus>".

inline std::string format_tableau(const Tableau& t) {
  std::string out;
  const auto rs = t.rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < rs[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rs[r][c]);
    }
  }
  return out;
}

inline std::string format_tableau(const AugmentedTableau& a) {
  return format_tableau(a.plus) + "|split=" + std::to_string(a.split.row) + "," + std::to_string(a.split.col) +
         "," + std::to_string(a.minus);
}

inline std::string format_tableau(const AnyTableau& t) {
  return std::visit([](const auto& v) { return format_tableau(v); }, t);
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << "[" << format_tableau(t) << "]"; }
inline std::ostream& operator<<(std::ostream& os, const AugmentedTableau& t) {
  return os << "[" << format_tableau(t) << "]";
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, char sep, std::size_t offset) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("bad integer '" + item + "' at position " + std::to_string(offset + start));
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

inline Tableau parse_tableau(const std::string& text) {
  if (text.empty()) return {};
  std::vector<std::vector<Letter>> rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const std::string row = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    rows.push_back(detail::parse_int_list(row, ',', start));
    for (Letter x : rows.back())
      if (x == 0) throw std::invalid_argument("zero letter at row " + std::to_string(rows.size()));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return Tableau::from_rows(rows);
}

inline AnyTableau parse_any_tableau(const std::string& text) {
  const std::size_t bar_pos = text.find('|');
  if (bar_pos == std::string::npos) return parse_tableau(text);
  const std::string tail = text.substr(bar_pos + 1);
  const std::string key = "split=";
  if (tail.rfind(key, 0) != 0)
    throw std::invalid_argument("expected 'split=' at position " + std::to_string(bar_pos + 1));
  const auto v = detail::parse_int_list(tail.substr(key.size()), ',', bar_pos + 1 + key.size());
  if (v.size() != 3) throw std::invalid_argument("split needs <row>,<col>,<minus>");
  AugmentedTableau a{parse_tableau(text.substr(0, bar_pos)), Box{v[1], v[0]}, v[2]};
  if (!in_diagram(a.plus.shape(), a.split)) throw std::invalid_argument("split box outside the diagram");
  if (a.minus == 0) throw std::invalid_argument("zero letter in split");
  return a;
}

}  // namespace spcharge
