#pragma once

// Type A charge and cocyclage on semistandard Young tableaux over 1 < 2 < ...

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tableaux.hpp"

namespace spcharge {

namespace detail {

inline void require_positive(const Word& w) {
  for (Letter x : w)
    if (x <= 0) throw std::invalid_argument("type A words use positive letters only");
}

/// Multiplicities m_1, m_2, ... of a positive word.
inline std::vector<int> multiplicities(const Word& w) {
  std::vector<int> m;
  for (Letter x : w) {
    if (static_cast<std::size_t>(x) > m.size()) m.resize(static_cast<std::size_t>(x), 0);
    ++m[static_cast<std::size_t>(x - 1)];
  }
  return m;
}

}  // namespace detail

inline bool is_standard_word(const Word& w) {
  std::vector<Letter> s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<Letter>(i + 1)) return false;
  return true;
}

/// Charge of a permutation word: c(1) = 0 and c(r) grows by one exactly when
/// r lies to the right of r-1.
inline int charge_standard(const Word& w) {
  if (!is_standard_word(w)) throw std::invalid_argument("charge_standard expects a standard word");
  std::vector<std::size_t> pos(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = i;
  int c = 0;
  int total = 0;
  for (std::size_t r = 2; r <= w.size(); ++r) {
    if (pos[r] > pos[r - 1]) ++c;
    total += c;
  }
  return total;
}

/// Splits a word of partition content into standard subwords: start from the
/// rightmost 1 and repeatedly pick the next letter cyclically to the left.
inline std::vector<Word> extract_standard_subwords(const Word& w) {
  detail::require_positive(w);
  const auto m = detail::multiplicities(w);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == 0 || (i + 1 < m.size() && m[i + 1] > m[i]))
      throw std::invalid_argument("word content is not a partition");
  std::vector<bool> used(w.size(), false);
  std::vector<Word> out;
  std::size_t left = w.size();
  while (left > 0) {
    std::vector<std::size_t> picked;
    std::size_t cursor = w.size();
    for (Letter r = 1;; ++r) {
      std::ptrdiff_t found = -1;
      for (std::size_t step = 1; step <= w.size(); ++step) {
        const std::size_t i = (cursor + w.size() - step) % w.size();
        if (!used[i] && w[i] == r) {
          found = static_cast<std::ptrdiff_t>(i);
          break;
        }
      }
      if (found < 0) break;
      cursor = static_cast<std::size_t>(found);
      used[cursor] = true;
      picked.push_back(cursor);
    }
    std::sort(picked.begin(), picked.end());
    Word sub;
    for (std::size_t i : picked) sub.push_back(w[i]);
    left -= sub.size();
    out.push_back(std::move(sub));
  }
  return out;
}

inline int charge_word(const Word& w) {
  int total = 0;
  for (const auto& sub : extract_standard_subwords(w)) {
    // Subwords use letters 1..r and are standard by construction.
    total += charge_standard(sub);
  }
  return total;
}

/// Column insertion into a semistandard Young tableau: x replaces the smallest
/// entry >= x of the first column, which moves on to the next column; an
/// entry larger than the whole column is appended at its bottom.
inline Tableau schensted_column_insert(Letter x, const Tableau& t) {
  if (x <= 0) throw std::invalid_argument("type A insertion expects a positive letter");
  std::vector<std::vector<Letter>> cols;
  for (const auto& c : t.columns()) {
    if (c.top_row != 1) throw std::invalid_argument("type A insertion expects a Young tableau");
    cols.push_back(c.entries);
  }
  Letter cur = x;
  for (std::size_t c = 0;; ++c) {
    if (c == cols.size()) {
      cols.push_back({cur});
      break;
    }
    auto& col = cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), cur);
    if (it == col.end()) {
      col.push_back(cur);
      break;
    }
    std::swap(*it, cur);
  }
  return from_top_aligned_columns(cols);
}

/// The Young tableau whose column word is plactic-equivalent to u.
inline Tableau tableau_from_word(const Word& u) {
  Tableau t;
  for (Letter x : u) t = schensted_column_insert(x, t);
  return t;
}

/// Repeatedly deletes a letter present in every column and lowers larger letters.
inline Tableau red_a(const Tableau& t) {
  std::vector<std::vector<Letter>> cols;
  for (const auto& c : t.columns()) cols.push_back(c.entries);
  while (!cols.empty()) {
    std::vector<Letter> common = cols.front();
    for (const auto& c : cols) {
      std::vector<Letter> keep;
      std::set_intersection(common.begin(), common.end(), c.begin(), c.end(), std::back_inserter(keep));
      common = std::move(keep);
    }
    if (common.empty()) break;
    const Letter l = common.front();
    for (auto& c : cols) {
      std::erase(c, l);
      for (Letter& v : c)
        if (v > l) --v;
    }
    std::erase_if(cols, [](const std::vector<Letter>& c) { return c.empty(); });
  }
  return from_top_aligned_columns(cols);
}

/// Weight equals shape: the end of the cocyclage poset.
inline bool weight_equals_shape(const Tableau& t) { return weight_a(t) == t.shape(); }

/// Type A cocyclage: reduce, remove the first letter x of the column word and
/// insert it into the tableau of the remaining word.
inline Tableau cocyc_a(const Tableau& t) {
  if (weight_equals_shape(t)) throw std::invalid_argument("cocyclage is undefined when weight equals shape");
  const Tableau r = red_a(t);
  Word w = column_word_ne(r);
  if (w.empty()) return r;
  const Letter x = w.front();
  w.erase(w.begin());
  return schensted_column_insert(x, tableau_from_word(w));
}

/// Number of cocyclage steps needed to reach weight equal to shape.
inline int charge_via_cocyclage(const Tableau& t, int max_steps = 10000) {
  Tableau cur = t;
  for (int steps = 0; steps <= max_steps; ++steps) {
    if (weight_equals_shape(cur)) return steps;
    cur = cocyc_a(cur);
  }
  throw std::logic_error("cocyclage did not terminate");
}

}  // namespace spcharge
