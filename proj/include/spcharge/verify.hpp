#pragma once

// Exhaustive cross-checks shared by the acceptance suite and the command-line
// verifier. Each check returns a summary with the first few failures.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "direct.hpp"
#include "shapes.hpp"
#include "symfun.hpp"
#include "tableaux.hpp"
#include "typea.hpp"
#include "typec.hpp"

namespace spcharge::verify {

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  long long cases = 0;
  std::vector<std::string> failures;
  long long failure_count = 0;

  bool pass() const { return failure_count == 0; }
  void fail(const std::string& what) {
    ++failure_count;
    if (failures.size() < 5) failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
};

/// Names of the operations exercised by a run.
using Coverage = std::set<std::string>;

/// Every library operation the verification harness is expected to reach.
inline const std::vector<std::string>& required_operations() {
  static const std::vector<std::string> ops{
      "natural_order", "distance", "grav_shape", "shift_shape", "localshift_shape", "simp", "wshift_shape",
      "m_mu_iterative", "m_mu_closed", "weight_a", "column_word_ne", "row_word_sw", "grav_tableau",
      "shift_tableau", "wshift_tableau", "charge_standard", "extract_standard_subwords", "charge_word",
      "schensted_column_insert", "tableau_from_word", "red_a", "cocyc_a", "weight_c", "enumerate_row_symplectic",
      "insert_column_recursive", "insert_column_closed", "locins", "insert_into_tableau", "is_authorized", "red_c",
      "cocyc_c", "orbit", "charge_column", "charge_c_lecouvey", "compute_T_alpha", "compute_Tk", "pos_map",
      "delta_augmented", "compute_Tks", "charge_c_closed", "skew_symmetrize", "weyl_character", "orbit_sum",
      "hall_littlewood", "kostka_foulkes", "kostka_onerow_formula"};
  return ops;
}

inline std::vector<std::string> missing_operations(const Coverage& cov) {
  std::vector<std::string> out;
  for (const auto& op : required_operations())
    if (!cov.contains(op)) out.push_back(op);
  return out;
}

inline void touch(Coverage* cov, std::initializer_list<const char*> names) {
  if (!cov) return;
  for (const char* n : names) cov->insert(n);
}

/// Partitions with at most max_len parts and size at most max_size.
inline std::vector<Partition> partitions_upto(int max_size, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  std::sort(out.begin(), out.end());
  return out;
}

/// Partitions of exactly `size` with at most max_len parts.
inline std::vector<Partition> partitions_of(int size, int max_len) {
  std::vector<Partition> out;
  for (auto& p : partitions_upto(size, max_len))
    if (p.size() == size) out.push_back(p);
  return out;
}

/// Compositions of `size` that rise weakly and then fall weakly.
inline std::vector<Composition> unimodal_compositions(int size) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      Composition c(cur);
      if (is_unimodal(c)) out.push_back(c);
      return;
    }
    for (int v = 1; v <= left; ++v) {
      cur.push_back(v);
      self(self, left - v);
      cur.pop_back();
    }
  };
  rec(rec, size);
  return out;
}

inline std::string str(const Partition& p) { return "(" + format_composition(p) + ")"; }

inline QPolynomial q_power(int d) { return QPolynomial::monomial(Integer(1), static_cast<std::size_t>(d)); }

// ---------------------------------------------------------------------------
// Kostka-Foulkes agreement for one-row shapes.

struct KostkaRecord {
  int n = 0;
  int p = 0;
  Partition mu;
  QPolynomial oracle;
  QPolynomial onerow;
  QPolynomial charge_lecouvey;
  QPolynomial charge_closed;
  bool match() const { return oracle == onerow && onerow == charge_lecouvey && charge_lecouvey == charge_closed; }
};

/// All four routes to K_{(p),mu}(q) for n <= n_max and p <= p_max, with
/// p <= p_max_rank3 in rank 3.
inline CheckResult kostka_agreement(int n_max, int p_max, int p_max_rank3, std::vector<KostkaRecord>* records,
                                    Coverage* cov = nullptr) {
  CheckResult res{"kostka agreement"};
  touch(cov, {"kostka_foulkes", "kostka_onerow_formula", "charge_c_lecouvey", "charge_c_closed", "orbit",
              "charge_column", "enumerate_row_symplectic", "hall_littlewood", "weyl_character", "skew_symmetrize"});
  for (int n = 1; n <= n_max; ++n) {
    Oracle oracle(n);
    const int pm = n == 3 ? std::min(p_max, p_max_rank3) : p_max;
    for (int p = 0; p <= pm; ++p) {
      const auto row = oracle.kostka_row(to_weight(row_shape(p), n));
      for (const auto& mu : partitions_upto(p, n)) {
        if ((p - mu.size()) % 2 != 0) continue;
        KostkaRecord rec;
        rec.n = n;
        rec.p = p;
        rec.mu = mu;
        auto it = row.find(to_weight(mu, n));
        if (it != row.end()) rec.oracle = it->second;
        rec.onerow = kostka_onerow_formula(p, mu, n);
        for (const auto& s : enumerate_row_symplectic(n, p, mu)) {
          rec.charge_lecouvey += q_power(charge_c_lecouvey(row_tableau(s), n));
          rec.charge_closed += q_power(charge_c_closed(s));
        }
        std::ostringstream what;
        what << "n=" << n << " p=" << p << " mu=" << str(mu) << ": oracle " << rec.oracle.to_string() << ", one-row "
             << rec.onerow.to_string() << ", lecouvey " << rec.charge_lecouvey.to_string() << ", closed "
             << rec.charge_closed.to_string();
        res.expect(rec.match(), what.str());
        if (records) records->push_back(std::move(rec));
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Orbit checks: iterated cocyclage against the direct construction, the
// local-insertion identities and the structural properties of T_k, T_{k,s}.

using LabelDistance = std::function<int(int, int)>;

/// Naturality, partner involution, nesting, block constancy of the distance
/// and the gap inequality on one filling.
inline void check_structure(CheckResult& res, const std::string& tag, const std::vector<Letter>& entries,
                            const std::vector<int>& partner, const LabelDistance& delta) {
  const int L = static_cast<int>(entries.size());
  auto val = [&](int label) { return entries[static_cast<std::size_t>(label - 1)]; };
  res.expect(std::is_sorted(entries.begin(), entries.end()), tag + ": filling is not natural");
  bool involution = true;
  for (int d = 1; d <= L; ++d) {
    const int e = partner[static_cast<std::size_t>(d - 1)];
    if (e == 0) continue;
    if (partner[static_cast<std::size_t>(e - 1)] != d || val(e) != -val(d)) involution = false;
  }
  res.expect(involution, tag + ": partners are not an involution with opposite letters");

  std::map<Letter, std::vector<int>> blocks;
  for (int d = 1; d <= L; ++d) blocks[val(d)].push_back(d);
  for (const auto& [i, up] : blocks) {
    if (i < 0) continue;
    auto it = blocks.find(-i);
    if (it == blocks.end()) {
      res.expect(false, tag + ": letter " + std::to_string(i) + " has no barred block");
      continue;
    }
    const auto& down = it->second;
    bool nested = up.size() <= down.size();
    for (std::size_t j = 0; nested && j < up.size(); ++j)
      nested = partner[static_cast<std::size_t>(down.front() + static_cast<int>(j) - 1)] == up.back() - static_cast<int>(j);
    res.expect(nested, tag + ": nesting fails for letter " + std::to_string(i));
    std::set<int> values;
    for (int x : down)
      for (int y : up) values.insert(delta(x, y));
    res.expect(values.size() == 1, tag + ": distance not constant on the block of letter " + std::to_string(i));
  }
  for (const auto& [i, up] : blocks) {
    if (i < 0 || !blocks.count(-i)) continue;
    for (const auto& [j, top] : blocks) {
      if (j < i || !blocks.count(-j)) continue;
      const int ell = j - i;
      bool ok = true;
      for (int s1 : blocks.at(-j))
        for (int s2 : blocks.at(-i))
          for (int s3 : up)
            for (int s4 : top)
              if (s1 <= s2 && s2 <= s3 && s3 <= s4 && delta(s1, s4) - delta(s2, s3) > ell) ok = false;
      res.expect(ok, tag + ": gap inequality fails for letters " + std::to_string(i) + "," + std::to_string(j));
    }
  }
}

inline bool same(const AnyTableau& a, const AnyTableau& b) { return a == b; }

struct OrbitChecks {
  CheckResult iterates{"cocyclage iterates"};
  CheckResult local{"local insertion identities"};
  CheckResult structure{"structural invariants"};
  std::set<std::pair<Letter, CColumn>> insertion_inputs;
};

inline std::string spec_tag(const SymplecticRowSpec& s) {
  std::ostringstream o;
  o << "n=" << s.n << " p=" << s.p << " mu=" << str(s.mu) << " k=(";
  for (std::size_t i = 0; i < s.k.size(); ++i) o << (i ? "," : "") << s.k[i];
  o << ")";
  return o.str();
}

inline AnyTableau locins_power(AnyTableau t, int times) {
  for (int i = 0; i < times; ++i) {
    auto* a = std::get_if<AugmentedTableau>(&t);
    if (!a) throw std::logic_error("local insertion closed early");
    t = locins(*a);
  }
  return t;
}

inline OrbitChecks orbit_checks(int n_max, int p_max, Coverage* cov = nullptr) {
  OrbitChecks out;
  touch(cov, {"compute_T_alpha", "compute_Tk", "compute_Tks", "pos_map", "delta_augmented", "red_c", "cocyc_c",
              "locins", "localshift_tableau", "insert_into_tableau", "insert_column_recursive", "is_authorized",
              "weight_c", "m_mu_closed", "m_mu_iterative", "distance", "localshift_shape", "natural_order", "wshift_shape", "simp",
              "shift_shape"});
  const InsertionObserver observe = [&](Letter x, const CColumn& c) { out.insertion_inputs.emplace(x, c); };
  for (int n = 1; n <= n_max; ++n)
    for (int p = 0; p <= p_max; ++p)
      for (const auto& mu : partitions_upto(p, n))
        for (const auto& s : enumerate_row_symplectic(n, p, mu)) {
          const std::string tag = spec_tag(s);
          const int m = m_mu_closed(p, mu);
          out.iterates.expect(m_mu_iterative(row_shape(p), mu) == m,
                              tag + ": iterated shift count differs from " + std::to_string(m));
          const int length = orbit(row_tableau(s), n).m;
          out.iterates.expect(length == orbit_length_closed(s),
                              tag + ": orbit length " + std::to_string(length) + ", closed form " +
                                  std::to_string(orbit_length_closed(s)));
          Tableau cur = row_tableau(s);
          for (int k = 0; k <= m; ++k) {
            const std::string kt = tag + " k=" + std::to_string(k);
            try {
              const auto tk = compute_Tk(s, k);
              out.iterates.expect(red_c(cur, n) == red_c(tk.tableau, n),
                                  kt + ": cocyclage gives " + format_tableau(red_c(cur, n)) + ", direct gives " +
                                      format_tableau(red_c(tk.tableau, n)));
              const auto boxes = natural_order(tk.alpha);
              check_structure(out.structure, kt, tk.tableau.entries(), tk.partner, [&](int x, int y) {
                return distance(boxes[static_cast<std::size_t>(x - 1)], boxes[static_cast<std::size_t>(y - 1)]);
              });
              const Tableau rk = red_c(tk.tableau, n);
              if (k < m && !rk.is_column()) {
                const int r = localshift_closing_steps(rk.shape());
                const auto tk1 = compute_Tks(s, k, 1);
                out.local.expect(same(tk1.tableau, localshift_tableau(rk)), kt + ": T_{k,1} differs from localshift(red T_k)");
                for (int st = 1; st < r; ++st) {
                  const auto next = compute_Tks(s, k, st + 1);
                  AnyTableau lhs;
                  try {
                    lhs = locins_power(tk1.tableau, st);
                  } catch (const std::exception& e) {
                    out.local.expect(false, kt + " s=" + std::to_string(st) + ": " + e.what());
                    continue;
                  }
                  out.local.expect(same(lhs, next.tableau), kt + " s=" + std::to_string(st) + ": locins^s(T_{k,1}) differs from T_{k,s+1}");
                }
                for (int st = 1; st < r; ++st) {
                  const auto tks = compute_Tks(s, k, st);
                  const auto& a = std::get<AugmentedTableau>(tks.tableau);
                  check_structure(out.structure, kt + " s=" + std::to_string(st), a.entries(), tks.partner,
                                  [&](int x, int y) { return delta_augmented(tks.context, x, y); });
                }
                AnyTableau via;
                try {
                  via = locins_power(localshift_tableau(rk), r - 1);
                } catch (const std::exception& e) {
                  out.local.expect(false, kt + ": " + e.what());
                }
                if (const auto* done = std::get_if<Tableau>(&via))
                  out.local.expect(red_c(*done, n) == cocyc_c(rk, n), kt + ": cocyclage differs from local insertion route");
                else
                  out.local.expect(false, kt + ": local insertion route did not close");
              }
            } catch (const std::exception& e) {
              out.iterates.expect(false, kt + ": " + e.what());
            }
            if (k < m) cur = cocyc_c(cur, n, observe);
          }
        }
  return out;
}

// ---------------------------------------------------------------------------
// Column insertion: closed form against the recursive rules.

inline void compare_insertion(CheckResult& res, Letter x, const CColumn& c) {
  std::string col;
  for (Letter v : c) col += std::to_string(v) + " ";
  ColumnInsertion rec;
  try {
    rec = insert_column_recursive(x, c);
  } catch (const InsertionRejected&) {
    res.expect(false, "recursive rule rejected " + std::to_string(x) + " -> [ " + col + "]");
    return;
  }
  try {
    const auto closed = insert_column_closed(x, c);
    res.expect(closed.same_outcome(rec), "closed form differs on " + std::to_string(x) + " -> [ " + col + "]");
  } catch (const std::exception& e) {
    res.expect(false, "closed form threw on " + std::to_string(x) + " -> [ " + col + "]: " + e.what());
  }
}

/// Random strictly increasing columns over C_n (n <= 4) accepted by the
/// recursive rules, with random letters.
inline void random_insertions(CheckResult& res, int count, unsigned seed) {
  std::mt19937 rng(seed);
  int accepted = 0;
  long long attempts = 0;
  while (accepted < count) {
    if (++attempts > 100LL * count) {
      res.fail("too few random columns accepted by the recursive rules");
      return;
    }
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Letter> alphabet;
    for (int i = n; i >= 1; --i) alphabet.push_back(-i);
    for (int i = 1; i <= n; ++i) alphabet.push_back(i);
    CColumn c;
    for (Letter v : alphabet)
      if (std::bernoulli_distribution(0.5)(rng)) c.push_back(v);
    const Letter x = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    try {
      (void)insert_column_recursive(x, c);
    } catch (const InsertionRejected&) {
      continue;
    }
    ++accepted;
    compare_insertion(res, x, c);
  }
}

inline CheckResult insertion_equivalence(const std::set<std::pair<Letter, CColumn>>& orbit_inputs, int random_count,
                                         unsigned seed, Coverage* cov = nullptr) {
  touch(cov, {"insert_column_closed", "insert_column_recursive"});
  CheckResult res{"insertion equivalence"};
  for (const auto& [x, c] : orbit_inputs) compare_insertion(res, x, c);
  random_insertions(res, random_count, seed);
  return res;
}

// ---------------------------------------------------------------------------
// Type A.

/// Semistandard Young tableaux of partition shape and weight.
inline std::vector<Tableau> ssyt(const Partition& shape, const Partition& weight) {
  std::vector<Tableau> out;
  if (shape.size() != weight.size()) return out;
  const auto boxes = natural_order(shape);
  std::vector<Letter> fill(boxes.size(), 0);
  std::vector<int> left = weight.parts();
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == boxes.size()) {
      out.emplace_back(shape, fill);
      return;
    }
    const Box b = boxes[idx];
    for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (b.col > 1 && fill[idx - 1] > v) continue;
      if (b.row > 1) {
        const auto above = static_cast<std::size_t>(label_of(shape, Box{b.col, b.row - 1}) - 1);
        if (fill[above] >= v) continue;
      }
      fill[idx] = v;
      --left[static_cast<std::size_t>(v - 1)];
      self(self, idx + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0);
  return out;
}

struct TypeAChecks {
  CheckResult proposition{"cocyclage against weighted shift"};
  CheckResult charge{"charge by subwords against cocyclage count"};
  CheckResult decrement{"cocyclage lowers charge by one"};
};

inline TypeAChecks type_a_checks(int max_boxes, int max_letters, Coverage* cov = nullptr) {
  touch(cov, {"grav_shape", "grav_tableau", "wshift_tableau", "shift_tableau", "cocyc_a", "red_a",
              "schensted_column_insert", "tableau_from_word", "column_word_ne", "row_word_sw", "charge_word",
              "charge_standard", "extract_standard_subwords", "weight_a"});
  TypeAChecks out;
  for (int size = 1; size <= max_boxes; ++size) {
    for (const auto& mu : partitions_of(size, max_letters)) {
      std::vector<Letter> content;
      for (int i = 0; i < mu.length(); ++i) content.insert(content.end(), static_cast<std::size_t>(mu[static_cast<std::size_t>(i)]), i + 1);
      for (const auto& alpha : unimodal_compositions(size)) {
        const Tableau t = fill_natural(alpha, content);
        if (!is_semistandard(t)) continue;
        const Tableau g = grav_tableau(t);
        if (weight_equals_shape(g)) continue;
        const Tableau lhs = cocyc_a(g);
        const Tableau rhs = grav_tableau(wshift_tableau(t, mu));
        out.proposition.expect(lhs == rhs, "shape (" + format_composition(alpha) + ") weight " + str(mu) + ": " +
                                               format_tableau(lhs) + " vs " + format_tableau(rhs));
      }
      for (const auto& lambda : partitions_of(size, size)) {
        for (const auto& t : ssyt(lambda, mu)) {
          const int ch = charge_word(row_word_sw(t));
          out.charge.expect(ch == charge_via_cocyclage(t), "charge mismatch on " + format_tableau(t));
          if (!weight_equals_shape(t)) {
            const int after = charge_word(row_word_sw(cocyc_a(t)));
            out.decrement.expect(after == ch - 1, "charge does not drop by one on " + format_tableau(t));
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle self-checks.

inline std::vector<WeightVec> dominant_weights(int n, int max_size) {
  std::vector<WeightVec> out;
  for (const auto& p : partitions_upto(max_size, n)) out.push_back(to_weight(p, n));
  return out;
}

struct OracleChecks {
  CheckResult endpoints{"Hall-Littlewood endpoints"};
  CheckResult positivity{"Kostka-Foulkes positivity"};
  CheckResult counts{"row counts at q = 1"};
};

inline OracleChecks oracle_checks(int n_max, int max_size, int p_max, int p_max_rank3, Coverage* cov = nullptr) {
  touch(cov, {"hall_littlewood", "weyl_character", "orbit_sum", "kostka_foulkes", "skew_symmetrize"});
  OracleChecks out;
  for (int n = 1; n <= n_max; ++n) {
    Oracle oracle(n);
    for (const auto& lam : dominant_weights(n, max_size)) {
      const std::string tag = "n=" + std::to_string(n) + " lambda=" + str(Partition(lam));
      const GroupRing& p = oracle.hall_littlewood(lam);
      out.endpoints.expect(p.evaluate_q(0) == oracle.character(lam), tag + ": P(0) is not the character");
      out.endpoints.expect(p.evaluate_q(1) == orbit_sum(lam, n), tag + ": P(1) is not the orbit sum");
      try {
        const auto row = oracle.kostka_row(lam);
        bool ok = true;
        for (const auto& [nu, k] : row)
          for (const auto& c : k.coeffs()) ok = ok && c >= 0;
        out.positivity.expect(ok, tag + ": negative coefficient");
      } catch (const std::exception& e) {
        out.positivity.expect(false, tag + ": " + e.what());
      }
    }
    for (int pp = 0; pp <= (n == 3 ? std::min(p_max, p_max_rank3) : p_max); ++pp) {
      const auto row = oracle.kostka_row(to_weight(row_shape(pp), n));
      for (const auto& mu : partitions_upto(pp, n)) {
        auto it = row.find(to_weight(mu, n));
        const Integer at_one = it == row.end() ? Integer(0) : it->second(Integer(1));
        const auto count = static_cast<long long>(enumerate_row_symplectic(n, pp, mu).size());
        out.counts.expect(at_one == count, "n=" + std::to_string(n) + " p=" + std::to_string(pp) + " mu=" + str(mu) +
                                               ": K(1) = " + at_one.str() + ", tableaux " + std::to_string(count));
      }
    }
  }
  return out;
}

}  // namespace spcharge::verify
