// Command-line front end for the spcharge library.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spcharge/spcharge.hpp"
#include "spcharge/verify.hpp"

namespace {

using namespace spcharge;

/// Thrown for inputs that parse but make no sense for the requested command.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Word parse_word(const std::string& text) {
  if (text.empty()) return {};
  return detail::parse_int_list(text, ',', 0);
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

Partition parse_partition(const std::string& text) {
  const Composition c = parse_composition(text);
  if (!is_partition(c)) throw UsageError("not a partition: " + text);
  return c;
}

int max_letter(const Tableau& t) {
  int n = 0;
  for (Letter x : t.entries()) n = std::max(n, std::abs(x));
  return n;
}

std::string coeffs_json(const QPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(nlohmann::json::parse(c.str()));
  return nlohmann::json{{"coeffs", arr}}.dump();
}

QPolynomial q_power(int d) { return QPolynomial::monomial(Integer(1), static_cast<std::size_t>(d)); }

char role_mark(BoxRole role, Letter x) {
  switch (role) {
    case BoxRole::Partner:
      return x > 0 ? '+' : '-';
    case BoxRole::Single:
      return 's';
    case BoxRole::Copied:
      return '.';
  }
  return '?';
}

/// Rows of entries with a second grid of partner marks to the right.
void print_grid(std::ostream& out, const Tableau& t, const std::vector<BoxRole>* roles) {
  int width = 1;
  for (Letter x : t.entries()) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  const auto rs = t.rows();
  const int cols = t.num_columns();
  int label = 0;
  for (const auto& r : rs) {
    std::string left, right;
    for (int c = 0; c < cols; ++c) {
      std::string cell = c < static_cast<int>(r.size()) ? std::to_string(r[static_cast<std::size_t>(c)]) : "";
      left += std::string(static_cast<std::size_t>(width + 1) - cell.size(), ' ') + cell;
      if (roles && c < static_cast<int>(r.size())) {
        right += ' ';
        right += role_mark((*roles)[static_cast<std::size_t>(label)], r[static_cast<std::size_t>(c)]);
        ++label;
      }
    }
    out << "  " << left;
    if (roles) out << "   " << right;
    out << '\n';
  }
}

std::string partner_pairs(const std::vector<int>& partner) {
  std::string out;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int a = static_cast<int>(i) + 1;
    if (partner[i] > a) out += (out.empty() ? "" : " ") + std::to_string(a) + ":" + std::to_string(partner[i]);
  }
  return out.empty() ? "-" : out;
}

std::string role_list(const AnyTableau& t, const std::vector<BoxRole>& roles) {
  const std::vector<Letter> entries =
      std::visit([](const auto& x) { return std::vector<Letter>(x.entries()); }, t);
  std::string out;
  for (std::size_t i = 0; i < roles.size(); ++i) out += role_mark(roles[i], entries[i]);
  return out;
}

/// Row tableaux whose cocyclage orbit is described by T_k.
bool is_dominant_row(const Tableau& t, int n) {
  if (t.num_rows() > 1 || !is_natural(t)) return false;
  const auto w = weight_c(t, n);
  return std::is_sorted(w.begin(), w.end(), std::greater<int>()) && (w.empty() || w.back() >= 0);
}

int cmd_charge_a(const std::string& word) {
  std::cout << charge_word(parse_word(word)) << '\n';
  return 0;
}

int cmd_cocyc_a(const std::string& text) {
  std::cout << format_tableau(cocyc_a(parse_tableau(text))) << '\n';
  return 0;
}

int cmd_insert_c(Letter x, const std::string& text) {
  const Tableau t = parse_tableau(text);
  if (t.is_column() && !t.empty()) {
    const auto r = insert_column_closed(x, t.entries());
    std::cout << format_tableau(insertion_tableau(r)) << '\n' << "case " << to_string(r.kind) << '\n';
  } else {
    std::cout << format_tableau(insert_into_tableau(x, t)) << '\n';
  }
  return 0;
}

int cmd_cocyc_c(const std::string& text, int n, bool trace) {
  const Tableau t = parse_tableau(text);
  if (n <= 0) n = max_letter(t);
  InsertionObserver observe;
  if (trace)
    observe = [](Letter x, const CColumn& c) {
      const auto r = insert_column_closed(x, c);
      std::cout << "insert " << x << " into " << format_word(c) << " -> " << format_tableau(insertion_tableau(r))
                << " (" << to_string(r.kind) << ")\n";
    };
  const Tableau out = cocyc_c(t, n, observe);
  std::cout << format_tableau(out) << '\n';
  return 0;
}

int cmd_charge_c(const std::string& text, int n) {
  std::cout << charge_c_lecouvey(parse_tableau(text), n) << '\n';
  return 0;
}

int cmd_enumerate(int n, int p, const std::string& mu) {
  for (const auto& s : enumerate_row_symplectic(n, p, parse_partition(mu)))
    std::cout << format_tableau(row_tableau(s)) << "\tk=" << format_word(s.k) << "\tcharge=" << charge_c_closed(s)
              << '\n';
  return 0;
}

int cmd_tk(int n, const std::string& k_vec, const std::string& mu, int step, int s_step, bool show_partners) {
  SymplecticRowSpec s;
  s.n = n;
  s.mu = parse_partition(mu);
  s.k = k_vec.empty() ? std::vector<int>{} : detail::parse_int_list(k_vec, ',', 0);
  s.p = s.mu.size();
  for (int v : s.k) s.p += 2 * v;
  validate(s);
  if (s_step <= 0) {
    const auto t = compute_Tk(s, step);
    std::cout << format_tableau(t.tableau) << '\n';
    if (show_partners) {
      print_grid(std::cout, t.tableau, &t.role);
      std::cout << "pairs " << partner_pairs(t.partner) << '\n';
    }
  } else {
    const auto t = compute_Tks(s, step, s_step);
    std::cout << format_tableau(t.tableau) << '\n';
    if (show_partners) {
      std::cout << "roles " << role_list(t.tableau, t.role) << '\n';
      std::cout << "pairs " << partner_pairs(t.partner) << '\n';
    }
  }
  return 0;
}

int cmd_kostka(int n, const std::string& lambda_text, const std::string& mu_text, const std::string& method,
               bool text) {
  const Partition lambda = parse_partition(lambda_text);
  const Partition mu = parse_partition(mu_text);
  check_rank(n);
  if (lambda.length() > n || mu.length() > n) throw UsageError("partition has more parts than the rank");
  const bool row = lambda.length() <= 1;
  if ((method == "charge" || method == "onerow" || method == "all") && !row)
    throw UsageError("method " + method + " needs a one-row lambda");
  const int p = lambda.size();

  auto oracle = [&] { return kostka_foulkes(to_weight(lambda, n), to_weight(mu, n), n); };
  auto onerow = [&] { return kostka_onerow_formula(p, mu, n); };
  auto charge = [&] {
    QPolynomial sum;
    if ((p - mu.size()) % 2 == 0 && mu.size() <= p)
      for (const auto& s : enumerate_row_symplectic(n, p, mu)) sum += q_power(charge_c_closed(s));
    return sum;
  };
  auto emit = [&](const QPolynomial& k) { std::cout << (text ? k.to_string() : coeffs_json(k)) << '\n'; };

  if (method == "oracle") {
    emit(oracle());
  } else if (method == "onerow") {
    emit(onerow());
  } else if (method == "charge") {
    emit(charge());
  } else {
    const QPolynomial a = oracle(), b = onerow(), c = charge();
    if (a == b && b == c) {
      emit(a);
      return 0;
    }
    std::cout << "oracle " << coeffs_json(a) << '\n'
              << "onerow " << coeffs_json(b) << '\n'
              << "charge " << coeffs_json(c) << '\n';
    std::cerr << "methods disagree\n";
    return 1;
  }
  return 0;
}

int cmd_verify(int n_max, int p_max, unsigned seed, int random_count, bool timing) {
  if (n_max > 3 || p_max > 8) throw UsageError("verify is limited to n_max <= 3 and p_max <= 8");
  if (n_max < 1 || p_max < 0) {
    std::cout << "verify: empty range\n";
    return 0;
  }
  using clock = std::chrono::steady_clock;
  verify::Coverage cov;
  std::vector<verify::KostkaRecord> records;
  std::vector<std::pair<const verify::CheckResult*, double>> groups;

  auto t0 = clock::now();
  auto since = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };
  const auto kostka = verify::kostka_agreement(n_max, p_max, p_max, &records, &cov);
  groups.emplace_back(&kostka, since());
  t0 = clock::now();
  const auto orbits = verify::orbit_checks(n_max, p_max, &cov);
  const double orbit_seconds = since();
  groups.emplace_back(&orbits.iterates, orbit_seconds);
  groups.emplace_back(&orbits.local, orbit_seconds);
  groups.emplace_back(&orbits.structure, orbit_seconds);
  t0 = clock::now();
  const auto insertion = verify::insertion_equivalence(orbits.insertion_inputs, random_count, seed, &cov);
  groups.emplace_back(&insertion, since());
  t0 = clock::now();
  const auto type_a = verify::type_a_checks(8, 4, &cov);
  const double type_a_seconds = since();
  groups.emplace_back(&type_a.proposition, type_a_seconds);
  groups.emplace_back(&type_a.charge, type_a_seconds);
  groups.emplace_back(&type_a.decrement, type_a_seconds);
  t0 = clock::now();
  const auto oracle = verify::oracle_checks(n_max, 6, p_max, p_max, &cov);
  const double oracle_seconds = since();
  groups.emplace_back(&oracle.endpoints, oracle_seconds);
  groups.emplace_back(&oracle.positivity, oracle_seconds);
  groups.emplace_back(&oracle.counts, oracle_seconds);

  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.p, a.mu) < std::tie(b.n, b.p, b.mu);
  });
  long long mismatches = 0;
  for (const auto& r : records) {
    std::cout << "n=" << r.n << " p=" << r.p << " mu=" << verify::str(r.mu) << " K=" << r.oracle.to_string()
              << (r.match() ? " match" : " MISMATCH") << '\n';
    if (!r.match()) {
      ++mismatches;
      std::cout << "  onerow=" << r.onerow.to_string() << " lecouvey=" << r.charge_lecouvey.to_string()
                << " closed=" << r.charge_closed.to_string() << '\n';
    }
  }
  for (const auto& [g, seconds] : groups) {
    std::cout << g->name << ": " << g->cases << " checks, " << g->failure_count << " failures";
    if (timing) std::cout << " (" << std::fixed << std::setprecision(2) << seconds << "s)";
    std::cout << '\n';
    for (const auto& f : g->failures) std::cout << "  " << f << '\n';
    mismatches += g->failure_count;
  }
  const auto missing = verify::missing_operations(cov);
  std::cout << "coverage: " << verify::required_operations().size() - missing.size() << " of "
            << verify::required_operations().size() << " operations";
  for (const auto& m : missing) std::cout << ' ' << m;
  std::cout << '\n';
  if (!missing.empty()) ++mismatches;
  std::cout << (mismatches == 0 ? "verify: all checks agree" : "verify: " + std::to_string(mismatches) + " failures")
            << '\n';
  return mismatches == 0 ? 0 : 1;
}

int cmd_trace(const std::string& text, int n, bool show_tk) {
  const Tableau t = parse_tableau(text);
  if (n <= 0) n = max_letter(t);
  const Orbit o = orbit(t, n);
  std::cout << "orbit of " << format_tableau(t) << " in rank " << n << ": " << o.m << " steps\n";
  for (int i = 0; i <= o.m; ++i) {
    const Tableau& cur = o.steps[static_cast<std::size_t>(i)];
    std::cout << "step " << i << ": " << format_tableau(cur) << "  reduced " << format_tableau(red_c(cur, n)) << '\n';
  }
  std::cout << "terminal " << format_tableau(o.terminal) << '\n';
  if (!show_tk || !is_dominant_row(t, n)) return 0;
  const SymplecticRowSpec s = spec_of_row(t, n);
  for (int k = 0; k <= o.m; ++k) {
    const auto tk = compute_Tk(s, k);
    std::cout << "T_" << k << " " << format_tableau(tk.tableau) << '\n';
    print_grid(std::cout, tk.tableau, &tk.role);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic charge, cocyclage and Kostka-Foulkes polynomials"};
  app.require_subcommand(1);

  std::string word, tab, lambda, mu, k_vec, method = "oracle";
  int letter = 0, n = 0, p = 0, step = 0, s_step = 0, n_max = 2, p_max = 6, random_count = 10000;
  unsigned seed = 20261016u;
  bool trace = false, show_partners = false, text = false, timing = false, no_tk = false;

  auto* charge_a = app.add_subcommand("charge-a", "Charge of a word in positive letters");
  charge_a->add_option("word", word, "Comma-separated letters")->required();

  auto* cocyc_a_cmd = app.add_subcommand("cocyc-a", "Type A cocyclage of a tableau");
  cocyc_a_cmd->add_option("tableau", tab, "Rows separated by ';', entries by ','")->required();

  auto* insert_c = app.add_subcommand("insert-c", "Symplectic insertion of a letter");
  insert_c->add_option("letter", letter, "Nonzero letter, negative for barred")->required();
  insert_c->add_option("tableau", tab, "Column or tableau")->required();

  auto* cocyc_c_cmd = app.add_subcommand("cocyc-c", "Symplectic cocyclage");
  cocyc_c_cmd->add_option("tableau", tab)->required();
  cocyc_c_cmd->add_option("--n", n, "Rank (default: largest letter)");
  cocyc_c_cmd->add_flag("--trace", trace, "Print every column insertion");

  auto* charge_c = app.add_subcommand("charge-c", "Symplectic charge by cocyclage");
  charge_c->add_option("tableau", tab)->required();
  charge_c->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Row tableaux of given length and authorized weight");
  enumerate->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--p", p, "Row length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--mu", mu, "Partition, largest part first")->required();

  auto* tk = app.add_subcommand("tk", "Direct computation of T_k or T_{k,s}");
  tk->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  tk->add_option("--k-vec", k_vec, "k_1,...,k_n")->required();
  tk->add_option("--mu", mu, "Partition, largest part first")->required();
  tk->add_option("--step", step, "k")->required()->check(CLI::NonNegativeNumber);
  tk->add_option("--s", s_step, "Local shift count s >= 1");
  tk->add_flag("--show-partners", show_partners, "Print partner roles and pairs");

  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
  kostka->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  kostka->add_option("--lambda", lambda, "Partition")->required();
  kostka->add_option("--mu", mu, "Partition")->required();
  kostka->add_option("--method", method, "oracle, charge, onerow or all")
      ->check(CLI::IsMember({"oracle", "charge", "onerow", "all"}));
  kostka->add_flag("--text", text, "Print the polynomial instead of JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Compare every route to one-row Kostka-Foulkes polynomials");
  verify_cmd->add_option("--n-max", n_max, "Largest rank (at most 3)");
  verify_cmd->add_option("--p-max", p_max, "Largest row length (at most 8)");
  verify_cmd->add_option("--seed", seed, "Seed for random insertion checks");
  verify_cmd->add_option("--random", random_count, "Number of random insertion checks")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--timing", timing, "Print timings");

  auto* trace_cmd = app.add_subcommand("trace", "Cocyclage orbit and T_k of a tableau");
  trace_cmd->add_option("tableau", tab)->required();
  trace_cmd->add_option("--n", n, "Rank (default: largest letter)");
  trace_cmd->add_flag("--no-tk", no_tk, "Skip the T_k grids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*charge_a) return cmd_charge_a(word);
    if (*cocyc_a_cmd) return cmd_cocyc_a(tab);
    if (*insert_c) return cmd_insert_c(letter, tab);
    if (*cocyc_c_cmd) return cmd_cocyc_c(tab, n, trace);
    if (*charge_c) return cmd_charge_c(tab, n);
    if (*enumerate) return cmd_enumerate(n, p, mu);
    if (*tk) return cmd_tk(n, k_vec, mu, step, s_step, show_partners);
    if (*kostka) return cmd_kostka(n, lambda, mu, method, text);
    if (*verify_cmd) return cmd_verify(n_max, p_max, seed, random_count, timing);
    if (*trace_cmd) return cmd_trace(tab, n, !no_tk);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
