#pragma once

// Exact oracle for type C_n: the group ring Z[q][Lambda], the hyperoctahedral
// Weyl group, Weyl characters, orbit sums, Hall-Littlewood polynomials and
// Kostka-Foulkes polynomials.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shapes.hpp"
#include "typec.hpp"

namespace spcharge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in q with coefficients ascending in degree and no trailing zeros.
template <class Coeff>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Coeff c) : coeffs_{std::move(c)} { trim(); }  // NOLINT: constants convert implicitly
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial q() { return monomial(Coeff(1), 1); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  Coeff operator()(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Euclidean division; requires a field of coefficients.
  friend std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial quot;
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      const Polynomial t = monomial(a.leading() / b.leading(), shift);
      quot += t;
      a -= t * b;
    }
    return {quot, a};
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      if (coeffs_[d] == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string c = coeffs_[d].str();
      if (d == 0)
        out += c;
      else
        out += (coeffs_[d] == 1 ? std::string() : c + "*") + (d == 1 ? "q" : "q^" + std::to_string(d));
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using QPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const QPolynomial& p) {
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

/// Converts back to integers; throws when a coefficient is not integral.
inline QPolynomial to_integer(const RationalPolynomial& p) {
  std::vector<Integer> v;
  for (const auto& c : p.coeffs()) {
    if (boost::multiprecision::denominator(c) != 1) throw std::logic_error("non-integral coefficient");
    v.push_back(boost::multiprecision::numerator(c));
  }
  return QPolynomial(std::move(v));
}

using WeightVec = std::vector<int>;

/// Finite sums of Laurent monomials e^v with polynomial coefficients.
template <class Coeff>
class GroupRingElem {
public:
  using Poly = Polynomial<Coeff>;

  GroupRingElem() = default;
  static GroupRingElem monomial(WeightVec v, Poly c = Poly(Coeff(1))) {
    GroupRingElem e;
    e.add(std::move(v), c);
    return e;
  }

  void add(const WeightVec& v, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
      terms_.emplace(v, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const std::map<WeightVec, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const WeightVec& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Poly() : it->second;
  }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    for (const auto& [v, c] : o.terms_) add(v, c);
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    for (const auto& [v, c] : o.terms_) add(v, -c);
    return *this;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out;
    for (const auto& [v, c] : a.terms_)
      for (const auto& [u, d] : b.terms_) {
        WeightVec s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + u[i];
        out.add(s, c * d);
      }
    return out;
  }
  GroupRingElem scaled(const Poly& c) const {
    GroupRingElem out;
    for (const auto& [v, d] : terms_) out.add(v, d * c);
    return out;
  }

  /// Substitutes a value for q.
  GroupRingElem evaluate_q(const Coeff& x) const {
    GroupRingElem out;
    for (const auto& [v, c] : terms_) out.add(v, Poly(c(x)));
    return out;
  }

  bool operator==(const GroupRingElem& o) const { return terms_ == o.terms_; }

private:
  std::map<WeightVec, Poly> terms_;
};

using GroupRing = GroupRingElem<Integer>;

// ---------------------------------------------------------------------------
// The hyperoctahedral group.

/// Signed permutation acting by (w v)_i = signs_i * v_{perm_i}.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;

  WeightVec apply(const WeightVec& v) const {
    WeightVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = signs[i] * v[static_cast<std::size_t>(perm[i])];
    return out;
  }

  /// (-1)^{length}: permutation sign times (-1)^{number of sign changes}.
  int sign() const {
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) s = -s;
    for (int e : signs)
      if (e < 0) s = -s;
    return s;
  }
};

inline void check_rank(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("rank must lie in [1, 4]");
}

inline std::vector<SignedPerm> weyl_group(int n) {
  check_rank(n);
  std::vector<SignedPerm> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      out.push_back({perm, signs});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline WeightVec rho(int n) {
  WeightVec r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - i;
  return r;
}

/// Positive roots e_i - e_j, e_i + e_j (i < j) and 2 e_i.
inline std::vector<WeightVec> positive_roots(int n) {
  std::vector<WeightVec> out;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      WeightVec a(N, 0), b(N, 0);
      a[i] = 1, a[j] = -1;
      b[i] = 1, b[j] = 1;
      out.push_back(a);
      out.push_back(b);
    }
  for (std::size_t i = 0; i < N; ++i) {
    WeightVec a(N, 0);
    a[i] = 2;
    out.push_back(a);
  }
  return out;
}

inline int pairing(const WeightVec& a, const WeightVec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

inline bool is_dominant(const WeightVec& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<int>()) && (v.empty() || v.back() >= 0);
}

inline WeightVec add(WeightVec a, const WeightVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline WeightVec sub(WeightVec a, const WeightVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// A partition padded with zeros to n coordinates.
inline WeightVec to_weight(const Partition& p, int n) {
  if (p.length() > n) throw std::invalid_argument("partition has more parts than the rank");
  WeightVec v(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p.length(); ++i) v[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
  return v;
}

inline void check_weight(const WeightVec& lambda, int n) {
  check_rank(n);
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight has the wrong number of coordinates");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
  if (std::accumulate(lambda.begin(), lambda.end(), 0) > 10) throw std::invalid_argument("|lambda| exceeds 10");
}

template <class Coeff>
GroupRingElem<Coeff> skew_symmetrize(const GroupRingElem<Coeff>& f, int n) {
  GroupRingElem<Coeff> out;
  for (const auto& w : weyl_group(n)) {
    const Polynomial<Coeff> s(Coeff(w.sign()));
    for (const auto& [v, c] : f.terms()) out.add(w.apply(v), c * s);
  }
  return out;
}

/// Each W-orbit element of a dominant weight once.
inline GroupRing orbit_sum(const WeightVec& lambda, int n) {
  check_weight(lambda, n);
  std::set<WeightVec> seen;
  for (const auto& w : weyl_group(n)) seen.insert(w.apply(lambda));
  GroupRing out;
  for (const auto& v : seen) out.add(v, QPolynomial(Integer(1)));
  return out;
}

namespace detail {

/// Exact quotient g / (1 - e^{-alpha}) by lexicographic long division.
inline GroupRing divide_by_root_factor(GroupRing g, const WeightVec& alpha) {
  GroupRing quot;
  if (g.is_zero()) return quot;
  const WeightVec floor = add(g.terms().begin()->first, alpha);
  while (!g.is_zero()) {
    auto top = std::prev(g.terms().end());
    const WeightVec v = top->first;
    const QPolynomial c = top->second;
    if (v < floor) throw std::logic_error("inexact division in the group ring");
    quot.add(v, c);
    g.add(v, -c);
    g.add(sub(v, alpha), c);
  }
  return quot;
}

}  // namespace detail

/// Weyl character chi(lambda) = eps(e^{lambda+rho}) / eps(e^rho), obtained
/// from eps(e^{rho}) = e^rho * prod over positive roots of (1 - e^{-alpha}).
inline GroupRing weyl_character(const WeightVec& lambda, int n) {
  check_weight(lambda, n);
  const auto r = rho(n);
  GroupRing g = skew_symmetrize(GroupRing::monomial(add(lambda, r)), n);
  GroupRing shifted;
  for (const auto& [v, c] : g.terms()) shifted.add(sub(v, r), c);
  for (const auto& a : positive_roots(n)) shifted = detail::divide_by_root_factor(std::move(shifted), a);
  return shifted;
}

/// Sorts absolute values decreasingly. Returns false when v is singular
/// (a zero or repeated absolute value); otherwise stores the dominant image
/// and the sign of the Weyl element reaching it.
inline bool dominant_image(const WeightVec& v, WeightVec& image, int& sign) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return std::abs(v[a]) > std::abs(v[b]); });
  image.assign(v.size(), 0);
  sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    image[i] = std::abs(v[idx[i]]);
    if (image[i] == 0 || (i > 0 && image[i] == image[i - 1])) return false;
    if (v[idx[i]] < 0) sign = -sign;
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) sign = -sign;
  }
  return true;
}

/// Direction of the roots in the Hall-Littlewood product.
enum class RootConvention { Positive, Negative };

/// Caches characters so that Hall-Littlewood and Kostka-Foulkes
/// computations reuse them.
class Oracle {
public:
  explicit Oracle(int n) : n_(n) { check_rank(n); }
  int rank() const { return n_; }

  const GroupRing& character(const WeightVec& lambda) {
    auto it = chars_.find(lambda);
    if (it == chars_.end()) it = chars_.emplace(lambda, weyl_character(lambda, n_)).first;
    return it->second;
  }

  /// eps(e^{lambda+rho} prod (1 - q e^{+-alpha})) / eps(e^rho) over the roots
  /// alpha with <lambda, alpha> > 0, split into characters through the
  /// dominant images of the numerator terms.
  GroupRing hall_littlewood(const WeightVec& lambda, RootConvention conv) {
    check_weight(lambda, n_);
    const auto r = rho(n_);
    GroupRing f = GroupRing::monomial(add(lambda, r));
    for (const auto& a : positive_roots(n_)) {
      if (pairing(lambda, a) <= 0) continue;
      WeightVec e = a;
      if (conv == RootConvention::Negative)
        for (int& x : e) x = -x;
      GroupRing factor = GroupRing::monomial(WeightVec(static_cast<std::size_t>(n_), 0));
      factor.add(e, -QPolynomial::q());
      f = f * factor;
    }
    std::map<WeightVec, QPolynomial> parts;
    for (const auto& [v, c] : f.terms()) {
      WeightVec image;
      int sign = 0;
      if (!dominant_image(v, image, sign)) continue;
      parts[sub(image, r)] += sign > 0 ? c : -c;
    }
    GroupRing check;
    GroupRing result;
    for (const auto& [nu, c] : parts) {
      if (c.is_zero()) continue;
      check += skew_symmetrize(GroupRing::monomial(add(nu, r)), n_).scaled(c);
      result += character(nu).scaled(c);
    }
    if (!(check == skew_symmetrize(f, n_))) throw std::logic_error("nonzero residue in the character decomposition");
    return result;
  }

  /// The root direction for which P(0) is the character and P(1) the orbit
  /// sum on a set of probe weights. Exactly one direction must qualify.
  RootConvention select_convention(const std::vector<WeightVec>& probes) {
    std::vector<RootConvention> ok;
    for (RootConvention c : {RootConvention::Positive, RootConvention::Negative}) {
      bool good = true;
      for (const WeightVec& lam : probes) {
        try {
          const GroupRing p = hall_littlewood(lam, c);
          good = good && p.evaluate_q(0) == character(lam) && p.evaluate_q(1) == orbit_sum(lam, n_);
        } catch (const std::exception&) {
          good = false;
        }
      }
      if (good) ok.push_back(c);
    }
    if (ok.size() != 1) throw std::logic_error("no unique root convention satisfies both endpoint identities");
    return ok.front();
  }

  static RootConvention convention();

  const GroupRing& hall_littlewood(const WeightVec& lambda) {
    auto it = hl_.find(lambda);
    if (it == hl_.end()) it = hl_.emplace(lambda, hall_littlewood(lambda, convention())).first;
    return it->second;
  }

  /// All K_{lambda,nu}(q) with chi(lambda) = sum over nu of K_{lambda,nu} P_nu,
  /// solved over dominant nu by decreasing <nu, rho>.
  std::map<WeightVec, QPolynomial> kostka_row(const WeightVec& lambda) {
    check_weight(lambda, n_);
    const auto r = rho(n_);
    GroupRingElem<Rational> rest;
    for (const auto& [v, c] : character(lambda).terms())
      if (is_dominant(v)) rest.add(v, to_rational(c));
    std::map<WeightVec, QPolynomial> out;
    while (!rest.is_zero()) {
      auto best = rest.terms().begin();
      for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
        if (pairing(it->first, r) > pairing(best->first, r)) best = it;
      const WeightVec nu = best->first;
      const RationalPolynomial c = best->second;
      const GroupRing& p = hall_littlewood(nu);
      const RationalPolynomial lead = to_rational(p.coeff(nu));
      auto [k, rem] = divmod(c, lead);
      if (!rem.is_zero()) throw std::logic_error("Kostka-Foulkes coefficient is not a polynomial");
      const QPolynomial kq = to_integer(k);
      for (const auto& x : kq.coeffs())
        if (x < 0) throw std::logic_error("negative Kostka-Foulkes coefficient");
      out[nu] = kq;
      for (const auto& [v, d] : p.terms())
        if (is_dominant(v)) rest.add(v, -(to_rational(d) * k));
    }
    return out;
  }

  QPolynomial kostka_foulkes(const WeightVec& lambda, const WeightVec& mu) {
    check_weight(mu, n_);
    const auto row = kostka_row(lambda);
    auto it = row.find(mu);
    return it == row.end() ? QPolynomial() : it->second;
  }

private:
  int n_;
  std::map<WeightVec, GroupRing> chars_;
  std::map<WeightVec, GroupRing> hl_;
};

/// Chosen once, in rank 2, from the probes (1,0), (2,0), (1,1) and (2,1).
inline RootConvention Oracle::convention() {
  static const RootConvention chosen = Oracle(2).select_convention({{1, 0}, {2, 0}, {1, 1}, {2, 1}});
  return chosen;
}

inline GroupRing hall_littlewood(const WeightVec& lambda, int n) { return Oracle(n).hall_littlewood(lambda); }

inline QPolynomial kostka_foulkes(const WeightVec& lambda, const WeightVec& mu, int n) {
  return Oracle(n).kostka_foulkes(lambda, mu);
}

/// q^{T_n(mu)} times the sum of q^{theta_n} over the row descriptors.
inline QPolynomial kostka_onerow_formula(int p, const Partition& mu, int n) {
  if (mu.size() > p) throw std::invalid_argument("|mu| exceeds p");
  QPolynomial out;
  int t = 0;
  for (int i = 0; i < mu.length(); ++i) t += i * mu[static_cast<std::size_t>(i)];
  for (const auto& s : enumerate_row_symplectic(n, p, mu)) {
    int theta = 0;
    for (int i = 1; i <= n; ++i) theta += (2 * (n - i) + 1) * s.k_of(i);
    out += QPolynomial::monomial(Integer(1), static_cast<std::size_t>(t + theta));
  }
  return out;
}

}  // namespace spcharge
