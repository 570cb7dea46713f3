#pragma once

// Formal power series in auxiliary variables u1..uk, truncated at a total
// u-degree cap, with Laurent-polynomial coefficients. Supplies the
// generating-function side of the character computations: the Cauchy-type
// kernel expansion and alternant coefficient extraction.

#include <map>
#include <stdexcept>
#include <vector>

#include "ospchar/laurent.hpp"
#include "ospchar/partition.hpp"

namespace ospchar {

class TruncatedSeries {
 public:
  using TermMap = std::map<std::vector<int>, LaurentPoly>;

  TruncatedSeries(VarTablePtr coeff_table, int u_count, int degree_cap)
      : ctab_(std::move(coeff_table)), u_count_(u_count), cap_(degree_cap) {
    if (u_count < 0 || degree_cap < 0)
      throw std::invalid_argument("TruncatedSeries: negative shape");
  }

  static TruncatedSeries one(VarTablePtr coeff_table, int u_count, int degree_cap) {
    TruncatedSeries s(coeff_table, u_count, degree_cap);
    s.add_term(std::vector<int>(static_cast<std::size_t>(u_count), 0),
               LaurentPoly::one(s.ctab_));
    return s;
  }

  const VarTablePtr& coeff_table() const { return ctab_; }
  int u_count() const { return u_count_; }
  int degree_cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }

  // Accumulates; exponents must be nonnegative with total degree <= cap.
  void add_term(const std::vector<int>& uexp, const LaurentPoly& c) {
    if (uexp.size() != static_cast<std::size_t>(u_count_))
      throw std::invalid_argument("TruncatedSeries: exponent count != u count");
    long deg = 0;
    for (int e : uexp) {
      if (e < 0) throw std::invalid_argument("TruncatedSeries: negative u exponent");
      deg += e;
    }
    if (deg > cap_) return;  // beyond the truncation order
    if (c.is_zero()) return;
    require_same_table(c.table(), ctab_);
    auto [it, inserted] = terms_.try_emplace(uexp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Zero polynomial when the coefficient is absent.
  LaurentPoly coeff(const std::vector<int>& uexp) const {
    auto it = terms_.find(uexp);
    return it == terms_.end() ? LaurentPoly::zero(ctab_) : it->second;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.u_count_ != b.u_count_ || a.cap_ != b.cap_)
      throw std::invalid_argument("TruncatedSeries: shape mismatch in product");
    require_same_table(a.ctab_, b.ctab_);
    TruncatedSeries r(a.ctab_, a.u_count_, a.cap_);
    std::vector<int> e(static_cast<std::size_t>(a.u_count_));
    for (const auto& [ea, ca] : a.terms_) {
      long da = 0;
      for (int x : ea) da += x;
      for (const auto& [eb, cb] : b.terms_) {
        long db = da;
        for (int x : eb) db += x;
        if (db > a.cap_) continue;
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  bool operator==(const TruncatedSeries& o) const {
    require_same_table(ctab_, o.ctab_);
    return u_count_ == o.u_count_ && cap_ == o.cap_ && terms_ == o.terms_;
  }

 private:
  VarTablePtr ctab_;
  int u_count_;
  int cap_;
  TermMap terms_;
};

// Multiplicative inverse of f = 1 - h with h of u-order >= 1, by the fixed
// point g <- 1 + h*g, exact to the cap after cap iterations.
inline TruncatedSeries series_geom_inverse(const TruncatedSeries& f) {
  std::vector<int> zero(static_cast<std::size_t>(f.u_count()), 0);
  if (!f.coeff(zero).is_one())
    throw std::invalid_argument("series_geom_inverse: constant term must be 1");
  TruncatedSeries one = TruncatedSeries::one(f.coeff_table(), f.u_count(), f.degree_cap());
  TruncatedSeries h = one;  // h = 1 - f, i.e. the order >= 1 part negated
  {
    TruncatedSeries diff(f.coeff_table(), f.u_count(), f.degree_cap());
    for (const auto& [e, c] : f.terms())
      if (e != zero) diff.add_term(e, -c);
    h = diff;
  }
  TruncatedSeries g = one;
  for (int k = 0; k < f.degree_cap(); ++k) {
    TruncatedSeries hg = h * g;
    TruncatedSeries next = one;
    for (const auto& [e, c] : hg.terms()) next.add_term(e, c);
    g = next;
  }
  return g;
}

// prod_{i<j} (u_i - u_j), as a truncated series with integer coefficients
// over the given coefficient table.
inline TruncatedSeries u_vandermonde(const VarTablePtr& ctab, int u_count, int cap) {
  TruncatedSeries v = TruncatedSeries::one(ctab, u_count, cap);
  for (int i = 0; i < u_count; ++i)
    for (int j = i + 1; j < u_count; ++j) {
      TruncatedSeries f(ctab, u_count, cap);
      std::vector<int> ei(static_cast<std::size_t>(u_count), 0), ej(ei);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      f.add_term(ei, LaurentPoly::one(ctab));
      f.add_term(ej, LaurentPoly::constant(ctab, -1));
      v = v * f;
    }
  return v;
}

// The Cauchy-type kernel in u1..u_{n+1} with coefficients over x1..xn, z:
//
//   prod_{i<j<=n+1} (1 - u_i u_j)
//   ------------------------------------------------------------------
//   prod_{i<=n, j<=n+1} (1 - x_i u_j)(1 - x_i^-1 u_j) * prod_j (1 - z u_j)
//
// expanded to total u-degree <= degree_cap. Coefficients are honest
// polynomials in z (checked).
inline TruncatedSeries cauchy_rhs(int n, int degree_cap) {
  if (n < 0) throw std::invalid_argument("cauchy_rhs: n >= 0");
  VarTablePtr tab = VarTable::indexed("x", n, {"z"});
  int k = n + 1;
  TruncatedSeries s = TruncatedSeries::one(tab, k, degree_cap);

  // one factor 1/(1 - m u_j) at a time keeps coefficient products cheap:
  // geometric-series coefficients are single monomials.
  auto mul_geom = [&](int j, const LaurentPoly& m) {
    TruncatedSeries f(tab, k, degree_cap);
    std::vector<int> zero(static_cast<std::size_t>(k), 0), ej(zero);
    ej[static_cast<std::size_t>(j)] = 1;
    f.add_term(zero, LaurentPoly::one(tab));
    f.add_term(ej, -m);
    s = s * series_geom_inverse(f);
  };

  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) {
      mul_geom(j, LaurentPoly::var(tab, i, 1));
      mul_geom(j, LaurentPoly::var(tab, i, -1));
    }
    mul_geom(j, LaurentPoly::var(tab, n, 1));  // z
  }

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      TruncatedSeries f(tab, k, degree_cap);
      std::vector<int> zero(static_cast<std::size_t>(k), 0), eij(zero);
      eij[static_cast<std::size_t>(i)] = 1;
      eij[static_cast<std::size_t>(j)] = 1;
      f.add_term(zero, LaurentPoly::one(tab));
      f.add_term(eij, LaurentPoly::constant(tab, -1));
      s = s * f;
    }

  std::vector<int> zvar{n};
  for (const auto& [e, c] : s.terms())
    if (!c.is_polynomial_in(zvar))
      throw RingError("cauchy_rhs: coefficient with negative z exponent");
  return s;
}

// Alternant extraction: multiplying the kernel by prod_{i<j}(u_i - u_j)
// isolates one character per strictly decreasing exponent vector. Returns
// the character for every lambda with length <= n+1 and
// |lambda| + n(n+1)/2 <= cap; larger lambda are not reachable at this cap.
inline std::map<Partition, LaurentPoly> extract_characters(const TruncatedSeries& s, int n) {
  if (s.u_count() != n + 1)
    throw std::invalid_argument("extract_characters: series must have n+1 u-variables");
  int k = n + 1;
  long delta = static_cast<long>(k) * (k - 1) / 2;
  std::map<Partition, LaurentPoly> out;
  if (s.degree_cap() < delta) return out;
  int wmax = static_cast<int>(s.degree_cap() - delta);

  TruncatedSeries p = s * u_vandermonde(s.coeff_table(), k, s.degree_cap());

  for (const Partition& lam : enumerate_bounded(k, wmax)) {
    if (lam.weight() > wmax) continue;
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) e.push_back(lam.part(i) + k - i);
    out.emplace(lam, p.coeff(e));
  }
  return out;
}

}  // namespace ospchar
