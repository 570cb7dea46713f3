#pragma once

// Characters as exact Laurent polynomials: Schur, even symplectic, and the
// odd symplectic family computed three ways (bialternant in x and z,
// Proctor's determinant in t-variables at z = 1, principal q-specialization
// through the D-type positive root system).

#include <span>
#include <string>
#include <vector>

#include "ospchar/laurent.hpp"
#include "ospchar/matrix.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/report.hpp"

namespace ospchar {

// Standard tables. The odd symplectic family lives over x1..xn, z; the
// Proctor determinant over t1..tn (t_i^2 = x_i, and z = 1).
inline VarTablePtr x_table(int n) { return VarTable::indexed("x", n); }
inline VarTablePtr osp_table(int n) { return VarTable::indexed("x", n, {"z"}); }
inline VarTablePtr t_table(int n) { return VarTable::indexed("t", n); }

// s_lambda(v_1..v_m) where vs lists variable indices into tab. Bialternant
// det(v_i^{lambda_j + m - j}) / det(v_i^{m - j}). Empty vs needs empty
// lambda and gives 1.
inline LaurentPoly schur(const Partition& lambda, std::span<const int> vs,
                         const VarTablePtr& tab) {
  int m = static_cast<int>(vs.size());
  if (lambda.length() > m)
    throw std::invalid_argument("schur: partition longer than variable list");
  if (m == 0) return LaurentPoly::one(tab);
  RingMatrix num(static_cast<std::size_t>(m), static_cast<std::size_t>(m),
                 LaurentPoly::zero(tab));
  RingMatrix den = num;
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= m; ++j) {
      num.at(i, static_cast<std::size_t>(j - 1)) =
          LaurentPoly::var(tab, vs[static_cast<std::size_t>(i)], lambda.part(j) + m - j);
      den.at(i, static_cast<std::size_t>(j - 1)) =
          LaurentPoly::var(tab, vs[static_cast<std::size_t>(i)], m - j);
    }
  return exact_div(det(num), det(den));
}

inline LaurentPoly schur(const Partition& lambda, int n) {
  VarTablePtr tab = x_table(n);
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  return schur(lambda, vs, tab);
}

// Even symplectic character sp_{2m}(lambda; v_1..v_m), bialternant
// det(v_i^{a_j} - v_i^{-a_j}) / (same at lambda = 0), a_j = lambda_j + m - j + 1.
// Empty vs needs empty lambda and gives 1 (rank-zero convention).
inline LaurentPoly sp_even(const Partition& lambda, std::span<const int> vs,
                           const VarTablePtr& tab) {
  int m = static_cast<int>(vs.size());
  if (lambda.length() > m)
    throw std::invalid_argument("sp_even: partition longer than variable list");
  if (m == 0) return LaurentPoly::one(tab);
  auto alternant = [&](const Partition& lam) {
    RingMatrix mat(static_cast<std::size_t>(m), static_cast<std::size_t>(m),
                   LaurentPoly::zero(tab));
    for (int i = 0; i < m; ++i)
      for (int j = 1; j <= m; ++j) {
        int a = lam.part(j) + m - j + 1;
        int v = vs[static_cast<std::size_t>(i)];
        mat.at(i, static_cast<std::size_t>(j - 1)) =
            LaurentPoly::var(tab, v, a) - LaurentPoly::var(tab, v, -a);
      }
    return det(mat);
  };
  return exact_div(alternant(lambda), alternant(Partition{}));
}

inline LaurentPoly sp_even(const Partition& lambda, int n) {
  VarTablePtr tab = x_table(n);
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  return sp_even(lambda, vs, tab);
}

// The (n+1) x (n+1) odd symplectic alternant over the variables xs and z:
// rows i <= n have entries
//   (v^{a+1} - v^{-(a+1)}) - z^{-1} (v^a - v^{-a}),  a = lambda_j + n - j + 1,
// and the last row is z^a. n = 0 gives the 1 x 1 matrix [z^{lambda_1}].
inline RingMatrix matrix_A(const Partition& lambda, std::span<const int> xs, int z_var,
                           const VarTablePtr& tab) {
  int n = static_cast<int>(xs.size());
  if (lambda.length() > n + 1)
    throw std::invalid_argument("matrix_A: partition length exceeds n + 1");
  RingMatrix mat(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1),
                 LaurentPoly::zero(tab));
  LaurentPoly zinv = LaurentPoly::var(tab, z_var, -1);
  for (int j = 1; j <= n + 1; ++j) {
    int a = lambda.part(j) + n - j + 1;
    for (int i = 0; i < n; ++i) {
      int v = xs[static_cast<std::size_t>(i)];
      LaurentPoly e = LaurentPoly::var(tab, v, a + 1) - LaurentPoly::var(tab, v, -(a + 1)) -
                      zinv * (LaurentPoly::var(tab, v, a) - LaurentPoly::var(tab, v, -a));
      mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = e;
    }
    mat.at(static_cast<std::size_t>(n), static_cast<std::size_t>(j - 1)) =
        LaurentPoly::var(tab, z_var, a);
  }
  return mat;
}

inline RingMatrix matrix_A(const Partition& lambda, int n) {
  VarTablePtr tab = osp_table(n);
  std::vector<int> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
  return matrix_A(lambda, xs, n, tab);
}

// Odd symplectic character Sp_{2n+1}(lambda; x1..xn; z) = det A_lambda / det A_0.
inline LaurentPoly osp_char(const Partition& lambda, std::span<const int> xs, int z_var,
                            const VarTablePtr& tab) {
  return exact_div(det(matrix_A(lambda, xs, z_var, tab)),
                   det(matrix_A(Partition{}, xs, z_var, tab)));
}

inline LaurentPoly osp_char(const Partition& lambda, int n) {
  VarTablePtr tab = osp_table(n);
  std::vector<int> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
  return osp_char(lambda, xs, n, tab);
}

// Proctor's (n+1) x (n+1) determinant in t-variables (t_i^2 = x_i, z = 1):
// rows i <= n have entries t_i^{e_j} + t_i^{-e_j} with
// e_j = 2 lambda_j + 2n - 2j + 3; the last row is all ones.
inline RingMatrix matrix_B(const Partition& lambda, std::span<const int> ts,
                           const VarTablePtr& tab) {
  int n = static_cast<int>(ts.size());
  if (lambda.length() > n + 1)
    throw std::invalid_argument("matrix_B: partition length exceeds n + 1");
  RingMatrix mat(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1),
                 LaurentPoly::zero(tab));
  for (int j = 1; j <= n + 1; ++j) {
    int e = 2 * lambda.part(j) + 2 * n - 2 * j + 3;
    for (int i = 0; i < n; ++i) {
      int v = ts[static_cast<std::size_t>(i)];
      mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) =
          LaurentPoly::var(tab, v, e) + LaurentPoly::var(tab, v, -e);
    }
    mat.at(static_cast<std::size_t>(n), static_cast<std::size_t>(j - 1)) =
        LaurentPoly::one(tab);
  }
  return mat;
}

inline RingMatrix matrix_B(const Partition& lambda, int n) {
  VarTablePtr tab = t_table(n);
  std::vector<int> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = i;
  return matrix_B(lambda, ts, tab);
}

// Sp_{2n+1}(lambda; t^2; 1) = det B_lambda / det B_0, over t1..tn.
inline LaurentPoly osp_proctor(const Partition& lambda, int n) {
  return exact_div(det(matrix_B(lambda, n)), det(matrix_B(Partition{}, n)));
}

// [m]_q in the balanced form s^{m-1} + s^{m-3} + ... + s^{-(m-1)} over the
// given variable (s plays the role of q^{1/2}).
inline LaurentPoly q_integer(int m, const VarTablePtr& tab, int s_var) {
  if (m < 1) throw std::invalid_argument("q_integer: m >= 1");
  LaurentPoly r = LaurentPoly::zero(tab);
  for (int e = -(m - 1); e <= m - 1; e += 2) r += LaurentPoly::var(tab, s_var, e);
  return r;
}

inline LaurentPoly q_integer(int m) {
  VarTablePtr tab = VarTable::create({"s"});
  return q_integer(m, tab, 0);
}

// Positive roots of D_{n+1}: eps_i +- eps_j for 1 <= i < j <= n+1, paired
// against lambda + rho with rho = (n + 1/2, n - 1/2, ..., 1/2). Pairings
// are integers; 2*rho is stored to keep arithmetic integral.
class RootDatum {
 public:
  struct Root {
    int i, j;  // 1-based, i < j
    int sign;  // +1 for eps_i + eps_j, -1 for eps_i - eps_j
  };

  explicit RootDatum(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("RootDatum: n >= 0");
    for (int i = 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        roots_.push_back({i, j, -1});
        roots_.push_back({i, j, +1});
      }
  }

  int rank() const { return n_ + 1; }
  const std::vector<Root>& positive_roots() const { return roots_; }  // n(n+1) of them

  // <lambda + rho, eps_i +- eps_j>
  long pairing(const Partition& lambda, const Root& r) const {
    long two_a = 2L * lambda.part(r.i) + two_rho(r.i);
    long two_b = 2L * lambda.part(r.j) + two_rho(r.j);
    long two_p = r.sign > 0 ? two_a + two_b : two_a - two_b;
    return two_p / 2;  // always even: the half-integer parts of rho cancel
  }

  long pairing_rho(const Root& r) const { return pairing(Partition{}, r); }

 private:
  long two_rho(int i) const { return 2L * (n_ + 1 - i) + 1; }
  int n_;
  std::vector<Root> roots_;
};

// Principal specialization Sp_{2n+1}(lambda; q^n, ..., q; 1) as a Laurent
// polynomial in q: the D_{n+1} q-Weyl-dimension product
// prod_alpha [<lambda+rho, alpha>]_q / [<rho, alpha>]_q, computed over
// s = q^{1/2} and rewritten in q (all s-exponents come out even).
inline LaurentPoly osp_principal_q(const Partition& lambda, int n) {
  if (lambda.length() > n + 1)
    throw std::invalid_argument("osp_principal_q: partition length exceeds n + 1");
  RootDatum rd(n);
  VarTablePtr s_tab = VarTable::create({"s"});
  LaurentPoly num = LaurentPoly::one(s_tab), den = num;
  for (const auto& r : rd.positive_roots()) {
    num *= q_integer(static_cast<int>(rd.pairing(lambda, r)), s_tab, 0);
    den *= q_integer(static_cast<int>(rd.pairing_rho(r)), s_tab, 0);
  }
  LaurentPoly ratio = exact_div(num, den);

  VarTablePtr q_tab = VarTable::create({"q"});
  LaurentPoly out = LaurentPoly::zero(q_tab);
  for (const auto& [m, c] : ratio.terms()) {
    int e = m.exp(0);
    if (e % 2 != 0)
      throw RingError("osp_principal_q: odd exponent in s; specialization is not in q");
    out.add_term(Monomial(std::vector<int>{e / 2}), c);
  }
  return out;
}

namespace detail {

// x_i -> t_i^2 (and z -> t_{n+1}^2 when z_to_t is set) into a t-table.
inline LaurentPoly to_t_squared(const LaurentPoly& p, int n, bool z_to_t,
                                const VarTablePtr& ttab) {
  std::vector<LaurentPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::var(ttab, i, 2));
  if (p.table()->size() == n + 1)
    images.push_back(z_to_t ? LaurentPoly::var(ttab, n, 2) : LaurentPoly::one(ttab));
  return map_vars(p, ttab, images);
}

}  // namespace detail

// det A_0 in t-variables (x_i = t_i^2, z = t_{n+1}^2) against the closed
// product over the n+1 "doubled" variables:
//   prod_i (t_i^2 - t_i^-2) * prod_{i<j} (t_i t_j - t_i^-1 t_j^-1)
//                                        (t_i t_j^-1 - t_i^-1 t_j)
// with i ranging over 1..n in the first factor and i < j <= n+1 in the rest.
inline VerificationReport osp_den_identity(int n) {
  VerificationReport rep;
  rep.check = "osp-den";
  rep.param("n", n);
  Stopwatch sw;

  VarTablePtr ttab = t_table(n + 1);
  LaurentPoly lhs = detail::to_t_squared(det(matrix_A(Partition{}, n)), n, true, ttab);

  auto T = [&](int i, int e) { return LaurentPoly::var(ttab, i, e); };
  LaurentPoly rhs = LaurentPoly::one(ttab);
  for (int i = 0; i < n; ++i) rhs *= T(i, 2) - T(i, -2);
  for (int i = 0; i < n + 1; ++i)
    for (int j = i + 1; j < n + 1; ++j)
      rhs *= (T(i, 1) * T(j, 1) - T(i, -1) * T(j, -1)) * (T(i, 1) * T(j, -1) - T(i, -1) * T(j, 1));

  if (!(lhs == rhs))
    rep.fail("det A_0 != product form in t-variables");
  else
    rep.detail = std::to_string(lhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Even symplectic denominator det(x_i^{n-j+1} - x_i^{-(n-j+1)}) against
//   prod_i (t_i^2 - t_i^-2) * prod_{i<j} (t_i t_j - t_i^-1 t_j^-1)
//                                        (t_i t_j^-1 - t_i^-1 t_j)
// in t-variables (x_i = t_i^2), i < j <= n.
inline VerificationReport sp_den_identity(int n) {
  VerificationReport rep;
  rep.check = "sp-den";
  rep.param("n", n);
  Stopwatch sw;

  VarTablePtr xtab = x_table(n);
  RingMatrix mat(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                 LaurentPoly::zero(xtab));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = n - j + 1;
      mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) =
          LaurentPoly::var(xtab, i, a) - LaurentPoly::var(xtab, i, -a);
    }

  VarTablePtr ttab = t_table(n);
  LaurentPoly lhs = detail::to_t_squared(det(mat), n, false, ttab);

  auto T = [&](int i, int e) { return LaurentPoly::var(ttab, i, e); };
  LaurentPoly rhs = LaurentPoly::one(ttab);
  for (int i = 0; i < n; ++i) rhs *= T(i, 2) - T(i, -2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rhs *= (T(i, 1) * T(j, 1) - T(i, -1) * T(j, -1)) * (T(i, 1) * T(j, -1) - T(i, -1) * T(j, 1));

  if (!(lhs == rhs))
    rep.fail("symplectic denominator != product form in t-variables");
  else
    rep.detail = std::to_string(lhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// det B_0 against prod_i (t_i - t_i^-1)(t_i^2 - t_i^-2)
//                 * prod_{i<j} (t_i t_j - t_i^-1 t_j^-1)(t_i t_j^-1 - t_i^-1 t_j).
inline VerificationReport proctor_den_identity(int n) {
  VerificationReport rep;
  rep.check = "proctor-den";
  rep.param("n", n);
  Stopwatch sw;

  VarTablePtr ttab = t_table(n);
  std::vector<int> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = i;
  LaurentPoly lhs = det(matrix_B(Partition{}, ts, ttab));

  auto T = [&](int i, int e) { return LaurentPoly::var(ttab, i, e); };
  LaurentPoly rhs = LaurentPoly::one(ttab);
  for (int i = 0; i < n; ++i) rhs *= (T(i, 1) - T(i, -1)) * (T(i, 2) - T(i, -2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rhs *= (T(i, 1) * T(j, 1) - T(i, -1) * T(j, -1)) * (T(i, 1) * T(j, -1) - T(i, -1) * T(j, 1));

  if (!(lhs == rhs))
    rep.fail("det B_0 != product form");
  else
    rep.detail = std::to_string(lhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

}  // namespace ospchar
