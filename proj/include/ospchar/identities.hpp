#pragma once

// Verifiers for the determinant identities behind the odd symplectic
// characters: the rational kernel lemma (random exact-rational trials plus
// a full symbolic case), the branching/reduction rules, the rectangle
// convolution identity, the generating-function cross-check, and the
// character symmetry properties.

#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ospchar/characters.hpp"
#include "ospchar/laurent.hpp"
#include "ospchar/matrix.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/report.hpp"
#include "ospchar/series.hpp"

namespace ospchar {

// p(x, y, z, a, b) multiplied by (1 - xy)(x - y), which clears both poles:
//   (1-xz)(1-yz)(x-y) - a (x-z)(1-yz)(1-xy) + b (1-xz)(y-z)(1-xy)
//   - ab (x-z)(y-z)(x-y).
// Works over any commutative ring type with +, -, *, and a supplied 1.
template <class T>
T p_cleared(const T& x, const T& y, const T& z, const T& a, const T& b, const T& one) {
  T xy = x * y, xz = x * z, yz = y * z;
  return (one - xz) * (one - yz) * (x - y) - a * ((x - z) * (one - yz) * (one - xy)) +
         b * ((one - xz) * (y - z) * (one - xy)) - a * b * ((x - z) * (y - z) * (x - y));
}

// The kernel entry itself, as an exact rational. Requires x != y, xy != 1.
inline mpq_class p_rational(const mpq_class& x, const mpq_class& y, const mpq_class& z,
                            const mpq_class& a, const mpq_class& b) {
  mpq_class den = (1 - x * y) * (x - y);
  if (den == 0) throw std::invalid_argument("p_rational: pole at x = y or xy = 1");
  return p_cleared<mpq_class>(x, y, z, a, b, 1) / den;
}

// (n+1) x (n+1) kernel matrix: bulk entries p(x_i, y_j, z, a_i, b_j), last
// column 1 - a_i, last row 1 - b_j, corner (1 - c)/(1 - z^2). The boundary
// layout is the one the a^I b^J expansion of det C uses (the a_i ride with
// row i, so they sit in the last column); random rational trials at n = 2
// reject the transposed layout.
inline DenseMatrix<mpq_class> matrix_C(std::span<const mpq_class> xs,
                                       std::span<const mpq_class> ys, const mpq_class& z,
                                       std::span<const mpq_class> as,
                                       std::span<const mpq_class> bs, const mpq_class& c) {
  std::size_t n = xs.size();
  if (ys.size() != n || as.size() != n || bs.size() != n)
    throw std::invalid_argument("matrix_C: length mismatch");
  mpq_class z2 = 1 - z * z;
  if (z2 == 0) throw std::invalid_argument("matrix_C: pole at z = +-1");
  DenseMatrix<mpq_class> m(n + 1, n + 1, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = p_rational(xs[i], ys[j], z, as[i], bs[j]);
    m.at(i, n) = 1 - as[i];
  }
  for (std::size_t j = 0; j < n; ++j) m.at(n, j) = 1 - bs[j];
  m.at(n, n) = (1 - c) / z2;
  return m;
}

// (2n+1) x (2n+1) companion alternant: rows 1..n are x_i^{j-1} - a_i x_i^{2n+1-j},
// rows n+1..2n the same with (y, b), the last row with (z, c).
inline DenseMatrix<mpq_class> matrix_V(std::span<const mpq_class> xs,
                                       std::span<const mpq_class> ys, const mpq_class& z,
                                       std::span<const mpq_class> as,
                                       std::span<const mpq_class> bs, const mpq_class& c) {
  std::size_t n = xs.size();
  if (ys.size() != n || as.size() != n || bs.size() != n)
    throw std::invalid_argument("matrix_V: length mismatch");
  std::size_t d = 2 * n + 1;
  DenseMatrix<mpq_class> m(d, d, mpq_class(0));
  auto qpow = [](const mpq_class& v, std::size_t e) {
    mpq_class r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= v;
    return r;
  };
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, j) = qpow(xs[i], j) - as[i] * qpow(xs[i], d - 1 - j);
      m.at(n + i, j) = qpow(ys[i], j) - bs[i] * qpow(ys[i], d - 1 - j);
    }
    m.at(d - 1, j) = qpow(z, j) - c * qpow(z, d - 1 - j);
  }
  return m;
}

namespace detail {

inline mpq_class random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-9, 9);
  int nu = 0, de = 0;
  while (nu == 0) nu = d(gen);
  while (de == 0) de = d(gen);
  mpq_class q(nu, de);
  q.canonicalize();
  return q;
}

inline std::string point_to_string(std::span<const mpq_class> xs, std::span<const mpq_class> ys,
                                   const mpq_class& z, std::span<const mpq_class> as,
                                   std::span<const mpq_class> bs, const mpq_class& c) {
  std::ostringstream o;
  auto list = [&](const char* name, std::span<const mpq_class> v) {
    o << name << "=(";
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i].get_str();
    o << ") ";
  };
  list("x", xs);
  list("y", ys);
  o << "z=" << z.get_str() << " ";
  list("a", as);
  list("b", bs);
  o << "c=" << c.get_str();
  return o.str();
}

}  // namespace detail

// Random exact-rational trials of the kernel determinant identity
//   det C = (-1)^n det V / ((1 - z^2) prod_{i,j} (x_i - y_j)(1 - x_i y_j)).
// Each trial draws x, y, z, a, b, c with numerators and denominators in
// [-9, 9] \ {0}; points with x_i = y_j, x_i y_j = 1, or z = +-1 are
// redrawn. Same seed, same points, same report.
inline VerificationReport verify_key_lemma(int n, int trials, unsigned long long seed) {
  VerificationReport rep;
  rep.check = "key-lemma";
  rep.param("n", n);
  rep.param("trials", trials);
  rep.param("seed", static_cast<long long>(seed));
  Stopwatch sw;
  if (n < 1) throw std::invalid_argument("verify_key_lemma: n >= 1");

  std::mt19937_64 gen(seed);
  std::size_t nn = static_cast<std::size_t>(n);
  for (int t = 0; t < trials; ++t) {
    std::vector<mpq_class> xs(nn), ys(nn), as(nn), bs(nn);
    mpq_class z, c;
    while (true) {
      for (auto& v : xs) v = detail::random_rational(gen);
      for (auto& v : ys) v = detail::random_rational(gen);
      z = detail::random_rational(gen);
      for (auto& v : as) v = detail::random_rational(gen);
      for (auto& v : bs) v = detail::random_rational(gen);
      c = detail::random_rational(gen);
      bool ok = z != 1 && z != -1;
      for (std::size_t i = 0; ok && i < nn; ++i)
        for (std::size_t j = 0; ok && j < nn; ++j)
          if (xs[i] == ys[j] || xs[i] * ys[j] == 1) ok = false;
      if (ok) break;
    }

    mpq_class lhs = det(matrix_C(xs, ys, z, as, bs, c));
    mpq_class scale = 1 - z * z;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) scale *= (xs[i] - ys[j]) * (1 - xs[i] * ys[j]);
    mpq_class rhs = det(matrix_V(xs, ys, z, as, bs, c)) / scale;
    if (n % 2 == 1) rhs = -rhs;

    if (lhs != rhs) {
      rep.fail("trial " + std::to_string(t) + ": " +
               detail::point_to_string(xs, ys, z, as, bs, c));
      break;
    }
  }
  if (rep.pass) rep.detail = std::to_string(trials) + "/" + std::to_string(trials) + " trials";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Full symbolic case n = 1 over variables x, y, z, a, b, c. With
// P = p_cleared(x, y, z, a, b), expanding det C by the last row turns the
// identity into the polynomial statement
//   P (1 - c) - (1 - a)(1 - b)(1 - z^2)(1 - xy)(x - y) = -det V_3.
inline VerificationReport verify_key_lemma_symbolic() {
  VerificationReport rep;
  rep.check = "key-lemma-symbolic";
  rep.param("n", 1);
  Stopwatch sw;

  VarTablePtr tab = VarTable::create({"x", "y", "z", "a", "b", "c"});
  LaurentPoly x = LaurentPoly::var(tab, 0), y = LaurentPoly::var(tab, 1),
              z = LaurentPoly::var(tab, 2), a = LaurentPoly::var(tab, 3),
              b = LaurentPoly::var(tab, 4), c = LaurentPoly::var(tab, 5);
  LaurentPoly one = LaurentPoly::one(tab);

  LaurentPoly P = p_cleared(x, y, z, a, b, one);
  LaurentPoly lhs = P * (one - c) - (one - a) * (one - b) * (one - z * z) * (one - x * y) * (x - y);

  RingMatrix v(3, 3, LaurentPoly::zero(tab));
  auto fill_row = [&](std::size_t r, const LaurentPoly& t, const LaurentPoly& w) {
    for (std::size_t j = 0; j < 3; ++j)
      v.at(r, j) = t.pow(static_cast<long>(j)) - w * t.pow(static_cast<long>(2 - j));
  };
  fill_row(0, x, a);
  fill_row(1, y, b);
  fill_row(2, z, c);

  if (!(lhs == -det(v)))
    rep.fail("symbolic n=1 kernel identity does not hold");
  else
    rep.detail = std::to_string(lhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Reduction at x_1 = 0 for the odd symplectic family: for every lambda in
// the (n+1) x r box, (x_1...x_n)^r Sp_{2n+1}(lambda) is a polynomial in the
// x's, and its value at x_1 = 0 is (x_2...x_n)^r Sp_{2n-1}(tail) when
// lambda_1 = r (tail = (lambda_2, ..., lambda_{n+1})), zero otherwise.
inline VerificationReport verify_reduction_osp(int n, int r) {
  VerificationReport rep;
  rep.check = "reduction-osp";
  rep.param("n", n);
  rep.param("r", r);
  Stopwatch sw;
  if (n < 1 || r < 0) throw std::invalid_argument("verify_reduction_osp: n >= 1, r >= 0");

  VarTablePtr tab = osp_table(n);
  std::vector<int> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
  std::vector<int> xs_rest(xs.begin() + 1, xs.end());

  std::vector<int> all_exp(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) all_exp[static_cast<std::size_t>(i)] = r;
  LaurentPoly xr = LaurentPoly::term(tab, all_exp, 1);
  std::vector<int> rest_exp(all_exp);
  rest_exp[0] = 0;
  LaurentPoly xr_rest = LaurentPoly::term(tab, rest_exp, 1);

  for (const Partition& lam : enumerate_bounded(n + 1, r)) {
    LaurentPoly g = xr * osp_char(lam, xs, n, tab);
    if (!g.is_polynomial_in(xs)) {
      rep.fail("lambda=" + lam.to_string() + ": (x1..xn)^r * character is not polynomial in x");
      break;
    }
    LaurentPoly h = substitute(g, 0, LaurentPoly::zero(tab));
    LaurentPoly expect = LaurentPoly::zero(tab);
    if (lam.part(1) == r) expect = xr_rest * osp_char(lam.tail(), xs_rest, n, tab);
    if (!(h == expect)) {
      rep.fail("lambda=" + lam.to_string() + ": value at x1=0 does not match the reduction");
      break;
    }
  }
  if (rep.pass)
    rep.detail = std::to_string(enumerate_bounded(n + 1, r).size()) + " partitions checked";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Same reduction for the even symplectic family: lambda in the n x r box,
// (x_1...x_n)^r sp_{2n}(lambda) polynomial in x, value at x_1 = 0 equal to
// (x_2...x_n)^r sp_{2n-2}(tail) when lambda_1 = r (tail = (lambda_2...lambda_n)),
// zero otherwise. Rank zero: sp of the empty partition is 1.
inline VerificationReport verify_reduction_sp(int n, int r) {
  VerificationReport rep;
  rep.check = "reduction-sp";
  rep.param("n", n);
  rep.param("r", r);
  Stopwatch sw;
  if (n < 1 || r < 0) throw std::invalid_argument("verify_reduction_sp: n >= 1, r >= 0");

  VarTablePtr tab = x_table(n);
  std::vector<int> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i;
  std::vector<int> xs_rest(xs.begin() + 1, xs.end());

  std::vector<int> all_exp(static_cast<std::size_t>(n), r);
  LaurentPoly xr = LaurentPoly::term(tab, all_exp, 1);
  std::vector<int> rest_exp(all_exp);
  rest_exp[0] = 0;
  LaurentPoly xr_rest = LaurentPoly::term(tab, rest_exp, 1);

  for (const Partition& lam : enumerate_bounded(n, r)) {
    LaurentPoly g = xr * sp_even(lam, xs, tab);
    if (!g.is_polynomial_in(xs)) {
      rep.fail("lambda=" + lam.to_string() + ": (x1..xn)^r * character is not polynomial in x");
      break;
    }
    LaurentPoly h = substitute(g, 0, LaurentPoly::zero(tab));
    LaurentPoly expect = LaurentPoly::zero(tab);
    if (lam.part(1) == r) expect = xr_rest * sp_even(lam.tail(), xs_rest, tab);
    if (!(h == expect)) {
      rep.fail("lambda=" + lam.to_string() + ": value at x1=0 does not match the reduction");
      break;
    }
  }
  if (rep.pass)
    rep.detail = std::to_string(enumerate_bounded(n, r).size()) + " partitions checked";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Rectangle convolution: over x1..xm, y1..yn, z,
//   sum_lambda z^{-r} Sp_{2m+1}(lambda; x; z) Sp_{2n+1}((r^{n-m}, lambda); y; z)
//     = sp_{2(m+n+1)}((r^{m+n+1}); x1..xm, y1..yn, z),
// the sum over lambda with length <= m+1 and lambda_1 <= r. Requires m <= n.
inline VerificationReport verify_bkw(int m, int n, int r) {
  VerificationReport rep;
  rep.check = "bkw";
  rep.param("m", m);
  rep.param("n", n);
  rep.param("r", r);
  Stopwatch sw;
  if (m < 1 || n < m || r < 0)
    throw std::invalid_argument("verify_bkw: need 1 <= m <= n, r >= 0");

  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  VarTablePtr tab = VarTable::create(names);

  std::vector<int> xs, ys, all;
  for (int i = 0; i < m; ++i) xs.push_back(i);
  for (int i = 0; i < n; ++i) ys.push_back(m + i);
  int zv = m + n;
  for (int i = 0; i <= m + n; ++i) all.push_back(i);

  LaurentPoly zmr = LaurentPoly::var(tab, zv, -r);
  LaurentPoly lhs = LaurentPoly::zero(tab);
  for (const Partition& lam : enumerate_bounded(m + 1, r)) {
    lhs += zmr * osp_char(lam, xs, zv, tab) *
           osp_char(prepend_rect(r, n - m, lam), ys, zv, tab);
  }

  LaurentPoly rhs = sp_even(Partition::rectangle(r, m + n + 1), all, tab);

  if (!(lhs == rhs))
    rep.fail("convolution sum != rectangle character");
  else
    rep.detail = std::to_string(enumerate_bounded(m + 1, r).size()) + " summands, " +
                 std::to_string(rhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Generating-function cross-check: every character reachable at the cap
// (|lambda| <= cap - n(n+1)/2, length <= n+1) extracted from the kernel
// series must equal the bialternant, as identical Laurent polynomials.
inline VerificationReport verify_osp_vs_oracle(int n, int degree_cap) {
  VerificationReport rep;
  rep.check = "oracle";
  rep.param("n", n);
  rep.param("degree", degree_cap);
  Stopwatch sw;

  TruncatedSeries s = cauchy_rhs(n, degree_cap);
  std::map<Partition, LaurentPoly> got = extract_characters(s, n);

  long delta = static_cast<long>(n + 1) * n / 2;
  long wmax = degree_cap - delta;
  std::size_t expected = 0;
  if (wmax >= 0) {
    for (const Partition& lam : enumerate_bounded(n + 1, static_cast<int>(wmax))) {
      if (lam.weight() > wmax) continue;
      ++expected;
      auto it = got.find(lam);
      if (it == got.end()) {
        rep.fail("lambda=" + lam.to_string() + " missing from the series extraction");
        break;
      }
      if (!(it->second == osp_char(lam, n))) {
        rep.fail("lambda=" + lam.to_string() + ": series coefficient != bialternant");
        break;
      }
    }
  }
  if (rep.pass)
    rep.detail = std::to_string(expected) + " characters agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// osp_char at z = 1 in t-variables (x_i = t_i^2) against Proctor's
// determinant ratio, for every lambda with |lambda| <= max_weight.
inline VerificationReport verify_proctor_z1(int n, int max_weight) {
  VerificationReport rep;
  rep.check = "proctor-z1";
  rep.param("n", n);
  rep.param("max_weight", max_weight);
  Stopwatch sw;

  VarTablePtr ttab = t_table(n);
  std::size_t count = 0;
  for (const Partition& lam : enumerate_bounded(n + 1, max_weight)) {
    if (lam.weight() > max_weight) continue;
    ++count;
    LaurentPoly lhs = detail::to_t_squared(osp_char(lam, n), n, false, ttab);
    if (!(lhs == osp_proctor(lam, n))) {
      rep.fail("lambda=" + lam.to_string() + ": z=1 character != Proctor determinant ratio");
      break;
    }
  }
  if (rep.pass) rep.detail = std::to_string(count) + " characters agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// osp_char specialized along the principal direction against the q-product:
// compare osp_principal_q with Proctor's ratio at t_i = s^{n-i+1}, both in s.
inline VerificationReport verify_principal_q(int n, int max_weight) {
  VerificationReport rep;
  rep.check = "principal-q";
  rep.param("n", n);
  rep.param("max_weight", max_weight);
  Stopwatch sw;

  VarTablePtr s_tab = VarTable::create({"s"});
  std::size_t count = 0;
  for (const Partition& lam : enumerate_bounded(n + 1, max_weight)) {
    if (lam.weight() > max_weight) continue;
    ++count;
    LaurentPoly lhs_q = osp_principal_q(lam, n);
    // q -> s^2
    std::vector<LaurentPoly> q_img{LaurentPoly::var(s_tab, 0, 2)};
    LaurentPoly lhs = map_vars(lhs_q, s_tab, q_img);

    LaurentPoly pr = osp_proctor(lam, n);
    std::vector<LaurentPoly> t_img;
    for (int i = 1; i <= n; ++i) t_img.push_back(LaurentPoly::var(s_tab, 0, n - i + 1));
    LaurentPoly rhs = map_vars(pr, s_tab, t_img);

    if (!(lhs == rhs)) {
      rep.fail("lambda=" + lam.to_string() + ": q-product != principal specialization");
      break;
    }
  }
  if (rep.pass) rep.detail = std::to_string(count) + " characters agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Character symmetry properties on a weight grid: osp_char is a polynomial
// in z, invariant under x_i -> x_i^-1 and under permutations of the x's;
// sp_even shares both x-symmetries; schur is symmetric in its variables.
inline VerificationReport verify_character_symmetries(int n, int max_weight) {
  VerificationReport rep;
  rep.check = "symmetries";
  rep.param("n", n);
  rep.param("max_weight", max_weight);
  Stopwatch sw;

  VarTablePtr tab = osp_table(n);
  VarTablePtr xtab = x_table(n);
  std::vector<int> zvar{n};

  auto swapped_images = [](const VarTablePtr& t, int i, int j) {
    std::vector<LaurentPoly> img;
    for (int v = 0; v < t->size(); ++v)
      img.push_back(LaurentPoly::var(t, v == i ? j : (v == j ? i : v)));
    return img;
  };
  auto inverted_images = [](const VarTablePtr& t, int i) {
    std::vector<LaurentPoly> img;
    for (int v = 0; v < t->size(); ++v) img.push_back(LaurentPoly::var(t, v, v == i ? -1 : 1));
    return img;
  };

  for (const Partition& lam : enumerate_bounded(n + 1, max_weight)) {
    if (lam.weight() > max_weight) continue;
    LaurentPoly f = osp_char(lam, n);
    if (!f.is_polynomial_in(zvar)) {
      rep.fail("lambda=" + lam.to_string() + ": negative z exponent in osp character");
      break;
    }
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      auto img = inverted_images(tab, i);
      if (!(map_vars(f, tab, img) == f)) {
        rep.fail("lambda=" + lam.to_string() + ": osp character not invariant under x" +
                 std::to_string(i + 1) + " inversion");
        ok = false;
      }
    }
    for (int i = 0; ok && i + 1 < n; ++i) {
      auto img = swapped_images(tab, i, i + 1);
      if (!(map_vars(f, tab, img) == f)) {
        rep.fail("lambda=" + lam.to_string() + ": osp character not symmetric in x" +
                 std::to_string(i + 1) + ", x" + std::to_string(i + 2));
        ok = false;
      }
    }
    if (!ok) break;

    if (lam.length() <= n) {
      LaurentPoly g = sp_even(lam, n);
      for (int i = 0; ok && i < n; ++i) {
        auto img = inverted_images(xtab, i);
        if (!(map_vars(g, xtab, img) == g)) {
          rep.fail("lambda=" + lam.to_string() + ": sp character not invariant under x" +
                   std::to_string(i + 1) + " inversion");
          ok = false;
        }
      }
      LaurentPoly h = schur(lam, n);
      for (int i = 0; ok && i + 1 < n; ++i) {
        auto img = swapped_images(xtab, i, i + 1);
        if (!(map_vars(h, xtab, img) == h)) {
          rep.fail("lambda=" + lam.to_string() + ": schur polynomial not symmetric");
          ok = false;
        }
      }
    }
    if (!ok) break;
  }
  if (rep.pass) rep.detail = "all symmetry properties hold";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Fixed spot values, each built term by term and compared structurally:
// the defining n = 1 character, a two-variable Schur polynomial, and the
// principal specialization at the smallest nontrivial shape.
inline VerificationReport verify_spot_values() {
  VerificationReport rep;
  rep.check = "spot";
  Stopwatch sw;

  {
    VarTablePtr tab = osp_table(1);
    LaurentPoly expect = LaurentPoly::var(tab, 0, 1) + LaurentPoly::var(tab, 0, -1) +
                         LaurentPoly::var(tab, 1, 1);
    if (!(osp_char(Partition(std::vector<int>{1}), 1) == expect))
      rep.fail("Sp_3((1); x; z) != x + x^-1 + z");
  }
  {
    VarTablePtr tab = x_table(2);
    LaurentPoly expect = LaurentPoly::term(tab, {2, 1}, 1) + LaurentPoly::term(tab, {1, 2}, 1);
    if (!(schur(Partition(std::vector<int>{2, 1}), 2) == expect))
      rep.fail("s_(2,1)(x1, x2) != x1^2 x2 + x1 x2^2");
  }
  {
    VarTablePtr tab = VarTable::create({"q"});
    LaurentPoly expect = LaurentPoly::var(tab, 0, 1) + LaurentPoly::one(tab) +
                         LaurentPoly::var(tab, 0, -1);
    if (!(osp_principal_q(Partition(std::vector<int>{1}), 1) == expect))
      rep.fail("[3]_q != q + 1 + q^-1");
  }

  if (rep.pass) rep.detail = "3 spot values agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

// Cauchy-Binet over random integer matrices (values in [-4, 4]), shapes up
// to 4 x 7, plus the fixed worked example X = Y = [[1,0,1],[0,1,1]] whose
// minor squares sum to 3. Same seed, same matrices, same report.
inline VerificationReport verify_cauchy_binet(int trials, unsigned long long seed) {
  VerificationReport rep;
  rep.check = "cauchy-binet";
  rep.param("trials", trials);
  rep.param("seed", static_cast<long long>(seed));
  Stopwatch sw;

  VarTablePtr tab = VarTable::create({});
  auto c = [&](long v) { return LaurentPoly::constant(tab, v); };

  {
    RingMatrix x(2, 3, c(0));
    x.at(0, 0) = c(1);
    x.at(0, 2) = c(1);
    x.at(1, 1) = c(1);
    x.at(1, 2) = c(1);
    auto [lhs, rhs] = cauchy_binet_sum(x, x);
    if (!(lhs == rhs) || !(lhs == c(3))) rep.fail("worked 2x3 example does not sum to 3");
  }

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dim_m(1, 4), entry(-4, 4);
  for (int t = 0; rep.pass && t < trials; ++t) {
    int mm = dim_m(gen);
    std::uniform_int_distribution<int> dim_n(mm, 7);
    int nn = dim_n(gen);
    RingMatrix x(static_cast<std::size_t>(mm), static_cast<std::size_t>(nn), c(0));
    RingMatrix y = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        x.at(i, j) = c(entry(gen));
        y.at(i, j) = c(entry(gen));
      }
    auto [lhs, rhs] = cauchy_binet_sum(x, y);
    if (!(lhs == rhs))
      rep.fail("trial " + std::to_string(t) + ": minor sum != det(X Y^T) at shape " +
               std::to_string(mm) + "x" + std::to_string(nn));
  }
  if (rep.pass) rep.detail = std::to_string(trials) + " random shapes agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

}  // namespace ospchar
