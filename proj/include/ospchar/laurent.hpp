#pragma once

// Exact multivariate Laurent polynomials: arbitrary-precision integer
// coefficients, exponent vectors over a fixed shared variable table.
// Terms live in a std::map under graded lexicographic order, so structural
// equality is map equality and rendering order is canonical.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ospchar {

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Operands built over different variable tables.
struct VarTableMismatchError : RingError {
  using RingError::RingError;
};
// exact_div asked for a quotient that does not exist in the ring.
struct NotDivisibleError : RingError {
  using RingError::RingError;
};
// Inversion of something that is not a unit (units are +-monomials).
struct NotInvertibleError : RingError {
  using RingError::RingError;
};
// A negative exponent met a substitution value that cannot be inverted
// (for example x -> 0, or evaluation at 0).
struct NegativeExponentError : RingError {
  using RingError::RingError;
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Immutable ordered list of variable names. Polynomials hold a shared
// pointer; tables with equal name lists are interchangeable.
class VarTable {
 public:
  static VarTablePtr create(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw std::invalid_argument("VarTable: empty name");
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("VarTable: duplicate name " + names[i]);
    }
    return VarTablePtr(new VarTable(std::move(names)));
  }

  // prefix1..prefixN, then the extra names.
  static VarTablePtr indexed(const std::string& prefix, int count,
                             std::vector<std::string> extra = {}) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count) + extra.size());
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    for (auto& e : extra) names.push_back(std::move(e));
    return create(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  // -1 if absent.
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool same(const VarTable& o) const { return names_ == o.names_; }

 private:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return;
  if (a && b && a->same(*b)) return;
  throw VarTableMismatchError("operands use different variable tables");
}

// Exponent vector; length equals the table size of the owning polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  const std::vector<int>& exps() const { return exps_; }
  int exp(int v) const { return exps_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return exps_.size(); }

  long total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0L);
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

// Graded lexicographic: total degree first, then exponent vector.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exps() < b.exps();
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexLess>;

  LaurentPoly() = default;  // detached; assign before use

  static LaurentPoly zero(VarTablePtr t) { return LaurentPoly(std::move(t)); }

  static LaurentPoly constant(VarTablePtr t, mpz_class c) {
    LaurentPoly p(std::move(t));
    if (c != 0)
      p.terms_.emplace(Monomial(std::vector<int>(static_cast<std::size_t>(p.table_->size()), 0)),
                       std::move(c));
    return p;
  }

  static LaurentPoly one(VarTablePtr t) { return constant(std::move(t), 1); }

  static LaurentPoly term(VarTablePtr t, std::vector<int> exps, mpz_class c) {
    LaurentPoly p(std::move(t));
    if (exps.size() != static_cast<std::size_t>(p.table_->size()))
      throw std::invalid_argument("LaurentPoly::term: exponent count != table size");
    if (c != 0) p.terms_.emplace(Monomial(std::move(exps)), std::move(c));
    return p;
  }

  // v^power for table variable index v.
  static LaurentPoly var(VarTablePtr t, int v, int power = 1) {
    if (v < 0 || v >= t->size())
      throw std::invalid_argument("LaurentPoly::var: index out of range");
    std::vector<int> e(static_cast<std::size_t>(t->size()), 0);
    e[static_cast<std::size_t>(v)] = power;
    return term(std::move(t), std::move(e), 1);
  }

  const VarTablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first.total_degree() == 0 &&
           terms_.begin()->first == zero_monomial();
  }

  // Units of the Laurent ring: single term with coefficient +-1.
  bool is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  mpz_class coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(Monomial(exps));
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  bool operator==(const LaurentPoly& o) const {
    require_same_table(table_, o.table_);
    return terms_ == o.terms_;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_table(a.table_, b.table_);
    LaurentPoly r(a.table_);
    std::vector<int> e(static_cast<std::size_t>(a.table_->size()));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v)
          e[v] = ma.exps()[v] + mb.exps()[v];
        r.add_term(Monomial(e), ca * cb);
      }
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const mpz_class& k) {
    LaurentPoly r(a.table_);
    if (k == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
  }
  friend LaurentPoly operator*(const mpz_class& k, const LaurentPoly& a) { return a * k; }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // k >= 0 by binary powering; k < 0 only for unit monomials.
  LaurentPoly pow(long k) const {
    if (k < 0) {
      if (!is_unit_monomial())
        throw NotInvertibleError("pow: negative power of a non-unit");
      const auto& [m, c] = *terms_.begin();
      std::vector<int> e(m.exps());
      for (auto& x : e) x = static_cast<int>(x * k);
      mpz_class rc = (c == 1 || (-k) % 2 == 0) ? mpz_class(1) : mpz_class(-1);
      return term(table_, std::move(e), rc);
    }
    LaurentPoly acc = one(table_);
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return acc;
  }

  // (min exponent, max exponent) of variable v over all terms; (0,0) if zero.
  std::pair<int, int> exponent_range(int v) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first.exp(v), hi = lo;
    for (const auto& [m, c] : terms_) {
      lo = std::min(lo, m.exp(v));
      hi = std::max(hi, m.exp(v));
    }
    return {lo, hi};
  }

  // No negative exponents in any of the given variables.
  bool is_polynomial_in(std::span<const int> vars) const {
    for (const auto& [m, c] : terms_)
      for (int v : vars)
        if (m.exp(v) < 0) return false;
    return true;
  }

  // Canonical text: terms in descending graded-lex order, factors joined by
  // '*', exponents as ^k (k may be negative), e.g. "x1^2*z^-1 - 3*x2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c < 0;
      mpz_class a = neg ? mpz_class(-c) : c;
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      std::string factors;
      for (int v = 0; v < table_->size(); ++v) {
        int e = m.exp(v);
        if (e == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += table_->name(v);
        if (e != 1) factors += "^" + std::to_string(e);
      }
      if (factors.empty()) {
        out << a.get_str();
      } else {
        if (a != 1) out << a.get_str() << "*";
        out << factors;
      }
    }
    return out.str();
  }

  // Leading term under graded lex; requires nonzero.
  const std::pair<const Monomial, mpz_class>& leading_term() const {
    if (terms_.empty()) throw RingError("leading_term of zero");
    return *terms_.rbegin();
  }

  void add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  explicit LaurentPoly(VarTablePtr t) : table_(std::move(t)) {}

  Monomial zero_monomial() const {
    return Monomial(std::vector<int>(static_cast<std::size_t>(table_->size()), 0));
  }

  VarTablePtr table_;
  TermMap terms_;
};

namespace detail {

// Multiply every term by the monomial with exponent vector `shift`.
inline LaurentPoly shift_exponents(const LaurentPoly& p, const std::vector<int>& shift) {
  LaurentPoly r = LaurentPoly::zero(p.table());
  std::vector<int> e(shift.size());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = m.exps()[v] + shift[v];
    r.add_term(Monomial(e), c);
  }
  return r;
}

inline std::vector<int> min_exponents(const LaurentPoly& p) {
  std::size_t nv = static_cast<std::size_t>(p.table()->size());
  std::vector<int> lo(nv, 0);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < nv; ++v)
      lo[v] = first ? m.exps()[v] : std::min(lo[v], m.exps()[v]);
    first = false;
  }
  return lo;
}

}  // namespace detail

// Exact quotient num/den; throws NotDivisibleError when den does not divide
// num in the Laurent ring. Method: per-variable minimum exponents are
// additive over products, so shifting num and den to honest polynomials
// preserves (non)divisibility; then greedy leading-term division in graded
// lex succeeds iff the polynomial quotient exists.
inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_table(num.table(), den.table());
  if (den.is_zero()) throw RingError("exact_div: division by zero");
  if (num.is_zero()) return LaurentPoly::zero(num.table());

  std::vector<int> lo_n = detail::min_exponents(num);
  std::vector<int> lo_d = detail::min_exponents(den);
  std::vector<int> neg_n(lo_n), result_shift(lo_n);
  for (std::size_t v = 0; v < lo_n.size(); ++v) {
    neg_n[v] = -lo_n[v];
    result_shift[v] = lo_n[v] - lo_d[v];
  }
  std::vector<int> neg_d(lo_d);
  for (auto& x : neg_d) x = -x;

  LaurentPoly a = detail::shift_exponents(num, neg_n);
  LaurentPoly b = detail::shift_exponents(den, neg_d);

  LaurentPoly q = LaurentPoly::zero(num.table());
  const auto& [lm_b, lc_b] = b.leading_term();
  std::vector<int> e(lo_n.size());
  while (!a.is_zero()) {
    const auto& [lm_a, lc_a] = a.leading_term();
    for (std::size_t v = 0; v < e.size(); ++v) {
      e[v] = lm_a.exps()[v] - lm_b.exps()[v];
      if (e[v] < 0) throw NotDivisibleError("exact_div: not divisible");
    }
    if (!mpz_divisible_p(lc_a.get_mpz_t(), lc_b.get_mpz_t()))
      throw NotDivisibleError("exact_div: not divisible");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), lc_a.get_mpz_t(), lc_b.get_mpz_t());
    LaurentPoly t = LaurentPoly::term(num.table(), e, qc);
    q += t;
    a -= t * b;
  }
  return detail::shift_exponents(q, result_shift);
}

// Ring homomorphism determined by variable images: variable i of p's table
// maps to images[i], a polynomial over `target`. Negative exponents require
// the image to be a unit monomial (so x -> 0 kills positive powers but makes
// x^-1 an error).
inline LaurentPoly map_vars(const LaurentPoly& p, const VarTablePtr& target,
                            std::span<const LaurentPoly> images) {
  int nv = p.table()->size();
  if (images.size() != static_cast<std::size_t>(nv))
    throw std::invalid_argument("map_vars: one image per variable required");
  for (const auto& img : images) require_same_table(img.table(), target);

  LaurentPoly r = LaurentPoly::zero(target);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (int v = 0; v < nv && !t.is_zero(); ++v) {
      int e = m.exp(v);
      if (e == 0) continue;
      const LaurentPoly& img = images[static_cast<std::size_t>(v)];
      if (e < 0 && !img.is_unit_monomial())
        throw NegativeExponentError("map_vars: negative exponent of variable " +
                                    p.table()->name(v) + " with non-unit image");
      t *= img.pow(e);
    }
    r += t;
  }
  return r;
}

// Substitute one variable by a value over the same table; all other
// variables map to themselves.
inline LaurentPoly substitute(const LaurentPoly& p, int v, const LaurentPoly& value) {
  require_same_table(p.table(), value.table());
  int nv = p.table()->size();
  if (v < 0 || v >= nv) throw std::invalid_argument("substitute: index out of range");
  std::vector<LaurentPoly> images;
  images.reserve(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i)
    images.push_back(i == v ? value : LaurentPoly::var(p.table(), i));
  return map_vars(p, p.table(), images);
}

// Exact evaluation at a rational point (one value per table variable).
// Negative exponents at a zero coordinate raise NegativeExponentError.
inline mpq_class eval_rational(const LaurentPoly& p, std::span<const mpq_class> point) {
  int nv = p.table()->size();
  if (point.size() != static_cast<std::size_t>(nv))
    throw std::invalid_argument("eval_rational: one value per variable required");
  mpq_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t(c);
    for (int v = 0; v < nv; ++v) {
      int e = m.exp(v);
      if (e == 0) continue;
      const mpq_class& x = point[static_cast<std::size_t>(v)];
      if (x == 0) {
        if (e < 0) throw NegativeExponentError("eval_rational: zero at negative power");
        t = 0;
        break;
      }
      mpz_class pn, pd;
      mpz_pow_ui(pn.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(pd.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      mpq_class px = e > 0 ? mpq_class(pn) / mpq_class(pd) : mpq_class(pd) / mpq_class(pn);
      t *= px;
    }
    sum += t;
  }
  return sum;
}

}  // namespace ospchar
