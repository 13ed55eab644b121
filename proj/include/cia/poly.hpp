#ifndef CIA_POLY_HPP
#define CIA_POLY_HPP

// Sparse multivariate polynomials over K[P], P the d x kl matrix of
// indeterminates p_{x,y}.
//
// Variable order: p_{u,i} > p_{v,m} iff u < v, or u = v and i < m. Variables
// are numbered row-major, index = aux + (row-1)*kl + (col-1), so a smaller
// index is a greater variable. Rings used for elimination carry `aux` extra
// variables t_1 > ... > t_aux that sit above every p_{x,y}. Monomials compare
// lexicographically with respect to this order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cia/errors.hpp"
#include "cia/field.hpp"

namespace cia {

struct VariableId {
  int row = 1;
  int col = 1;
  friend bool operator==(const VariableId&, const VariableId&) = default;
};

struct Ring {
  int d = 1;    // rows of P
  int kl = 1;   // columns of P
  int aux = 0;  // elimination variables, all greater than the p's

  int nvars() const { return aux + d * kl; }
  int index(VariableId v) const;           // throws BoundsError
  VariableId variable(int index) const;    // throws BoundsError for aux indices
  bool is_aux(int index) const { return index < aux; }
  std::string variable_name(int index) const;
  Ring with_aux(int extra) const { return {d, kl, aux + extra}; }

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Ordering of two variables: `greater` means u is the greater variable.
std::strong_ordering var_cmp(const Ring& ring, VariableId u, VariableId v);

class Monomial {
 public:
  struct Factor {
    std::uint16_t var;
    std::uint16_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;  // the monomial 1
  explicit Monomial(std::vector<Factor> factors);  // merges and drops zero exponents
  static Monomial variable(int var, int exp = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  std::uint64_t support_mask() const { return mask_; }
  int exponent(int var) const;
  bool is_squarefree() const;
  /// Variable indices with positive exponent, ascending.
  std::vector<int> support() const;

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Lex comparison, first differing exponent (in decreasing variable order) decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  std::string to_string(const Ring& ring) const;

 private:
  void finish();

  std::vector<Factor> factors_;  // ascending var index, exp > 0
  std::uint64_t mask_ = 0;
  int degree_ = 0;
};

/// The term-order comparison of two monomials of the same ring.
inline std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) { return a <=> b; }

template <class K>
struct Term {
  K coeff;
  Monomial mono;
};

template <class K>
class Polynomial {
 public:
  using Scalar = K;

  Polynomial() = default;
  Polynomial(Ring ring, FieldDesc field) : ring_(ring), field_(field) {}

  static Polynomial constant(Ring ring, FieldDesc field, const K& c);
  static Polynomial constant(Ring ring, FieldDesc field, long c) {
    return constant(ring, field, K::from(c, field));
  }
  static Polynomial variable(Ring ring, FieldDesc field, VariableId v);
  static Polynomial variable_at(Ring ring, FieldDesc field, int index);
  static Polynomial monomial(Ring ring, FieldDesc field, const K& c, Monomial m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, FieldDesc field, std::vector<Term<K>> terms);

  const Ring& ring() const { return ring_; }
  const FieldDesc& field() const { return field_; }
  std::span<const Term<K>> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  int total_degree() const;

  const Term<K>& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const K& leading_coeff() const { return leading_term().coeff; }

  K one() const { return K::from(1, field_); }
  K zero() const { return K::from(0, field_); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.combine(g, -g.one()); }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) { return f.mul(g); }

  Polynomial scale(const K& c) const;
  Polynomial mul_term(const K& c, const Monomial& m) const;
  /// this + c*m*g in one merge pass.
  Polynomial add_mul(const K& c, const Monomial& m, const Polynomial& g) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  Polynomial mul(const Polynomial& g) const;

  /// Value at a point given as one scalar per variable index.
  K evaluate(std::span<const K> point) const;

  /// Same polynomial viewed in another ring via an index map (old -> new).
  Polynomial remap(Ring target, std::span<const int> index_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ || f.field_ != g.field_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].coeff == g.terms_[i].coeff) || !(f.terms_[i].mono == g.terms_[i].mono)) return false;
    return true;
  }

 private:
  void check_compatible(const Polynomial& g) const;
  Polynomial combine(const Polynomial& g, const K& c) const { return add_mul(c, Monomial(), g); }

  Ring ring_;
  FieldDesc field_;
  std::vector<Term<K>> terms_;  // strictly decreasing monomials, nonzero coefficients
};

/// Coefficient-wise image of a rational polynomial in GF(p).
Polynomial<ModP> reduce_mod(const Polynomial<Rational>& f, const FieldDesc& field);

/// Total lex comparison of two polynomials (monomials first, then coefficient
/// strings); gives a canonical order for generator lists.
template <class K>
bool poly_less(const Polynomial<K>& f, const Polynomial<K>& g);

// ------------------------------------------------------------------ inline

template <class K>
Polynomial<K> Polynomial<K>::constant(Ring ring, FieldDesc field, const K& c) {
  Polynomial f(ring, field);
  if (!c.is_zero()) f.terms_.push_back({c, Monomial()});
  return f;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(Ring ring, FieldDesc field, VariableId v) {
  return variable_at(ring, field, ring.index(v));
}

template <class K>
Polynomial<K> Polynomial<K>::variable_at(Ring ring, FieldDesc field, int index) {
  if (index < 0 || index >= ring.nvars()) throw BoundsError("variable index " + std::to_string(index) + " out of range");
  Polynomial f(ring, field);
  f.terms_.push_back({K::from(1, field), Monomial::variable(index)});
  return f;
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(Ring ring, FieldDesc field, const K& c, Monomial m) {
  Polynomial f(ring, field);
  if (!c.is_zero()) f.terms_.push_back({c, std::move(m)});
  return f;
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(Ring ring, FieldDesc field, std::vector<Term<K>> terms) {
  Polynomial f(ring, field);
  std::sort(terms.begin(), terms.end(), [](const Term<K>& a, const Term<K>& b) { return a.mono > b.mono; });
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
      if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      f.terms_.push_back(std::move(t));
    }
  }
  for (const auto& t : f.terms_)
    for (const auto& fac : t.mono.factors())
      if (fac.var >= ring.nvars()) throw BoundsError("variable index " + std::to_string(fac.var) + " out of range");
  return f;
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <class K>
int Polynomial<K>::total_degree() const {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.degree());
  return deg;
}

template <class K>
const Term<K>& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

template <class K>
void Polynomial<K>::check_compatible(const Polynomial& g) const {
  if (ring_ != g.ring_) throw IncompatibleError("polynomials live in different rings");
  if (field_ != g.field_) throw IncompatibleError("polynomials over " + field_.name() + " and " + g.field_.name());
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& g) {
  return *this = add_mul(one(), Monomial(), g);
}

template <class K>
Polynomial<K> Polynomial<K>::scale(const K& c) const {
  if (c.is_zero()) return Polynomial(ring_, field_);
  Polynomial f = *this;
  for (auto& t : f.terms_) t.coeff *= c;
  return f;
}

template <class K>
Polynomial<K> Polynomial<K>::mul_term(const K& c, const Monomial& m) const {
  Polynomial f(ring_, field_);
  if (c.is_zero()) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.coeff * c, t.mono * m});
  return f;
}

template <class K>
Polynomial<K> Polynomial<K>::add_mul(const K& c, const Monomial& m, const Polynomial& g) const {
  check_compatible(g);
  if (c.is_zero() || g.is_zero()) return *this;
  Polynomial out(ring_, field_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have_gm) {
      gm = g.terms_[j].mono * m;
      have_gm = true;
    }
    if (j >= g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i >= terms_.size()) {
      out.terms_.push_back({g.terms_[j].coeff * c, std::move(gm)});
      ++j;
      have_gm = false;
      continue;
    }
    auto cmp = terms_[i].mono <=> gm;
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({g.terms_[j].coeff * c, std::move(gm)});
      ++j;
      have_gm = false;
    } else {
      K s = terms_[i].coeff + g.terms_[j].coeff * c;
      if (!s.is_zero()) out.terms_.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  if (leading_coeff().is_one()) return *this;
  return scale(leading_coeff().inverse());
}

template <class K>
Polynomial<K> Polynomial<K>::mul(const Polynomial& g) const {
  check_compatible(g);
  std::vector<Term<K>> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return from_terms(ring_, field_, std::move(prod));
}

template <class K>
K Polynomial<K>::evaluate(std::span<const K> point) const {
  if (static_cast<int>(point.size()) != ring_.nvars())
    throw IncompatibleError("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                            std::to_string(ring_.nvars()) + " variables");
  K sum = zero();
  for (const auto& t : terms_) {
    K v = t.coeff;
    for (const auto& f : t.mono.factors())
      for (int e = 0; e < f.exp; ++e) v *= point[f.var];
    sum += v;
  }
  return sum;
}

template <class K>
Polynomial<K> Polynomial<K>::remap(Ring target, std::span<const int> index_map) const {
  std::vector<Term<K>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : t.mono.factors()) {
      int to = index_map[f.var];
      if (to < 0) throw InvalidArgument("remap drops a variable that occurs in the polynomial");
      fs.push_back({static_cast<std::uint16_t>(to), f.exp});
    }
    out.push_back({t.coeff, Monomial(std::move(fs))});
  }
  return from_terms(target, field_, std::move(out));
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string c = terms_[i].coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (terms_[i].mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += terms_[i].mono.to_string(ring_);
    }
  }
  return s;
}

template <class K>
bool poly_less(const Polynomial<K>& f, const Polynomial<K>& g) {
  auto a = f.terms(), b = g.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = a[i].mono <=> b[i].mono;
    if (c != 0) return c > 0;
    std::string x = a[i].coeff.to_string(), y = b[i].coeff.to_string();
    if (x != y) return x < y;
  }
  return a.size() > b.size();
}

}  // namespace cia

#endif  // CIA_POLY_HPP
