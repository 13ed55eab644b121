#include "cia/poly.hpp"

#include <functional>

namespace cia {

int Ring::index(VariableId v) const {
  if (v.row < 1 || v.row > d || v.col < 1 || v.col > kl)
    throw BoundsError("variable p_{" + std::to_string(v.row) + "," + std::to_string(v.col) + "} outside the " +
                      std::to_string(d) + "x" + std::to_string(kl) + " matrix");
  return aux + (v.row - 1) * kl + (v.col - 1);
}

VariableId Ring::variable(int idx) const {
  if (idx < aux || idx >= nvars()) throw BoundsError("variable index " + std::to_string(idx) + " is not a matrix entry");
  idx -= aux;
  return {idx / kl + 1, idx % kl + 1};
}

std::string Ring::variable_name(int idx) const {
  if (idx < aux) return "t" + std::to_string(idx + 1);
  VariableId v = variable(idx);
  return "p" + std::to_string(v.row) + "_" + std::to_string(v.col);
}

std::strong_ordering var_cmp(const Ring& ring, VariableId u, VariableId v) {
  // the smaller index is the greater variable
  return ring.index(v) <=> ring.index(u);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](Factor a, Factor b) { return a.var < b.var; });
  for (auto f : factors) {
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exp = static_cast<std::uint16_t>(factors_.back().exp + f.exp);
    else
      factors_.push_back(f);
  }
  finish();
}

Monomial Monomial::variable(int var, int exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({static_cast<std::uint16_t>(var), static_cast<std::uint16_t>(exp)});
  m.finish();
  return m;
}

void Monomial::finish() {
  mask_ = 0;
  degree_ = 0;
  for (auto f : factors_) {
    mask_ |= std::uint64_t{1} << (f.var % 64);
    degree_ += f.exp;
  }
}

int Monomial::exponent(int var) const {
  for (auto f : factors_)
    if (f.var == var) return f.exp;
  return 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](Factor f) { return f.exp == 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  s.reserve(factors_.size());
  for (auto f : factors_) s.push_back(f.var);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  if (degree_ > m.degree_ || (mask_ & ~m.mask_) != 0) return false;
  std::size_t j = 0;
  for (auto f : factors_) {
    while (j < m.factors_.size() && m.factors_[j].var < f.var) ++j;
    if (j == m.factors_.size() || m.factors_[j].var != f.var || m.factors_[j].exp < f.exp) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  if ((mask_ & m.mask_) == 0) return true;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < m.factors_.size()) {
    if (factors_[i].var == m.factors_[j].var) return false;
    if (factors_[i].var < m.factors_[j].var) ++i; else ++j;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      r.factors_.push_back({a.factors_[i].var, static_cast<std::uint16_t>(a.factors_[i].exp + b.factors_[j].exp)});
      ++i;
      ++j;
    }
  }
  r.finish();
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InvalidArgument("monomial quotient is not exact");
  Monomial r;
  std::size_t j = 0;
  for (auto f : a.factors_) {
    if (j < b.factors_.size() && b.factors_[j].var == f.var) {
      int e = f.exp - b.factors_[j].exp;
      ++j;
      if (e > 0) r.factors_.push_back({f.var, static_cast<std::uint16_t>(e)});
    } else {
      r.factors_.push_back(f);
    }
  }
  r.finish();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      r.factors_.push_back({a.factors_[i].var, std::max(a.factors_[i].exp, b.factors_[j].exp)});
      ++i;
      ++j;
    }
  }
  r.finish();
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto fa = a.factors_[i], fb = b.factors_[i];
    // a variable present in only one monomial is greater than everything after it
    if (fa.var != fb.var) return fa.var < fb.var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (fa.exp != fb.exp) return fa.exp <=> fb.exp;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto f : factors_) {
    h ^= (std::size_t{f.var} << 16) | f.exp;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto f : factors_) {
    if (!s.empty()) s += "*";
    s += ring.variable_name(f.var);
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

Polynomial<ModP> reduce_mod(const Polynomial<Rational>& f, const FieldDesc& field) {
  std::vector<Term<ModP>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({reduce_mod(t.coeff, field), t.mono});
  return Polynomial<ModP>::from_terms(f.ring(), field, std::move(terms));
}

}  // namespace cia
