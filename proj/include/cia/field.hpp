#ifndef CIA_FIELD_HPP
#define CIA_FIELD_HPP

// Coefficient fields. Every polynomial type in the library is templated on
// one of the two scalar types below; a FieldDesc carries the runtime part
// (the modulus) so that constants can be manufactured generically.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cia/errors.hpp"

namespace cia {

struct FieldDesc {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldDesc rationals() { return {}; }
  static FieldDesc prime_field(std::uint32_t p);

  std::string name() const;  // "QQ" or "GF(p)"
  static FieldDesc parse(std::string_view name);

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

bool is_prime(std::uint64_t n);

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from(long n, const FieldDesc&) { return Rational(n); }
  static Rational parse(std::string_view s, const FieldDesc&);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  std::string to_string() const { return q_.get_str(); }
  const mpq_class& value() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational inverse() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

/// Residue in [0, p) of the prime field GF(p). The modulus travels with the
/// value; mixing moduli raises IncompatibleError.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint32_t v, std::uint32_t p) : v_(v % p), p_(p) {}

  static ModP from(long n, const FieldDesc& f);
  static ModP parse(std::string_view s, const FieldDesc& f);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string to_string() const { return std::to_string(v_); }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  ModP inverse() const;

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check(const ModP& o) const;

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// Reduces a rational with p-free denominator into GF(p).
ModP reduce_mod(const Rational& r, const FieldDesc& f);

}  // namespace cia

#endif  // CIA_FIELD_HPP
