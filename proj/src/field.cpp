#include "cia/field.hpp"

#include <charconv>

namespace cia {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDesc FieldDesc::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw InvalidArgument("field modulus must be below 2^31");
  return {Kind::prime, p};
}

std::string FieldDesc::name() const {
  return kind == Kind::rational ? "QQ" : "GF(" + std::to_string(p) + ")";
}

FieldDesc FieldDesc::parse(std::string_view name) {
  if (name == "QQ" || name == "rational" || name == "Q") return rationals();
  std::string_view digits = name;
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  } else if (digits.starts_with("GF")) {
    digits = digits.substr(2);
  } else if (digits.starts_with("gf")) {
    digits = digits.substr(2);
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("unknown field '" + std::string(name) + "' (expected QQ or GF(p))");
  return prime_field(p);
}

// ---------------------------------------------------------------- Rational

Rational Rational::parse(std::string_view s, const FieldDesc&) {
  mpq_class q;
  std::string str(s);
  if (str.empty() || q.set_str(str, 10) != 0)
    throw ParseError("malformed rational coefficient '" + str + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + str + "'");
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

// -------------------------------------------------------------------- ModP

ModP ModP::from(long n, const FieldDesc& f) {
  long p = static_cast<long>(f.p);
  long r = n % p;
  if (r < 0) r += p;
  return ModP(static_cast<std::uint32_t>(r), f.p);
}

ModP ModP::parse(std::string_view s, const FieldDesc& f) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("malformed GF(" + std::to_string(f.p) + ") coefficient '" + std::string(s) + "'");
  return from(v, f);
}

void ModP::check(const ModP& o) const {
  if (p_ != o.p_)
    throw IncompatibleError("GF(" + std::to_string(p_) + ") and GF(" + std::to_string(o.p_) + ") mixed");
}

ModP& ModP::operator+=(const ModP& o) {
  check(o);
  std::uint64_t s = std::uint64_t(v_) + o.v_;
  v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
  return *this;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw InvalidArgument("inverse of zero");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return ModP(static_cast<std::uint32_t>(x0), p_);
}

ModP reduce_mod(const Rational& r, const FieldDesc& f) {
  mpz_class p(f.p);
  mpz_class num = r.value().get_num() % p;
  mpz_class den = r.value().get_den() % p;
  if (den == 0) throw InvalidArgument("denominator divisible by " + std::to_string(f.p));
  if (num < 0) num += p;
  ModP n(static_cast<std::uint32_t>(num.get_ui()), f.p);
  ModP d(static_cast<std::uint32_t>(den.get_ui()), f.p);
  return n / d;
}

}  // namespace cia
