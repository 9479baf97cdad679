#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace brauer {

// Coefficient rings. Each ring is a small value type with an Elem type and
// the operations below; Morphism and the matrix code are templated on it.
//
//   zero one from_int from_rational add sub mul neg is_zero equal
//   format parse name
//
// Fields additionally provide inv().

mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool is_field = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return mpq_class(mpz_class(std::to_string(v))); }
  Elem from_rational(const mpq_class& q) const {
    Elem c(q);
    c.canonicalize();
    return c;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<mpq_class> to_rational(const Elem& a) const { return a; }
  std::string format(const Elem& a) const { return format_rational(a); }
  Elem parse(std::string_view s) const { return parse_rational(s); }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class IntegerRing {
 public:
  using Elem = mpz_class;
  static constexpr bool is_field = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return mpz_class(std::to_string(v)); }
  // Throws ValidationError for non-integral input.
  Elem from_rational(const mpq_class& q) const;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<mpq_class> to_rational(const Elem& a) const { return mpq_class(a); }
  std::string format(const Elem& a) const { return a.get_str(); }
  Elem parse(std::string_view s) const;
  std::string name() const { return "ZZ"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  // Throws RangeError unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const;
  // Throws ValidationError when the denominator vanishes mod p.
  Elem from_rational(const mpq_class& q) const;
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::optional<mpq_class> to_rational(Elem) const { return std::nullopt; }
  std::string format(Elem a) const { return std::to_string(a); }
  Elem parse(std::string_view s) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

// Univariate polynomial in the indeterminate d (standing for delta) with
// rational coefficients; coeffs[i] multiplies d^i. No trailing zeros.
struct Poly {
  std::vector<mpq_class> coeffs;

  Poly() = default;
  Poly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const mpq_class& c, int degree);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim();
  mpq_class evaluate(const mpq_class& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);

class DeltaPolyRing {
 public:
  using Elem = Poly;
  static constexpr bool is_field = false;

  Elem zero() const { return {}; }
  Elem one() const { return Poly(1); }
  Elem from_int(long long v) const { return Poly(RationalField{}.from_int(v)); }
  Elem from_rational(const mpq_class& q) const { return Poly(q); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<mpq_class> to_rational(const Elem& a) const;
  std::string format(const Elem& a) const;
  Elem parse(std::string_view s) const;
  std::string name() const { return "QQ[d]"; }

  // The indeterminate itself.
  Elem indeterminate() const { return Poly::monomial(1, 1); }

  friend bool operator==(const DeltaPolyRing&, const DeltaPolyRing&) { return true; }
};

// Generic helpers.
template <class R>
typename R::Elem ring_pow(const R& ring, typename R::Elem base, int exponent) {
  auto result = ring.one();
  while (exponent > 0) {
    if (exponent & 1) result = ring.mul(result, base);
    base = ring.mul(base, base);
    exponent >>= 1;
  }
  return result;
}

mpz_class factorial(int n);
mpz_class binomial(int n, int k);
long long double_factorial(int n);

}  // namespace brauer
