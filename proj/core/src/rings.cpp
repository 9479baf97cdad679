#include "brauer/rings.hpp"

#include <algorithm>
#include <cctype>

#include "brauer/error.hpp"

namespace brauer {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  s = strip(s);
  if (!is_integer_text(s)) throw ValidationError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s));
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const auto s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str();
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw RangeError("division by zero");
  return 1 / a;
}

IntegerRing::Elem IntegerRing::from_rational(const mpq_class& in) const {
  mpq_class q(in);
  q.canonicalize();
  if (q.get_den() != 1) throw ValidationError("non-integral coefficient " + q.get_str());
  return q.get_num();
}

IntegerRing::Elem IntegerRing::parse(std::string_view s) const { return parse_integer(s); }

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw RangeError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  const long long m = static_cast<long long>(p_);
  return static_cast<Elem>(((v % m) + m) % m);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  const mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) {
    throw ValidationError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
  }
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw RangeError("division by zero mod " + std::to_string(p_));
  // Fermat: a^(p-2).
  Elem result = 1, base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::parse(std::string_view s) const {
  const mpq_class q = parse_rational(s);
  return from_rational(q);
}

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) coeffs.push_back(c);
}

Poly Poly::monomial(const mpq_class& c, int degree) {
  Poly p;
  if (sgn(c) == 0) return p;
  p.coeffs.assign(static_cast<std::size_t>(degree + 1), mpq_class(0));
  p.coeffs.back() = c;
  return p;
}

void Poly::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

mpq_class Poly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
    if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.trim();
  return r;
}

std::optional<mpq_class> DeltaPolyRing::to_rational(const Elem& a) const {
  if (a.degree() <= 0) return a.is_zero() ? mpq_class(0) : a.coeffs[0];
  return std::nullopt;
}

std::string DeltaPolyRing::format(const Elem& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const mpq_class& c = a.coeffs[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "d";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// Grammar: term (('+'|'-') term)*, term = [rational '*'] 'd' ['^' int] | rational.
DeltaPolyRing::Elem DeltaPolyRing::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty polynomial");
  Poly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("malformed polynomial '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ValidationError("malformed polynomial '" + s + "'");
    mpq_class coeff = 1;
    int degree = 0;
    const auto dpos = term.find('d');
    if (dpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      if (dpos > 0) {
        if (term[dpos - 1] != '*') throw ValidationError("malformed term '" + term + "'");
        coeff = parse_rational(term.substr(0, dpos - 1));
      }
      degree = 1;
      const std::string rest = term.substr(dpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') throw ValidationError("malformed term '" + term + "'");
        const mpz_class e = parse_integer(rest.substr(1));
        if (e < 0 || e > 1000) throw ValidationError("bad exponent in '" + term + "'");
        degree = static_cast<int>(e.get_si());
      }
    }
    if (negative) coeff = -coeff;
    result = result + Poly::monomial(coeff, degree);
    pos = end;
  }
  return result;
}

mpz_class factorial(int n) {
  if (n < 0) throw RangeError("factorial of a negative number");
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long double_factorial(int n) {
  long long r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

}  // namespace brauer
