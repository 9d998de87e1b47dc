#pragma once

// Exact scalar fields: the rationals (arbitrary precision) and prime fields F_p
// with p < 2^31. Every algorithm in the library is templated on a field
// descriptor satisfying `ScalarField`; the value types carry their own
// arithmetic so generic code can use ordinary operators.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace colorhom {

// Expression templates are off so `auto` in generic code always holds a value.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("division by zero");
  return Rational(1) / x;
}

/// Residue modulo a prime. A default-constructed value is the zero of every
/// prime field; nonzero values always remember their modulus.
class ModInt {
 public:
  constexpr ModInt() = default;
  ModInt(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("ModInt: modulus must be >= 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend ModInt operator+(ModInt a, ModInt b) {
    const std::uint32_t p = join(a.p_, b.p_);
    return raw((static_cast<std::uint64_t>(a.v_) + b.v_) % (p ? p : 1), p);
  }
  friend ModInt operator-(ModInt a, ModInt b) {
    const std::uint32_t p = join(a.p_, b.p_);
    if (p == 0) return {};
    return raw((static_cast<std::uint64_t>(a.v_) + p - b.v_) % p, p);
  }
  friend ModInt operator-(ModInt a) {
    if (a.v_ == 0) return a;
    return raw(a.p_ - a.v_, a.p_);
  }
  friend ModInt operator*(ModInt a, ModInt b) {
    const std::uint32_t p = join(a.p_, b.p_);
    if (p == 0) return {};
    return raw(static_cast<std::uint64_t>(a.v_) * b.v_ % p, p);
  }
  friend ModInt operator/(ModInt a, ModInt b) { return a * inverse(b); }
  ModInt& operator+=(ModInt b) { return *this = *this + b; }
  ModInt& operator-=(ModInt b) { return *this = *this - b; }
  ModInt& operator*=(ModInt b) { return *this = *this * b; }
  ModInt& operator/=(ModInt b) { return *this = *this / b; }

  friend bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }

  friend bool is_zero(ModInt a) { return a.v_ == 0; }
  friend ModInt inverse(ModInt a) {
    if (a.v_ == 0) throw std::domain_error("division by zero");
    // extended Euclid on (v, p)
    std::int64_t r0 = a.p_, r1 = a.v_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    return ModInt(t0, a.p_);
  }

 private:
  static ModInt raw(std::uint64_t v, std::uint32_t p) {
    ModInt m;
    m.v_ = static_cast<std::uint32_t>(v);
    m.p_ = p;
    return m;
  }
  static std::uint32_t join(std::uint32_t p, std::uint32_t q) {
    if (p == 0) return q;
    if (q == 0 || p == q) return p;
    throw std::domain_error("ModInt: mixed moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

inline long long parse_integer(std::string_view s) {
  long long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const { return n; }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "rationals"; }

  std::string format(const value_type& x) const {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  /// Accepts "n" or "n/d" with arbitrary-size integers; the result is reduced.
  value_type parse(std::string_view s) const {
    const auto slash = s.find('/');
    auto integer = [](std::string_view t) {
      if (t.empty()) throw std::invalid_argument("malformed rational");
      std::size_t start = (t.front() == '-' || t.front() == '+') ? 1 : 0;
      if (start == t.size()) throw std::invalid_argument("malformed rational");
      for (std::size_t i = start; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9')
          throw std::invalid_argument("malformed rational '" + std::string(t) + "'");
      if (t.front() == '+') t.remove_prefix(1);
      return Rational(boost::multiprecision::cpp_int(std::string(t)));
    };
    if (slash == std::string_view::npos) return integer(s);
    const Rational num = integer(s.substr(0, slash));
    const Rational den = integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return num / den;
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using value_type = ModInt;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
    if (p == 2) throw std::invalid_argument("PrimeField: characteristic 2 is not supported");
  }

  std::uint32_t prime() const { return p_; }
  value_type zero() const { return {}; }
  value_type one() const { return ModInt(1, p_); }
  value_type from_int(long long n) const { return ModInt(n, p_); }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "prime(" + std::to_string(p_) + ")"; }

  std::string format(const value_type& x) const { return std::to_string(x.value()); }

  /// Integers and fractions are both accepted and reduced mod p.
  value_type parse(std::string_view s) const {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_int(detail::parse_integer(s));
    const auto den = from_int(detail::parse_integer(s.substr(slash + 1)));
    if (is_zero(den)) throw std::invalid_argument("denominator vanishes mod p in '" + std::string(s) + "'");
    return from_int(detail::parse_integer(s.substr(0, slash))) / den;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept ScalarField = requires(const F f, const typename F::value_type a, long long n, std::string_view s) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.parse(s) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { a + a } -> std::convertible_to<typename F::value_type>;
  { a - a } -> std::convertible_to<typename F::value_type>;
  { a * a } -> std::convertible_to<typename F::value_type>;
  { -a } -> std::convertible_to<typename F::value_type>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<typename F::value_type>;
  { f == f } -> std::convertible_to<bool>;
};

template <ScalarField F>
using scalar_t = typename F::value_type;

/// Square-and-multiply; negative exponents invert first.
template <ScalarField F>
scalar_t<F> power(const F& field, scalar_t<F> base, long long exponent) {
  if (exponent < 0) {
    base = inverse(base);
    exponent = -exponent;
  }
  scalar_t<F> result = field.one();
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace colorhom
