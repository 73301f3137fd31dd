// SPDX-License-Identifier: MIT
// Exact scalar types shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace rppvm {

// Expression templates are switched off so that `auto` and `?:` behave like
// ordinary value types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// All library failures surface as this type so the CLI can map them to a
// usage/failure exit code without catching unrelated exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unit-coefficient Laurent monomial u^a t^b. Every white, gray and colored
// vertex weight has this form, so configuration weights stay exact and can
// be compared as exponent pairs. The meaning of u (x or q) is up to the
// caller.
struct Monomial {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(Monomial l, const Monomial& r) {
    l.a += r.a;
    l.b += r.b;
    return l;
  }
  Monomial& operator*=(const Monomial& r) {
    a += r.a;
    b += r.b;
    return *this;
  }
};

inline Monomial unit_like(const Monomial&) { return {}; }
inline Rational unit_like(const Rational&) { return Rational(1); }
inline Monomial inv(const Monomial& m) { return {-m.a, -m.b}; }
inline Rational inv(const Rational& r) {
  if (r == 0) throw Error("division by zero in exact weight");
  return Rational(1) / r;
}

template <class V>
V power(const V& base, std::int64_t e) {
  V out = unit_like(base);
  V b = e < 0 ? inv(base) : base;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out = out * b;
  return out;
}

// Render as e.g. "x^3 t^2", "1". Variable names are supplied by the caller.
std::string to_string(const Monomial& m, const std::string& u = "x",
                      const std::string& t = "t");
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace rppvm
