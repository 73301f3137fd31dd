// SPDX-License-Identifier: MIT
#include "rppvm/exact.hpp"

#include <sstream>

namespace rppvm {

namespace {
void append_power(std::ostringstream& os, const std::string& var, std::int64_t e) {
  if (e == 0) return;
  if (os.tellp() > 0) os << ' ';
  os << var;
  if (e != 1) os << '^' << e;
}
}  // namespace

std::string to_string(const Monomial& m, const std::string& u, const std::string& t) {
  std::ostringstream os;
  append_power(os, u, m.a);
  append_power(os, t, m.b);
  return os.tellp() > 0 ? os.str() : std::string("1");
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error("not an exact rational: '" + s + "'");
  }
}

}  // namespace rppvm
