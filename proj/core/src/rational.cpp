#include "keconvex/rational.hpp"

#include "keconvex/errors.hpp"

#include <sstream>

namespace keconvex {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << '/' << rat_den(r);
  return os.str();
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, boost::multiprecision::abs(x));
  return g;
}

Rat primitivize(const RatVec& v, IntVec& out) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = lcm / int_gcd(lcm, rat_den(x)) * rat_den(x);
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    scaled[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
  Int g = vec_gcd(scaled);
  if (g == 0) throw DegenerateInput("cannot primitivize the zero vector");
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = scaled[i] / g;
  return Rat(lcm, g);
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat rat_pow(const Rat& b, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace keconvex
