#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace keconvex {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Parses "p/q" or "p" (q > 0 after normalization).
Rat parse_rat(const std::string& s);

/// Serializes in lowest terms: "p" if integral, else "p/q".
std::string rat_to_string(const Rat& r);

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// gcd of the absolute values of all entries; 0 for the zero vector.
Int vec_gcd(const IntVec& v);

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Returns the positive rational s with s * v integral primitive.
Rat primitivize(const RatVec& v, IntVec& out);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

Int factorial(int n);

/// Exact b^e for e >= 0.
Rat rat_pow(const Rat& b, int e);

}  // namespace keconvex
