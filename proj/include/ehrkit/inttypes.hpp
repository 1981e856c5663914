#pragma once

// Exact arithmetic base types. All integer math in the toolkit goes through
// GMP; fixed-width integers are never used for lattice data.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehrkit {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Thrown when a computation would exceed a configured resource cap
// (matrix strand too large, box scan infeasible). Not a math error.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_from(long v) { return Int(v); }

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_scale(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline bool is_zero_vec(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(const IntVec& a) {
  Int g = 0;
  for (const Int& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the content so the vector is primitive (unchanged if zero).
inline IntVec make_primitive(IntVec a) {
  Int g = content(a);
  if (g > 1)
    for (Int& x : a) x /= g;
  return a;
}

// Binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
// Uses the falling-factorial definition, so C(-1, 3) == -1 etc.
inline Int binomial(const Int& n, unsigned long k) {
  Int num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
  Int den;
  mpz_fac_ui(den.get_mpz_t(), k);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("binomial: non-integral result");
  return q;
}

inline Int binomial_uu(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace ehrkit
