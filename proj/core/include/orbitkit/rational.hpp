#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbitkit {

/// Exact arbitrary-precision rational, the default scalar of every core
/// computation. Always stored in canonical form (reduced, positive
/// denominator), so equal values compare bit-identical.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline double to_double(const Rat& x) { return x.get_d(); }

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Parses "n" or "n/d" with optional leading sign. Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// Complex scalar over the rationals. Complexified spaces are handled as
/// pairs over the base field rather than as machine complex numbers, so
/// polarization arithmetic stays exact.
struct CRat {
  Rat re;
  Rat im;

  CRat() : re(0), im(0) {}
  CRat(int v) : re(v), im(0) {}
  CRat(long v) : re(v), im(0) {}
  CRat(const Rat& r) : re(r), im(0) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }

  CRat conj() const { return CRat(re, -im); }

  CRat operator-() const { return CRat(-re, -im); }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  CRat& operator/=(const CRat& o) {
    Rat d = o.re * o.re + o.im * o.im;
    if (sgn(d) == 0) throw std::domain_error("division by complex zero");
    Rat r = (re * o.re + im * o.im) / d;
    Rat i = (im * o.re - re * o.im) / d;
    re = r;
    im = i;
    return *this;
  }

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline bool is_zero(const CRat& x) { return is_zero(x.re) && is_zero(x.im); }

inline std::string to_string(const CRat& x) {
  if (is_zero(x.im)) return to_string(x.re);
  std::string s = to_string(x.re);
  s += sgn(x.im) < 0 ? "-" : "+";
  Rat a = abs(x.im);
  s += to_string(a) + "i";
  return s;
}

}  // namespace orbitkit
