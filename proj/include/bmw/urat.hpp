#ifndef BMW_URAT_HPP
#define BMW_URAT_HPP

// Polynomials and rational functions in an auxiliary variable u with RingElem
// coefficients, enough for the Q series: evaluation, simple-pole residues and
// expansion in powers of 1/u.

#include <vector>

#include "bmw/errors.hpp"
#include "bmw/ring.hpp"

namespace bmw {

struct UPoly {
  std::vector<RingElem> c;  // c[k] is the coefficient of u^k

  static UPoly zero() { return {}; }
  static UPoly constant(RingElem k) { return UPoly{{std::move(k)}}; }
  static UPoly linear(RingElem c0, RingElem c1) { return UPoly{{std::move(c0), std::move(c1)}}; }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, RingElem(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend UPoly operator*(const RingElem& k, UPoly a) {
    for (auto& x : a.c) x *= k;
    a.trim();
    return a;
  }

  RingElem eval(const RingElem& u) const {
    RingElem r;
    for (size_t i = c.size(); i-- > 0;) r = r * u + c[i];
    return r;
  }
  UPoly derivative() const {
    UPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(RingElem(static_cast<int>(i)) * c[i]);
    r.trim();
    return r;
  }
};

// A rational function num/den in u.
struct URat {
  UPoly num, den;

  RingElem eval(const RingElem& u) const {
    RingElem d = den.eval(u);
    if (d.is_zero()) throw PoleAtSpecialization("URat eval at a pole");
    return num.eval(u) / d;
  }

  // Residue at a simple pole u = b (den(b) = 0, den'(b) != 0).
  RingElem residue(const RingElem& b) const {
    RingElem dprime = den.derivative().eval(b);
    if (dprime.is_zero() || !den.eval(b).is_zero())
      throw Error("URat::residue: not a simple pole");
    return num.eval(b) / dprime;
  }

  friend URat operator*(const URat& a, const URat& b) { return {a.num * b.num, a.den * b.den}; }
  friend URat operator+(const URat& a, const URat& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend bool operator==(const URat& a, const URat& b) {
    UPoly l = a.num * b.den, r = b.num * a.den;
    return l.c == r.c;
  }

  // Coefficients of the expansion in powers of u^{-1} at u = infinity, orders
  // 0..k; requires deg num <= deg den (a series in 1/u).
  std::vector<RingElem> expand_at_infinity(int k) const {
    int dn = num.degree(), dd = den.degree();
    if (dd < 0) throw DivisionByZero("URat expansion");
    if (dn > dd) throw Error("URat::expand_at_infinity: not regular at infinity");
    // In t = 1/u: scale num and den by u^{-dd}; u^i becomes t^{dd-i}.
    std::vector<RingElem> a(static_cast<size_t>(k + 1), RingElem(0));
    for (int i = 0; i <= dn; ++i) {
      int t = dd - i;  // u^i contributes t^{dd-i} after scaling by u^{-dd}
      if (t <= k) a[static_cast<size_t>(t)] = num.c[static_cast<size_t>(i)];
    }
    std::vector<RingElem> bb(static_cast<size_t>(k + 1), RingElem(0));
    for (int i = 0; i <= dd; ++i) {
      int t = dd - i;
      if (t <= k) bb[static_cast<size_t>(t)] = den.c[static_cast<size_t>(i)];
    }
    // series division a / bb up to order k
    std::vector<RingElem> out(static_cast<size_t>(k + 1), RingElem(0));
    RingElem inv0 = bb[0].inverse();
    for (int i = 0; i <= k; ++i) {
      RingElem acc = a[static_cast<size_t>(i)];
      for (int j = 1; j <= i; ++j)
        acc -= bb[static_cast<size_t>(j)] * out[static_cast<size_t>(i - j)];
      out[static_cast<size_t>(i)] = acc * inv0;
    }
    return out;
  }
};

}  // namespace bmw

#endif
