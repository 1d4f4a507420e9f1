#ifndef BMW_RING_HPP
#define BMW_RING_HPP

// The ground field Q(alpha^(1/2), s^(1/2)): reduced fractions of Laurent
// polynomials with a canonical form, quantum integers and brackets, and the
// B/C/D/Brauer specialization morphisms.

#include <string>
#include <utility>

#include "bmw/errors.hpp"
#include "bmw/laurent.hpp"

namespace bmw {

class RingElem {
 public:
  RingElem() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  RingElem(int n) : num_(LaurentPoly::constant(Rat(n))), den_(LaurentPoly::one()) {}
  RingElem(const Rat& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
  RingElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RingElem denominator");
    canonicalize();
  }
  explicit RingElem(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

  static RingElem monomial(int ea, int ev, Rat c = Rat(1)) {
    return RingElem(LaurentPoly::monomial(ea, ev, std::move(c)));
  }
  // alpha^k and s^k as elements (full powers have even half-power exponents).
  static RingElem alpha_pow(int k) { return monomial(2 * k, 0); }
  static RingElem s_pow(int k) { return monomial(0, 2 * k); }
  static RingElem v_pow(int k) { return monomial(0, k); }
  static RingElem a_pow(int k) { return monomial(k, 0); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  Rat rational_value() const {
    if (!is_rational()) throw Error("RingElem: not rational");
    return num_.constant_value();
  }

  friend RingElem operator+(const RingElem& x, const RingElem& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return RingElem(x.num_ + y.num_, x.den_);
    LaurentPoly g = laurent_gcd(x.den_, y.den_);
    LaurentPoly xq = laurent_div_exact(x.den_, g);
    LaurentPoly yq = laurent_div_exact(y.den_, g);
    return RingElem(x.num_ * yq + y.num_ * xq, x.den_ * yq);
  }
  friend RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }
  RingElem operator-() const {
    RingElem r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RingElem operator*(const RingElem& x, const RingElem& y) {
    if (x.is_zero() || y.is_zero()) return RingElem();
    if (x.is_one()) return y;
    if (y.is_one()) return x;
    return RingElem(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RingElem operator/(const RingElem& x, const RingElem& y) {
    if (y.is_zero()) throw DivisionByZero("RingElem division");
    if (x.is_zero()) return RingElem();
    return RingElem(x.num_ * y.den_, x.den_ * y.num_);
  }
  RingElem& operator+=(const RingElem& y) { return *this = *this + y; }
  RingElem& operator-=(const RingElem& y) { return *this = *this - y; }
  RingElem& operator*=(const RingElem& y) { return *this = *this * y; }
  RingElem& operator/=(const RingElem& y) { return *this = *this / y; }

  RingElem inverse() const {
    if (is_zero()) throw DivisionByZero("RingElem inverse");
    return RingElem(den_, num_);
  }
  RingElem pow(int k) const {
    if (k == 0) return RingElem(1);
    RingElem base = k > 0 ? *this : inverse();
    int e = k > 0 ? k : -k;
    RingElem r(1);
    while (e > 0) {
      if (e & 1) r *= base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const RingElem& x, const RingElem& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

  // Applies f to both numerator and denominator, re-canonicalizing.
  template <typename F>
  RingElem map_parts(F&& f) const {
    LaurentPoly n = f(num_), d = f(den_);
    if (d.is_zero()) throw PoleAtSpecialization(str());
    return RingElem(std::move(n), std::move(d));
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::one();
      return;
    }
    if (!den_.is_monomial()) {
      LaurentPoly g = laurent_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = laurent_div_exact(num_, g);
        den_ = laurent_div_exact(den_, g);
      }
    }
    // Pull the denominator's monomial part into the numerator.
    Exp dm = den_.min_exp();
    if (dm.a != 0 || dm.v != 0) {
      den_ = den_.shifted(-dm.a, -dm.v);
      num_ = num_.shifted(-dm.a, -dm.v);
    }
    // Normalize: denominator integer, primitive, positive lex-leading coeff.
    Rat c = den_.rational_content();
    if (den_.lex_leading_coeff() < 0) c = -c;
    if (c != 1) {
      Rat inv = Rat(1) / c;
      den_ *= inv;
      num_ *= inv;
    }
  }

  LaurentPoly num_, den_;
};

// [m] with m = two_m/2: (s^m - s^-m) / (s - s^-1) = (v^(2m) - v^(-2m)) / (v^2 - v^-2).
inline RingElem qint2(int two_m) {
  if (two_m == 0) return RingElem(0);
  LaurentPoly num = LaurentPoly::monomial(0, two_m, 1) - LaurentPoly::monomial(0, -two_m, 1);
  LaurentPoly den = LaurentPoly::monomial(0, 2, 1) - LaurentPoly::monomial(0, -2, 1);
  return RingElem(std::move(num), std::move(den));
}
inline RingElem qint(int m) { return qint2(2 * m); }

// [y+d] with d = two_d/2: (alpha s^d - alpha^-1 s^-d) / (s - s^-1).
inline RingElem ybracket2(int two_d) {
  LaurentPoly num =
      LaurentPoly::monomial(2, two_d, 1) - LaurentPoly::monomial(-2, -two_d, 1);
  LaurentPoly den = LaurentPoly::monomial(0, 2, 1) - LaurentPoly::monomial(0, -2, 1);
  return RingElem(std::move(num), std::move(den));
}
inline RingElem ybracket(int d) { return ybracket2(2 * d); }

// z = s - s^-1, the skein relation coefficient.
inline RingElem skein_z() {
  return RingElem(LaurentPoly::monomial(0, 2, 1) - LaurentPoly::monomial(0, -2, 1));
}

// delta = (alpha - alpha^-1)/(s - s^-1) + 1, the loop value.
inline RingElem loop_value() { return ybracket(0) + RingElem(1); }

// delta_h = (alpha - alpha^-1)/(s - s^-1), the Homfly loop value.
inline RingElem homfly_loop_value() { return ybracket(0); }

// [n]! = [1][2]...[n]
inline RingElem qfactorial(int n) {
  RingElem r(1);
  for (int j = 2; j <= n; ++j) r *= qint(j);
  return r;
}

struct Specialization {
  enum class Kind { Generic, B, D, C, Brauer };
  Kind kind = Kind::Generic;
  int param = 0;       // n for B/D/C, N for Brauer
  int root_order = 0;  // order of v = s^(1/2) as a root of unity; 0 = generic.
                       // Used only by feasibility reports, not by specialize().

  static Specialization generic() { return {}; }
  static Specialization B(int n) { return {Kind::B, n, 0}; }
  static Specialization D(int n) { return {Kind::D, n, 0}; }
  static Specialization C(int n) { return {Kind::C, n, 0}; }
  static Specialization Brauer(int N) { return {Kind::Brauer, N, 0}; }
  Specialization at_root(int r) const { return {kind, param, r}; }

  std::string str() const {
    std::string base;
    switch (kind) {
      case Kind::Generic: base = "generic"; break;
      case Kind::B: base = "B:" + std::to_string(param); break;
      case Kind::D: base = "D:" + std::to_string(param); break;
      case Kind::C: base = "C:" + std::to_string(param); break;
      case Kind::Brauer: base = "brauer:" + std::to_string(param); break;
    }
    if (root_order > 0) base += "@root:" + std::to_string(root_order);
    return base;
  }
};

// Evaluate the Brauer limit: substitute alpha = s^(N-1) (a -> v^(N-1)),
// reduce, and take v -> 1. All regular quantities become exact rationals.
inline RingElem brauer_limit(const RingElem& x, int N) {
  RingElem sub = x.map_parts([&](const LaurentPoly& p) { return p.subst_a_to_vpow(N - 1); });
  if (sub.num().is_zero()) return RingElem(0);
  auto [on, vn] = sub.num().order_and_value_at_v1();
  auto [od, vd] = sub.den().order_and_value_at_v1();
  if (od < 0) throw PoleAtSpecialization("brauer: denominator vanishes identically");
  if (on < od) throw PoleAtSpecialization("brauer limit of " + x.str());
  if (on > od) return RingElem(0);
  return RingElem(vn / vd);
}

inline RingElem specialize(const RingElem& x, const Specialization& sp) {
  switch (sp.kind) {
    case Specialization::Kind::Generic:
      return x;
    case Specialization::Kind::B:
      // alpha = s^(2n): a -> v^(2n)
      return x.map_parts([&](const LaurentPoly& p) { return p.subst_a_to_vpow(2 * sp.param); });
    case Specialization::Kind::D:
      // alpha = s^(2n-1): a -> v^(2n-1)
      return x.map_parts(
          [&](const LaurentPoly& p) { return p.subst_a_to_vpow(2 * sp.param - 1); });
    case Specialization::Kind::C:
      // alpha = -s^(2n+1): a^2 -> -v^(2(2n+1)), full powers of alpha only
      return x.map_parts(
          [&](const LaurentPoly& p) { return p.subst_a_sq(-1, 2 * (2 * sp.param + 1)); });
    case Specialization::Kind::Brauer:
      return brauer_limit(x, sp.param);
  }
  throw Error("unreachable");
}

// s -> -s^-1 substitution (transposition symmetry checks); full powers of s only.
inline RingElem transpose_s(const RingElem& x) {
  return x.map_parts([](const LaurentPoly& p) { return p.subst_s_to_neg_inv(); });
}
// alpha -> -alpha^-1 substitution; full powers of alpha only.
inline RingElem transpose_alpha(const RingElem& x) {
  return x.map_parts([](const LaurentPoly& p) { return p.subst_alpha_to_neg_inv(); });
}

}  // namespace bmw

#endif
