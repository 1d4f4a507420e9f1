#ifndef BMW_LAURENT_HPP
#define BMW_LAURENT_HPP

// Laurent polynomials in the half-power variables a = alpha^(1/2), v = s^(1/2)
// over the rationals, with exact bivariate gcd for fraction reduction.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bmw/errors.hpp"

namespace bmw {

using Rat = mpq_class;
using Int = mpz_class;

// Exponent pair (a-exponent, v-exponent), lex ordered.
struct Exp {
  int a = 0;
  int v = 0;
  friend bool operator<(const Exp& x, const Exp& y) {
    return x.a != y.a ? x.a < y.a : x.v < y.v;
  }
  friend bool operator==(const Exp& x, const Exp& y) { return x.a == y.a && x.v == y.v; }
};

class LaurentPoly {
 public:
  using Terms = std::map<Exp, Rat>;

  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 0, 1); }
  static LaurentPoly monomial(int ea, int ev, Rat c) {
    LaurentPoly p;
    c.canonicalize();
    if (c != 0) p.terms_.emplace(Exp{ea, ev}, std::move(c));
    return p;
  }
  static LaurentPoly constant(Rat c) { return monomial(0, 0, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} &&
           terms_.begin()->second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && terms_.begin()->first == Exp{0, 0}); }

  Rat constant_value() const {
    if (is_zero()) return 0;
    if (!is_constant()) throw Error("LaurentPoly: not a constant");
    return terms_.begin()->second;
  }

  void add_term(Exp e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    if (y.is_monomial()) return mul_monomial(x, y.terms_.begin()->first, y.terms_.begin()->second);
    if (x.is_monomial()) return mul_monomial(y, x.terms_.begin()->first, x.terms_.begin()->second);
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) r.add_term(Exp{ex.a + ey.a, ex.v + ey.v}, cx * cy);
    return r;
  }
  static LaurentPoly mul_monomial(const LaurentPoly& x, Exp e, const Rat& c) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [ex, cx] : x.terms_)
      r.terms_.emplace_hint(r.terms_.end(), Exp{ex.a + e.a, ex.v + e.v}, cx * c);
    return r;
  }
  LaurentPoly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, k] : terms_) k *= c;
    }
    return *this;
  }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.terms_ == y.terms_;
  }

  // Componentwise minimum / maximum of exponents over all terms.
  Exp min_exp() const {
    Exp m{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (first) {
        m = e;
        first = false;
      } else {
        m.a = std::min(m.a, e.a);
        m.v = std::min(m.v, e.v);
      }
    }
    return m;
  }
  Exp lex_leading_exp() const { return terms_.rbegin()->first; }
  const Rat& lex_leading_coeff() const { return terms_.rbegin()->second; }

  LaurentPoly shifted(int da, int dv) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), Exp{e.a + da, e.v + dv}, c);
    return r;
  }

  // --- substitutions -------------------------------------------------------

  // a -> v^k (used for alpha = s^((k)/2*...): B/D series and Brauer).
  LaurentPoly subst_a_to_vpow(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(Exp{0, e.a * k + e.v}, c);
    return r;
  }
  // a^2 -> sign * v^k, requires even a-exponents. (C series: alpha = -s^(2n+1).)
  LaurentPoly subst_a_sq(int sign, int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e.a % 2 != 0) throw HalfPowerSign("odd power of alpha^(1/2)");
      int h = e.a / 2;
      Rat cc = (sign < 0 && (h % 2 != 0)) ? Rat(-c) : c;
      r.add_term(Exp{0, h * k + e.v}, cc);
    }
    return r;
  }
  // s -> -1/s, i.e. v^2 -> -v^(-2); requires even v-exponents.
  LaurentPoly subst_s_to_neg_inv() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e.v % 2 != 0) throw HalfPowerSign("odd power of s^(1/2)");
      int h = e.v / 2;
      Rat cc = (h % 2 != 0) ? Rat(-c) : c;
      r.add_term(Exp{e.a, -e.v}, cc);
    }
    return r;
  }
  // alpha -> -1/alpha, i.e. a^2 -> -a^(-2); requires even a-exponents.
  LaurentPoly subst_alpha_to_neg_inv() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e.a % 2 != 0) throw HalfPowerSign("odd power of alpha^(1/2)");
      int h = e.a / 2;
      Rat cc = (h % 2 != 0) ? Rat(-c) : c;
      r.add_term(Exp{-e.a, e.v}, cc);
    }
    return r;
  }

  // Positive rational c with (1/c) * this integer and coprime.
  Rat rational_content() const {
    if (is_zero()) return Rat(1);
    Int g(0), l(1);
    for (const auto& [e, c] : terms_) {
      (void)e;
      Int n = c.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      Int d = c.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
  }

  bool depends_on_a() const {
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (e.a != 0) return true;
    }
    return false;
  }

  // Multiplicity of the root v = 1 for a univariate (a-free) polynomial,
  // and the value of p / (v-1)^mult at v = 1. Used by the Brauer limit.
  std::pair<int, Rat> order_and_value_at_v1() const {
    if (depends_on_a()) throw Error("order_at_v1: poly depends on a");
    if (is_zero()) return {-1, 0};
    Exp m = min_exp();
    std::vector<Rat> c(static_cast<size_t>(lex_leading_exp().v - m.v + 1), Rat(0));
    for (const auto& [e, k] : terms_) c[static_cast<size_t>(e.v - m.v)] = k;
    int mult = 0;
    for (;;) {
      Rat val(0);
      for (const auto& k : c) val += k;
      if (val != 0) return {mult, val};
      // synthetic division by (v - 1)
      std::vector<Rat> q(c.size() - 1);
      Rat carry(0);
      for (size_t i = c.size(); i-- > 1;) {
        carry += c[i];
        q[i - 1] = carry;
      }
      c = std::move(q);
      ++mult;
      if (c.empty()) return {-1, 0};
    }
  }

  std::string str() const;

 private:
  Terms terms_;
};

// --- integer polynomial engine for gcd --------------------------------------
// Polynomials are dense vectors; VPoly is in v over Z, AVPoly in a over Z[v].

namespace detail {

using VPoly = std::vector<Int>;  // index = v-exponent

inline void vtrim(VPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool vzero(const VPoly& p) { return p.empty(); }

inline VPoly vmul(const VPoly& x, const VPoly& y) {
  if (vzero(x) || vzero(y)) return {};
  VPoly r(x.size() + y.size() - 1, Int(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      r[i + j] += x[i] * y[j];
    }
  }
  vtrim(r);
  return r;
}

inline VPoly vscale(const VPoly& x, const Int& c) {
  if (c == 0) return {};
  VPoly r = x;
  for (auto& k : r) k *= c;
  return r;
}

inline VPoly vsub(const VPoly& x, const VPoly& y) {
  VPoly r = x;
  if (r.size() < y.size()) r.resize(y.size(), Int(0));
  for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  vtrim(r);
  return r;
}

inline Int icontent(const VPoly& p) {
  Int g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline VPoly vdiv_int(const VPoly& p, const Int& c) {
  VPoly r = p;
  for (auto& k : r) {
    Int q;
    mpz_divexact(q.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
    k = q;
  }
  return r;
}

inline VPoly vprimitive(const VPoly& p, Int* content = nullptr) {
  if (vzero(p)) {
    if (content) *content = 0;
    return {};
  }
  Int g = icontent(p);
  if (p.back() < 0) g = -g;
  if (content) *content = g;
  return vdiv_int(p, g);
}

// Pseudo-remainder of x by y (deg x >= deg y > 0 allowed; y nonzero).
inline VPoly vpseudo_rem(VPoly x, const VPoly& y) {
  int dy = static_cast<int>(y.size()) - 1;
  const Int& ly = y.back();
  while (static_cast<int>(x.size()) - 1 >= dy && !vzero(x)) {
    int dx = static_cast<int>(x.size()) - 1;
    Int lx = x.back();
    VPoly shifted(static_cast<size_t>(dx - dy), Int(0));
    shifted.insert(shifted.end(), y.begin(), y.end());
    x = vsub(vscale(x, ly), vscale(shifted, lx));
  }
  return x;
}

inline VPoly vgcd(VPoly x, VPoly y) {
  if (vzero(x)) return vprimitive(y);
  if (vzero(y)) return vprimitive(x);
  x = vprimitive(x);
  y = vprimitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!vzero(y)) {
    VPoly r = vpseudo_rem(x, y);
    x = std::move(y);
    y = vprimitive(r);
  }
  return vprimitive(x);
}

// Exact division over Z[v]; divisor must divide exactly.
inline VPoly vdiv_exact(VPoly x, const VPoly& y) {
  if (vzero(x)) return {};
  int dy = static_cast<int>(y.size()) - 1;
  VPoly q(x.size() - y.size() + 1, Int(0));
  while (!vzero(x)) {
    int dx = static_cast<int>(x.size()) - 1;
    Int c;
    mpz_divexact(c.get_mpz_t(), x.back().get_mpz_t(), y.back().get_mpz_t());
    q[static_cast<size_t>(dx - dy)] = c;
    VPoly shifted(static_cast<size_t>(dx - dy), Int(0));
    shifted.insert(shifted.end(), y.begin(), y.end());
    x = vsub(x, vscale(shifted, c));
  }
  return q;
}

using AVPoly = std::vector<VPoly>;  // index = a-exponent

inline void atrim(AVPoly& p) {
  while (!p.empty() && vzero(p.back())) p.pop_back();
}
inline bool azero(const AVPoly& p) { return p.empty(); }

inline AVPoly amul(const AVPoly& x, const AVPoly& y) {
  if (azero(x) || azero(y)) return {};
  AVPoly r(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (vzero(x[i])) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (vzero(y[j])) continue;
      VPoly prod = vmul(x[i], y[j]);
      if (r[i + j].size() < prod.size()) r[i + j].resize(prod.size(), Int(0));
      for (size_t k = 0; k < prod.size(); ++k) r[i + j][k] += prod[k];
      vtrim(r[i + j]);
    }
  }
  atrim(r);
  return r;
}

inline AVPoly ascale_v(const AVPoly& x, const VPoly& c) {
  AVPoly r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = vmul(x[i], c);
  atrim(r);
  return r;
}

inline AVPoly asub(const AVPoly& x, const AVPoly& y) {
  AVPoly r = x;
  if (r.size() < y.size()) r.resize(y.size());
  for (size_t i = 0; i < y.size(); ++i) r[i] = vsub(r[i], y[i]);
  atrim(r);
  return r;
}

inline VPoly acontent(const AVPoly& p) {
  VPoly g;
  for (const auto& c : p) g = vgcd(g, c);
  return g;
}

inline AVPoly adiv_v_exact(const AVPoly& p, const VPoly& c) {
  AVPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = vdiv_exact(p[i], c);
  return r;
}

inline AVPoly apseudo_rem(AVPoly x, const AVPoly& y) {
  int dy = static_cast<int>(y.size()) - 1;
  const VPoly& ly = y.back();
  while (static_cast<int>(x.size()) - 1 >= dy && !azero(x)) {
    int dx = static_cast<int>(x.size()) - 1;
    VPoly lx = x.back();
    AVPoly shifted(static_cast<size_t>(dx - dy));
    shifted.insert(shifted.end(), y.begin(), y.end());
    x = asub(ascale_v(x, ly), ascale_v(shifted, lx));
  }
  return x;
}

// Primitive gcd over Z[a, v], recursive in a.
inline AVPoly agcd(AVPoly x, AVPoly y) {
  if (azero(x)) return y;
  if (azero(y)) return x;
  VPoly cx = acontent(x), cy = acontent(y);
  x = adiv_v_exact(x, cx);
  y = adiv_v_exact(y, cy);
  VPoly cg = vgcd(cx, cy);
  if (x.size() < y.size()) std::swap(x, y);
  while (!azero(y)) {
    AVPoly r = apseudo_rem(x, y);
    x = std::move(y);
    if (azero(r)) {
      y = {};
    } else {
      y = adiv_v_exact(r, acontent(r));
    }
  }
  return ascale_v(x, cg);
}

}  // namespace detail

// Shift p so min exponents are (0,0), clear rational denominators, return as
// integer AVPoly. The discarded unit (monomial and positive rational) does not
// matter for gcd purposes.
inline detail::AVPoly to_integer_poly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  Exp m = p.min_exp();
  Int lcm(1);
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    Int den = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  int da = 0, dv = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    da = std::max(da, e.a - m.a);
    dv = std::max(dv, e.v - m.v);
  }
  detail::AVPoly r(static_cast<size_t>(da + 1));
  for (auto& row : r) row.assign(static_cast<size_t>(dv + 1), Int(0));
  for (const auto& [e, c] : p.terms()) {
    Rat scaled = c * Rat(lcm);
    r[static_cast<size_t>(e.a - m.a)][static_cast<size_t>(e.v - m.v)] = scaled.get_num();
  }
  for (auto& row : r) detail::vtrim(row);
  detail::atrim(r);
  return r;
}

inline LaurentPoly from_integer_poly(const detail::AVPoly& p) {
  LaurentPoly r;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0) r.add_term(Exp{static_cast<int>(i), static_cast<int>(j)}, Rat(p[i][j]));
  return r;
}

// Primitive gcd of two Laurent polynomials (an ordinary polynomial with
// nonzero trailing exponents, positive lex-leading coefficient).
inline LaurentPoly laurent_gcd(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero() || x.is_monomial() || y.is_monomial())
    return LaurentPoly::one();
  if (x == y) {
    LaurentPoly g = x;
    Rat c = g.rational_content();
    if (g.lex_leading_coeff() < 0) c = -c;
    g *= Rat(1) / c;
    return g;
  }
  detail::AVPoly g = detail::agcd(to_integer_poly(x), to_integer_poly(y));
  LaurentPoly r = from_integer_poly(g);
  if (r.is_zero()) return LaurentPoly::one();
  if (r.lex_leading_coeff() < 0) r *= Rat(-1);
  return r;
}

// Exact division (divisor must divide exactly); lex-ordered long division.
inline LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("laurent_div_exact");
  if (num.is_zero()) return LaurentPoly::zero();
  if (den.is_one()) return num;
  if (den.is_monomial()) {
    Exp e = den.lex_leading_exp();
    LaurentPoly r = num.shifted(-e.a, -e.v);
    r *= Rat(1) / den.lex_leading_coeff();
    return r;
  }
  LaurentPoly rem = num, quot;
  Exp de = den.lex_leading_exp();
  const Rat& dc = den.lex_leading_coeff();
  while (!rem.is_zero()) {
    Exp re = rem.lex_leading_exp();
    Rat qc = rem.lex_leading_coeff() / dc;
    Exp qe{re.a - de.a, re.v - de.v};
    quot.add_term(qe, qc);
    rem = rem - LaurentPoly::mul_monomial(den, qe, qc);
    if (!rem.is_zero() && !(rem.lex_leading_exp() < re))
      throw Error("laurent_div_exact: division does not terminate");
  }
  return quot;
}

inline std::string rat_str(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

inline std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lex order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exp& e = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    std::string vars;
    if (e.a != 0) vars += "a^" + std::to_string(e.a);
    if (e.v != 0) {
      if (!vars.empty()) vars += "*";
      vars += "v^" + std::to_string(e.v);
    }
    if (vars.empty()) {
      os << rat_str(c);
    } else if (c == 1) {
      os << vars;
    } else {
      os << rat_str(c) << "*" << vars;
    }
  }
  return os.str();
}

}  // namespace bmw

#endif
