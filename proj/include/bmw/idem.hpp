#ifndef BMW_IDEM_HPP
#define BMW_IDEM_HPP

// Skein-theoretic minimal idempotents and matrix units in the BMW algebras:
// lifting from the Hecke algebra, the pair idempotents and the section of the
// quotient K_n -> H_n, the up-down matrix unit basis, quantum dimensions by
// closed form and by recursion, the Q series, twist and braiding eigenvalues,
// quantum-group specializations and feasibility reports at roots of unity.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmw/algebra.hpp"
#include "bmw/hecke.hpp"
#include "bmw/urat.hpp"
#include "bmw/young.hpp"

namespace bmw {

enum class WenzlForm { Wen, WenzlTwo };

// --- quantum dimensions: closed forms ---------------------------------------

inline RingElem qdim_wenzl(const Partition& l, WenzlForm form = WenzlForm::Wen) {
  RingElem r(1);
  Partition lt = l.transpose();
  if (form == WenzlForm::Wen) {
    for (const Cell& c : l.cells()) {
      int hl = hook_length(l, c);
      if (c.row == c.col) {
        r *= (ybracket(l.part(c.row) - lt.part(c.col)) + qint(hl)) / qint(hl);
      } else {
        r *= ybracket(dfun(l, c, false)) / qint(hl);
      }
    }
    return r;
  }
  for (const Cell& c : l.cells()) {
    int hl = hook_length(l, c);
    int d = dfun(l, c, false), dp = dfun(l, c, true);
    RingElem num1 = RingElem::a_pow(1) * RingElem::v_pow(d) -
                    RingElem::a_pow(-1) * RingElem::v_pow(-d);
    RingElem den1 = RingElem::v_pow(hl) - RingElem::v_pow(-hl);
    RingElem num2 = RingElem::a_pow(1) * RingElem::v_pow(dp) +
                    RingElem::a_pow(-1) * RingElem::v_pow(-dp);
    RingElem den2 = RingElem::v_pow(hl) + RingElem::v_pow(-hl);
    r *= (num1 / den1) * (num2 / den2);
  }
  return r;
}

// Eigenvalues b_j attached to the corners of mu: alpha s^{2 cn} for addable
// cells, alpha^{-1} s^{-2 cn} for removable ones.
inline std::vector<RingElem> corner_eigenvalues(const Partition& mu) {
  std::vector<RingElem> out;
  Corners cs = corners(mu);
  for (const Cell& c : cs.addable)
    out.push_back(RingElem::alpha_pow(1) * RingElem::s_pow(2 * content(c)));
  for (const Cell& c : cs.removable)
    out.push_back(RingElem::alpha_pow(-1) * RingElem::s_pow(-2 * content(c)));
  return out;
}

// <lambda>/<mu> by the one-cell recursion.
inline RingElem qdim_ratio(const Partition& l, const Partition& mu) {
  Cell grown = l.cell_difference(mu);
  RingElem b = RingElem::alpha_pow(1) * RingElem::s_pow(2 * content(grown));
  RingElem r = RingElem::alpha_pow(1) * b.inverse() *
               ((b - b.inverse()) / skein_z() + RingElem(1));
  for (const RingElem& bj : corner_eigenvalues(mu)) {
    if (bj == b) continue;
    r *= (b - bj.inverse()) / (b - bj);
  }
  return r;
}

// Q(mu, u) of the residue law, as a rational function in u.
inline URat q_series(const Partition& mu) {
  RingElem z = skein_z();
  RingElem al = RingElem::alpha_pow(1);
  // (alpha/z)(u^2 - 1) + u alpha, over (u^2 - 1), times prod (u - 1/bj)/(u - bj)
  UPoly head = UPoly{{-(al / z), al, al / z}};
  UPoly num = head;
  UPoly den = UPoly{{RingElem(-1), RingElem(0), RingElem(1)}};
  for (const RingElem& bj : corner_eigenvalues(mu)) {
    num = num * UPoly::linear(-bj.inverse(), RingElem(1));
    den = den * UPoly::linear(-bj, RingElem(1));
  }
  return URat{num, den};
}

// res_{u=b} Q(mu,u)/u for the addable cell giving lambda.
inline RingElem q_series_residue(const Partition& mu, const Partition& l) {
  Cell grown = l.cell_difference(mu);
  RingElem b = RingElem::alpha_pow(1) * RingElem::s_pow(2 * content(grown));
  URat q = q_series(mu);
  URat q_over_u{q.num, q.den * UPoly{{RingElem(0), RingElem(1)}}};
  return q_over_u.residue(b);
}

// Prop. 7.5 closed forms for the B/D/C specializations (lambda with at most
// n rows; the D case splits on lambda_n).
inline RingElem qdim_specialized(const Partition& l, const Specialization& sp) {
  int n = sp.param;
  if (l.rows() > n && sp.kind != Specialization::Kind::Generic &&
      sp.kind != Specialization::Kind::Brauer)
    throw RowBound("partition " + l.str() + " has more than " + std::to_string(n) + " rows");
  switch (sp.kind) {
    case Specialization::Kind::B: {
      RingElem r(1);
      for (int j = 1; j <= n; ++j)
        r *= qint2(2 * (n + l.part(j) - j) + 1) / qint2(2 * (n - j) + 1);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          r *= qint(2 * n + l.part(i) - i + l.part(j) - j + 1) *
               qint(l.part(i) - i - l.part(j) + j) /
               (qint(2 * n - i - j + 1) * qint(j - i));
      return r;
    }
    case Specialization::Kind::D: {
      RingElem r(1);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          r *= qint(2 * n + l.part(i) - i + l.part(j) - j) *
               qint(l.part(i) - i - l.part(j) + j) /
               (qint(2 * n - i - j) * qint(j - i));
      if (l.part(n) != 0) r *= RingElem(2);
      return r;
    }
    case Specialization::Kind::C: {
      RingElem r = l.size() % 2 ? RingElem(-1) : RingElem(1);
      for (int j = 1; j <= n; ++j)
        r *= qint(2 * n + 2 + 2 * l.part(j) - 2 * j) / qint(2 * n + 2 - 2 * j);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          r *= qint(2 * n + 2 + l.part(i) - i + l.part(j) - j) *
               qint(l.part(i) - i - l.part(j) + j) /
               (qint(2 * n + 2 - i - j) * qint(j - i));
      return r;
    }
    case Specialization::Kind::Brauer:
      return specialize(qdim_wenzl(l), sp);
    case Specialization::Kind::Generic:
      return qdim_wenzl(l);
  }
  throw Error("unreachable");
}

// Twist coefficient of Eq. (fr): full ribbon twist of the lambda-cable.
inline RingElem twist_coefficient(const Partition& mu) {
  int sum_cn = 0;
  for (const Cell& c : mu.cells()) sum_cn += content(c);
  return RingElem::alpha_pow(mu.size()) * RingElem::s_pow(2 * sum_cn);
}

// --- feasibility at roots of unity -------------------------------------------

// Vanishing tests for quantum integers and recursion factors when v = s^(1/2)
// is a primitive root of unity of order R (R = 0 means generic v). All tests
// are exact integer arithmetic on exponents.
namespace feas {

inline bool v_pow_is_one(int R, long e) { return R > 0 && ((e % R) + R) % R == 0; }
inline bool v_pow_is_minus_one(int R, long e) {
  if (R == 0 || R % 2 != 0) return false;
  long m = ((e % R) + R) % R;
  return m == R / 2;
}
// [m] with m = two_m/2 vanishes iff v^(2*two_m) = 1 (and v^4 != 1).
inline bool qint_vanishes(int R, int two_m) {
  if (two_m == 0) return true;
  return v_pow_is_one(R, 2L * two_m);
}
// eps1 v^p - eps2 v^(-q) = 0 iff v^(p+q) = eps2/eps1.
inline bool diff_vanishes(int R, int eps1, long p, int eps2, long q) {
  if (eps1 == eps2) return v_pow_is_one(R, p + q);
  return v_pow_is_minus_one(R, p + q);
}

}  // namespace feas

struct FeasibilityCheck {
  std::string description;
  bool pass = true;
  std::string witness;  // offending quantity when failed
};

struct FeasibilityReport {
  Partition shape;
  Specialization spec;
  std::vector<FeasibilityCheck> ytilde_checks;  // the three bullets for y~
  std::vector<FeasibilityCheck> ptilde_checks;  // and for p~
  bool pass() const {
    for (const auto& c : ytilde_checks)
      if (!c.pass) return false;
    for (const auto& c : ptilde_checks)
      if (!c.pass) return false;
    return true;
  }
};

// --- the idempotent context ---------------------------------------------------

class IdemContext {
 public:
  explicit IdemContext(Engine& engine) : K_(engine) {}

  Engine& engine() { return K_; }
  HeckeContext& hecke() { return H_; }

  // Any lifting of h to K_n: its braid-word certificate read in the tangle
  // category (positive reduced words are canonical lifts).
  Morphism lift(const HeckeElem& h) {
    std::vector<CertTerm> cert = h.certificate();
    Morphism r = Morphism::zero(h.n, h.n);
    for (const CertTerm& t : cert) {
      Word w = word_id(h.n);
      for (int g : t.word) w.append(word_e(h.n, g > 0 ? g : -g, g > 0 ? +1 : -1));
      r += t.coeff * K_.from_word(w);
    }
    return r;
  }

  // The quotient map pi_n: K_n -> H_n: permutation lifts go to permutation
  // braids, everything with a hook dies.
  HeckeElem project(const Morphism& x) {
    if (!x.square()) throw StrandMismatch("project");
    HeckeElem r = HeckeElem::zero(x.n_in);
    for (const auto& [m, c] : x.terms)
      if (m.is_permutation()) r.add(m.to_permutation(), c);
    return r;
  }

  const RingElem& qdim(const Partition& l) {
    auto it = qdim_.find(l);
    if (it == qdim_.end()) it = qdim_.emplace(l, qdim_wenzl(l)).first;
    if (it->second.is_zero()) throw ZeroQuantumDimension(l.str());
    return it->second;
  }

  // The minimal idempotent y~_lambda on |lambda| strands, built by the
  // one-parent recursion: the parent mu is lambda minus the last cell of its
  // last row, so the embedding needs no reindexing braid.
  const Morphism& ytilde(const Partition& l) {
    auto it = ytilde_.find(l);
    if (it != ytilde_.end()) return it->second;
    int m = l.size();
    Morphism result = Morphism::zero(m, m);
    if (m <= 1) {
      result = K_.identity(m);
    } else {
      Partition mu = l.remove_cell(l.last_cell());
      Morphism yhat = lift(H_.young_idem(l));
      Morphism ymu1 = K_.tensor_id(ytilde(mu), 1);
      result = K_.mul(K_.mul(yhat, ymu1), yhat);
      for (const Cell& c : corners(mu).removable) {
        Partition nu = mu.remove_cell(c);
        const Morphism& pair = ytilde_pair(mu, nu);
        result = result - K_.mul(K_.mul(yhat, pair), yhat);
      }
      // The construction yields an idempotent on the nose when the quantum
      // integers [j], j < lambda_1 + lambda^T_1, are invertible (generic).
      Morphism sq = K_.mul(result, result);
      if (!(sq == result)) {
        RingElem c;
        if (!sq.proportional_to(result, &c) || c.is_zero())
          throw FeasibilityViolated("ytilde " + l.str() + " is not quasi-idempotent");
        result = c.inverse() * result;
      }
    }
    return ytilde_.emplace(l, std::move(result)).first->second;
  }

  // y~_(lambda,nu) on |lambda|+1 strands, nu = lambda minus one cell; an
  // idempotent by Eq. (yln), with the removed-cell strand routed to the end
  // by a positive cycle braid.
  const Morphism& ytilde_pair(const Partition& l, const Partition& nu) {
    auto key = std::make_pair(l, nu);
    auto it = ypair_.find(key);
    if (it != ypair_.end()) return it->second;
    Cell removed = l.cell_difference(nu);
    int m = l.size();
    int pos = l.row_reading_pos(removed);
    Morphism yl1 = K_.tensor_id(ytilde(l), 1);
    Morphism mid = K_.mul(K_.tensor_id(ytilde(nu), 2), K_.gen_h(m + 1, m));
    if (pos != m) {
      Morphism c = pair_conjugator(m, pos, false);
      Morphism cinv = pair_conjugator(m, pos, true);
      mid = K_.mul(K_.mul(c, mid), cinv);
    }
    Morphism raw = K_.mul(K_.mul(yl1, mid), yl1);
    // Eq. (yln) normalizes by <nu>/<lambda>; the cycle braid can contribute a
    // further unit, so force idempotency and keep the stated coefficient as a
    // cross-check in the straight case.
    Morphism sq = K_.mul(raw, raw);
    RingElem c;
    if (!sq.proportional_to(raw, &c) || c.is_zero())
      throw ZeroQuantumDimension("pair idempotent " + l.str() + " / " + nu.str());
    Morphism result = c.inverse() * raw;
    return ypair_.emplace(std::move(key), std::move(result)).first->second;
  }

  // a_t = alpha_t y~, b_t = y~ beta_t for a standard tableau, with
  // b_t a_t = y~_{lambda(t)} exactly.
  const Morphism& atilde(const StdTableau& t) { return ab(t).first; }
  const Morphism& btilde(const StdTableau& t) { return ab(t).second; }

  const Morphism& ptilde(const StdTableau& t) {
    auto it = ptilde_.find(t);
    if (it != ptilde_.end()) return it->second;
    Morphism p = K_.mul(atilde(t), btilde(t));
    return ptilde_.emplace(t, std::move(p)).first->second;
  }

  // p~_(t,nu) = (a_t ox 1) y~_(lambda,nu) (b_t ox 1).
  Morphism ptilde_pair(const StdTableau& t, const Partition& nu) {
    const Morphism& pair = ytilde_pair(t.shape(), nu);
    return K_.mul(K_.mul(K_.tensor_id(atilde(t), 1), pair), K_.tensor_id(btilde(t), 1));
  }

  // p~+_t = p~_t ox 1 - sum_nu p~_(t,nu), an idempotent in K_{|t|+1}.
  const Morphism& ptilde_plus(const StdTableau& t) {
    auto it = pplus_.find(t);
    if (it != pplus_.end()) return it->second;
    Morphism r = K_.tensor_id(ptilde(t), 1);
    for (const Cell& c : corners(t.shape()).removable)
      r = r - ptilde_pair(t, t.shape().remove_cell(c));
    return pplus_.emplace(t, std::move(r)).first->second;
  }

  // The section s_n: H_n -> K_n, via s(x) = sum p~+_t x^ p~+_tau.
  Morphism section(const HeckeElem& x) {
    int n = x.n;
    if (n < 1) throw StrandMismatch("section needs n >= 1");
    if (n == 1) return lift(x);
    Morphism xhat = lift(x);
    std::vector<StdTableau> tabs;
    for (const Partition& l : partitions_of(n - 1))
      for (const StdTableau& t : enumerate_standard(l)) tabs.push_back(t);
    Morphism r = Morphism::zero(n, n);
    for (const StdTableau& t : tabs) {
      Morphism left = K_.mul(ptilde_plus(t), xhat);
      for (const StdTableau& tau : tabs) r += K_.mul(left, ptilde_plus(tau));
    }
    return r;
  }

  // --- matrix units ------------------------------------------------------------

  struct Unit {
    Morphism a, b, q;  // a_Lambda, b_Lambda, q_Lambda = a b
  };

  const Unit& unit(const UpDownTableau& L) {
    auto it = units_.find(L);
    if (it != units_.end()) return it->second;
    Unit u;
    int n = L.length();
    if (n == 1) {
      u.a = u.b = u.q = K_.identity(1);
    } else {
      const Unit& prev = unit(L.parent());
      const Partition& shape = L.shape();
      const Partition& pshape = L.at(n - 1);
      Morphism a1 = K_.tensor_id(prev.a, 1), b1 = K_.tensor_id(prev.b, 1);
      if (shape.size() == pshape.size() + 1) {
        // up step: route the new strand to its row-reading slot
        int m = shape.size();
        int pos = shape.row_reading_pos(shape.cell_difference(pshape));
        Perm rho = insertion_cycle(m, pos);
        const Morphism& y = ytilde(shape);
        u.a = K_.mul(K_.mul(a1, K_.perm_braid(m, rho)), y);
        u.b = K_.mul(y, K_.mul(K_.perm_braid_inverse(m, rho), b1));
      } else {
        // down step: cap the removed-cell strand against the new strand
        int m = pshape.size();
        int pos = pshape.row_reading_pos(pshape.cell_difference(shape));
        const Morphism& y = ytilde(shape);
        Morphism mid_a = K_.mul(K_.tensor_id(y, 2), K_.cap_last(m + 1));
        Morphism mid_b = K_.mul(K_.cup_last(m + 1), K_.tensor_id(y, 2));
        if (pos != m) {
          mid_a = K_.mul(pair_conjugator(m, pos, false), mid_a);
          mid_b = K_.mul(mid_b, pair_conjugator(m, pos, true));
        }
        u.a = (qdim(shape) / qdim(pshape)) * K_.mul(a1, mid_a);
        u.b = K_.mul(mid_b, b1);
      }
      // enforce b_Lambda a_Lambda = y~ exactly (the reindexing braids are
      // units; the defect is a nonzero scalar in the generic field)
      Morphism ba = K_.mul(u.b, u.a);
      RingElem c;
      if (!ba.proportional_to(ytilde(shape), &c) || c.is_zero())
        throw ZeroQuantumDimension("matrix unit " + L.str());
      if (!c.is_one()) u.b = c.inverse() * u.b;
      u.q = K_.mul(u.a, u.b);
    }
    return units_.emplace(L, std::move(u)).first->second;
  }

  // Minimal central idempotent z^(n)_lambda.
  Morphism central(int n, const Partition& l) {
    Morphism z = Morphism::zero(n, n);
    for (const UpDownTableau& L : enumerate_updown(n, l)) z += unit(L).q;
    return z;
  }

  // Conjugator for pair constructions: positive braid taking the strand at
  // row-reading position pos to slot m among m+1 strands (inverse: its braid
  // inverse).
  Morphism pair_conjugator(int m, int pos, bool inv) {
    Perm p(static_cast<size_t>(m + 1));
    for (int i = 0; i < m + 1; ++i) {
      if (i == pos - 1)
        p[static_cast<size_t>(i)] = m - 1;
      else if (i >= pos && i <= m - 1)
        p[static_cast<size_t>(i)] = i - 1;
      else
        p[static_cast<size_t>(i)] = i;
    }
    return inv ? K_.perm_braid_inverse(m + 1, p) : K_.perm_braid(m + 1, p);
  }

  // --- verification helpers ------------------------------------------------

  // Engine check of Eq. (fr): the full positive twist braid on the cable
  // multiplies y~_mu by s^{2 sum cn}; the ribbon twist adds alpha^{|mu|}.
  bool verify_twist(const Partition& mu) {
    int m = mu.size();
    if (m == 0) return true;
    Word w = word_id(m);
    for (int k = 1; k <= m - 1; ++k)
      for (int i = k; i >= 1; --i) w.append(word_e(m, i));
    // full twist = (s1)(s2 s1)...(s_{m-1}...s1) squared
    Word full = w;
    full.append(w);
    Morphism tw = K_.from_word(full);
    int sum_cn = 0;
    for (const Cell& c : mu.cells()) sum_cn += content(c);
    return K_.mul(tw, ytilde(mu)) == RingElem::s_pow(2 * sum_cn) * ytilde(mu);
  }

  // Braiding coefficients of Eqs. (oi) and (io), verified as eigenvalues of
  // the encircling braid word (tau without its framing curl).
  RingElem braiding_coefficient(const Partition& l, const Partition& mu, bool grow) {
    if (grow) {
      Cell c = mu.cell_difference(l);
      return RingElem::s_pow(2 * content(c));
    }
    Cell c = l.cell_difference(mu);
    return RingElem::alpha_pow(-2) * RingElem::s_pow(-2 * content(c));
  }

  bool verify_braiding(const Partition& l, const Partition& mu, bool grow) {
    if (grow) {
      // conjugate y~_mu so the grown-cell strand is last, then encircle it
      int m = mu.size();
      int pos = mu.row_reading_pos(mu.cell_difference(l));
      Morphism y = ytilde(mu);
      if (pos != m) {
        // express y~_mu in the arrangement where the grown-cell strand is last
        Perm rho = insertion_cycle(m, pos);
        y = K_.mul(K_.mul(K_.perm_braid(m, rho), y), K_.perm_braid_inverse(m, rho));
      }
      Morphism enc = K_.from_word(K_.jm_word(m));
      return K_.mul(enc, y) == braiding_coefficient(l, mu, true) * y;
    }
    const Morphism& pair = ytilde_pair(l, mu);
    Morphism enc = K_.from_word(K_.jm_word(l.size() + 1));
    return K_.mul(enc, pair) == braiding_coefficient(l, mu, false) * pair;
  }

  // --- feasibility -----------------------------------------------------------

  FeasibilityReport feasibility(const Partition& l, const Specialization& sp) {
    FeasibilityReport rep;
    rep.shape = l;
    rep.spec = sp;
    rep.ytilde_checks = bullet_checks(l, chain_parent(l), sp);
    // p~_t for the row-reading filling: same mu = lambda(t') chain
    rep.ptilde_checks = bullet_checks(l, chain_parent(l), sp);
    return rep;
  }

 private:
  std::pair<Morphism, Morphism>& ab(const StdTableau& t) {
    auto it = ab_.find(t);
    if (it != ab_.end()) return it->second;
    const Partition l = t.shape();
    const Morphism& y = ytilde(l);
    Morphism a = K_.mul(lift(H_.tableau_morphisms(t).alpha), y);
    Morphism b = K_.mul(y, lift(H_.tableau_morphisms(t).beta));
    // force b a = y~ (scalar defect from the lifted insertion braids)
    Morphism ba = K_.mul(b, a);
    RingElem c;
    if (!ba.proportional_to(y, &c) || c.is_zero())
      throw ZeroQuantumDimension("tableau unit " + t.str());
    if (!c.is_one()) b = c.inverse() * b;
    return ab_.emplace(t, std::make_pair(std::move(a), std::move(b))).first->second;
  }

  static Partition chain_parent(const Partition& l) {
    return l.size() >= 1 ? l.remove_cell(l.last_cell()) : l;
  }

  // The three bullets for building the idempotent of shape l through parent mu.
  std::vector<FeasibilityCheck> bullet_checks(const Partition& l, const Partition& mu,
                                              const Specialization& sp) {
    std::vector<FeasibilityCheck> out;
    int R = sp.root_order;
    // bullet 1: [m] != 0 for m < lambda_1 + lambda^T_1
    {
      FeasibilityCheck c;
      int bound = l.empty() ? 1 : l.part(1) + l.transpose().part(1);
      c.description = "[m] nonzero for m < " + std::to_string(bound);
      for (int m = 1; m < bound; ++m) {
        if (sp.kind == Specialization::Kind::Brauer) break;  // [m] -> m != 0
        if (feas::qint_vanishes(R, 2 * m)) {
          c.pass = false;
          c.witness = "[" + std::to_string(m) + "] = 0";
          break;
        }
      }
      out.push_back(c);
    }
    // bullet 2: the parent idempotent is defined (recurse down the chain)
    {
      FeasibilityCheck c;
      c.description = "parent idempotent for " + mu.str() + " defined";
      Partition cur = mu;
      while (cur.size() >= 2) {
        Partition par = chain_parent(cur);
        for (const auto& chk : bullet_checks(cur, par, sp)) {
          if (!chk.pass) {
            c.pass = false;
            c.witness = "at " + cur.str() + ": " + chk.witness;
            break;
          }
        }
        if (!c.pass) break;
        cur = par;
      }
      out.push_back(c);
    }
    // bullet 3: <mu>/<nu> != 0 for every nu = mu minus a cell
    {
      FeasibilityCheck c;
      c.description = "ratios <" + mu.str() + ">/<nu> nonzero";
      for (const Cell& cc : corners(mu).removable) {
        Partition nu = mu.remove_cell(cc);
        if (!ratio_nonzero(mu, nu, sp)) {
          c.pass = false;
          c.witness = "<" + mu.str() + ">/<" + nu.str() + "> = 0";
          break;
        }
      }
      out.push_back(c);
    }
    return out;
  }

  // Does the Eq. (rec) ratio <mu>/<nu> vanish under sp (with optional root of
  // unity for v)? Works factor by factor in exact exponent arithmetic.
  bool ratio_nonzero(const Partition& mu, const Partition& nu, const Specialization& sp) {
    if (sp.kind == Specialization::Kind::Brauer) {
      RingElem r = specialize(qdim_ratio(mu, nu), sp);
      return !r.is_zero();
    }
    if (sp.root_order == 0) return true;  // generic v: the ratio is a nonzero function
    int R = sp.root_order;
    // alpha = eps_a * s^ka (B/D/C); Generic alpha never creates vanishing.
    bool have_alpha = true;
    int eps_a = 1, ka = 0;
    switch (sp.kind) {
      case Specialization::Kind::B: ka = 2 * sp.param; break;
      case Specialization::Kind::D: ka = 2 * sp.param - 1; break;
      case Specialization::Kind::C: ka = 2 * sp.param + 1; eps_a = -1; break;
      default: have_alpha = false; break;
    }
    Cell grown = mu.cell_difference(nu);
    int cb = content(grown);
    // factor (b - b^-1)/(s-s^-1) + 1 with b = alpha s^(2cb):
    if (have_alpha) {
      // numerator: eps v^(2K) - eps v^(-2K) + v^2 - v^-2, K = ka + 2cb
      long K = ka + 2L * cb;
      bool vanish;
      if (eps_a > 0) {
        // (v^{K+1} - v^{-(K+1)})(v^{K-1} + v^{-(K-1)})
        vanish = feas::v_pow_is_one(R, 2 * (K + 1)) ||
                 feas::v_pow_is_minus_one(R, 2 * (K - 1));
      } else {
        // -(v^{K-1} - v^{-(K-1)})(v^{K+1} + v^{-(K+1)})
        vanish = feas::v_pow_is_one(R, 2 * (K - 1)) ||
                 feas::v_pow_is_minus_one(R, 2 * (K + 1));
      }
      if (vanish) return false;
    }
    // factors (b - bj^-1)/(b - bj): numerators b - bj^-1 must not vanish;
    // vanishing denominators cannot occur for distinct eigenvalues generically
    // but can at a root: treat either as a zero/pole and report not-nonzero.
    Corners cs = corners(nu);
    auto eig = [&](const Cell& c, bool addable) {
      // returns (eps, exponent of s) for b_j
      int e = addable ? eps_a : eps_a;  // alpha^{+-1} keeps the sign
      int k = addable ? ka + 2 * content(c) : -(ka + 2 * content(c));
      return std::make_pair(e, k);
    };
    if (have_alpha) {
      auto [be, bk] = eig(grown, true);
      auto factor_bad = [&](int ee, int kk) {
        // b - bj^{-1} = be v^{2bk} - ee v^{-2kk}; b - bj similar
        bool num0 = feas::diff_vanishes(R, be, 2L * bk, ee, 2L * kk);
        bool den0 = feas::diff_vanishes(R, be, 2L * bk, ee, -2L * kk);
        return num0 || den0;
      };
      for (const Cell& c : cs.addable) {
        if (c == grown) continue;
        auto [ee, kk] = eig(c, true);
        if (factor_bad(ee, kk)) return false;
      }
      for (const Cell& c : cs.removable) {
        auto [ee, kk] = eig(c, false);
        if (factor_bad(ee, kk)) return false;
      }
    }
    return true;
  }

  Engine& K_;
  HeckeContext H_;
  std::map<Partition, RingElem> qdim_;
  std::map<Partition, Morphism> ytilde_;
  std::map<std::pair<Partition, Partition>, Morphism> ypair_;
  std::map<StdTableau, std::pair<Morphism, Morphism>> ab_;
  std::map<StdTableau, Morphism> ptilde_, pplus_;
  std::map<UpDownTableau, Unit> units_;
};

}  // namespace bmw

#endif
