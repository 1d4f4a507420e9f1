#ifndef BMW_HECKE_HPP
#define BMW_HECKE_HPP

// The Hecke algebra H_n on the positive permutation braid basis w_pi, with
// symmetrizers, Young idempotents, tableau morphisms, the Markov trace, and
// quantum dimensions. Elements carry their basis decomposition; braid-word
// certificates are derived from reduced words of the basis permutations.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bmw/errors.hpp"
#include "bmw/ring.hpp"
#include "bmw/young.hpp"

namespace bmw {

// Permutations as 0-based image vectors: strand entering bottom i exits at
// top perm[i]. compose(f, g) stacks f below g.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}
inline Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = g[static_cast<size_t>(f[i])];
  return r;
}
inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}
inline int perm_length(const Perm& p) {
  int l = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++l;
  return l;
}
inline Perm transposition(int n, int i) {  // s_i, 1-based i
  Perm p = perm_identity(n);
  std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
  return p;
}
// Reduced word (1-based generator indices) with w_pi = s_{i1} ... s_{ik}
// stacked bottom to top.
inline std::vector<int> reduced_word(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm top = perm_identity(n);         // current top sequence: strand at position
  Perm target = inverse(p);            // wanted top sequence
  std::vector<int> word;
  for (int pos = 0; pos < n; ++pos) {
    int k = pos;
    while (top[static_cast<size_t>(k)] != target[static_cast<size_t>(pos)]) ++k;
    for (; k > pos; --k) {
      word.push_back(k);  // swap positions k-1, k (0-based) = generator k (1-based)
      std::swap(top[static_cast<size_t>(k - 1)], top[static_cast<size_t>(k)]);
    }
  }
  return word;
}
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// A signed braid word with a coefficient; the certificate of a HeckeElem is a
// list of these mapping onto the element in the quotient.
struct CertTerm {
  std::vector<int> word;  // positive entries i: sigma_i; negative: sigma_{-i}^{-1}
  RingElem coeff;
};

struct HeckeElem {
  int n = 0;
  std::map<Perm, RingElem> terms;

  static HeckeElem zero(int n) { return HeckeElem{n, {}}; }
  static HeckeElem unit(int n) {
    HeckeElem r{n, {}};
    r.terms.emplace(perm_identity(n), RingElem(1));
    return r;
  }
  static HeckeElem basis(int n, Perm p, RingElem c = RingElem(1)) {
    HeckeElem r{n, {}};
    if (!c.is_zero()) r.terms.emplace(std::move(p), std::move(c));
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  void add(const Perm& p, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  HeckeElem& operator+=(const HeckeElem& o) {
    if (o.n != n) throw StrandMismatch("HeckeElem +=");
    for (const auto& [p, c] : o.terms) add(p, c);
    return *this;
  }
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) {
    if (a.n != b.n) throw StrandMismatch("HeckeElem -");
    for (const auto& [p, c] : b.terms) a.add(p, -c);
    return a;
  }
  friend HeckeElem operator*(const RingElem& c, HeckeElem a) {
    if (c.is_zero()) return zero(a.n);
    for (auto& [p, k] : a.terms) k *= c;
    return a;
  }
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return a.n == b.n && a.terms == b.terms;
  }
  const RingElem& coeff(const Perm& p) const {
    static const RingElem kZero;
    auto it = terms.find(p);
    return it == terms.end() ? kZero : it->second;
  }
  bool proportional_to(const HeckeElem& o, RingElem* ratio = nullptr) const {
    if (is_zero() || o.is_zero() || n != o.n || terms.size() != o.terms.size()) return false;
    RingElem r = terms.begin()->second / o.coeff(terms.begin()->first);
    for (const auto& [p, c] : terms)
      if (o.coeff(p) * r != c) return false;
    if (ratio) *ratio = r;
    return true;
  }

  // Canonical braid-word certificate: reduced words of the basis permutations.
  std::vector<CertTerm> certificate() const {
    std::vector<CertTerm> out;
    for (const auto& [p, c] : terms) out.push_back({reduced_word(p), c});
    return out;
  }
};

// Right multiplication by sigma_i^{sign}: the permutation braid recursion.
inline HeckeElem hecke_mul_gen(const HeckeElem& a, int i, int sign) {
  if (i < 1 || i > a.n - 1) throw StrandMismatch("hecke generator index");
  Perm s = transposition(a.n, i);
  RingElem z = skein_z();
  HeckeElem r = HeckeElem::zero(a.n);
  for (const auto& [p, c] : a.terms) {
    Perm ps = compose(p, s);
    bool ascends = perm_length(ps) > perm_length(p);
    if (sign > 0) {
      if (ascends) {
        r.add(ps, c);
      } else {
        r.add(ps, c);
        r.add(p, z * c);
      }
    } else {
      if (!ascends) {
        r.add(ps, c);
      } else {
        r.add(ps, c);
        r.add(p, -(z * c));
      }
    }
  }
  return r;
}

inline HeckeElem hecke_mul_braid(HeckeElem a, const std::vector<int>& word) {
  for (int g : word) a = hecke_mul_gen(a, g > 0 ? g : -g, g > 0 ? +1 : -1);
  return a;
}

inline HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b) {
  if (a.n != b.n) throw StrandMismatch("hecke_mul");
  HeckeElem r = HeckeElem::zero(a.n);
  for (const auto& [p, c] : b.terms) {
    HeckeElem ap = hecke_mul_braid(a, reduced_word(p));
    for (const auto& [q, k] : ap.terms) r.add(q, k * c);
  }
  return r;
}

inline HeckeElem hecke_sigma(int n, int i, int sign = +1) {
  return hecke_mul_gen(HeckeElem::unit(n), i, sign);
}

// Embeds x in H_m into H_n acting on strands offset+1 .. offset+m.
inline HeckeElem hecke_embed(const HeckeElem& x, int n, int offset) {
  if (offset + x.n > n) throw StrandMismatch("hecke_embed");
  HeckeElem r = HeckeElem::zero(n);
  for (const auto& [p, c] : x.terms) {
    Perm q = perm_identity(n);
    for (int i = 0; i < x.n; ++i)
      q[static_cast<size_t>(offset + i)] = offset + p[static_cast<size_t>(i)];
    r.add(q, c);
  }
  return r;
}

// Symmetrizer f_k / antisymmetrizer g_k on strands offset+1..offset+k in H_n.
inline HeckeElem hecke_symmetrizer(int n, int offset, int k, bool anti) {
  for (int j = 1; j <= k; ++j)
    if (qint(j).is_zero()) throw NonInvertibleQuantumInteger("[" + std::to_string(j) + "]");
  RingElem norm = qfactorial(k).inverse() * RingElem::s_pow(anti ? (k * (k - 1)) / 2
                                                                 : -(k * (k - 1)) / 2);
  HeckeElem r = HeckeElem::zero(k);
  for (const Perm& p : all_perms(k)) {
    int l = perm_length(p);
    RingElem c = anti ? (l % 2 ? -RingElem::s_pow(-l) : RingElem::s_pow(-l))
                      : RingElem::s_pow(l);
    r.add(p, norm * c);
  }
  return hecke_embed(r, n, offset);
}

inline HeckeElem symmetrizer_f(int n) { return hecke_symmetrizer(n, 0, n, false); }
inline HeckeElem antisymmetrizer_g(int n) { return hecke_symmetrizer(n, 0, n, true); }

// Positive permutation braid elements and their braid inverses.
inline HeckeElem hecke_perm_braid(int n, const Perm& p) { return HeckeElem::basis(n, p); }
inline HeckeElem hecke_perm_braid_inverse(int n, const Perm& p) {
  std::vector<int> w = reduced_word(p);
  HeckeElem r = HeckeElem::unit(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = hecke_mul_gen(r, *it, -1);
  return r;
}

// The cycle braid rho moving the top strand m = |lambda| to the row-reading
// slot of the cell c in lambda (1-based position pos): sigma_{m-1}...sigma_pos.
inline Perm insertion_cycle(int m, int pos) {
  Perm p(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (i == m - 1)
      p[static_cast<size_t>(i)] = pos - 1;
    else if (i >= pos - 1)
      p[static_cast<size_t>(i)] = i + 1;
    else
      p[static_cast<size_t>(i)] = i;
  }
  return p;
}

class HeckeContext {
 public:
  // The minimal Young idempotent y_lambda on |lambda| strands, cells in
  // row-reading order: normalized row-symmetrizer / column-antisymmetrizer
  // product.
  const HeckeElem& young_idem(const Partition& l) {
    auto it = young_.find(l);
    if (it != young_.end()) return it->second;
    int m = l.size();
    if (m == 0) {
      return young_.emplace(l, HeckeElem::unit(0)).first->second;
    }
    HeckeElem F = HeckeElem::unit(m);
    int off = 0;
    for (int i = 1; i <= l.rows(); ++i) {
      F = hecke_mul(F, hecke_symmetrizer(m, off, l.part(i), false));
      off += l.part(i);
    }
    Partition lt = l.transpose();
    HeckeElem G = HeckeElem::unit(m);
    off = 0;
    for (int j = 1; j <= lt.rows(); ++j) {
      G = hecke_mul(G, hecke_symmetrizer(m, off, lt.part(j), true));
      off += lt.part(j);
    }
    // sigma maps row-reading positions to column-reading positions.
    Perm sigma(static_cast<size_t>(m));
    {
      std::map<Cell, int> cpos;
      int q = 0;
      for (int j = 1; j <= lt.rows(); ++j)
        for (int i = 1; i <= lt.part(j); ++i) cpos[Cell{i, j}] = q++;
      int p = 0;
      for (const Cell& c : l.cells()) sigma[static_cast<size_t>(p++)] = cpos[c];
    }
    HeckeElem W = hecke_perm_braid(m, sigma);
    HeckeElem Winv = hecke_perm_braid_inverse(m, sigma);
    HeckeElem P = hecke_mul(F, hecke_mul(W, hecke_mul(G, Winv)));
    HeckeElem P2 = hecke_mul(P, P);
    RingElem c;
    if (!P2.proportional_to(P, &c) || c.is_zero())
      throw NormalizationVanishes("young idempotent " + l.str());
    HeckeElem y = c.inverse() * P;
    return young_.emplace(l, std::move(y)).first->second;
  }

  struct TableauMorphisms {
    HeckeElem alpha, beta, path;  // alpha_t, beta_t, p_t = alpha_t beta_t
  };

  const TableauMorphisms& tableau_morphisms(const StdTableau& t) {
    auto it = tabs_.find(t);
    if (it != tabs_.end()) return it->second;
    int n = t.size();
    TableauMorphisms tm;
    if (n == 1) {
      tm.alpha = tm.beta = tm.path = HeckeElem::unit(1);
    } else {
      const TableauMorphisms& prev = tableau_morphisms(t.parent());
      Partition l = t.shape();
      int pos = l.row_reading_pos(t.cell(n));
      Perm rho = insertion_cycle(n, pos);
      const HeckeElem& y = young_idem(l);
      tm.alpha = hecke_mul(hecke_embed(prev.alpha, n, 0),
                           hecke_mul(hecke_perm_braid(n, rho), y));
      tm.beta = hecke_mul(y, hecke_mul(hecke_perm_braid_inverse(n, rho),
                                       hecke_embed(prev.beta, n, 0)));
      // The insertion braid is one choice of the standard isomorphism; it can
      // shift beta_t alpha_t off y_lambda by a unit. Rescale beta_t so that
      // beta_t alpha_t = y_lambda, which p_t^2 = p_t requires.
      HeckeElem ba = hecke_mul(tm.beta, tm.alpha);
      RingElem c;
      if (!ba.proportional_to(y, &c) || c.is_zero())
        throw NormalizationVanishes("tableau morphisms for " + t.str());
      if (!c.is_one()) tm.beta = c.inverse() * tm.beta;
      tm.path = hecke_mul(tm.alpha, tm.beta);
    }
    return tabs_.emplace(t, std::move(tm)).first->second;
  }

  // Minimal central idempotent z_lambda = sum of p_t over tableaux of shape lambda.
  HeckeElem central_idem(const Partition& l) {
    HeckeElem z = HeckeElem::zero(l.size());
    for (const StdTableau& t : enumerate_standard(l)) z += tableau_morphisms(t).path;
    return z;
  }

 private:
  std::map<Partition, HeckeElem> young_;
  std::map<StdTableau, TableauMorphisms> tabs_;
};

// Conditional expectation H_n -> H_{n-1} (partial closure of the last strand)
// and the Markov trace normalized by tr(1_n) = delta_h^n, positive
// stabilization multiplying by alpha.
inline HeckeElem hecke_expectation(const HeckeElem& x) {
  int n = x.n;
  if (n < 1) throw StrandMismatch("hecke_expectation");
  RingElem dh = homfly_loop_value();
  HeckeElem r = HeckeElem::zero(n - 1);
  for (const auto& [p, c] : x.terms) {
    if (p[static_cast<size_t>(n - 1)] == n - 1) {
      Perm q(p.begin(), p.end() - 1);
      r.add(q, dh * c);
      continue;
    }
    // p = u . s_{n-1} . v with u, v in S_{n-1} and additive lengths;
    // v is the minimal coset representative sending n-2 to b = p(n-1).
    int b = p[static_cast<size_t>(n - 1)];
    Perm v = perm_identity(n);
    v[static_cast<size_t>(n - 2)] = b;
    for (int i = b; i <= n - 3; ++i) v[static_cast<size_t>(i)] = i + 1;
    Perm vinv = inverse(v);
    Perm s = transposition(n, n - 1);
    Perm u = compose(compose(p, vinv), s);
    if (perm_length(u) + 1 + perm_length(v) != perm_length(p))
      throw Error("hecke_expectation: non-reduced coset decomposition");
    Perm u1(u.begin(), u.end() - 1), v1(v.begin(), v.end() - 1);
    HeckeElem prod = hecke_mul(HeckeElem::basis(n - 1, u1), HeckeElem::basis(n - 1, v1));
    for (const auto& [q, k] : prod.terms) r.add(q, RingElem::alpha_pow(1) * c * k);
  }
  return r;
}

inline RingElem hecke_trace(HeckeElem x) {
  while (x.n > 0) x = hecke_expectation(x);
  if (x.is_zero()) return RingElem(0);
  return x.terms.begin()->second;
}

// Theorem: <y_lambda>^h as the closed-form product over cells.
inline RingElem hecke_qdim(const Partition& l) {
  RingElem r(1);
  for (const Cell& c : l.cells()) {
    int cn = content(c), hl = hook_length(l, c);
    r *= ybracket(cn) / qint(hl);
  }
  return r;
}

}  // namespace bmw

#endif
