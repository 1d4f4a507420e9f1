#ifndef BMW_ALGEBRA_HPP
#define BMW_ALGEBRA_HPP

// The algebra layer over the canonical tangle basis: elements of K_n and of
// the rectangular Hom spaces K(m, n), products through the skein normalizer
// with cached structure constants, quantum and partial traces, and the
// encircling element tau_n.

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bmw/errors.hpp"
#include "bmw/tangle.hpp"

namespace bmw {

// A formal linear combination of canonical basis tangles in K(n_in, n_out).
struct Morphism {
  int n_in = 0, n_out = 0;
  LinComb terms;  // no zero coefficients

  static Morphism zero(int n_in, int n_out) { return Morphism{n_in, n_out, {}}; }
  static Morphism single(Matching m, RingElem c = RingElem(1)) {
    Morphism r{m.nb, m.nt, {}};
    if (!c.is_zero()) r.terms.emplace(std::move(m), std::move(c));
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool square() const { return n_in == n_out; }
  size_t size() const { return terms.size(); }

  void add(const Matching& m, const RingElem& c) { lincomb_add(terms, m, c); }

  Morphism& operator+=(const Morphism& o) {
    if (o.n_in != n_in || o.n_out != n_out) throw StrandMismatch("Morphism +=");
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) {
    if (a.n_in != b.n_in || a.n_out != b.n_out) throw StrandMismatch("Morphism -");
    for (const auto& [m, c] : b.terms) a.add(m, -c);
    return a;
  }
  Morphism operator-() const {
    Morphism r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  friend Morphism operator*(const RingElem& c, Morphism a) {
    if (c.is_zero()) return Morphism::zero(a.n_in, a.n_out);
    for (auto& [m, k] : a.terms) k *= c;
    return a;
  }
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.n_in == b.n_in && a.n_out == b.n_out && a.terms == b.terms;
  }
  const RingElem& coeff(const Matching& m) const {
    static const RingElem kZero;
    auto it = terms.find(m);
    return it == terms.end() ? kZero : it->second;
  }
  bool proportional_to(const Morphism& o, RingElem* ratio = nullptr) const {
    if (is_zero() || o.is_zero()) return false;
    if (n_in != o.n_in || n_out != o.n_out || terms.size() != o.terms.size()) return false;
    RingElem r = terms.begin()->second / o.coeff(terms.begin()->first);
    for (const auto& [m, c] : terms) {
      if (o.coeff(m) * r != c) return false;
    }
    if (ratio) *ratio = r;
    return true;
  }
};

inline int default_max_n() {
  if (const char* s = std::getenv("BMW_MAX_N")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 5;
}

class Engine {
 public:
  explicit Engine(int max_n = default_max_n()) : max_n_(max_n) {}

  int max_n() const { return max_n_; }

  const std::vector<Matching>& basis(int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    check_bound(n);
    auto it = basis_.find(n);
    if (it == basis_.end()) it = basis_.emplace(n, enumerate_basis(n)).first;
    return it->second;
  }

  Morphism identity(int n) {
    check_bound(n);
    return Morphism::single(Matching::identity(n));
  }
  // e_i, e_i^{-1}, h_i on n strands, 1-based i.
  Morphism gen_e(int n, int i, int sign = +1) {
    check_gen(n, i);
    if (sign > 0) return from_word(word_e(n, i, +1));
    return from_word(word_e(n, i, -1));
  }
  Morphism gen_h(int n, int i) {
    check_gen(n, i);
    return from_word(word_h(n, i));
  }

  Morphism from_word(const Word& w) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    check_bound(std::max(w.n_in, w.n_out()));
    Morphism r = Morphism::zero(w.n_in, w.n_out());
    for (const auto& [m, c] : nz_.normalize(w)) r.add(m, c);
    return r;
  }

  // Positive permutation braid as an element: exactly the canonical lift.
  Morphism perm_braid(int n, const std::vector<int>& images0) {
    Matching m;
    m.nb = m.nt = n;
    m.partner.assign(static_cast<size_t>(2 * n), -1);
    for (int i = 0; i < n; ++i) {
      m.partner[static_cast<size_t>(i)] = n + images0[static_cast<size_t>(i)];
      m.partner[static_cast<size_t>(n + images0[static_cast<size_t>(i)])] = i;
    }
    return Morphism::single(std::move(m));
  }
  // True inverse of the positive permutation braid (negative crossings).
  Morphism perm_braid_inverse(int n, const std::vector<int>& images0) {
    Matching m;
    m.nb = m.nt = n;
    m.partner.assign(static_cast<size_t>(2 * n), -1);
    for (int i = 0; i < n; ++i) {
      m.partner[static_cast<size_t>(i)] = n + images0[static_cast<size_t>(i)];
      m.partner[static_cast<size_t>(n + images0[static_cast<size_t>(i)])] = i;
    }
    Word w = canonical_word(m);
    Word inv;
    inv.n_in = n;
    for (auto it = w.events.rbegin(); it != w.events.rend(); ++it) {
      Event e = *it;
      if (e.kind == EventKind::XPos)
        e.kind = EventKind::XNeg;
      else if (e.kind == EventKind::XNeg)
        e.kind = EventKind::XPos;
      else
        throw Error("perm_braid_inverse: not a braid word");
      inv.events.push_back(e);
    }
    return from_word(inv);
  }

  Morphism mul(const Morphism& a, const Morphism& b) {
    if (a.n_out != b.n_in) throw StrandMismatch("mul: " + std::to_string(a.n_out) + " vs " +
                                                std::to_string(b.n_in));
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Morphism r = Morphism::zero(a.n_in, b.n_out);
    for (const auto& [tb, cb] : b.terms) {
      for (const auto& [ta, ca] : a.terms) {
        const LinComb& prod = pair_product(ta, tb);
        RingElem c = ca * cb;
        for (const auto& [m, k] : prod) r.add(m, c * k);
      }
    }
    return r;
  }

  Morphism tensor_id(const Morphism& a, int k) {
    if (k < 0) throw Error("tensor_id: negative k");
    if (k == 0) return a;
    check_bound(std::max(a.n_in, a.n_out) + k);
    Morphism r = Morphism::zero(a.n_in + k, a.n_out + k);
    for (const auto& [m, c] : a.terms) r.terms.emplace(tensor_matching(m, k), c);
    return r;
  }

  RingElem qtrace(const Morphism& a) {
    if (!a.square()) throw StrandMismatch("qtrace of non-endomorphism");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    RingElem r;
    for (const auto& [m, c] : a.terms) r += c * closure_scalar(m);
    return r;
  }

  RingElem close_trace(const Word& w) {
    if (w.n_in != w.n_out()) throw StrandMismatch("close_trace");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    LinComb lc = nz_.normalize(close_all(w));
    if (lc.empty()) return RingElem(0);
    return lc.begin()->second;
  }

  Morphism partial_close(const Morphism& a) {
    if (a.n_in < 1 || a.n_out < 1) throw StrandMismatch("partial_close on empty side");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Morphism r = Morphism::zero(a.n_in - 1, a.n_out - 1);
    for (const auto& [m, c] : a.terms) {
      auto it = pclose_.find(m);
      if (it == pclose_.end()) it = pclose_.emplace(m, nz_.normalize(close_last(word_of(m)))).first;
      for (const auto& [m2, k] : it->second) r.add(m2, c * k);
    }
    return r;
  }

  // Cap on the two last strands: element of K(n, n-2); cup is its transpose.
  Morphism cap_last(int n) {
    if (n < 2) throw StrandMismatch("cap_last");
    Matching m;
    m.nb = n;
    m.nt = n - 2;
    m.partner.assign(static_cast<size_t>(2 * n - 2), -1);
    for (int i = 0; i < n - 2; ++i) {
      m.partner[static_cast<size_t>(i)] = n + i;
      m.partner[static_cast<size_t>(n + i)] = i;
    }
    m.partner[static_cast<size_t>(n - 2)] = n - 1;
    m.partner[static_cast<size_t>(n - 1)] = n - 2;
    return Morphism::single(std::move(m));
  }
  Morphism cup_last(int n) {
    if (n < 2) throw StrandMismatch("cup_last");
    Matching m;
    m.nb = n - 2;
    m.nt = n;
    m.partner.assign(static_cast<size_t>(2 * n - 2), -1);
    for (int i = 0; i < n - 2; ++i) {
      m.partner[static_cast<size_t>(i)] = n - 2 + i;
      m.partner[static_cast<size_t>(n - 2 + i)] = i;
    }
    int a = 2 * n - 4, b = 2 * n - 3;
    m.partner[static_cast<size_t>(a)] = b;
    m.partner[static_cast<size_t>(b)] = a;
    return Morphism::single(std::move(m));
  }

  // tau_n: strand n encircling strands 1..n-1, with its blackboard-framing
  // curl; equals alpha * (e_{n-1}...e_1)(e_1...e_{n-1}).
  Morphism jm_element(int n) {
    check_bound(n);
    Word w = word_id(n);
    for (int i = n - 1; i >= 1; --i) w.append(word_e(n, i));
    for (int i = 1; i <= n - 1; ++i) w.append(word_e(n, i));
    return RingElem::alpha_pow(1) * from_word(w);
  }
  Word jm_word(int n) const {
    Word w = word_id(n);
    for (int i = n - 1; i >= 1; --i) w.append(word_e(n, i));
    for (int i = 1; i <= n - 1; ++i) w.append(word_e(n, i));
    return w;
  }

  const Word& word_of(const Matching& m) {
    auto it = words_.find(m);
    if (it == words_.end()) it = words_.emplace(m, canonical_word(m)).first;
    return it->second;
  }

  size_t pair_cache_size() const { return pairs_.size(); }

 private:
  void check_bound(int n) const {
    if (n > max_n_)
      throw SizeBound("strand count " + std::to_string(n) + " exceeds BMW_MAX_N=" +
                      std::to_string(max_n_));
  }
  void check_gen(int n, int i) const {
    check_bound(n);
    if (i < 1 || i > n - 1) throw StrandMismatch("generator index " + std::to_string(i));
  }

  static Matching tensor_matching(const Matching& m, int k) {
    Matching r;
    r.nb = m.nb + k;
    r.nt = m.nt + k;
    r.partner.assign(static_cast<size_t>(r.nb + r.nt), -1);
    auto remap = [&](int rank) { return rank < m.nb ? rank : rank + k; };
    for (int x = 0; x < m.nb + m.nt; ++x) {
      int y = m.partner[static_cast<size_t>(x)];
      r.partner[static_cast<size_t>(remap(x))] = remap(y);
    }
    for (int i = 0; i < k; ++i) {
      int bot = m.nb + i, top = r.nb + m.nt + i;
      r.partner[static_cast<size_t>(bot)] = top;
      r.partner[static_cast<size_t>(top)] = bot;
    }
    return r;
  }

  const LinComb& pair_product(const Matching& a, const Matching& b) {
    auto key = std::make_pair(a, b);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
    // Fold b's canonical word over {a : 1}, one event at a time.
    LinComb acc;
    acc.emplace(a, RingElem(1));
    const Word wb = word_of(b);  // copy: words_ may rehash during recursion
    int width = b.nb;
    for (const Event& e : wb.events) {
      LinComb next;
      for (const auto& [m, c] : acc) {
        const LinComb& step = event_action(m, e, width);
        for (const auto& [m2, k] : step) lincomb_add(next, m2, c * k);
      }
      acc = std::move(next);
      if (e.kind == EventKind::Cap) width -= 2;
      if (e.kind == EventKind::Cup) width += 2;
    }
    return pairs_.emplace(std::move(key), std::move(acc)).first->second;
  }

  const LinComb& event_action(const Matching& m, const Event& e, int width) {
    (void)width;
    auto key = std::make_tuple(m, static_cast<int>(e.kind), e.pos);
    auto it = actions_.find(key);
    if (it != actions_.end()) return it->second;
    Word w = word_of(m);
    w.events.push_back(e);
    return actions_.emplace(std::move(key), nz_.normalize(w)).first->second;
  }

  RingElem closure_scalar(const Matching& m) {
    auto it = closures_.find(m);
    if (it != closures_.end()) return it->second;
    LinComb lc = nz_.normalize(close_all(word_of(m)));
    RingElem c = lc.empty() ? RingElem(0) : lc.begin()->second;
    closures_.emplace(m, c);
    return c;
  }

  int max_n_;
  Normalizer nz_;
  std::map<int, std::vector<Matching>> basis_;
  std::map<Matching, Word> words_;
  std::map<std::pair<Matching, Matching>, LinComb> pairs_;
  std::map<std::tuple<Matching, int, int>, LinComb> actions_;
  std::map<Matching, RingElem> closures_;
  std::map<Matching, LinComb> pclose_;
  std::recursive_mutex mu_;
};

}  // namespace bmw

#endif
