#ifndef BMW_TANGLE_HPP
#define BMW_TANGLE_HPP

// Slice-word tangle diagrams and Kauffman skein normalization onto the
// canonical basis of Brauer matchings with fixed lifts.
//
// Boundary points are ranked bottom 1..n then top 1..n (0-based internally).
// The canonical lift of a matching: strands straight (no self-crossings, no
// closed components), each pair crossing at most once, and at every crossing
// the strand whose minimum endpoint rank is smaller passes over.
//
// normalize() rewrites a diagram to descending form: walking the curves in
// rank order, the first passage through each crossing must be the over one.
// Wrong crossings are resolved by the skein relation; a descending diagram
// evaluates to alpha^writhe * delta^loops times the canonical lift.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmw/errors.hpp"
#include "bmw/ring.hpp"

namespace bmw {

// Perfect matching on nb bottom + nt top points.
struct Matching {
  int nb = 0, nt = 0;
  std::vector<int> partner;  // over ranks 0..nb+nt-1

  static Matching identity(int n) {
    Matching m;
    m.nb = m.nt = n;
    m.partner.resize(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      m.partner[static_cast<size_t>(i)] = n + i;
      m.partner[static_cast<size_t>(n + i)] = i;
    }
    return m;
  }
  bool is_identity() const {
    if (nb != nt) return false;
    for (int i = 0; i < nb; ++i)
      if (partner[static_cast<size_t>(i)] != nb + i) return false;
    return true;
  }
  // True if every strand is bottom-to-top (a permutation diagram).
  bool is_permutation() const {
    if (nb != nt) return false;
    for (int i = 0; i < nb; ++i)
      if (partner[static_cast<size_t>(i)] < nb) return false;
    return true;
  }
  std::vector<int> to_permutation() const {  // 0-based images
    std::vector<int> p(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i) p[static_cast<size_t>(i)] = partner[static_cast<size_t>(i)] - nb;
    return p;
  }
  friend bool operator<(const Matching& x, const Matching& y) {
    if (x.nb != y.nb) return x.nb < y.nb;
    if (x.nt != y.nt) return x.nt < y.nt;
    return x.partner < y.partner;
  }
  friend bool operator==(const Matching& x, const Matching& y) {
    return x.nb == y.nb && x.nt == y.nt && x.partner == y.partner;
  }
  // Spec text form: bottom points 1..n, top points -1..-n.
  std::string str() const {
    std::string s = "[";
    bool first = true;
    for (int r = 0; r < nb + nt; ++r) {
      int p = partner[static_cast<size_t>(r)];
      if (p < r) continue;
      if (!first) s += ",";
      first = false;
      auto pt = [&](int q) {
        return q < nb ? std::to_string(q + 1) : "-" + std::to_string(q - nb + 1);
      };
      s += "[" + pt(r) + "," + pt(p) + "]";
    }
    return s + "]";
  }
};

inline std::vector<Matching> enumerate_matchings(int nb, int nt) {
  std::vector<Matching> out;
  int total = nb + nt;
  if (total % 2 != 0) return out;
  std::vector<int> partner(static_cast<size_t>(total), -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < total; ++i)
      if (partner[static_cast<size_t>(i)] < 0) {
        first = i;
        break;
      }
    if (first < 0) {
      Matching m;
      m.nb = nb;
      m.nt = nt;
      m.partner = partner;
      out.push_back(std::move(m));
      return;
    }
    for (int j = first + 1; j < total; ++j) {
      if (partner[static_cast<size_t>(j)] >= 0) continue;
      partner[static_cast<size_t>(first)] = j;
      partner[static_cast<size_t>(j)] = first;
      rec();
      partner[static_cast<size_t>(first)] = -1;
      partner[static_cast<size_t>(j)] = -1;
    }
  };
  rec();
  return out;
}

// All (2n-1)!! canonical basis matchings of K_n, in a fixed order.
inline std::vector<Matching> enumerate_basis(int n) { return enumerate_matchings(n, n); }

enum class EventKind : uint8_t { XPos, XNeg, Cap, Cup };

struct Event {
  EventKind kind;
  int pos;  // 0-based position of the left port
};

struct Word {
  int n_in = 0;
  std::vector<Event> events;

  int n_out() const {
    int w = n_in;
    for (const Event& e : events) {
      if (e.kind == EventKind::Cap) w -= 2;
      if (e.kind == EventKind::Cup) w += 2;
    }
    return w;
  }
  Word& append(const Word& other) {
    events.insert(events.end(), other.events.begin(), other.events.end());
    return *this;
  }
  std::string key() const {
    std::string s;
    s.reserve(events.size() * 2 + 2);
    s.push_back(static_cast<char>(n_in));
    for (const Event& e : events) {
      s.push_back(static_cast<char>(static_cast<int>(e.kind)));
      s.push_back(static_cast<char>(e.pos));
    }
    return s;
  }
};

// Generator words on n strands, 1-based index i (1 <= i <= n-1).
inline Word word_id(int n) { return Word{n, {}}; }
inline Word word_e(int n, int i, int sign = +1) {
  return Word{n, {Event{sign > 0 ? EventKind::XPos : EventKind::XNeg, i - 1}}};
}
inline Word word_h(int n, int i) {
  return Word{n, {Event{EventKind::Cap, i - 1}, Event{EventKind::Cup, i - 1}}};
}

inline Word tensor_word(const Word& w, int k) {
  if (k < 0) throw Error("tensor_word: negative k");
  Word r = w;
  r.n_in += k;
  return r;
}

// Close the rightmost strand (inputs a-1 and the new bypass join at the top).
inline Word close_last(const Word& w) {
  int a = w.n_in, b = w.n_out();
  if (a < 1 || b < 1) throw StrandMismatch("close_last on empty side");
  Word r;
  r.n_in = a - 1;
  r.events.push_back(Event{EventKind::Cup, a - 1});
  r.events.insert(r.events.end(), w.events.begin(), w.events.end());
  r.events.push_back(Event{EventKind::Cap, b - 1});
  return r;
}

inline Word close_all(const Word& w) {
  if (w.n_in != w.n_out()) throw StrandMismatch("close_all needs equal ends");
  Word r = w;
  for (int i = 0; i < w.n_in; ++i) r = close_last(r);
  return r;
}

// Braid/tangle word text: space-separated tokens e3, E3 (inverse), h3.
inline Word parse_word(int n, const std::string& text) {
  Word w = word_id(n);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2) throw ParseError("token '" + tok + "'");
    char k = tok[0];
    int i = 0;
    try {
      i = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw ParseError("token '" + tok + "'");
    }
    if (i < 1 || i > n - 1) throw ParseError("index out of range in '" + tok + "'");
    if (k == 'e')
      w.append(word_e(n, i, +1));
    else if (k == 'E')
      w.append(word_e(n, i, -1));
    else if (k == 'h')
      w.append(word_h(n, i));
    else
      throw ParseError("token '" + tok + "'");
  }
  return w;
}

// --- curve tracing -----------------------------------------------------------

namespace trace {

struct EdgeEnd {
  int event = -1;  // -1: boundary
  int port = 0;    // cross: 0=in_l,1=in_r,2=out_l,3=out_r; cap: 0,1; cup: 2,3
  int boundary = -1;  // rank when event == -1
};

struct Edge {
  EdgeEnd bot, top;
};

struct Passage {
  int order = -1;
  int segment = 0;  // 1: bl<->tr, 2: br<->tl
  bool up = true;
  int curve = -1;
};

struct CrossInfo {
  Passage p[2];
  int count = 0;
};

struct Traced {
  std::vector<Edge> edges;
  std::vector<std::array<int, 4>> event_edges;  // per event: in_l,in_r,out_l,out_r (-1 unused)
  std::vector<int> bottom_edge, top_edge;       // boundary edge ids
  std::vector<CrossInfo> cross;                 // per event (unused for cap/cup)
  std::vector<std::pair<int, int>> arcs;        // (start rank, end rank), discovery order
  int n_loops = 0;
  int writhe = 0;       // sum of self-crossing signs over all curves
  int first_wrong = -1;  // event index of the wrong crossing with earliest passage
};

inline Traced run(const Word& w) {
  Traced t;
  int nb = w.n_in;
  auto new_edge = [&](EdgeEnd bot) {
    t.edges.push_back(Edge{bot, EdgeEnd{}});
    return static_cast<int>(t.edges.size()) - 1;
  };
  std::vector<int> cur;
  for (int i = 0; i < nb; ++i) {
    int e = new_edge(EdgeEnd{-1, 0, i});
    cur.push_back(e);
    t.bottom_edge.push_back(e);
  }
  t.event_edges.resize(w.events.size(), {-1, -1, -1, -1});
  t.cross.resize(w.events.size());
  for (size_t ei = 0; ei < w.events.size(); ++ei) {
    const Event& e = w.events[ei];
    int p = e.pos;
    switch (e.kind) {
      case EventKind::XPos:
      case EventKind::XNeg: {
        if (p < 0 || p + 1 >= static_cast<int>(cur.size()))
          throw StrandMismatch("crossing position out of range");
        int a = cur[static_cast<size_t>(p)], b = cur[static_cast<size_t>(p + 1)];
        t.edges[static_cast<size_t>(a)].top = EdgeEnd{static_cast<int>(ei), 0, -1};
        t.edges[static_cast<size_t>(b)].top = EdgeEnd{static_cast<int>(ei), 1, -1};
        int c = new_edge(EdgeEnd{static_cast<int>(ei), 2, -1});
        int d = new_edge(EdgeEnd{static_cast<int>(ei), 3, -1});
        t.event_edges[ei] = {a, b, c, d};
        cur[static_cast<size_t>(p)] = c;
        cur[static_cast<size_t>(p + 1)] = d;
        break;
      }
      case EventKind::Cap: {
        if (p < 0 || p + 1 >= static_cast<int>(cur.size()))
          throw StrandMismatch("cap position out of range");
        int a = cur[static_cast<size_t>(p)], b = cur[static_cast<size_t>(p + 1)];
        t.edges[static_cast<size_t>(a)].top = EdgeEnd{static_cast<int>(ei), 0, -1};
        t.edges[static_cast<size_t>(b)].top = EdgeEnd{static_cast<int>(ei), 1, -1};
        t.event_edges[ei] = {a, b, -1, -1};
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      }
      case EventKind::Cup: {
        if (p < 0 || p > static_cast<int>(cur.size()))
          throw StrandMismatch("cup position out of range");
        int c = new_edge(EdgeEnd{static_cast<int>(ei), 2, -1});
        int d = new_edge(EdgeEnd{static_cast<int>(ei), 3, -1});
        t.event_edges[ei] = {-1, -1, c, d};
        cur.insert(cur.begin() + p, {c, d});
        break;
      }
    }
  }
  int nt = static_cast<int>(cur.size());
  for (int j = 0; j < nt; ++j) {
    t.edges[static_cast<size_t>(cur[static_cast<size_t>(j)])].top = EdgeEnd{-1, 0, nb + j};
    t.top_edge.push_back(cur[static_cast<size_t>(j)]);
  }

  // Walk curves. State: (edge, going up). Returns the boundary rank reached,
  // or -1 when the walk returns to the start state (closed loop).
  std::vector<char> visited(t.edges.size(), 0);
  int order_counter = 0;
  int curve_counter = 0;

  auto walk = [&](int start_edge, bool start_up, int curve) -> int {
    int e = start_edge;
    bool up = start_up;
    for (;;) {
      visited[static_cast<size_t>(e)] = 1;
      const EdgeEnd& end = up ? t.edges[static_cast<size_t>(e)].top
                              : t.edges[static_cast<size_t>(e)].bot;
      if (end.event < 0) return end.boundary;
      const Event& ev = w.events[static_cast<size_t>(end.event)];
      const auto& ee = t.event_edges[static_cast<size_t>(end.event)];
      if (ev.kind == EventKind::XPos || ev.kind == EventKind::XNeg) {
        CrossInfo& ci = t.cross[static_cast<size_t>(end.event)];
        int segment;
        int next;
        bool nup = up;
        if (up && end.port == 0) {
          segment = 1;
          next = ee[3];
        } else if (up && end.port == 1) {
          segment = 2;
          next = ee[2];
        } else if (!up && end.port == 3) {
          segment = 1;
          next = ee[0];
        } else {  // !up && port == 2
          segment = 2;
          next = ee[1];
        }
        ci.p[ci.count] = Passage{order_counter++, segment, up, curve};
        ci.count++;
        e = next;
        up = nup;
      } else if (ev.kind == EventKind::Cap) {
        e = (end.port == 0) ? ee[1] : ee[0];
        up = false;
      } else {  // Cup
        e = (end.port == 2) ? ee[3] : ee[2];
        up = true;
      }
      if (e == start_edge && up == start_up) return -1;
    }
  };

  // Arcs from boundary points in rank order.
  std::vector<int> boundary_edges;
  for (int i = 0; i < nb; ++i) boundary_edges.push_back(t.bottom_edge[static_cast<size_t>(i)]);
  for (int j = 0; j < nt; ++j) boundary_edges.push_back(t.top_edge[static_cast<size_t>(j)]);
  for (int r = 0; r < nb + nt; ++r) {
    int e = boundary_edges[static_cast<size_t>(r)];
    if (visited[static_cast<size_t>(e)]) continue;
    bool up = r < nb;
    int other = walk(e, up, curve_counter);
    t.arcs.emplace_back(r, other);
    ++curve_counter;
  }
  // Loops from the smallest unvisited edge, travelling upward.
  for (size_t e = 0; e < t.edges.size(); ++e) {
    if (visited[e]) continue;
    walk(static_cast<int>(e), true, curve_counter);
    ++curve_counter;
    ++t.n_loops;
  }

  // Classify crossings; compute writhe and the first wrong crossing.
  int best_order = -1;
  for (size_t ev = 0; ev < w.events.size(); ++ev) {
    const Event& e = w.events[ev];
    if (e.kind != EventKind::XPos && e.kind != EventKind::XNeg) continue;
    CrossInfo& ci = t.cross[ev];
    const Passage& p0 = ci.p[0].order <= ci.p[1].order ? ci.p[0] : ci.p[1];
    const Passage& p1 = ci.p[0].order <= ci.p[1].order ? ci.p[1] : ci.p[0];
    int over_segment = e.kind == EventKind::XPos ? 1 : 2;
    if (p0.segment != over_segment) {
      if (best_order < 0 || p0.order < best_order) {
        best_order = p0.order;
        t.first_wrong = static_cast<int>(ev);
      }
      continue;
    }
    if (p0.curve == p1.curve) {
      auto dir = [](const Passage& p) {
        int dx = p.segment == 1 ? 1 : -1;
        if (!p.up) dx = -dx;
        int dy = p.up ? 1 : -1;
        return std::pair<int, int>(dx, dy);
      };
      const Passage& over = p0.segment == over_segment ? p0 : p1;
      const Passage& under = p0.segment == over_segment ? p1 : p0;
      auto [ux, uy] = dir(over);
      auto [vx, vy] = dir(under);
      t.writhe += (ux * vy - uy * vx) > 0 ? 1 : -1;
    }
  }
  return t;
}

}  // namespace trace

using LinComb = std::map<Matching, RingElem>;

inline void lincomb_add(LinComb& acc, const Matching& m, const RingElem& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// Skein normalization with memoized recursion.
class Normalizer {
 public:
  LinComb normalize(const Word& w) {
    std::string k = w.key();
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    trace::Traced t = trace::run(w);
    LinComb result;
    if (t.first_wrong < 0) {
      Matching m;
      m.nb = w.n_in;
      m.nt = w.n_out();
      m.partner.assign(static_cast<size_t>(m.nb + m.nt), -1);
      for (auto [x, y] : t.arcs) {
        m.partner[static_cast<size_t>(x)] = y;
        m.partner[static_cast<size_t>(y)] = x;
      }
      RingElem c = RingElem::alpha_pow(t.writhe);
      if (t.n_loops > 0) c *= loop_value().pow(t.n_loops);
      result.emplace(std::move(m), std::move(c));
    } else {
      int ev = t.first_wrong;
      bool was_pos = w.events[static_cast<size_t>(ev)].kind == EventKind::XPos;
      // e - e^-1 = z(1 - h):  X+ = X- + z*Id - z*Hook,  X- = X+ - z*Id + z*Hook
      Word switched = w;
      switched.events[static_cast<size_t>(ev)].kind =
          was_pos ? EventKind::XNeg : EventKind::XPos;
      Word smooth_id = w;
      smooth_id.events.erase(smooth_id.events.begin() + ev);
      Word smooth_hook = w;
      int p = w.events[static_cast<size_t>(ev)].pos;
      smooth_hook.events[static_cast<size_t>(ev)] = Event{EventKind::Cap, p};
      smooth_hook.events.insert(smooth_hook.events.begin() + ev + 1, Event{EventKind::Cup, p});
      RingElem z = skein_z();
      if (!was_pos) z = -z;
      result = normalize(switched);
      for (const auto& [m, c] : normalize(smooth_id)) lincomb_add(result, m, z * c);
      for (const auto& [m, c] : normalize(smooth_hook)) lincomb_add(result, m, -z * c);
    }
    memo_.emplace(std::move(k), result);
    return result;
  }

  void clear() { memo_.clear(); }
  size_t memo_size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, LinComb> memo_;
};

// --- canonical word for a basis matching ------------------------------------

// Emits a slice word whose normalization is exactly {m : 1}: strands have no
// self-crossings and every crossing carries the canonical over/under, so the
// diagram is isotopic to the canonical lift.
inline Word canonical_word(const Matching& m) {
  int nb = m.nb, nt = m.nt;
  auto min_rank = [&](int r) { return std::min(r, m.partner[static_cast<size_t>(r)]); };

  // Emits a crossing between the strands of the tokens at positions p, p+1.
  auto emit_cross = [&](std::vector<Event>& ev, const std::vector<int>& toks, int p) {
    int left = toks[static_cast<size_t>(p)], right = toks[static_cast<size_t>(p + 1)];
    bool left_over = min_rank(left) < min_rank(right);
    ev.push_back(Event{left_over ? EventKind::XPos : EventKind::XNeg, p});
  };

  // Cap phase: joins all pairs among `ranks` whose both endpoints are present,
  // mutating the token list; used upright for bottom pairs and flipped for top
  // pairs. Pairs are processed leftmost-first.
  auto cap_phase = [&](std::vector<int>& toks, std::vector<Event>& ev) {
    for (;;) {
      int pa = -1, pb = -1;
      for (size_t i = 0; i < toks.size() && pa < 0; ++i) {
        int r = toks[i];
        int q = m.partner[static_cast<size_t>(r)];
        for (size_t j = i + 1; j < toks.size(); ++j) {
          if (toks[j] == q) {
            pa = static_cast<int>(i);
            pb = static_cast<int>(j);
            break;
          }
        }
      }
      if (pa < 0) return;
      while (pb - pa > 1) {
        emit_cross(ev, toks, pa);
        std::swap(toks[static_cast<size_t>(pa)], toks[static_cast<size_t>(pa + 1)]);
        ++pa;
      }
      ev.push_back(Event{EventKind::Cap, pa});
      toks.erase(toks.begin() + pa, toks.begin() + pa + 2);
    }
  };

  Word w;
  w.n_in = nb;

  // Phase A: bottom-bottom pairs.
  std::vector<int> toks;
  for (int i = 0; i < nb; ++i) toks.push_back(i);
  cap_phase(toks, w.events);

  // Phase C (built in the vertically flipped world): top-top pairs.
  std::vector<int> flip_toks;
  for (int j = 0; j < nt; ++j) flip_toks.push_back(nb + j);
  std::vector<Event> flip_events;
  cap_phase(flip_toks, flip_events);

  // Phase B: sort the through-strand bottoms so position k carries the strand
  // whose top endpoint is flip_toks[k].
  std::vector<int> target;
  for (int r : flip_toks) target.push_back(m.partner[static_cast<size_t>(r)]);
  // bubble sort toks -> target, emitting crossings
  auto pos_in_target = [&](int r) {
    for (size_t k = 0; k < target.size(); ++k)
      if (target[k] == r) return static_cast<int>(k);
    throw Error("canonical_word: inconsistent matching");
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t p = 0; p + 1 < toks.size(); ++p) {
      if (pos_in_target(toks[p]) > pos_in_target(toks[p + 1])) {
        emit_cross(w.events, toks, static_cast<int>(p));
        std::swap(toks[p], toks[p + 1]);
        changed = true;
      }
    }
  }

  // Un-flip phase C: reverse order, Cap -> Cup, crossing kinds flip.
  for (auto it = flip_events.rbegin(); it != flip_events.rend(); ++it) {
    Event e = *it;
    switch (e.kind) {
      case EventKind::Cap: e.kind = EventKind::Cup; break;
      case EventKind::Cup: e.kind = EventKind::Cap; break;
      case EventKind::XPos: e.kind = EventKind::XNeg; break;
      case EventKind::XNeg: e.kind = EventKind::XPos; break;
    }
    w.events.push_back(e);
  }
  return w;
}

}  // namespace bmw

#endif
