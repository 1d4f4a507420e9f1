#ifndef BMW_YOUNG_HPP
#define BMW_YOUNG_HPP

// Partitions, cells, standard tableaux and up-and-down tableaux: the
// combinatorics indexing idempotents and matrix units.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bmw/errors.hpp"

namespace bmw {

// 1-based cell (row, col).
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell& x, const Cell& y) {
    return x.row == y.row && x.col == y.col;
  }
  friend bool operator<(const Cell& x, const Cell& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  }
  std::string str() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

inline int content(const Cell& c) { return c.col - c.row; }

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw Error("invalid partition");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }
  // lambda_i with rows beyond the last part having length 0.
  int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }
  // Column length (transposed part), 0 beyond.
  int col_len(int j) const {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    return c;
  }
  bool contains(const Cell& c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }

  Partition transpose() const {
    std::vector<int> t;
    for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j) t.push_back(col_len(j));
    return Partition(std::move(t));
  }

  // Row-reading order: row 1 left to right, then row 2, ...
  std::vector<Cell> cells() const {
    std::vector<Cell> r;
    for (int i = 1; i <= rows(); ++i)
      for (int j = 1; j <= part(i); ++j) r.push_back({i, j});
    return r;
  }
  // 1-based position of a cell in row-reading order.
  int row_reading_pos(const Cell& c) const {
    if (!contains(c)) throw CellOutsideDiagram(c.str() + " in " + str());
    int p = 0;
    for (int i = 1; i < c.row; ++i) p += part(i);
    return p + c.col;
  }

  Partition add_cell(const Cell& c) const {
    std::vector<int> p = parts_;
    if (c.row == rows() + 1) {
      if (c.col != 1) throw ShapeMismatch("add_cell " + c.str());
      p.push_back(1);
    } else {
      if (!(c.row >= 1 && c.row <= rows() && c.col == part(c.row) + 1))
        throw ShapeMismatch("add_cell " + c.str());
      p[c.row - 1] += 1;
    }
    return Partition(std::move(p));
  }
  Partition remove_cell(const Cell& c) const {
    if (!(c.row >= 1 && c.row <= rows() && c.col == part(c.row)))
      throw ShapeMismatch("remove_cell " + c.str());
    std::vector<int> p = parts_;
    p[c.row - 1] -= 1;
    return Partition(std::move(p));
  }
  // The single cell of *this / mu (one-cell containment), or throws.
  Cell cell_difference(const Partition& mu) const {
    if (mu.size() + 1 != size()) throw ShapeMismatch("cell_difference sizes");
    for (int i = 1; i <= rows(); ++i) {
      if (part(i) == mu.part(i) + 1) {
        for (int j = i + 1; j <= rows(); ++j)
          if (part(j) != mu.part(j)) throw ShapeMismatch("cell_difference");
        return Cell{i, part(i)};
      }
      if (part(i) != mu.part(i)) throw ShapeMismatch("cell_difference");
    }
    throw ShapeMismatch("cell_difference");
  }
  // The last removable cell in row-reading order (= last cell of the last row).
  Cell last_cell() const {
    if (empty()) throw ShapeMismatch("last_cell of empty partition");
    return Cell{rows(), parts_.back()};
  }

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.parts_ == y.parts_;
  }
  friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
  friend bool operator<(const Partition& x, const Partition& y) {
    return x.parts_ < y.parts_;
  }

  // Text form "2,1"; the empty partition renders as "0".
  std::string str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ",";
      os << parts_[i];
    }
    return os.str();
  }
  static Partition parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition();
    std::vector<int> p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        p.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("partition '" + text + "'");
      }
    }
    try {
      return Partition(std::move(p));
    } catch (const Error&) {
      throw ParseError("partition '" + text + "' is not weakly decreasing");
    }
  }

 private:
  std::vector<int> parts_;
};

inline int hook_length(const Partition& l, const Cell& c) {
  if (!l.contains(c)) throw CellOutsideDiagram(c.str() + " in " + l.str());
  return l.part(c.row) + l.transpose().part(c.col) - c.row - c.col + 1;
}

// d_lambda(i,j) and the primed variant d'_lambda(i,j).
inline int dfun(const Partition& l, const Cell& c, bool primed) {
  if (!l.contains(c)) throw CellOutsideDiagram(c.str() + " in " + l.str());
  Partition lt = l.transpose();
  int i = c.row, j = c.col;
  bool upper = primed ? (i < j) : (i <= j);
  if (upper) return l.part(i) + l.part(j) - i - j + 1;
  return -lt.part(i) - lt.part(j) + i + j - 1;
}

struct Corners {
  std::vector<Cell> addable;    // l+1 cells, top row first
  std::vector<Cell> removable;  // l cells, top row first
};

inline Corners corners(const Partition& l) {
  Corners c;
  int r = l.rows();
  for (int i = 1; i <= r; ++i) {
    if (i == 1 || l.part(i) < l.part(i - 1)) c.addable.push_back({i, l.part(i) + 1});
    if (i == r || l.part(i) > l.part(i + 1)) c.removable.push_back({i, l.part(i)});
  }
  c.addable.push_back({r + 1, 1});
  return c;
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

// A standard tableau stored as the cell labelled k, for k = 1..n.
class StdTableau {
 public:
  StdTableau() = default;
  explicit StdTableau(std::vector<Cell> cell_of) : cell_of_(std::move(cell_of)) {}

  int size() const { return static_cast<int>(cell_of_.size()); }
  const Cell& cell(int k) const { return cell_of_[static_cast<size_t>(k - 1)]; }
  const std::vector<Cell>& cells() const { return cell_of_; }

  Partition shape() const {
    std::vector<int> rows;
    for (const Cell& c : cell_of_) {
      if (static_cast<int>(rows.size()) < c.row) rows.resize(static_cast<size_t>(c.row), 0);
      rows[static_cast<size_t>(c.row - 1)] = std::max(rows[static_cast<size_t>(c.row - 1)], c.col);
    }
    return Partition(std::move(rows));
  }
  // The tableau t' obtained by removing the cell labelled n.
  StdTableau parent() const {
    std::vector<Cell> p(cell_of_.begin(), cell_of_.end() - 1);
    return StdTableau(std::move(p));
  }
  // Shape chain as partitions, sizes 1..n.
  std::vector<Partition> chain() const {
    std::vector<Partition> out;
    Partition cur;
    for (const Cell& c : cell_of_) {
      cur = cur.add_cell(c);
      out.push_back(cur);
    }
    return out;
  }

  friend bool operator==(const StdTableau& x, const StdTableau& y) {
    return x.cell_of_ == y.cell_of_;
  }
  friend bool operator<(const StdTableau& x, const StdTableau& y) {
    return x.cell_of_ < y.cell_of_;
  }
  std::string str() const {
    std::string s;
    for (const Cell& c : cell_of_) s += c.str();
    return s;
  }

 private:
  std::vector<Cell> cell_of_;
};

inline std::vector<StdTableau> enumerate_standard(const Partition& l) {
  std::vector<StdTableau> out;
  std::vector<Cell> cur;
  std::function<void(const Partition&)> rec = [&](const Partition& rest) {
    if (rest.empty()) {
      std::vector<Cell> rev(cur.rbegin(), cur.rend());
      out.emplace_back(std::move(rev));
      return;
    }
    for (const Cell& c : corners(rest).removable) {
      cur.push_back(c);
      rec(rest.remove_cell(c));
      cur.pop_back();
    }
  };
  rec(l);
  std::sort(out.begin(), out.end());
  return out;
}

inline long d_lambda(const Partition& l) {
  return static_cast<long>(enumerate_standard(l).size());
}

// An up-and-down tableau: shapes (L1,...,Ln), L1 = (1), consecutive shapes
// differing by exactly one cell.
class UpDownTableau {
 public:
  UpDownTableau() = default;
  explicit UpDownTableau(std::vector<Partition> seq) : seq_(std::move(seq)) {
    if (seq_.empty() || !(seq_[0] == Partition({1})))
      throw ShapeMismatch("up-down tableau must start at (1)");
    for (size_t i = 1; i < seq_.size(); ++i) {
      int a = seq_[i].size(), b = seq_[i - 1].size();
      if (a != b + 1 && a != b - 1) throw ShapeMismatch("up-down tableau step");
      if (a == b + 1)
        seq_[i].cell_difference(seq_[i - 1]);
      else
        seq_[i - 1].cell_difference(seq_[i]);
    }
  }

  int length() const { return static_cast<int>(seq_.size()); }
  const Partition& shape() const { return seq_.back(); }
  const Partition& at(int i) const { return seq_[static_cast<size_t>(i - 1)]; }
  const std::vector<Partition>& sequence() const { return seq_; }
  UpDownTableau parent() const {
    std::vector<Partition> p(seq_.begin(), seq_.end() - 1);
    return UpDownTableau(std::move(p));
  }
  UpDownTableau extend(const Partition& next) const {
    std::vector<Partition> p = seq_;
    p.push_back(next);
    return UpDownTableau(std::move(p));
  }
  bool is_up_tableau() const { return shape().size() == length(); }
  StdTableau to_std_tableau() const {
    if (!is_up_tableau()) throw ShapeMismatch("not an up tableau");
    std::vector<Cell> cells;
    Partition prev;
    for (const Partition& p : seq_) {
      cells.push_back(p.cell_difference(prev));
      prev = p;
    }
    return StdTableau(std::move(cells));
  }
  static UpDownTableau from_std_tableau(const StdTableau& t) {
    return UpDownTableau(t.chain());
  }

  // Path string "1>2>2,1".
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < seq_.size(); ++i) {
      if (i) s += ">";
      s += seq_[i].str();
    }
    return s;
  }

  friend bool operator==(const UpDownTableau& x, const UpDownTableau& y) {
    return x.seq_ == y.seq_;
  }
  friend bool operator<(const UpDownTableau& x, const UpDownTableau& y) {
    return x.seq_ < y.seq_;
  }

 private:
  std::vector<Partition> seq_;
};

inline std::vector<UpDownTableau> enumerate_updown(int n, const Partition& shape) {
  std::vector<UpDownTableau> out;
  std::vector<Partition> cur = {Partition({1})};
  std::function<void()> rec = [&]() {
    int len = static_cast<int>(cur.size());
    Partition last = cur.back();  // copy: push_back below invalidates references
    if (len == n) {
      if (last == shape) out.emplace_back(cur);
      return;
    }
    // prune: must be able to reach |shape| from |last| in n-len steps
    int diff = std::abs(shape.size() - last.size());
    int steps = n - len;
    if (diff > steps || (steps - diff) % 2 != 0) return;
    Corners cs = corners(last);
    for (const Cell& c : cs.addable) {
      cur.push_back(last.add_cell(c));
      rec();
      cur.pop_back();
    }
    for (const Cell& c : cs.removable) {
      cur.push_back(last.remove_cell(c));
      rec();
      cur.pop_back();
    }
  };
  if (n >= 1) rec();
  std::sort(out.begin(), out.end());
  return out;
}

inline long d_lambda_n(int n, const Partition& l) {
  return static_cast<long>(enumerate_updown(n, l).size());
}

// Shapes with |shape| in {n, n-2, ...} reachable at level n.
inline std::vector<Partition> updown_shapes(int n) {
  std::vector<Partition> out;
  for (int m = n; m >= 0; m -= 2)
    for (const Partition& l : partitions_of(m)) out.push_back(l);
  return out;
}

inline long double_factorial(int n) {  // (2n-1)!!
  long r = 1;
  for (int k = 2 * n - 1; k >= 1; k -= 2) r *= k;
  return r;
}

inline long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace bmw

#endif
