#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bmw/young.hpp"

using namespace bmw;

TEST_CASE("partition basics") {
  Partition l({2, 1});
  CHECK(l.size() == 3);
  CHECK(l.part(1) == 2);
  CHECK(l.part(5) == 0);
  CHECK(l.transpose() == Partition({2, 1}));
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  CHECK(Partition().str() == "0");
  CHECK(Partition::parse("2,1") == l);
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("0") == Partition());
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(p.transpose().transpose() == p);
}

TEST_CASE("content and hooks") {
  CHECK(content(Cell{1, 1}) == 0);
  CHECK(content(Cell{1, 2}) == 1);
  CHECK(content(Cell{3, 1}) == -2);
  CHECK(hook_length(Partition({1}), Cell{1, 1}) == 1);
  CHECK(hook_length(Partition({2, 1}), Cell{1, 1}) == 3);
  CHECK(hook_length(Partition({2, 1}), Cell{1, 2}) == 1);
  CHECK_THROWS_AS(hook_length(Partition({1}), Cell{2, 1}), CellOutsideDiagram);
  for (const Partition& p : partitions_of(6)) {
    int count = 0;
    for (const Cell& c : p.cells()) {
      CHECK(hook_length(p, c) >= 1);
      ++count;
    }
    CHECK(count == p.size());
  }
}

TEST_CASE("dfun") {
  CHECK(dfun(Partition({1}), Cell{1, 1}, false) == 1);
  CHECK(dfun(Partition({1}), Cell{1, 1}, true) == -1);
  CHECK(dfun(Partition({2}), Cell{1, 2}, false) == 0);
}

TEST_CASE("corners") {
  Corners c0 = corners(Partition());
  CHECK(c0.addable == std::vector<Cell>{Cell{1, 1}});
  CHECK(c0.removable.empty());
  Corners c1 = corners(Partition({2, 1}));
  CHECK(c1.addable == std::vector<Cell>({Cell{1, 3}, Cell{2, 2}, Cell{3, 1}}));
  CHECK(c1.removable == std::vector<Cell>({Cell{1, 2}, Cell{2, 1}}));
  Corners c2 = corners(Partition({2, 2}));
  CHECK(c2.addable == std::vector<Cell>({Cell{1, 3}, Cell{3, 1}}));
  CHECK(c2.removable == std::vector<Cell>({Cell{2, 2}}));
  // addable count = removable count + 1
  for (const Partition& p : partitions_of(7)) {
    Corners c = corners(p);
    CHECK(c.addable.size() == c.removable.size() + 1);
  }
}

TEST_CASE("standard tableaux") {
  CHECK(enumerate_standard(Partition({4})).size() == 1);
  CHECK(enumerate_standard(Partition({2, 1})).size() == 2);
  for (int n = 1; n <= 6; ++n) {
    long sum = 0;
    for (const Partition& p : partitions_of(n)) {
      long d = d_lambda(p);
      sum += d * d;
    }
    CHECK(sum == factorial(n));
  }
  // removing the last cell yields a standard tableau
  for (const StdTableau& t : enumerate_standard(Partition({3, 2}))) {
    StdTableau p = t.parent();
    CHECK(p.size() == 4);
    CHECK(p.shape().contains(p.cell(4)));
  }
}

TEST_CASE("up-down tableaux") {
  CHECK(enumerate_updown(2, Partition()).size() == 1);
  CHECK(enumerate_updown(2, Partition()).front() ==
        UpDownTableau({Partition({1}), Partition()}));
  CHECK(enumerate_updown(3, Partition({1})).size() == 3);
  for (int n = 1; n <= 6; ++n) {
    long sum = 0;
    for (const Partition& l : updown_shapes(n)) {
      long d = d_lambda_n(n, l);
      sum += d * d;
    }
    CHECK(sum == double_factorial(n));
  }
  // up tableaux biject with standard tableaux
  for (const Partition& l : partitions_of(4)) {
    auto ups = enumerate_updown(4, l);
    std::set<StdTableau> as_std;
    for (const auto& u : ups)
      if (u.is_up_tableau()) as_std.insert(u.to_std_tableau());
    auto stds = enumerate_standard(l);
    CHECK(as_std.size() == stds.size());
    for (const auto& t : stds) {
      CHECK(as_std.count(t) == 1);
      CHECK(UpDownTableau::from_std_tableau(t).to_std_tableau() == t);
    }
  }
  CHECK(UpDownTableau({Partition({1}), Partition({2}), Partition({1})}).str() == "1>2>1");
}

TEST_CASE("row reading order") {
  Partition l({2, 1});
  CHECK(l.row_reading_pos(Cell{1, 1}) == 1);
  CHECK(l.row_reading_pos(Cell{1, 2}) == 2);
  CHECK(l.row_reading_pos(Cell{2, 1}) == 3);
  CHECK(l.last_cell() == Cell{2, 1});
  CHECK(Partition({3, 2}).cell_difference(Partition({2, 2})) == Cell{1, 3});
}
