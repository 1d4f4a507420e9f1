#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bmw/algebra.hpp"

using namespace bmw;

namespace {

Engine& eng() {
  static Engine e(6);
  return e;
}

std::mt19937 rng(987);

Word random_word(int n, int len) {
  Word w = word_id(n);
  if (n < 2) return w;
  std::uniform_int_distribution<int> kind(0, 2), idx(1, n - 1);
  for (int t = 0; t < len; ++t) {
    int i = idx(rng);
    switch (kind(rng)) {
      case 0: w.append(word_e(n, i, +1)); break;
      case 1: w.append(word_e(n, i, -1)); break;
      default: w.append(word_h(n, i)); break;
    }
  }
  return w;
}

Morphism random_elem(int n, int words = 3, int len = 4) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Morphism r = Morphism::zero(n, n);
  for (int t = 0; t < words; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    r += RingElem(c) * eng().from_word(random_word(n, len));
  }
  return r;
}

}  // namespace

TEST_CASE("defining relations hold in the engine") {
  RingElem z = skein_z(), delta = loop_value();
  for (int n = 2; n <= 4; ++n) {
    Morphism one = eng().identity(n);
    for (int i = 1; i <= n - 1; ++i) {
      Morphism e = eng().gen_e(n, i), E = eng().gen_e(n, i, -1), h = eng().gen_h(n, i);
      CHECK(eng().mul(e, E) == one);
      CHECK(eng().mul(E, e) == one);
      // (K)
      CHECK(e - E == z * (one - h));
      // (R1) both ways
      CHECK(eng().mul(h, e) == RingElem::alpha_pow(-1) * h);
      CHECK(eng().mul(e, h) == RingElem::alpha_pow(-1) * h);
      // h^2 = delta h
      CHECK(eng().mul(h, h) == delta * h);
      // braid relation
      if (i + 1 <= n - 1) {
        Morphism e2 = eng().gen_e(n, i + 1), h2 = eng().gen_h(n, i + 1);
        CHECK(eng().mul(eng().mul(e, e2), e) == eng().mul(eng().mul(e2, e), e2));
        // R2: h_{i+1} e_i^{+-1} h_{i+1} = alpha^{+-1} h_{i+1}
        CHECK(eng().mul(eng().mul(h2, e), h2) == RingElem::alpha_pow(1) * h2);
        CHECK(eng().mul(eng().mul(h2, E), h2) == RingElem::alpha_pow(-1) * h2);
        // and the mirrored form h_i e_{i+1}^{+-1} h_i = alpha^{+-1} h_i
        CHECK(eng().mul(eng().mul(h, e2), h) == RingElem::alpha_pow(1) * h);
        // h_i h_{i+1} h_i = h_i
        CHECK(eng().mul(eng().mul(h, h2), h) == h);
        CHECK(eng().mul(eng().mul(h2, h), h2) == h2);
      }
      // (B2) far commutation
      for (int j = i + 2; j <= n - 1; ++j) {
        Morphism ej = eng().gen_e(n, j), hj = eng().gen_h(n, j);
        CHECK(eng().mul(e, ej) == eng().mul(ej, e));
        CHECK(eng().mul(h, hj) == eng().mul(hj, h));
        CHECK(eng().mul(e, hj) == eng().mul(hj, e));
      }
    }
  }
}

TEST_CASE("mul examples") {
  // mul(h2, mul(e1, h2)) = alpha h2 in K3
  Morphism h2 = eng().gen_h(3, 2), e1 = eng().gen_e(3, 1);
  CHECK(eng().mul(h2, eng().mul(e1, h2)) == RingElem::alpha_pow(1) * h2);
}

TEST_CASE("associativity on random triples") {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < (n < 4 ? 6 : 3); ++t) {
      Morphism a = random_elem(n), b = random_elem(n), c = random_elem(n);
      CHECK(eng().mul(eng().mul(a, b), c) == eng().mul(a, eng().mul(b, c)));
    }
  }
}

TEST_CASE("normalize is multiplicative on words") {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 8; ++t) {
      Word w1 = random_word(n, 4), w2 = random_word(n, 4);
      Word cat = w1;
      cat.append(w2);
      CHECK(eng().from_word(cat) == eng().mul(eng().from_word(w1), eng().from_word(w2)));
    }
  }
}

TEST_CASE("tensor_id") {
  CHECK(eng().tensor_id(eng().identity(1), 1) == eng().identity(2));
  Morphism x = random_elem(2);
  CHECK(eng().tensor_id(x, 0) == x);
  CHECK(eng().tensor_id(eng().gen_e(2, 1), 1) == eng().gen_e(3, 1));
  CHECK(eng().tensor_id(eng().gen_h(2, 1), 2) == eng().gen_h(4, 1));
  for (int t = 0; t < 5; ++t) {
    Morphism a = random_elem(2), b = random_elem(2);
    CHECK(eng().mul(eng().tensor_id(a, 1), eng().tensor_id(b, 1)) ==
          eng().tensor_id(eng().mul(a, b), 1));
  }
}

TEST_CASE("quantum trace") {
  RingElem delta = loop_value();
  for (int n = 1; n <= 4; ++n) CHECK(eng().qtrace(eng().identity(n)) == delta.pow(n));
  CHECK(eng().qtrace(eng().gen_e(2, 1)) == RingElem::alpha_pow(1) * delta);
  CHECK(eng().qtrace(eng().gen_h(2, 1)) == delta);
  // trace property
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 4; ++t) {
      Morphism a = random_elem(n), b = random_elem(n);
      CHECK(eng().qtrace(eng().mul(a, b)) == eng().qtrace(eng().mul(b, a)));
    }
  }
}

TEST_CASE("partial close") {
  RingElem delta = loop_value();
  for (int n = 1; n <= 3; ++n)
    CHECK(eng().partial_close(eng().identity(n + 1)) == delta * eng().identity(n));
  CHECK(eng().partial_close(eng().gen_e(3, 2)) == RingElem::alpha_pow(1) * eng().identity(2));
  CHECK(eng().partial_close(eng().gen_h(3, 2)) == eng().identity(2));
  // partial_close(x tensor 1) = delta x; iterated closure equals qtrace
  for (int t = 0; t < 4; ++t) {
    Morphism x = random_elem(3);
    CHECK(eng().partial_close(eng().tensor_id(x, 1)) == delta * x);
    Morphism c1 = eng().partial_close(x);
    Morphism c2 = eng().partial_close(c1);
    Morphism c3 = eng().partial_close(c2);
    REQUIRE(c3.n_in == 0);
    RingElem val = c3.is_zero() ? RingElem(0) : c3.terms.begin()->second;
    CHECK(val == eng().qtrace(x));
  }
}

TEST_CASE("markov property") {
  // qtrace((x tensor 1) e_n^{+-1}) = alpha^{+-1} qtrace(x)
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 4; ++t) {
      Morphism x = random_elem(n, 2, 3);
      Morphism stab = eng().mul(eng().tensor_id(x, 1), eng().gen_e(n + 1, n));
      CHECK(eng().qtrace(stab) == RingElem::alpha_pow(1) * eng().qtrace(x));
      Morphism stabm = eng().mul(eng().tensor_id(x, 1), eng().gen_e(n + 1, n, -1));
      CHECK(eng().qtrace(stabm) == RingElem::alpha_pow(-1) * eng().qtrace(x));
    }
  }
}

TEST_CASE("jm element") {
  CHECK(eng().jm_element(1) == RingElem::alpha_pow(1) * eng().identity(1));
  Morphism e1sq = eng().mul(eng().gen_e(2, 1), eng().gen_e(2, 1));
  CHECK(eng().jm_element(2) == RingElem::alpha_pow(1) * e1sq);
  // commutes with K_{n-1} tensor 1
  for (int n = 2; n <= 4; ++n) {
    Morphism tau = eng().jm_element(n);
    for (int t = 0; t < 3; ++t) {
      Morphism x = eng().tensor_id(random_elem(n - 1, 2, 3), 1);
      CHECK(eng().mul(tau, x) == eng().mul(x, tau));
    }
  }
}

TEST_CASE("hook sandwich is partial closure") {
  // h_n (x tensor 1) h_n = partial_close(x) tensor h, for x in K_n
  for (int n = 2; n <= 3; ++n) {
    Morphism h = eng().gen_h(n + 1, n);
    for (int t = 0; t < 4; ++t) {
      Morphism x = random_elem(n, 2, 3);
      Morphism lhs = eng().mul(eng().mul(h, eng().tensor_id(x, 1)), h);
      Morphism rhs = eng().mul(eng().tensor_id(eng().partial_close(x), 2),
                               eng().gen_h(n + 1, n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("products stay in the basis span at n = 5") {
  Engine big(5);
  Morphism a = big.from_word(parse_word(5, "e1 e3 h2 E4"));
  Morphism b = big.from_word(parse_word(5, "h4 e2 E1 h3"));
  Morphism p = big.mul(a, b);
  CHECK(!p.is_zero());
  for (const auto& [m, c] : p.terms) {
    (void)c;
    CHECK(m.nb == 5);
    CHECK(m.nt == 5);
  }
}

TEST_CASE("strand mismatch errors") {
  CHECK_THROWS_AS(eng().mul(eng().identity(2), eng().identity(3)), StrandMismatch);
  CHECK_THROWS_AS(Engine(3).basis(4), SizeBound);
}
