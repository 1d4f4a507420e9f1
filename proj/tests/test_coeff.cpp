#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bmw/ring.hpp"

using namespace bmw;

namespace {

RingElem alpha() { return RingElem::alpha_pow(1); }
RingElem s() { return RingElem::s_pow(1); }

std::mt19937 rng(12345);

RingElem random_elem(int depth = 2) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), pick(0, 3);
  LaurentPoly num, den;
  for (int t = 0; t < depth + 1; ++t)
    num.add_term(Exp{expo(rng), expo(rng)}, Rat(coeff(rng)));
  for (int t = 0; t < depth; ++t) den.add_term(Exp{expo(rng), expo(rng)}, Rat(coeff(rng)));
  if (den.is_zero()) den = LaurentPoly::one();
  return RingElem(num, den);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2) == s() + s().inverse());
  CHECK(qint(-2) == -qint(2));
  // qint(m)*(s-s^-1) = s^m - s^-m for m in steps of 1/2, -6..6
  for (int two_m = -12; two_m <= 12; ++two_m) {
    RingElem lhs = qint2(two_m) * skein_z();
    RingElem rhs = RingElem::v_pow(two_m) - RingElem::v_pow(-two_m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ybracket and loop value") {
  CHECK(ybracket(0) == (alpha() - alpha().inverse()) / skein_z());
  CHECK(loop_value() == ybracket(0) + RingElem(1));
  // specialize(ybracket(d), Brauer(N)) = N-1+d
  for (int N = 2; N <= 5; ++N)
    for (int d = -2; d <= 3; ++d)
      CHECK(specialize(ybracket(d), Specialization::Brauer(N)) == RingElem(N - 1 + d));
  // specialize(ybracket(0), B(1)) = s + s^-1
  CHECK(specialize(ybracket(0), Specialization::B(1)) == qint(2));
  // loop values
  CHECK(specialize(loop_value(), Specialization::Brauer(4)) == RingElem(4));
  CHECK(specialize(loop_value(), Specialization::B(1)) == s() + RingElem(1) + s().inverse());
}

TEST_CASE("canonical form and field axioms") {
  for (int i = 0; i < 200; ++i) {
    RingElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      // canonical form idempotence: rebuilding from num/den is stable
      RingElem again(a.num(), a.den());
      CHECK(again == a);
    }
  }
}

TEST_CASE("fractions reduce") {
  // (a^4 - 1)/(a^2 - 1) = a^2 + 1
  LaurentPoly n = LaurentPoly::monomial(4, 0, 1) - LaurentPoly::one();
  LaurentPoly d = LaurentPoly::monomial(2, 0, 1) - LaurentPoly::one();
  RingElem x(n, d);
  RingElem y(LaurentPoly::monomial(2, 0, 1) + LaurentPoly::one());
  CHECK(x == y);
  // qint arithmetic: [2][3]/[6] has denominator-free canonical form checks
  RingElem z = qint(2) * qint(3) / qint(6);
  CHECK(z * qint(6) == qint(2) * qint(3));
}

TEST_CASE("specialize is a ring morphism") {
  std::vector<Specialization> sps = {Specialization::B(2), Specialization::D(2),
                                     Specialization::Brauer(3)};
  for (const auto& sp : sps) {
    for (int i = 0; i < 40; ++i) {
      RingElem a = random_elem(1), b = random_elem(1);
      RingElem pa, pb, pab;
      try {
        pa = specialize(a, sp);
        pb = specialize(b, sp);
        pab = specialize(a * b, sp);
      } catch (const PoleAtSpecialization&) {
        continue;  // random fractions may be singular at the specialization
      }
      CHECK(pab == pa * pb);
      try {
        RingElem psum = specialize(a + b, sp);
        CHECK(psum == pa + pb);
      } catch (const PoleAtSpecialization&) {
      }
    }
  }
}

TEST_CASE("C specialization sign and parity") {
  // constants are fixed
  CHECK(specialize(RingElem(1) / qint(1), Specialization::C(2)).is_one());
  // alpha -> -s^(2n+1)
  CHECK(specialize(RingElem::alpha_pow(1), Specialization::C(1)) == -RingElem::s_pow(3));
  // odd half-powers are rejected
  CHECK_THROWS_AS(specialize(RingElem::a_pow(1), Specialization::C(1)), HalfPowerSign);
}

TEST_CASE("brauer limit of quantum integers") {
  for (int two_m = -8; two_m <= 8; ++two_m) {
    RingElem lim = specialize(qint2(two_m), Specialization::Brauer(3));
    CHECK(lim == RingElem(Rat(two_m, 2)));
  }
}

TEST_CASE("rendering format") {
  CHECK(qint(2).str() == "v^2 + v^-2");
  CHECK(RingElem(1).str() == "1");
  CHECK(RingElem(0).str() == "0");
  CHECK((qint(2) / skein_z()).str() == "(v^4 + 1) / (v^4 - 1)");
  CHECK((-RingElem::alpha_pow(1)).str() == "-a^2");
  CHECK(RingElem(Rat(1, 2)).str() == "1/2");
}

TEST_CASE("transposition substitutions") {
  // s -> -s^-1 fixes [m] up to sign structure: [2] -> -(s+s^-1)... check involution
  RingElem x = qint(3) * ybracket(2);
  CHECK(transpose_s(transpose_s(x)) == x);
  CHECK(transpose_alpha(transpose_alpha(x)) == x);
}
