#include <doctest.h>

#include <cmath>

#include "subconvex/characters.hpp"
#include "subconvex/errors.hpp"

using namespace subconvex;

namespace {

// Multiplicative order of g mod p by repeated multiplication.
i64 order(i64 g, i64 p) {
  i64 x = g % p, k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(23) == 5);
  CHECK(primitive_root(41) == 6);
  for (i64 p : primes_in(3, 400)) {
    const i64 g = primitive_root(p);
    CHECK(order(g, p) == p - 1);
    for (i64 h = 2; h < g; ++h) CHECK(order(h, p) < p - 1);
  }
  CHECK_THROWS_AS(primitive_root(9), InvalidModulus);
  CHECK_THROWS_AS(primitive_root(2), InvalidModulus);
  CHECK_THROWS_AS(DirichletCharacter(15, 1), InvalidModulus);
}

TEST_CASE("enumeration") {
  for (i64 p : {3, 5, 7}) {
    const auto all = enumerate_characters(p);
    CHECK(static_cast<i64>(all.size()) == p - 1);
    CHECK(static_cast<i64>(primitive_characters(p).size()) == p - 2);
    CHECK_FALSE(all[0].is_primitive());
  }
}

TEST_CASE("character values") {
  const DirichletCharacter quad(5, 2);
  CHECK(std::abs(quad(2) - cplx(-1.0, 0.0)) < 1e-15);
  for (i64 p : primes_in(3, 60)) {
    for (const auto& c : enumerate_characters(p)) {
      CHECK(c(0) == cplx(0.0, 0.0));
      CHECK(c(p) == cplx(0.0, 0.0));
      CHECK(std::abs(c(1) - cplx(1.0, 0.0)) < 1e-15);
      CHECK(std::abs(c(-1) - cplx(c.parity(), 0.0)) < 1e-12);
      CHECK(std::abs(c(p + 3) - c(3)) < 1e-15);
      CHECK(std::abs(c(-3) - c(p - 3)) < 1e-15);
      CHECK(chi(c, 5) == c(5));
      const DirichletCharacter bar = c.conj();
      for (i64 a = 1; a < p; ++a) {
        CHECK(std::abs(std::abs(c(a)) - 1.0) < 1e-14);
        CHECK(std::abs(bar(a) - std::conj(c(a))) < 1e-14);
        for (i64 b = 1; b < p; ++b) {
          CHECK(std::abs(c(a * b) - c(a) * c(b)) < 1e-12);
        }
      }
      if (c.is_primitive()) {
        cplx sum{0.0, 0.0};
        for (i64 n = 0; n < p; ++n) sum += c(n);
        CHECK(std::abs(sum) < 1e-12);
      }
    }
  }
}

TEST_CASE("Gauss sums") {
  const cplx t3 = gauss_sum(DirichletCharacter(3, 1));
  CHECK(std::abs(t3 - cplx(0.0, std::sqrt(3.0))) < 1e-14);
  const cplx t5 = gauss_sum(DirichletCharacter(5, 2));
  CHECK(std::abs(t5 - cplx(std::sqrt(5.0), 0.0)) < 1e-14);
  // Quadratic Gauss sums: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
  for (i64 p : primes_in(3, 101)) {
    const cplx t = gauss_sum(DirichletCharacter(p, (p - 1) / 2));
    const cplx want = p % 4 == 1 ? cplx(std::sqrt(double(p)), 0.0)
                                 : cplx(0.0, std::sqrt(double(p)));
    CHECK(std::abs(t - want) < 1e-10);
  }
  for (i64 p : primes_in(3, 101)) {
    for (const auto& c : primitive_characters(p)) {
      const cplx t = gauss_sum(c);
      CHECK(std::fabs(std::norm(t) - p) < 1e-10 * p);
      CHECK(std::abs(t * gauss_sum(c.conj()) - cplx(c.parity() * p, 0.0)) < 1e-10 * p);
      for (i64 m = 0; m <= 3 * p; ++m) {
        CHECK(std::abs(additive_expansion(c, m) - c(m)) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(gauss_sum(DirichletCharacter(7, 0)), NonPrimitive);
}
