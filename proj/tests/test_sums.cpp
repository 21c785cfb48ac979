#include <doctest.h>

#include <cmath>
#include <numeric>

#include "subconvex/errors.hpp"
#include "subconvex/sums.hpp"

using namespace subconvex;

namespace {

cplx ramanujan_direct(i64 q, i64 n) {
  cplx s{0.0, 0.0};
  for (i64 a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) s += unit_exp_frac(a * n, q);
  }
  return s;
}

const CuspForm& delta() {
  static const CuspForm f = build_delta(5000);
  return f;
}

}  // namespace

TEST_CASE("Ramanujan sums") {
  for (i64 q = 1; q <= 50; ++q) {
    for (i64 n = -50; n <= 50; ++n) {
      const cplx d = ramanujan_direct(q, n);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(std::abs(d - cplx(static_cast<double>(ramanujan_sum(q, n)), 0.0)) < 1e-9);
    }
  }
  CHECK(ramanujan_sum(1, 7) == 1);
  CHECK(ramanujan_sum(12, 0) == 4);
  CHECK(ramanujan_sum(6, 1) == 1);
  CHECK(ramanujan_sum(9, 3) == -3);
  CHECK(ramanujan_sum(30, 5) == 4);
  CHECK_THROWS_AS(ramanujan_sum(0, 1), DomainError);
}

TEST_CASE("character sum fixtures") {
  const DirichletCharacter chi(3, 1);
  CharSumInstance inst{3, 1, &chi, 1, 1, Convention::plus};
  const cplx plus = char_sum_bruteforce(inst);
  CHECK(std::abs(plus - cplx(0.0, std::sqrt(3.0))) < 1e-12);
  inst.convention = Convention::minus;
  CHECK(std::abs(char_sum_bruteforce(inst) - cplx(0.0, -std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("character sum with q = 1 is a single Gauss-type sum") {
  for (i64 p : {5, 7, 13}) {
    for (const auto& chi : primitive_characters(p)) {
      for (i64 m = 1; m < 2 * p; ++m) {
        for (Convention conv : {Convention::plus, Convention::minus}) {
          // c = +/- b, so the sum is sum_b conj chi(b) e(+/- b' m / p)
          cplx oracle{0.0, 0.0};
          for (i64 b = 1; b < p; ++b) {
            const i64 c = conv == Convention::plus ? b : p - b;
            oracle += chi.conj()(b) * unit_exp_frac(mod_inverse(c, p) * m, p);
          }
          const CharSumInstance inst{p, 1, &chi, m, 3, conv};
          CHECK(std::abs(char_sum_bruteforce(inst) - oracle) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("closed form matches the double sum") {
  int variant_misses = 0;
  for (i64 p : {3, 5, 7, 11}) {
    for (const auto& chi : primitive_characters(p)) {
      for (i64 q = 1; q <= 12; ++q) {
        if (std::gcd(q, p) != 1) continue;
        for (i64 m = -6; m <= 6; ++m) {
          for (i64 n = -3; n <= 3; ++n) {
            for (Convention conv : {Convention::plus, Convention::minus}) {
              const CharSumInstance inst{p, q, &chi, m, n, conv};
              const cplx brute = char_sum_bruteforce(inst);
              const cplx closed = char_sum_closed(inst);
              CHECK(std::abs(brute - closed) <= 1e-9 * (1.0 + std::abs(brute)));
              if (std::abs(brute - char_sum_closed(inst, ClosedFormVariant::mixed)) >
                  1e-9 * (1.0 + std::abs(brute))) {
                ++variant_misses;
              }
            }
          }
        }
      }
    }
  }
  // the conj chi(q^2) / chi(m) variant fails for complex characters
  CHECK(variant_misses > 0);

  const DirichletCharacter chi(7, 1);
  const CharSumInstance zero{7, 4, &chi, 14, 5, Convention::plus};
  CHECK(std::abs(char_sum_bruteforce(zero)) < 1e-10);
  CHECK(char_sum_closed(zero) == cplx(0.0, 0.0));
}

TEST_CASE("character sum validation") {
  const DirichletCharacter principal(5, 0), chi(5, 1), other(7, 1);
  CHECK_THROWS_AS(char_sum_bruteforce({5, 2, &principal, 1, 1}), NonPrimitive);
  CHECK_THROWS_AS(char_sum_bruteforce({5, 10, &chi, 1, 1}), DomainError);
  CHECK_THROWS_AS(char_sum_closed({5, 2, &other, 1, 1}), DomainError);
  CHECK_THROWS_AS(char_sum_closed({5, 2, nullptr, 1, 1}), DomainError);
  CHECK(closed_form_variant_from_string("conjugate") == ClosedFormVariant::conjugate);
  CHECK(to_string(ClosedFormVariant::mixed) == "mixed");
  CHECK_THROWS_AS(closed_form_variant_from_string("guess"), DomainError);
}

TEST_CASE("shifted convolution") {
  const SmoothWindow w(WindowKind::bump_unit);
  struct Case {
    i64 q1, q1p, shift, M;
  };
  for (const Case& c : {Case{2, 3, 0, 60}, Case{1, 1, 5, 100}, Case{3, 2, -7, 80},
                        Case{5, 7, 11, 200}}) {
    double oracle = 0.0;
    for (i64 u = 1; u <= 3 * c.M; ++u) {
      for (i64 v = 1; v <= 3 * c.M; ++v) {
        if (c.q1p * u - c.q1 * v != c.shift) continue;
        const double md = static_cast<double>(c.M);
        oracle += delta().lambda(u) * delta().lambda(v) * w(u / md) * w(v / md);
      }
    }
    CAPTURE(c.M);
    CHECK(shifted_convolution(delta(), c.q1, c.q1p, c.shift, c.M) ==
          doctest::Approx(oracle).epsilon(1e-12));
  }
  // 2u - 2v = 1 has no solutions
  CHECK(shifted_convolution(delta(), 2, 2, 1, 100) == 0.0);
  CHECK_THROWS_AS(shifted_convolution(delta(), 0, 1, 0, 10), DomainError);
  CHECK_THROWS_AS(shifted_convolution(delta(), 1, 1, 0, 4000), TableTooShort);
  CHECK(shifted_convolution_bound(1, 1, 50, 0.0) == doctest::Approx(10.0));
}

TEST_CASE("short twisted sum") {
  const DirichletCharacter chi(11, 3);
  const cplx s = short_twisted_sum(delta(), chi, 154.0);
  const cplx t = short_twisted_sum(delta(), chi.conj(), 154.0);
  CHECK(std::abs(s - std::conj(t)) < 1e-12);
  const SmoothWindow w(WindowKind::bump_unit);
  cplx loop{0.0, 0.0};
  for (i64 r = 1; r <= 462; ++r) loop += delta().lambda(r) * chi(r) * w(r / 154.0);
  CHECK(std::abs(s - loop) < 1e-12);
  CHECK(short_twisted_sum(delta(), chi, 0.5) == cplx(0.0, 0.0));
  CHECK_THROWS_AS(short_twisted_sum(delta(), DirichletCharacter(11, 0), 10.0), NonPrimitive);
}

TEST_CASE("first distinguishing index") {
  const CuspForm f16 = build_form(16, 200);
  const DirichletCharacter chi(11, 1);
  const auto n = first_distinguishing_index(delta(), f16, chi, 200);
  REQUIRE(n.has_value());
  CHECK(*n == 2);
  const auto self = first_distinguishing_index(delta(), delta(), chi, 200);
  REQUIRE(self.has_value());
  CHECK(*self <= 11);
  CHECK_FALSE(first_distinguishing_index(delta(), delta(), DirichletCharacter(11, 0), 200)
                  .has_value());
  CHECK_FALSE(first_distinguishing_index(delta(), f16, chi, 0).has_value());
}
