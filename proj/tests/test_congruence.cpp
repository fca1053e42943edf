#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "veccomp/congruence.hpp"
#include "veccomp/counting.hpp"

using namespace veccomp;
using namespace veccomp::testing;

namespace {
const long kPrimes[] = {2, 3, 5, 7};
}

TEST_CASE("parity agrees with the direct residue everywhere") {
  CHECK(parity_residue(21, MultiIndex{20, 19, 18}, parity3_weights()) == 0);
  CHECK(parity_residue(19, MultiIndex{3, 16, 2}, parity3_weights()) == 1);
  // even parts count with an odd coordinate forces an even value
  CHECK(parity_residue(4, MultiIndex{1, 2}, intro_weights()) == 0);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    for (const auto& target : box_cells(fixture.sweep_box))
      for (long k = 0; k <= 8; ++k) {
        auto report = check_parity(k, target, fixture.f);
        CHECK(report.holds);
      }
  }
}

TEST_CASE("prime rows collapse to a weight value") {
  auto five = five_step_weights();
  CHECK(prime_row_residue(3, MultiIndex{3, 3}, five) == 1);
  CHECK(binom(3, MultiIndex{3, 3}, five) == 13);  // 13 ≡ 1 (mod 3)
  CHECK(prime_row_residue(5, MultiIndex{1, 2}, five) == 0);
  CHECK(prime_row_residue(3, MultiIndex{0, 3}, five) == 1);
  CHECK_THROWS_AS(prime_row_residue(6, MultiIndex{1, 2}, five), std::invalid_argument);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    for (long p : kPrimes) {
      MultiIndex box = MultiIndex::uniform(fixture.f.dim(),
                                           static_cast<int>(p) * 2);
      for (const auto& target : box_cells(box))
        CHECK(check_prime_row(p, target, fixture.f).holds);
    }
  }
}

TEST_CASE("Babbage-style lift mod p^2") {
  auto report = check_babbage(2, 3, MultiIndex{1, 2}, five_step_weights());
  CHECK(report.holds);
  CHECK(report.predicted == 8);  // 26 ≡ 8 and 170 ≡ 8 (mod 9)
  CHECK(report.actual == 8);

  CHECK(check_babbage(2, 5, MultiIndex{1, 1}, delannoy_steps()).holds);
  CHECK(check_babbage(3, 2, MultiIndex::zeros(2), divis_weights()).holds);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.dim() > 2) continue;
    for (long p : {2L, 3L, 5L})
      for (long n = 0; n <= 2; ++n)
        for (const auto& m : box_cells(MultiIndex::uniform(fixture.f.dim(), 2)))
          CHECK(check_babbage(n, p, m, fixture.f).holds);
  }
}

TEST_CASE("mod-p reduction of scaled rows") {
  auto report = check_mod_p_reduction(2, 3, MultiIndex{1, 2}, five_step_weights());
  CHECK(report.holds);
  CHECK(report.predicted == 2);  // 26 and 170 are both ≡ 2 (mod 3)

  CHECK(check_mod_p_reduction(3, 2, MultiIndex{1, 0}, intro_weights()).holds);
  // n = 1 is the prime-row statement itself
  CHECK(check_mod_p_reduction(1, 5, MultiIndex{1, 1}, delannoy_steps()).holds);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.dim() > 2) continue;
    for (long p : {2L, 3L, 5L})
      for (long n = 0; n <= 3; ++n)
        for (const auto& m : box_cells(MultiIndex::uniform(fixture.f.dim(), 2)))
          CHECK(check_mod_p_reduction(n, p, m, fixture.f).holds);
  }
}

TEST_CASE("prime power rows") {
  CHECK(prime_power_row_residue(2, 2, MultiIndex{4, 4}, delannoy_steps()) == 1);
  CHECK(binom(4, MultiIndex{4, 4}, delannoy_steps()) == 1);
  CHECK(prime_power_row_residue(3, 2, MultiIndex{9, 18}, five_step_weights()) == 1);
  CHECK(prime_power_row_residue(3, 2, MultiIndex{9, 17}, five_step_weights()) == 0);
  CHECK(check_prime_power_row(3, 2, MultiIndex{9, 18}, five_step_weights()).holds);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.dim() > 2) continue;
    for (long p : {2L, 3L})
      for (int e = 1; e <= 2; ++e) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        MultiIndex box = MultiIndex::uniform(fixture.f.dim(), static_cast<int>(q) + 2);
        for (const auto& target : box_cells(box))
          CHECK(check_prime_power_row(p, e, target, fixture.f).holds);
        // exact multiples hit the f(m) branch
        CHECK(check_prime_power_row(
                  p, e, MultiIndex::uniform(fixture.f.dim(), static_cast<int>(q)),
                  fixture.f)
                  .holds);
      }
  }
}

TEST_CASE("non-multiple rows mod p^2") {
  auto report = check_non_multiple_row(4, 3, MultiIndex{2, 3}, affine_weights());
  CHECK(report.holds);
  CHECK(report.predicted == 0);  // 407880 = 45320 * 9
  CHECK(report.actual == 0);

  CHECK(check_non_multiple_row(2, 3, MultiIndex{1, 2}, five_step_weights()).holds);
  // n = 1: both sides are just the prime row at the target
  CHECK(check_non_multiple_row(1, 3, MultiIndex{1, 2}, five_step_weights()).holds);
  CHECK_THROWS_AS(check_non_multiple_row(2, 3, MultiIndex{3, 6}, five_step_weights()),
                  std::invalid_argument);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.dim() > 2) continue;
    for (long p : {2L, 3L})
      for (long n = 1; n <= 3; ++n)
        for (const auto& target : box_cells(MultiIndex::uniform(fixture.f.dim(), 4))) {
          if (target.divisible_by(static_cast<int>(p))) continue;
          CHECK(check_non_multiple_row(n, p, target, fixture.f).holds);
        }
  }
}

TEST_CASE("divisibility modulus") {
  CHECK(divisibility_modulus(12, MultiIndex{9, 8}) == 12);  // lcm(4, 3)
  CHECK(divisibility_modulus(6, MultiIndex{3, 6}) == 2);
  CHECK(divisibility_modulus(4, MultiIndex{4, 4}) == 1);

  auto report = check_divisibility(12, MultiIndex{9, 8}, divis_weights());
  CHECK(report.holds);
  CHECK(report.modulus == 12);
  CHECK(report.witness["value"] == "44742060");

  CHECK(check_divisibility(6, MultiIndex{3, 6}, five_step_weights()).holds);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    for (const auto& target : box_cells(fixture.sweep_box))
      for (long k = 1; k <= 8; ++k)
        CHECK(check_divisibility(k, target, fixture.f).holds);
  }
}

TEST_CASE("p*n rows at the p*(1,..,1) target") {
  // numerical evaluation from the q = 55 analysis: 5 + 20 ≡ 0 (mod 25)
  auto report = check_pn_row(5, 5, unit_sphere2_weights());
  CHECK(report.holds);
  CHECK(report.predicted == 0);
  CHECK(report.witness["terms"][0]["term_mod"] == 5);
  CHECK(report.witness["terms"][1]["term_mod"] == 20);

  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.kind() == WeightFunction::Kind::ProductWeight) continue;
    for (long p : {2L, 3L, 5L})
      for (long n = 1; n <= 3; ++n)
        CHECK(check_pn_row(p, n, fixture.f).holds);
  }

  // one-dimensional case: only the k = 1 term survives
  auto line = WeightFunction::indicator(1, {MultiIndex{0}, MultiIndex{1}});
  for (long p : {2L, 3L, 5L})
    for (long n = 1; n <= 3; ++n) {
      auto rep = check_pn_row(p, n, line);
      CHECK(rep.holds);
      CHECK(rep.witness["terms"].size() == 1);
    }
  CHECK(check_pn_row(5, 3, line).actual == binomial(15, 5) % 15);
}

TEST_CASE("Lucas digit products") {
  auto five = five_step_weights();
  CHECK(lucas_residue(5, MultiIndex{3, 6}, 3, five) == 2);
  CHECK(binom(5, MultiIndex{3, 6}, five) == 80);  // 80 ≡ 2 (mod 3)
  // k below p is a single split
  CHECK(lucas_residue(2, MultiIndex{1, 2}, 5, intro_weights()) ==
        binom(2, MultiIndex{1, 2}, intro_weights()) % 5);
  CHECK(check_lucas(3, MultiIndex{2, 1}, 2, intro_weights()).holds);
}

TEST_CASE("fast mod-p evaluation") {
  auto five = five_step_weights();
  CHECK(fast_mod_p_residue(5, MultiIndex{3, 6}, 3, five) == 2);
  CHECK(fast_mod_p_residue(8, MultiIndex{5, 9}, 7, five) == 0);
  CHECK(fast_mod_p_residue(2, MultiIndex{1, 2}, 5, intro_weights()) ==
        binom(2, MultiIndex{1, 2}, intro_weights()) % 5);
}

TEST_CASE("lucas = fast = direct residues across the grid") {
  for (const auto& fixture : standard_fixtures()) {
    CAPTURE(fixture.name);
    if (fixture.f.dim() > 2) continue;
    for (long p : kPrimes)
      for (const auto& target : box_cells(fixture.sweep_box)) {
        if (target.coord_sum() % 2 != 0) continue;
        for (long k = 0; k <= 8; ++k) {
          Modulus mod(p);
          BigInt direct = binom(k, target, fixture.f, &mod);
          CHECK(lucas_residue(k, target, p, fixture.f) == direct);
          CHECK(fast_mod_p_residue(k, target, p, fixture.f) == direct);
        }
      }
  }
  // three-dimensional spot checks
  for (long p : {2L, 3L}) {
    Modulus mod(p);
    for (long k : {4L, 7L}) {
      MultiIndex t{2, 3, 1};
      BigInt direct = binom(k, t, parity3_weights(), &mod);
      CHECK(lucas_residue(k, t, p, parity3_weights()) == direct);
      CHECK(fast_mod_p_residue(k, t, p, parity3_weights()) == direct);
    }
  }
}

TEST_CASE("Glaisher-style bracket periodicity") {
  auto report = check_glaisher(2, MultiIndex{1, 0}, MultiIndex{4, 1}, 5,
                               delannoy_steps());
  CHECK(report.holds);
  CHECK(report.actual == 4);  // 204 ≡ 4 (mod 5)
  CHECK(report.witness["bracket_k"] == "4");
  CHECK(report.witness["bracket_k_plus_p_minus_1"] == "204");

  CHECK(check_glaisher(3, MultiIndex{0, 1}, MultiIndex{3, 2}, 7, delannoy_steps())
            .holds);
  // m = 1 everywhere: brackets are the row sums M^k and M^(k+p-1)
  for (long p : kPrimes)
    for (long k = 1; k <= 3; ++k)
      CHECK(check_glaisher(k, MultiIndex::zeros(2), MultiIndex::ones(2), p,
                           five_step_weights())
                .holds);
  CHECK_THROWS_AS(check_glaisher(2, MultiIndex{1, 0}, MultiIndex{4, 1}, 7,
                                 delannoy_steps()),
                  std::invalid_argument);

  // representatives outside the canonical range shift the lattice off the
  // residue class and the statement genuinely fails there, so they are refused
  CHECK_THROWS_AS(check_glaisher(1, MultiIndex{0, 2}, MultiIndex{1, 1}, 2,
                                 intro_weights()),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_glaisher(1, MultiIndex{1, 0}, MultiIndex{0, 2}, 5,
                                 intro_weights()),
                  std::invalid_argument);

  for (const auto& fixture : standard_fixtures()) {
    if (fixture.f.dim() > 2 || !fixture.f.finite_support()) continue;
    CAPTURE(fixture.name);
    // p ≡ 1 (mod m_i) pairs within the test prime set
    struct Case { long p; MultiIndex m; };
    const Case cases[] = {{2, MultiIndex{1, 1}}, {3, MultiIndex{2, 1}},
                          {5, MultiIndex{4, 2}}, {7, MultiIndex{3, 2}},
                          {3, MultiIndex{1, 2}}};
    for (const auto& c : cases)
      for (long k = 1; k <= 3; ++k)
        for (const auto& r : box_cells(MultiIndex{2, 2})) {
          bool canonical = true;
          for (int i = 0; i < 2; ++i) canonical = canonical && r[i] < c.m[i];
          if (!canonical) continue;
          CHECK(check_glaisher(k, r, c.m, c.p, fixture.f).holds);
        }
  }
}

TEST_CASE("linear recurrence congruence in one dimension") {
  auto fib = WeightFunction::indicator(1, {MultiIndex{1}, MultiIndex{2}});
  // c(8) = 34 ≡ 1 and c(5) + c(2) = 8 + 2 = 10 ≡ 1 (mod 3)
  auto report = check_linear_recurrence(2, 3, 1, fib);
  CHECK(report.holds);
  CHECK(report.actual == 1);
  CHECK(report.predicted == 1);

  // b = 0 is the defining recurrence itself
  CHECK(check_linear_recurrence(4, 2, 0, fib).holds);

  auto trib = WeightFunction::indicator(1, {MultiIndex{1}, MultiIndex{2}, MultiIndex{3}});
  CHECK(check_linear_recurrence(1, 5, 1, trib).holds);

  for (long p : kPrimes)
    for (int b = 0; b <= 2; ++b)
      for (long n = 0; n <= 6; ++n) {
        CHECK(check_linear_recurrence(n, p, b, fib).holds);
        CHECK(check_linear_recurrence(n, p, b, trib).holds);
      }

  CHECK_THROWS_AS(check_linear_recurrence(1, 3, 1, intro_weights()),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_linear_recurrence(1, 3, 1, divis_weights()),
                  std::invalid_argument);
}

TEST_CASE("Razpet digit product for weighted Delannoy numbers") {
  // digits (1,1),(2,0) base 3 assemble to (5,3); c(1,1) = 3 ≡ 0 makes both sides 0
  auto report = check_razpet(1, 1, 1, {{1, 1}, {2, 0}}, 3);
  CHECK(report.holds);
  CHECK(report.predicted == 0);
  CHECK(report.witness["point"] == nlohmann::ordered_json({5, 3}));

  // a single digit pair is the identity
  auto single = check_razpet(2, 3, 1, {{2, 1}}, 5);
  CHECK(single.holds);
  CHECK(single.predicted == single.actual);

  CHECK(check_razpet(2, 3, 1, {{1, 2}, {3, 1}}, 5).holds);
  CHECK_THROWS_AS(check_razpet(1, 1, 1, {{3, 0}}, 3), std::invalid_argument);

  for (long p : kPrimes) {
    for (long a = 1; a <= 2; ++a)
      for (long b = 1; b <= 2; ++b)
        for (long c = 1; c <= 2; ++c)
          for (int d0 = 0; d0 < p; ++d0)
            for (int d1 = 0; d1 < p && d1 < 3; ++d1)
              CHECK(check_razpet(a, b, c, {{d1, d0}, {d0, d1}}, p).holds);
  }
}

TEST_CASE("one-dimensional prime criterion matches primality up to 200") {
  for (long q = 2; q <= 200; ++q) {
    auto result = mann_shanks(q, 1);
    CAPTURE(q);
    CHECK(result.prime_consistent == is_prime(q));
  }
}

TEST_CASE("two-dimensional prime criterion") {
  auto c55 = mann_shanks(55, 2);
  CHECK_FALSE(c55.prime_consistent);
  CHECK(std::find(c55.witnesses.begin(), c55.witnesses.end(), 20) != c55.witnesses.end());
  CHECK(std::find(c55.witnesses.begin(), c55.witnesses.end(), 22) != c55.witnesses.end());
  // the classic single choice m = (q - p)/2 = 25 fails to witness here
  CHECK(std::find(c55.witnesses.begin(), c55.witnesses.end(), 25) == c55.witnesses.end());

  auto c4 = mann_shanks(4, 2);
  CHECK(std::find(c4.witnesses.begin(), c4.witnesses.end(), 2) != c4.witnesses.end());

  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 7L}) {
    CHECK(mann_shanks(q, 2).prime_consistent);
    CHECK(mann_shanks(q, 3).prime_consistent);
  }
  CHECK_THROWS_AS(mann_shanks(10, 4), std::invalid_argument);
  CHECK_FALSE(mann_shanks(10, 4, 5).prime_consistent);
}
