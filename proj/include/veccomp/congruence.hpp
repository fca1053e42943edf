#ifndef VECCOMP_CONGRUENCE_HPP
#define VECCOMP_CONGRUENCE_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "veccomp/counting.hpp"
#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp {

/// One congruence claim checked against direct computation. `predicted` is
/// the residue the statement prescribes, `actual` the directly computed one;
/// both canonical in [0, modulus).
struct CongruenceReport {
  std::string claim;
  BigInt modulus;
  BigInt predicted;
  BigInt actual;
  bool holds = false;
  nlohmann::ordered_json witness;

  nlohmann::ordered_json to_json() const;
};

// Parity of the coefficient by the three-way case recursion on (k, target);
// agrees with binom mod 2 unconditionally.
int parity_residue(long k, const MultiIndex& target, const WeightFunction& f);
CongruenceReport check_parity(long k, const MultiIndex& target,
                              const WeightFunction& f);

// Row p (p prime) collapses mod p: f(m) at target = m*p, zero elsewhere.
BigInt prime_row_residue(long p, const MultiIndex& target, const WeightFunction& f);
CongruenceReport check_prime_row(long p, const MultiIndex& target,
                                 const WeightFunction& f);

// Babbage-style lift mod p^2: binom(n*p, m*p, f) ≡ binom(n, m, g) with
// g(x) = binom(p, x*p, f).
CongruenceReport check_babbage(long n, long p, const MultiIndex& m,
                               const WeightFunction& f);

// Same collapse mod p with g replaced by f itself.
CongruenceReport check_mod_p_reduction(long n, long p, const MultiIndex& m,
                                       const WeightFunction& f);

// Row p^e mod p: f(m) at target = p^e * m, zero elsewhere.
BigInt prime_power_row_residue(long p, int e, const MultiIndex& target,
                               const WeightFunction& f);
CongruenceReport check_prime_power_row(long p, int e, const MultiIndex& target,
                                       const WeightFunction& f);

// Row n*p mod p^2 when the target is NOT a multiple of p: a single layer of
// non-multiple factors survives.
CongruenceReport check_non_multiple_row(long n, long p, const MultiIndex& target,
                                        const WeightFunction& f);

// lcm of t_i = k / gcd(k, target_i); always divides binom(k, target, f).
BigInt divisibility_modulus(long k, const MultiIndex& target);
CongruenceReport check_divisibility(long k, const MultiIndex& target,
                                    const WeightFunction& f);

// Row p*n at target p*(1,..,1) mod p*n: only unit-cube partitions of
// (1,..,1) survive, with multinomial weights (pn)!/((p!)^k (p(n-k))!).
CongruenceReport check_pn_row(long p, long n, const WeightFunction& f);

// Lucas-style digit product: sum over all digit splits m_0 + m_1 p + ... of
// the target of prod binom(k_j, m_j) mod p.
BigInt lucas_residue(long k, const MultiIndex& target, long p,
                     const WeightFunction& f);
CongruenceReport check_lucas(long k, const MultiIndex& target, long p,
                             const WeightFunction& f);

// Base-p divide and conquer: reduces k below p in log_p(k) rounds, each
// round a small convolution; fast route for residues mod p.
BigInt fast_mod_p_residue(long k, const MultiIndex& target, long p,
                          const WeightFunction& f);
CongruenceReport check_fast_mod_p(long k, const MultiIndex& target, long p,
                                  const WeightFunction& f);

// Glaisher-style period of bracket sums: adding p-1 to the row index keeps
// the sum mod p, provided p ≡ 1 (mod m_i) for every i with m_i > 0.
CongruenceReport check_glaisher(long k, const MultiIndex& r, const MultiIndex& m,
                                long p, const WeightFunction& f);

// One-dimensional linear recurrence with stride p^b through c_f.
CongruenceReport check_linear_recurrence(long n, long p, int b,
                                         const WeightFunction& f);

// Lucas property of the weighted Delannoy numbers: digits most significant
// first, value at the assembled point ≡ product of per-digit values mod p.
CongruenceReport check_razpet(long a, long b, long c,
                              const std::vector<std::pair<int, int>>& digits,
                              long p);

/// Mann-Shanks style explorer: with f the indicator of the full 0/1 cube,
/// q > 1 is conjectured prime iff m divides binom(m, (q-2m)*(1,..,1)) for
/// all 0 <= 2m <= q. Returns every failing m.
struct MannShanksResult {
  long q = 0;
  int dim = 1;
  bool prime_consistent = false;
  std::vector<long> witnesses;
};
MannShanksResult mann_shanks(long q, int dim, int max_dim = 3);

}  // namespace veccomp

#endif
