#ifndef VECCOMP_COUNTING_HPP
#define VECCOMP_COUNTING_HPP

#include <optional>
#include <vector>

#include "veccomp/box_table.hpp"
#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp {

/// Number (total weight) of f-weighted vector compositions of `target` with
/// exactly k parts: the extended binomial coefficient, i.e. the coefficient
/// of x^target in (sum_s f(s) x^s)^k. Dynamic program over the box
/// [0, target], one dense row at a time.
BigInt binom(long k, const MultiIndex& target, const WeightFunction& f,
             const Modulus* mod = nullptr, Kernel kernel = Kernel::Parallel);

/// The Pascal-like triangle rows 0..k_max over a fixed box, retained when a
/// caller needs several rows at once.
class CoefficientTable {
 public:
  CoefficientTable(const WeightFunction& f, MultiIndex box, int k_max,
                   const Modulus* mod = nullptr, Kernel kernel = Kernel::Parallel);

  const BoxTable& row(int k) const { return rows_.at(static_cast<size_t>(k)); }
  int max_parts() const { return static_cast<int>(rows_.size()) - 1; }
  const MultiIndex& box() const { return rows_.front().bound(); }

 private:
  std::vector<BoxTable> rows_;
};

/// Same value as binom, from the multinomial sum over vector partitions
/// (the second algebraic route; part 0 enters with the leftover multiplicity).
BigInt binom_via_partitions(long k, const MultiIndex& target,
                            const WeightFunction& f);

/// Convolution identity: for any split k = k_1 + ... + k_r,
/// binom(k, target) = sum over q_1+...+q_r = target of prod binom(k_i, q_i).
BigInt vandermonde_split(const std::vector<long>& k_parts,
                         const MultiIndex& target, const WeightFunction& f);
BoxTable vandermonde_split_table(const std::vector<long>& k_parts,
                                 const MultiIndex& box, const WeightFunction& f);

/// Both sides of the absorption identity
///   target * binom(k, target) = (k/i) * sum_s s * binom(i, s) * binom(k-i, target-s)
/// with the k/i scaling kept as an exact rational.
struct AbsorptionSides {
  std::vector<BigInt> lhs;
  std::vector<BigRat> rhs;
  bool holds() const;
};
AbsorptionSides absorption_check(long k, const MultiIndex& target,
                                 const WeightFunction& f, long i);

/// Part-extraction identity: isolate how often part size m occurs,
///   binom(k, target, f) = sum_i f(m)^i C(k,i) binom(k-i, target-m*i, f|f(m):=0).
BigInt extract_part(long k, const MultiIndex& target, const WeightFunction& f,
                    const MultiIndex& m);

/// c_f: compositions with any number of parts. Requires f(0) = 0 (otherwise
/// the sum over k diverges). Linear recurrence over the box [0, target].
BigInt composition_count(const MultiIndex& target, const WeightFunction& f,
                         const Modulus* mod = nullptr,
                         Kernel kernel = Kernel::Parallel);
BoxTable composition_count_table(const MultiIndex& box, const WeightFunction& f,
                                 const Modulus* mod = nullptr,
                                 Kernel kernel = Kernel::Parallel);

/// Bracket sum: row-k coefficients summed over the residue lattice
/// { l >= 0 : l_i ≡ r_i (mod m_i) when m_i > 0, l_i = r_i when m_i = 0 },
/// which is finite because row k vanishes outside [0, k * max_part].
BigInt bracket_sum(long k, const MultiIndex& r, const MultiIndex& m,
                   const WeightFunction& f, const Modulus* mod = nullptr);

/// Row sum two ways: the closed form M^k with M = sum of all weights, and
/// the directly summed row. The two must agree.
struct RowSumSides {
  BigInt closed_form;
  BigInt direct;
};
RowSumSides row_sum(long k, const WeightFunction& f);

// Closed-form families; each equals composition_count for the matching
// weight function.
BigInt delannoy(long m, long n);
BigInt weighted_delannoy(long a, long b, long c, long m, long n);
BigInt whitney(long m, long n);
BigInt andrews_cf(const MultiIndex& l);    // parts anywhere in N^N - {0}
BigInt unit_cube_cf(const MultiIndex& l);  // parts in {0,1}^N - {0}

}  // namespace veccomp

#endif
