#include "veccomp/congruence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "veccomp/enumeration.hpp"

namespace veccomp {

namespace {

CongruenceReport make_report(std::string claim, BigInt modulus, BigInt predicted,
                             BigInt actual,
                             nlohmann::ordered_json witness = nullptr) {
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.modulus = std::move(modulus);
  rep.predicted = std::move(predicted);
  rep.actual = std::move(actual);
  rep.holds = rep.predicted == rep.actual;
  rep.witness = std::move(witness);
  return rep;
}

// g(x) = binom(p, x*p, f) tabulated over [0, box]; the weight behind the
// Babbage-style statements.
WeightFunction babbage_weight(long p, const MultiIndex& box,
                              const WeightFunction& f,
                              nlohmann::ordered_json* table_out = nullptr) {
  std::map<MultiIndex, BigInt> table;
  BoxTable cells(box);
  auto entries = table_out ? nlohmann::ordered_json::array() : nlohmann::ordered_json();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    MultiIndex x = cells.unindex(i);
    BigInt g = binom(p, x * static_cast<int>(p), f);
    if (table_out) {
      nlohmann::ordered_json e;
      e["x"] = x.coords();
      e["g"] = to_dec(g);
      entries.push_back(std::move(e));
    }
    if (g != 0) table[x] = std::move(g);
  }
  if (table_out) *table_out = std::move(entries);
  return WeightFunction::explicit_table(box.dim(), std::move(table));
}

long long checked_pow(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > (1LL << 40)) throw std::invalid_argument("prime power too large");
  }
  return r;
}

}  // namespace

nlohmann::ordered_json CongruenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["modulus"] = modulus.get_si();
  j["predicted"] = predicted.get_si();
  j["actual"] = actual.get_si();
  j["holds"] = holds;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

int parity_residue(long k, const MultiIndex& target, const WeightFunction& f) {
  if (target.dim() != f.dim())
    throw std::invalid_argument("target dimension does not match weight function");
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  if (k == 0) return target.is_zero() ? 1 : 0;
  if (k % 2 == 0) {
    if (target.any_odd()) return 0;
    return parity_residue(k / 2, target.divided_by(2), f);
  }
  int acc = 0;
  for (const auto& e : f.support_within(target).entries) {
    auto rest = target.checked_sub(e.part);
    if (!rest || rest->any_odd()) continue;
    if (mpz_odd_p(e.weight.get_mpz_t()))
      acc ^= parity_residue(k / 2, rest->divided_by(2), f);
  }
  return acc;
}

CongruenceReport check_parity(long k, const MultiIndex& target,
                              const WeightFunction& f) {
  return make_report("parity", BigInt(2), BigInt(parity_residue(k, target, f)),
                     binom(k, target, f, nullptr, Kernel::Parallel) % 2);
}

BigInt prime_row_residue(long p, const MultiIndex& target, const WeightFunction& f) {
  require_prime(p);
  if (!target.divisible_by(static_cast<int>(p))) return BigInt(0);
  Modulus mod(p);
  return reduced(f.eval(target.divided_by(static_cast<int>(p))), &mod);
}

CongruenceReport check_prime_row(long p, const MultiIndex& target,
                                 const WeightFunction& f) {
  Modulus mod(p);
  nlohmann::ordered_json witness;
  if (target.divisible_by(static_cast<int>(p)))
    witness["m"] = target.divided_by(static_cast<int>(p)).coords();
  return make_report("prime-row", BigInt(p), prime_row_residue(p, target, f),
                     binom(p, target, f, &mod), witness);
}

CongruenceReport check_babbage(long n, long p, const MultiIndex& m,
                               const WeightFunction& f) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Modulus mod(p * p);
  nlohmann::ordered_json gtable;
  WeightFunction g = babbage_weight(p, m, f, &gtable);
  BigInt rhs = binom(n, m, g, &mod);
  BigInt lhs = binom(n * p, m * static_cast<int>(p), f, &mod);
  nlohmann::ordered_json witness;
  witness["g_table"] = std::move(gtable);
  return make_report("babbage", BigInt(p * p), std::move(rhs), std::move(lhs),
                     std::move(witness));
}

CongruenceReport check_mod_p_reduction(long n, long p, const MultiIndex& m,
                                       const WeightFunction& f) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Modulus mod(p);
  return make_report("mod-p-reduction", BigInt(p), binom(n, m, f, &mod),
                     binom(n * p, m * static_cast<int>(p), f, &mod));
}

BigInt prime_power_row_residue(long p, int e, const MultiIndex& target,
                               const WeightFunction& f) {
  require_prime(p);
  if (e < 1) throw std::invalid_argument("exponent must be >= 1");
  long long q = checked_pow(p, e);
  if (!target.divisible_by(static_cast<int>(q))) return BigInt(0);
  Modulus mod(p);
  return reduced(f.eval(target.divided_by(static_cast<int>(q))), &mod);
}

CongruenceReport check_prime_power_row(long p, int e, const MultiIndex& target,
                                       const WeightFunction& f) {
  BigInt predicted = prime_power_row_residue(p, e, target, f);
  long long q = checked_pow(p, e);
  Modulus mod(p);
  return make_report("prime-power-row", BigInt(p), std::move(predicted),
                     binom(static_cast<long>(q), target, f, &mod));
}

CongruenceReport check_non_multiple_row(long n, long p, const MultiIndex& target,
                                        const WeightFunction& f) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (target.divisible_by(static_cast<int>(p)))
    throw std::invalid_argument(
        "target is a multiple of p; the Babbage-style check applies instead");
  Modulus mod(p * p);

  // x ranges over [0, floor(target/p)]; g tabulated once on that box.
  std::vector<int> xb(static_cast<size_t>(target.dim()));
  for (int i = 0; i < target.dim(); ++i)
    xb[static_cast<size_t>(i)] = target[i] / static_cast<int>(p);
  WeightFunction g = babbage_weight(p, MultiIndex(xb), f);

  BoxTable row_p = CoefficientTable(f, target, static_cast<int>(p))
                       .row(static_cast<int>(p));
  BigInt sum(0);
  auto contributing = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < row_p.size(); ++i) {
    MultiIndex s = row_p.unindex(i);
    if (s.is_zero() || s.divisible_by(static_cast<int>(p))) continue;
    auto rest = target.checked_sub(s);
    if (!rest || !rest->divisible_by(static_cast<int>(p))) continue;
    if (row_p[i] == 0) continue;
    MultiIndex x = rest->divided_by(static_cast<int>(p));
    BigInt term = row_p[i] * binom(n - 1, x, g);
    if (term != 0) {
      nlohmann::ordered_json c;
      c["k"] = s.coords();
      c["x"] = x.coords();
      contributing.push_back(std::move(c));
    }
    sum += term;
  }
  BigInt predicted = reduced(BigInt(n) * sum, &mod);
  BigInt actual = binom(n * p, target, f, &mod);
  nlohmann::ordered_json witness;
  witness["terms"] = std::move(contributing);
  return make_report("non-multiple-row", BigInt(p * p), std::move(predicted),
                     std::move(actual), std::move(witness));
}

BigInt divisibility_modulus(long k, const MultiIndex& target) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  BigInt m(1);
  for (int i = 0; i < target.dim(); ++i) {
    long t = k / std::gcd(k, static_cast<long>(target[i]));
    BigInt ti(t);
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), ti.get_mpz_t());
  }
  return m;
}

CongruenceReport check_divisibility(long k, const MultiIndex& target,
                                    const WeightFunction& f) {
  BigInt m = divisibility_modulus(k, target);
  BigInt value = binom(k, target, f);
  nlohmann::ordered_json witness;
  witness["value"] = to_dec(value);
  auto ts = nlohmann::ordered_json::array();
  for (int i = 0; i < target.dim(); ++i)
    ts.push_back(k / std::gcd(k, static_cast<long>(target[i])));
  witness["t"] = std::move(ts);
  BigInt actual = value % m;  // m >= 1, value >= 0
  if (m == 1) actual = 0;
  return make_report("divisibility", std::move(m), BigInt(0), std::move(actual),
                     std::move(witness));
}

CongruenceReport check_pn_row(long p, long n, const WeightFunction& f) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int dim = f.dim();
  Modulus mod(p * n);

  BigInt predicted(0);
  auto terms = nlohmann::ordered_json::array();
  const long kmax = std::min<long>(n, dim);
  for (long k = 1; k <= kmax; ++k) {
    // multinomial (pn)! / ((p!)^k (p(n-k))!)
    BigInt coeff = factorial(p * n);
    coeff /= pow_big(factorial(p), static_cast<unsigned long>(k));
    coeff /= factorial(p * (n - k));
    BigInt weights(0);
    for_each_set_partition(dim, static_cast<int>(k), [&](const SetPartition& sp) {
      BigInt prod(1);
      for (const auto& block : sp.blocks) {
        std::vector<int> coords(static_cast<size_t>(dim), 0);
        for (int i : block) coords[static_cast<size_t>(i - 1)] = 1;
        prod *= pow_big(f.eval(MultiIndex(coords)), static_cast<unsigned long>(p));
      }
      weights += prod;
      return true;
    });
    BigInt f0pow = pow_big(f.at_zero(), static_cast<unsigned long>(p * (n - k)));
    BigInt term = coeff * weights * f0pow;
    nlohmann::ordered_json t;
    t["k"] = k;
    t["term_mod"] = reduced(term, &mod).get_si();
    terms.push_back(std::move(t));
    predicted += term;
  }
  reduce_into(predicted, &mod);
  BigInt actual = binom(p * n, MultiIndex::uniform(dim, static_cast<int>(p)), f, &mod);
  nlohmann::ordered_json witness;
  witness["terms"] = std::move(terms);
  return make_report("pn-row", BigInt(p * n), std::move(predicted),
                     std::move(actual), std::move(witness));
}

namespace {

struct LucasLevel {
  long digit;
  BoxTable row;  // row `digit` mod p over the level's box
};

BigInt lucas_rec(const std::vector<LucasLevel>& levels, std::size_t j,
                 const MultiIndex& remaining, long p) {
  const LucasLevel& level = levels[j];
  if (j + 1 == levels.size()) {
    if (!remaining.le(level.row.bound())) return BigInt(0);
    return level.row.at(remaining);
  }
  BigInt acc(0);
  const MultiIndex cap = remaining.min_with(level.row.bound());
  BoxTable scan(cap);  // index space for the digit m_j
  for (std::size_t i = 0; i < scan.size(); ++i) {
    MultiIndex m0 = scan.unindex(i);
    const BigInt& coeff = level.row.at(m0);
    if (coeff == 0) continue;
    auto rest = remaining.checked_sub(m0);
    if (!rest || !rest->divisible_by(static_cast<int>(p))) continue;
    acc += coeff * lucas_rec(levels, j + 1, rest->divided_by(static_cast<int>(p)), p);
  }
  return acc % p;
}

}  // namespace

BigInt lucas_residue(long k, const MultiIndex& target, long p,
                     const WeightFunction& f) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  Modulus mod(p);

  std::vector<long> digits;
  long rest = k;
  do {
    digits.push_back(rest % p);
    rest /= p;
  } while (rest > 0);

  // Pre-build row k_j mod p per digit level; the box shrinks by p per level.
  std::vector<LucasLevel> levels;
  MultiIndex level_target = target;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    MultiIndex box = level_target;
    if (f.finite_support())
      box = box.min_with(f.max_part() * static_cast<int>(digits[j]));
    levels.push_back(
        {digits[j], CoefficientTable(f, box, static_cast<int>(digits[j]), &mod)
                        .row(static_cast<int>(digits[j]))});
    level_target = level_target.divided_by(static_cast<int>(p));
  }
  return reduced(lucas_rec(levels, 0, target, p), &mod);
}

CongruenceReport check_lucas(long k, const MultiIndex& target, long p,
                             const WeightFunction& f) {
  Modulus mod(p);
  return make_report("lucas", BigInt(p), lucas_residue(k, target, p, f),
                     binom(k, target, f, &mod));
}

BigInt fast_mod_p_residue(long k, const MultiIndex& target, long p,
                          const WeightFunction& f) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  Modulus mod(p);
  if (k < p) return binom(k, target, f, &mod);

  const long k0 = k % p;
  const long k1 = k / p;
  const MultiIndex l0 = target.mod_scalar(static_cast<int>(p));
  std::vector<int> xc(static_cast<size_t>(target.dim()));
  for (int i = 0; i < target.dim(); ++i)
    xc[static_cast<size_t>(i)] = target[i] / static_cast<int>(p);
  const MultiIndex x(xc);

  MultiIndex row_box = target;
  if (f.finite_support())
    row_box = row_box.min_with(f.max_part() * static_cast<int>(k0));
  BoxTable row0 = CoefficientTable(f, row_box, static_cast<int>(k0), &mod)
                      .row(static_cast<int>(k0));

  BigInt acc(0);
  BoxTable scan(x);  // index space for m <= x
  for (std::size_t i = 0; i < scan.size(); ++i) {
    MultiIndex m = scan.unindex(i);
    MultiIndex cell = l0 + m * static_cast<int>(p);
    if (!cell.le(row0.bound())) continue;
    const BigInt& coeff = row0.at(cell);
    if (coeff == 0) continue;
    auto rest = x.checked_sub(m);
    acc += coeff * fast_mod_p_residue(k1, *rest, p, f);
  }
  return reduced(acc, &mod);
}

CongruenceReport check_fast_mod_p(long k, const MultiIndex& target, long p,
                                  const WeightFunction& f) {
  Modulus mod(p);
  return make_report("fast-mod-p", BigInt(p), fast_mod_p_residue(k, target, p, f),
                     binom(k, target, f, &mod));
}

CongruenceReport check_glaisher(long k, const MultiIndex& r, const MultiIndex& m,
                                long p, const WeightFunction& f) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (int i = 0; i < m.dim(); ++i) {
    // p ≡ 1 (mod 0) is unsatisfiable, and a representative r_i >= m_i shifts
    // the lattice off the full residue class, where the statement fails.
    if (m[i] < 1) throw std::invalid_argument("glaisher needs m_i >= 1");
    if ((p - 1) % m[i] != 0)
      throw std::invalid_argument("glaisher needs p ≡ 1 (mod m_i) for all i");
    if (r.dim() != m.dim() || r[i] >= m[i])
      throw std::invalid_argument("glaisher needs canonical residues r_i < m_i");
  }
  BigInt lower = bracket_sum(k, r, m, f);
  BigInt upper = bracket_sum(k + p - 1, r, m, f);
  Modulus mod(p);
  nlohmann::ordered_json witness;
  witness["bracket_k"] = to_dec(lower);
  witness["bracket_k_plus_p_minus_1"] = to_dec(upper);
  return make_report("glaisher", BigInt(p), reduced(lower, &mod),
                     reduced(upper, &mod), std::move(witness));
}

CongruenceReport check_linear_recurrence(long n, long p, int b,
                                         const WeightFunction& f) {
  require_prime(p);
  if (f.dim() != 1)
    throw std::invalid_argument("linear recurrence congruence is one-dimensional");
  if (!f.finite_support())
    throw std::invalid_argument("needs a finite-support weight");
  if (f.at_zero() != 0) throw std::invalid_argument("needs f(0) = 0");
  if (n < 0 || b < 0) throw std::invalid_argument("n and b must be >= 0");
  const long m = f.max_part()[0];
  if (m < 1) throw std::invalid_argument("weight has empty support");
  long long stride = 1;
  for (int i = 0; i < b; ++i) {
    stride *= p;
    if (stride > (1LL << 22)) throw std::invalid_argument("p^b too large");
  }
  const long long top = n + m * stride;
  BoxTable counts = composition_count_table(
      MultiIndex({static_cast<int>(top)}), f);

  Modulus mod(p);
  BigInt actual = reduced(counts.at(MultiIndex({static_cast<int>(top)})), &mod);
  BigInt predicted(0);
  for (long j = 1; j <= m; ++j) {
    long long at = n + (m - j) * stride;
    predicted += f.eval(MultiIndex({static_cast<int>(j)})) *
                 counts.at(MultiIndex({static_cast<int>(at)}));
  }
  reduce_into(predicted, &mod);
  return make_report("linear-recurrence", BigInt(p), std::move(predicted),
                     std::move(actual));
}

CongruenceReport check_razpet(long a, long b, long c,
                              const std::vector<std::pair<int, int>>& digits,
                              long p) {
  require_prime(p);
  if (digits.empty()) throw std::invalid_argument("need at least one digit pair");
  long long A = 0, B = 0;
  BigInt product(1);
  auto detail = nlohmann::ordered_json::array();
  for (const auto& [ai, bi] : digits) {  // most significant first
    if (ai < 0 || bi < 0 || ai >= p || bi >= p)
      throw std::invalid_argument("digits must lie in [0, p)");
    A = A * p + ai;
    B = B * p + bi;
    BigInt v = weighted_delannoy(a, b, c, ai, bi);
    nlohmann::ordered_json d;
    d["digit"] = {ai, bi};
    d["value"] = to_dec(v);
    detail.push_back(std::move(d));
    product *= v;
  }
  Modulus mod(p);
  BigInt actual = reduced(weighted_delannoy(a, b, c, A, B), &mod);
  nlohmann::ordered_json witness;
  witness["point"] = {A, B};
  witness["digits"] = std::move(detail);
  return make_report("razpet", BigInt(p), reduced(product, &mod),
                     std::move(actual), std::move(witness));
}

MannShanksResult mann_shanks(long q, int dim, int max_dim) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (dim > max_dim)
    throw std::invalid_argument("dimension exceeds the configured cap");

  // Indicator of the full 0/1 cube, zero part included.
  std::vector<MultiIndex> cube;
  for (long mask = 0; mask < (1L << dim); ++mask) {
    std::vector<int> coords(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) coords[static_cast<size_t>(i)] = (mask >> i) & 1;
    cube.emplace_back(std::move(coords));
  }
  WeightFunction f = WeightFunction::indicator(dim, cube);

  MannShanksResult result;
  result.q = q;
  result.dim = dim;
  const long m_max = q / 2;
  std::vector<char> failing(static_cast<size_t>(m_max) + 1, 0);
#pragma omp parallel for schedule(dynamic)
  for (long m = 2; m <= m_max; ++m) {
    Modulus mod(m);
    MultiIndex target = MultiIndex::uniform(dim, static_cast<int>(q - 2 * m));
    if (binom(m, target, f, &mod, Kernel::Serial) != 0)
      failing[static_cast<size_t>(m)] = 1;
  }
  for (long m = 2; m <= m_max; ++m)
    if (failing[static_cast<size_t>(m)]) result.witnesses.push_back(m);
  result.prime_consistent = result.witnesses.empty();
  return result;
}

}  // namespace veccomp
