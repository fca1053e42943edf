#include "veccomp/counting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace veccomp {

namespace {

void check_dims(const MultiIndex& target, const WeightFunction& f) {
  if (target.dim() != f.dim())
    throw std::invalid_argument("target dimension does not match weight function");
}

// Row k vanishes outside [0, k * max_part] for finite-support weights.
bool outside_row_support(long k, const MultiIndex& target, const WeightFunction& f) {
  if (!f.finite_support()) return false;
  MultiIndex mp = f.max_part();
  for (int i = 0; i < target.dim(); ++i)
    if (static_cast<long long>(mp[i]) * k < target[i]) return true;
  return false;
}

BoxTable row_over_box(long k, const MultiIndex& box, const WeightFunction& f,
                      const Modulus* mod, Kernel kernel) {
  Support support = f.support_within(box);
  BoxTable cur(box), next(box);
  cur.at(MultiIndex::zeros(box.dim())) = reduced(BigInt(1), mod);
  for (long step = 0; step < k; ++step) {
    kernels::next_row(next, cur, support, mod, kernel);
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

BigInt binom(long k, const MultiIndex& target, const WeightFunction& f,
             const Modulus* mod, Kernel kernel) {
  check_dims(target, f);
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  if (k == 0) return reduced(BigInt(target.is_zero() ? 1 : 0), mod);
  if (outside_row_support(k, target, f)) return BigInt(0);
  return row_over_box(k, target, f, mod, kernel).at(target);
}

CoefficientTable::CoefficientTable(const WeightFunction& f, MultiIndex box,
                                   int k_max, const Modulus* mod, Kernel kernel) {
  if (box.dim() != f.dim())
    throw std::invalid_argument("box dimension does not match weight function");
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  Support support = f.support_within(box);
  rows_.reserve(static_cast<size_t>(k_max) + 1);
  rows_.emplace_back(box);
  rows_.back().at(MultiIndex::zeros(box.dim())) = reduced(BigInt(1), mod);
  for (int k = 1; k <= k_max; ++k) {
    rows_.emplace_back(box);
    kernels::next_row(rows_[static_cast<size_t>(k)],
                      rows_[static_cast<size_t>(k) - 1], support, mod, kernel);
  }
}

BigInt binom_via_partitions(long k, const MultiIndex& target,
                            const WeightFunction& f) {
  check_dims(target, f);
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  const auto support = f.support_within(target).nonzero_entries();
  const BigInt f0 = f.at_zero();

  BigInt total(0);
  // Multiplicities r_i over the nonzero support; part 0 takes the leftover
  // k - sum r_i. The multinomial builds up as a product of binomials over
  // the running total, avoiding any oversized factorials.
  std::function<void(std::size_t, const MultiIndex&, long, const BigInt&, const BigInt&)>
      rec = [&](std::size_t idx, const MultiIndex& remaining, long used,
                const BigInt& coeff, const BigInt& weight) {
        if (used > k) return;
        if (idx == support.size()) {
          if (!remaining.is_zero()) return;
          long zero_mult = k - used;
          if (zero_mult > 0 && f0 == 0) return;
          BigInt term = coeff * binomial(k, zero_mult) * weight;
          if (zero_mult > 0) term *= pow_big(f0, static_cast<unsigned long>(zero_mult));
          total += term;
          return;
        }
        const auto& entry = support[idx];
        MultiIndex rest = remaining;
        BigInt wpow(1);
        long mult = 0;
        for (;;) {
          rec(idx + 1, rest, used + mult,
              coeff * binomial(used + mult, mult), weight * wpow);
          auto next = rest.checked_sub(entry.part);
          if (!next) break;
          rest = *next;
          ++mult;
          wpow *= entry.weight;
          if (used + mult > k) break;
        }
      };
  rec(0, target, 0, BigInt(1), BigInt(1));
  return total;
}

BoxTable vandermonde_split_table(const std::vector<long>& k_parts,
                                 const MultiIndex& box, const WeightFunction& f) {
  if (k_parts.empty()) throw std::invalid_argument("empty Vandermonde split");
  for (long ki : k_parts)
    if (ki < 0) throw std::invalid_argument("split parts must be >= 0");
  long k_max = *std::max_element(k_parts.begin(), k_parts.end());
  CoefficientTable rows(f, box, static_cast<int>(k_max));

  BoxTable acc = rows.row(static_cast<int>(k_parts[0]));
  for (std::size_t r = 1; r < k_parts.size(); ++r) {
    const BoxTable& other = rows.row(static_cast<int>(k_parts[r]));
    BoxTable conv(box);
    for (std::size_t t = 0; t < conv.size(); ++t) {
      MultiIndex ti = conv.unindex(t);
      BigInt sum(0);
      for (std::size_t u = 0; u < acc.size(); ++u) {
        MultiIndex ui = acc.unindex(u);
        auto rest = ti.checked_sub(ui);
        if (!rest) continue;
        sum += acc[u] * other.at(*rest);
      }
      conv[t] = std::move(sum);
    }
    acc = std::move(conv);
  }
  return acc;
}

BigInt vandermonde_split(const std::vector<long>& k_parts,
                         const MultiIndex& target, const WeightFunction& f) {
  check_dims(target, f);
  return vandermonde_split_table(k_parts, target, f).at(target);
}

bool AbsorptionSides::holds() const {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (BigRat(lhs[i]) != rhs[i]) return false;
  return true;
}

AbsorptionSides absorption_check(long k, const MultiIndex& target,
                                 const WeightFunction& f, long i) {
  check_dims(target, f);
  if (i <= 0 || i > k) throw std::invalid_argument("absorption needs 0 < i <= k");
  const int n = target.dim();

  AbsorptionSides sides;
  BigInt value = binom(k, target, f);
  for (int j = 0; j < n; ++j) sides.lhs.push_back(target[j] * value);

  BoxTable row_i = row_over_box(i, target, f, nullptr, Kernel::Parallel);
  BoxTable row_rest = row_over_box(k - i, target, f, nullptr, Kernel::Parallel);
  std::vector<BigInt> partial(static_cast<size_t>(n), BigInt(0));
  for (std::size_t u = 0; u < row_i.size(); ++u) {
    if (row_i[u] == 0) continue;
    MultiIndex s = row_i.unindex(u);
    auto rest = target.checked_sub(s);
    if (!rest) continue;
    BigInt prod = row_i[u] * row_rest.at(*rest);
    for (int j = 0; j < n; ++j) partial[static_cast<size_t>(j)] += s[j] * prod;
  }
  BigRat scale(k, i);
  scale.canonicalize();
  for (int j = 0; j < n; ++j) {
    BigRat r = scale * BigRat(partial[static_cast<size_t>(j)]);
    r.canonicalize();
    sides.rhs.push_back(std::move(r));
  }
  return sides;
}

BigInt extract_part(long k, const MultiIndex& target, const WeightFunction& f,
                    const MultiIndex& m) {
  check_dims(target, f);
  if (m.dim() != target.dim())
    throw std::invalid_argument("extracted part dimension mismatch");
  WeightFunction without = f.with_zeroed(m);
  const BigInt fm = f.eval(m);

  BigInt total(0);
  BigInt fm_pow(1);
  MultiIndex rest = target;
  for (long occurrences = 0; occurrences <= k; ++occurrences) {
    if (fm_pow != 0)
      total += binomial(k, occurrences) * fm_pow * binom(k - occurrences, rest, without);
    if (m.is_zero()) {
      fm_pow *= fm;
      continue;
    }
    auto next = rest.checked_sub(m);
    if (!next) break;
    rest = *next;
    fm_pow *= fm;
  }
  return total;
}

BigInt composition_count(const MultiIndex& target, const WeightFunction& f,
                         const Modulus* mod, Kernel kernel) {
  return composition_count_table(target, f, mod, kernel).at(target);
}

BoxTable composition_count_table(const MultiIndex& box, const WeightFunction& f,
                                 const Modulus* mod, Kernel kernel) {
  if (box.dim() != f.dim())
    throw std::invalid_argument("box dimension does not match weight function");
  if (f.at_zero() != 0)
    throw std::invalid_argument(
        "composition count diverges when f(0) != 0");
  BoxTable table(box);
  kernels::open_counts(table, f.support_within(box), mod, kernel);
  return table;
}

BigInt bracket_sum(long k, const MultiIndex& r, const MultiIndex& m,
                   const WeightFunction& f, const Modulus* mod) {
  if (r.dim() != m.dim() || r.dim() != f.dim())
    throw std::invalid_argument("bracket sum dimension mismatch");
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  if (!f.finite_support())
    throw std::invalid_argument("bracket sum needs a finite-support weight");

  MultiIndex max_part = f.max_part();
  std::vector<int> bound(static_cast<size_t>(r.dim()));
  for (int i = 0; i < r.dim(); ++i) {
    long long b = static_cast<long long>(max_part[i]) * k;
    if (b > std::numeric_limits<int>::max())
      throw std::invalid_argument("bracket row support too large");
    bound[static_cast<size_t>(i)] = static_cast<int>(b);
  }
  MultiIndex box(bound);
  BoxTable row = row_over_box(k, box, f, mod, Kernel::Parallel);

  // Cartesian product of the per-coordinate residue classes within the box.
  std::vector<std::vector<int>> axis(static_cast<size_t>(r.dim()));
  for (int i = 0; i < r.dim(); ++i) {
    if (m[i] == 0) {
      if (r[i] <= box[i]) axis[static_cast<size_t>(i)].push_back(r[i]);
    } else {
      for (int v = r[i]; v <= box[i]; v += m[i])
        axis[static_cast<size_t>(i)].push_back(v);
    }
    if (axis[static_cast<size_t>(i)].empty()) return reduced(BigInt(0), mod);
  }
  BigInt total(0);
  std::vector<std::size_t> pos(static_cast<size_t>(r.dim()), 0);
  for (;;) {
    std::vector<int> cell(static_cast<size_t>(r.dim()));
    for (int i = 0; i < r.dim(); ++i)
      cell[static_cast<size_t>(i)] = axis[static_cast<size_t>(i)][pos[static_cast<size_t>(i)]];
    total += row.at(MultiIndex(cell));
    int i = r.dim() - 1;
    while (i >= 0 && ++pos[static_cast<size_t>(i)] == axis[static_cast<size_t>(i)].size()) {
      pos[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  reduce_into(total, mod);
  return total;
}

RowSumSides row_sum(long k, const WeightFunction& f) {
  if (k < 0) throw std::invalid_argument("parts count must be >= 0");
  if (!f.finite_support())
    throw std::invalid_argument("row sum needs a finite-support weight");
  RowSumSides sides;
  sides.closed_form = pow_big(f.total_weight(), static_cast<unsigned long>(k));
  BoxTable row = row_over_box(k, f.max_part() * static_cast<int>(k), f, nullptr,
                              Kernel::Parallel);
  sides.direct = 0;
  for (std::size_t i = 0; i < row.size(); ++i) sides.direct += row[i];
  return sides;
}

BigInt delannoy(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("delannoy needs m, n >= 0");
  BigInt total(0);
  for (long d = 0; d <= std::min(m, n); ++d)
    total += pow_big(BigInt(2), static_cast<unsigned long>(d)) * binomial(m, d) *
             binomial(n, d);
  return total;
}

BigInt weighted_delannoy(long a, long b, long c, long m, long n) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("weighted delannoy needs a, b, c >= 1");
  if (m < 0 || n < 0) throw std::invalid_argument("weighted delannoy needs m, n >= 0");
  // a^m b^n sum_d C(m,d) C(n,d) ((ab+c)/(ab))^d, with the powers folded in so
  // every term stays integral.
  BigInt total(0);
  BigInt abc = BigInt(a) * b + c;
  for (long d = 0; d <= std::min(m, n); ++d) {
    total += binomial(m, d) * binomial(n, d) *
             pow_big(BigInt(a), static_cast<unsigned long>(m - d)) *
             pow_big(BigInt(b), static_cast<unsigned long>(n - d)) *
             pow_big(abc, static_cast<unsigned long>(d));
  }
  return total;
}

BigInt whitney(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("whitney needs m, n >= 0");
  BigInt total(0);
  for (long k = 0; 2 * k <= std::min(m, n); ++k)
    total += binomial(m - k, k) * binomial(n - k, k);
  return total;
}

BigInt andrews_cf(const MultiIndex& l) {
  long long ksup = l.coord_sum();
  BigInt total(0);
  for (long k = 0; k <= ksup; ++k) {
    for (long i = 0; i <= k; ++i) {
      BigInt prod(1);
      for (int j = 0; j < l.dim(); ++j) prod *= binomial(l[j] + k - i - 1, l[j]);
      if (prod == 0) continue;
      BigInt term = binomial(k, i) * prod;
      if (i % 2 == 0)
        total += term;
      else
        total -= term;
    }
  }
  return total;
}

BigInt unit_cube_cf(const MultiIndex& l) {
  long kmin = 0;
  for (int j = 0; j < l.dim(); ++j) kmin = std::max<long>(kmin, l[j]);
  long long kmax = l.coord_sum();
  BigInt total(0);
  for (long k = kmin; k <= kmax; ++k) {
    for (long i = 0; i <= k; ++i) {
      BigInt prod(1);
      for (int j = 0; j < l.dim(); ++j) prod *= binomial(k - i, l[j]);
      if (prod == 0) continue;
      BigInt term = binomial(k, i) * prod;
      if (i % 2 == 0)
        total += term;
      else
        total -= term;
    }
  }
  return total;
}

}  // namespace veccomp
