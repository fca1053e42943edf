#ifndef VECCOMP_BOX_TABLE_HPP
#define VECCOMP_BOX_TABLE_HPP

#include <cstddef>
#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp {

/// Dense array of counts indexed by the box [0, bound] (inclusive corner),
/// row-major in lexicographic coordinate order.
class BoxTable {
 public:
  explicit BoxTable(MultiIndex bound);

  const MultiIndex& bound() const { return bound_; }
  std::size_t size() const { return cells_.size(); }

  std::size_t index(const MultiIndex& p) const;
  MultiIndex unindex(std::size_t flat) const;

  BigInt& at(const MultiIndex& p) { return cells_[index(p)]; }
  const BigInt& at(const MultiIndex& p) const { return cells_[index(p)]; }
  BigInt& operator[](std::size_t i) { return cells_[i]; }
  const BigInt& operator[](std::size_t i) const { return cells_[i]; }

  static long long volume_of(const MultiIndex& bound);

 private:
  MultiIndex bound_;
  std::vector<long long> strides_;
  std::vector<BigInt> cells_;
};

enum class Kernel { Serial, Parallel };

namespace kernels {

// One step of the Pascal-like recurrence over the box:
//   dst[t] = sum over support entries (s, w) with s <= t of w * src[t - s],
// reduced mod m when given. Destination cells are independent, which is
// what the parallel variant exploits.
void next_row_serial(BoxTable& dst, const BoxTable& src, const Support& support,
                     const Modulus* mod);
void next_row_parallel(BoxTable& dst, const BoxTable& src, const Support& support,
                       const Modulus* mod);
void next_row(BoxTable& dst, const BoxTable& src, const Support& support,
              const Modulus* mod, Kernel kernel);

// In-place fill of open-ended composition counts over the box:
//   c[0] = 1,  c[t] = sum over nonzero support (s, w), s <= t, of w * c[t - s].
// The serial variant scans lexicographically; the parallel one sweeps
// wavefronts of equal coordinate sum (cells within a wavefront are
// independent because every nonzero part lowers the coordinate sum).
void open_counts_serial(BoxTable& table, const Support& support, const Modulus* mod);
void open_counts_parallel(BoxTable& table, const Support& support, const Modulus* mod);
void open_counts(BoxTable& table, const Support& support, const Modulus* mod,
                 Kernel kernel);

}  // namespace kernels

}  // namespace veccomp

#endif
