#ifndef VECCOMP_MULTI_INDEX_HPP
#define VECCOMP_MULTI_INDEX_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace veccomp {

/// N-dimensional vector of nonnegative integers: part sizes, targets,
/// residues. Immutable after construction; lexicographic order on the
/// coordinates is the canonical enumeration order everywhere.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> coords);
  MultiIndex(std::initializer_list<int> coords);

  static MultiIndex zeros(int dim);
  static MultiIndex ones(int dim);
  static MultiIndex uniform(int dim, int value);

  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_zero() const;
  long long coord_sum() const;

  MultiIndex operator+(const MultiIndex& other) const;
  // Componentwise subtraction; empty when any component would go negative.
  std::optional<MultiIndex> checked_sub(const MultiIndex& other) const;
  MultiIndex operator*(int scalar) const;

  bool le(const MultiIndex& other) const;  // componentwise <=
  MultiIndex min_with(const MultiIndex& other) const;

  bool divisible_by(int d) const;
  MultiIndex divided_by(int d) const;
  MultiIndex mod_scalar(int d) const;
  bool all_even() const { return divisible_by(2); }
  bool any_odd() const { return !divisible_by(2); }

  auto operator<=>(const MultiIndex& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

}  // namespace veccomp

#endif
