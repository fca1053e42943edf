#ifndef VECCOMP_ENUMERATION_HPP
#define VECCOMP_ENUMERATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp {

/// One f-weighted vector composition: ordered parts with a color per part,
/// 1 <= color <= f(part).
struct ColoredComposition {
  std::vector<MultiIndex> parts;
  std::vector<int> colors;

  std::size_t size() const { return parts.size(); }
  auto operator<=>(const ColoredComposition&) const = default;
};

/// Unordered composition: multiplicity per distinct nonzero part size,
/// plus the multiplicity of the zero part when it participates.
struct VectorPartition {
  std::map<MultiIndex, int> multiplicities;  // nonzero parts only
  int zero_multiplicity = 0;

  int parts_count() const;
  auto operator<=>(const VectorPartition&) const = default;
};

/// Partition of {1..n} into disjoint nonempty blocks covering {1..n}.
struct SetPartition {
  std::vector<std::vector<int>> blocks;  // each block sorted, blocks sorted

  auto operator<=>(const SetPartition&) const = default;
};

// Visitors return false to stop the stream early. Generators hold no shared
// state; independent streams are safe to run concurrently.

/// Every colored composition of `target` exactly once, ordered by
/// (part sequence, color sequence) lexicographically. With `parts` set the
/// count matches the k-parts coefficient; without it the total is c_f(target)
/// and f(0) = 0 is required (otherwise zero parts pad indefinitely).
void for_each_composition(const MultiIndex& target, std::optional<int> parts,
                          const WeightFunction& f,
                          const std::function<bool(const ColoredComposition&)>& visit);

std::vector<ColoredComposition> list_compositions(const MultiIndex& target,
                                                  std::optional<int> parts,
                                                  const WeightFunction& f,
                                                  std::size_t limit = SIZE_MAX);

/// Total weight of all compositions, by exhaustive enumeration of part
/// sequences (the color count enters as a product of weights). Brute-force
/// oracle for the counting engine.
BigInt count_compositions(const MultiIndex& target, std::optional<int> parts,
                          const WeightFunction& f);

/// Vector partitions of `target`. With `parts` set, exactly that many parts
/// (zero parts allowed only when include_zero). Partitions stream in
/// lexicographic order of their multiplicity vectors over the lex-ordered
/// part sizes.
void for_each_partition(const MultiIndex& target, std::optional<int> parts,
                        bool include_zero,
                        const std::function<bool(const VectorPartition&)>& visit);

std::vector<VectorPartition> list_partitions(const MultiIndex& target,
                                             std::optional<int> parts,
                                             bool include_zero);

/// Set partitions of {1..n} into k blocks, produced through the
/// vector-partition correspondence on (1,...,1).
void for_each_set_partition(int n, int k,
                            const std::function<bool(const SetPartition&)>& visit);

std::vector<SetPartition> list_set_partitions(int n, int k);

// The correspondence behind set partitions: 0/1 parts of a partition of
// (1,..,1) are exactly the indicator vectors of the blocks.
SetPartition to_set_partition(const VectorPartition& vp, int n);
VectorPartition to_vector_partition(const SetPartition& sp, int n);

/// Product-weighted compositions of l*(1,..,1) paired with their image
/// {1,2}-compositions of (2l-1)*(1,..,1) under the cross-and-dash encoding
/// (per row: color decides the cross position inside a part; parts are
/// separated by one extra cross; crosses read as 1, dashes as 2).
void for_each_scolor_pair(
    int l, int dim,
    const std::function<bool(const ColoredComposition&,
                             const std::vector<MultiIndex>&)>& visit);

/// Image of one product-weighted composition under the encoding above.
std::vector<MultiIndex> scolor_image(const ColoredComposition& comp, int dim);

/// Per-coordinate colors of a part under the mixed-radix color convention
/// (first coordinate fastest): color c in 1..prod(s) <-> (c_1,..,c_N).
std::vector<int> split_color(const MultiIndex& part, int color);

}  // namespace veccomp

#endif
