#ifndef VECCOMP_WEIGHT_FUNCTION_HPP
#define VECCOMP_WEIGHT_FUNCTION_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"

namespace veccomp {

struct SupportEntry {
  MultiIndex part;
  BigInt weight;
};

/// Part sizes with nonzero weight inside a box, in lexicographic order.
/// The zero part is listed first when f(0) != 0 (and then includes_zero
/// is set); most algorithms only want the nonzero sizes.
struct Support {
  std::vector<SupportEntry> entries;
  bool includes_zero = false;

  std::vector<MultiIndex> parts() const;
  std::vector<SupportEntry> nonzero_entries() const;
};

/// Weighting f : N^N -> N of part sizes ("colors per size"). Evaluation is
/// total; finite-support kinds carry their table, product/custom kinds are
/// evaluated on demand and only ever queried inside a box.
class WeightFunction {
 public:
  enum class Kind { ExplicitTable, IndicatorSet, ProductWeight, CustomRule };

  static WeightFunction explicit_table(int dim,
                                       std::map<MultiIndex, BigInt> table);
  static WeightFunction indicator(int dim, const std::vector<MultiIndex>& set);
  static WeightFunction product(int dim);
  static WeightFunction custom(int dim,
                               std::function<BigInt(const MultiIndex&)> rule);

  // JSON schema: {"dim":N,"kind":"explicit"|"indicator"|"product",
  //               "entries":[{"s":[..],"w":..}]?,"set":[[..],..]?}
  static WeightFunction parse(const nlohmann::json& spec);
  nlohmann::ordered_json to_json() const;  // canonical: entries/set lex-sorted

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }

  BigInt eval(const MultiIndex& s) const;
  BigInt at_zero() const { return eval(MultiIndex::zeros(dim_)); }

  Support support_within(const MultiIndex& box) const;

  bool finite_support() const;
  // Componentwise max over the support (finite kinds only).
  MultiIndex max_part() const;
  BigInt total_weight() const;  // M = sum of all weights (finite kinds only)

  // Same weighting with f(m) forced to 0; used by the part-extraction identity.
  WeightFunction with_zeroed(const MultiIndex& m) const;

 private:
  WeightFunction(int dim, Kind kind);

  int dim_ = 1;
  Kind kind_ = Kind::IndicatorSet;
  std::map<MultiIndex, BigInt> table_;  // explicit/indicator: weight > 0 only
  std::function<BigInt(const MultiIndex&)> rule_;
  std::set<MultiIndex> zeroed_;
};

}  // namespace veccomp

#endif
