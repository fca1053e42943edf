#ifndef VECCOMP_FAADIBRUNO_HPP
#define VECCOMP_FAADIBRUNO_HPP

#include <utility>
#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"
#include "veccomp/polynomial.hpp"

namespace veccomp {

/// One term of a composite-derivative expansion:
///   coefficient * G^(g_order)(F(x)) * prod over factors (d^|s| F / dz^s)^mult.
/// Factors are nonzero part sizes in lexicographic order; after merging the
/// coefficient is a positive integer.
struct DerivTerm {
  BigRat coefficient;
  int g_order = 0;
  std::vector<std::pair<MultiIndex, int>> factors;

  BigInt integer_coefficient() const;  // throws if not integral
  auto key() const { return std::make_pair(g_order, factors); }
};

/// Partition form: one term per vector partition of `order` into nonzero
/// parts, coefficient order!/(prod r_i!) * prod (1/s_i!)^{r_i}. Terms sorted
/// by (g_order, factors).
std::vector<DerivTerm> expand_partition_form(const MultiIndex& order);

/// Composition form: one raw term per ordered sequence of nonzero parts,
/// coefficient order!/(|pi|! * prod m_i!).
std::vector<DerivTerm> expand_composition_raw(const MultiIndex& order);

/// Composition form after merging equal (g_order, factors) keys; must
/// reproduce the partition form exactly.
std::vector<DerivTerm> expand_composition_form(const MultiIndex& order);

/// Expansion of (1,..,1): one term per set partition of the variables, every
/// coefficient 1, Bell(dim) terms in total.
std::vector<DerivTerm> hardy_case(int dim);

/// Evaluate the symbolic expansion of d^order (G o F) at `point` in double
/// arithmetic and compare against the exactly differentiated composed
/// polynomial. Returns the relative error, or the absolute error when the
/// true derivative vanishes.
double validate_numeric(const MultiIndex& order, const Polynomial& g_univariate,
                        const Polynomial& f, const std::vector<double>& point);

/// Secondary sanity route: nested central differences of the composed
/// polynomial; much coarser (step^2 error per level).
double validate_finite_difference(const MultiIndex& order,
                                  const Polynomial& g_univariate,
                                  const Polynomial& f,
                                  const std::vector<double>& point,
                                  double step = 1e-2);

}  // namespace veccomp

#endif
