#include "veccomp/faadibruno.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "veccomp/enumeration.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp {

namespace {

BigInt multi_factorial(const MultiIndex& m) {
  BigInt r(1);
  for (int i = 0; i < m.dim(); ++i) r *= factorial(m[i]);
  return r;
}

std::vector<DerivTerm> sorted_terms(std::map<std::pair<int, std::vector<std::pair<MultiIndex, int>>>, BigRat> merged) {
  std::vector<DerivTerm> out;
  out.reserve(merged.size());
  for (auto& [key, coeff] : merged) {
    coeff.canonicalize();
    if (coeff == 0) continue;
    DerivTerm t;
    t.coefficient = coeff;
    t.g_order = key.first;
    t.factors = key.second;
    out.push_back(std::move(t));
  }
  return out;  // std::map ordering = (g_order, factors) lexicographic
}

void require_nonzero_order(const MultiIndex& order) {
  if (order.is_zero())
    throw std::invalid_argument("expansion needs a nonzero derivative order");
}

}  // namespace

BigInt DerivTerm::integer_coefficient() const {
  if (coefficient.get_den() != 1)
    throw std::logic_error("expansion coefficient is not integral");
  return coefficient.get_num();
}

std::vector<DerivTerm> expand_partition_form(const MultiIndex& order) {
  require_nonzero_order(order);
  const BigRat order_factorial(multi_factorial(order));
  std::map<std::pair<int, std::vector<std::pair<MultiIndex, int>>>, BigRat> merged;

  for_each_partition(order, std::nullopt, /*include_zero=*/false,
                     [&](const VectorPartition& vp) {
                       BigRat coeff = order_factorial;
                       int g_order = 0;
                       std::vector<std::pair<MultiIndex, int>> factors;
                       for (const auto& [part, mult] : vp.multiplicities) {
                         coeff /= BigRat(factorial(mult));
                         coeff /= BigRat(pow_big(multi_factorial(part),
                                                 static_cast<unsigned long>(mult)));
                         g_order += mult;
                         factors.emplace_back(part, mult);
                       }
                       coeff.canonicalize();
                       merged[{g_order, std::move(factors)}] += coeff;
                       return true;
                     });
  auto terms = sorted_terms(std::move(merged));
  for (const auto& t : terms) {
    if (t.coefficient.get_den() != 1 || t.coefficient <= 0)
      throw std::logic_error("partition-form coefficient must be a positive integer");
  }
  return terms;
}

std::vector<DerivTerm> expand_composition_raw(const MultiIndex& order) {
  require_nonzero_order(order);
  const BigRat order_factorial(multi_factorial(order));
  // One emission per ordered sequence of nonzero parts: indicator weight on
  // every nonzero size makes the composition stream color-free.
  WeightFunction nonzero = WeightFunction::custom(
      order.dim(),
      [](const MultiIndex& s) { return BigInt(s.is_zero() ? 0 : 1); });

  std::vector<DerivTerm> raw;
  for_each_composition(order, std::nullopt, nonzero,
                       [&](const ColoredComposition& comp) {
                         BigRat coeff = order_factorial;
                         coeff /= BigRat(factorial(static_cast<long>(comp.size())));
                         std::map<MultiIndex, int> mults;
                         for (const auto& part : comp.parts) {
                           coeff /= BigRat(multi_factorial(part));
                           ++mults[part];
                         }
                         coeff.canonicalize();
                         DerivTerm t;
                         t.coefficient = coeff;
                         t.g_order = static_cast<int>(comp.size());
                         t.factors.assign(mults.begin(), mults.end());
                         raw.push_back(std::move(t));
                         return true;
                       });
  return raw;
}

std::vector<DerivTerm> expand_composition_form(const MultiIndex& order) {
  std::map<std::pair<int, std::vector<std::pair<MultiIndex, int>>>, BigRat> merged;
  for (auto& t : expand_composition_raw(order)) merged[t.key()] += t.coefficient;
  return sorted_terms(std::move(merged));
}

std::vector<DerivTerm> hardy_case(int dim) {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  auto terms = expand_partition_form(MultiIndex::ones(dim));
  for (const auto& t : terms)
    if (t.coefficient != 1)
      throw std::logic_error("all-ones expansion must have unit coefficients");
  return terms;
}

double validate_numeric(const MultiIndex& order, const Polynomial& g_univariate,
                        const Polynomial& f, const std::vector<double>& point) {
  require_nonzero_order(order);
  if (f.dim() != order.dim())
    throw std::invalid_argument("inner function dimension mismatch");

  // Exact oracle: differentiate the composed polynomial symbolically.
  Polynomial composed = compose(g_univariate, f);
  const double exact = composed.partial_derivative(order).eval(point);

  // Expansion side in plain double arithmetic.
  const double f_at_point = f.eval(point);
  std::map<int, Polynomial> g_derivs;
  std::map<MultiIndex, double> f_derivs;
  double total = 0;
  for (const auto& term : expand_partition_form(order)) {
    auto git = g_derivs.find(term.g_order);
    if (git == g_derivs.end()) {
      Polynomial d = g_univariate;
      for (int i = 0; i < term.g_order; ++i) d = d.partial_derivative(0);
      git = g_derivs.emplace(term.g_order, std::move(d)).first;
    }
    double value = term.coefficient.get_d() * git->second.eval(std::vector<double>{f_at_point});
    for (const auto& [part, mult] : term.factors) {
      auto fit = f_derivs.find(part);
      if (fit == f_derivs.end())
        fit = f_derivs.emplace(part, f.partial_derivative(part).eval(point)).first;
      value *= std::pow(fit->second, mult);
    }
    total += value;
  }

  const double err = std::abs(total - exact);
  if (exact == 0.0) return err;
  return err / std::abs(exact);
}

namespace {

double central_difference(const Polynomial& poly, const MultiIndex& order,
                          std::vector<double> point, double step) {
  for (int axis = 0; axis < order.dim(); ++axis) {
    if (order[axis] == 0) continue;
    std::vector<int> lower = order.coords();
    --lower[static_cast<size_t>(axis)];
    std::vector<double> plus = point, minus = point;
    plus[static_cast<size_t>(axis)] += step;
    minus[static_cast<size_t>(axis)] -= step;
    MultiIndex rest(lower);
    return (central_difference(poly, rest, plus, step) -
            central_difference(poly, rest, minus, step)) /
           (2.0 * step);
  }
  return poly.eval(point);
}

}  // namespace

double validate_finite_difference(const MultiIndex& order,
                                  const Polynomial& g_univariate,
                                  const Polynomial& f,
                                  const std::vector<double>& point,
                                  double step) {
  require_nonzero_order(order);
  Polynomial composed = compose(g_univariate, f);
  const double exact = composed.partial_derivative(order).eval(point);
  // one Richardson step kills the h^2 term of the nested central differences
  const double coarse = central_difference(composed, order, point, step);
  const double fine = central_difference(composed, order, point, step / 2.0);
  const double approx = (4.0 * fine - coarse) / 3.0;
  const double err = std::abs(approx - exact);
  if (exact == 0.0) return err;
  return err / std::abs(exact);
}

}  // namespace veccomp
