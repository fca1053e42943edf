// Shared weight-function fixtures for the test suites: the worked examples'
// weights plus product/affine variants, each with the box its exhaustive
// sweeps run over.
#ifndef VECCOMP_TESTS_FIXTURES_HPP
#define VECCOMP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/weight_function.hpp"

namespace veccomp::testing {

struct Fixture {
  std::string name;
  WeightFunction f;
  MultiIndex sweep_box;  // exhaustive (k, target) grids stay inside this box
};

inline WeightFunction intro_weights() {
  return WeightFunction::explicit_table(
      2, {{MultiIndex{0, 1}, 1}, {MultiIndex{1, 0}, 1}, {MultiIndex{1, 1}, 2}});
}

inline WeightFunction delannoy_steps() {
  return WeightFunction::indicator(
      2, {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}});
}

inline WeightFunction five_step_weights() {  // ex170 fixture
  return WeightFunction::indicator(
      2, {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}, MultiIndex{1, 2},
          MultiIndex{2, 1}});
}

inline WeightFunction divis_weights() {
  return WeightFunction::indicator(
      2, {MultiIndex{0, 0}, MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1},
          MultiIndex{1, 2}, MultiIndex{2, 1}});
}

inline WeightFunction parity3_weights() {
  return WeightFunction::explicit_table(
      3, {{MultiIndex{0, 0, 1}, 1}, {MultiIndex{0, 1, 0}, 3}, {MultiIndex{0, 1, 1}, 1},
          {MultiIndex{1, 0, 0}, 1}, {MultiIndex{1, 0, 1}, 1}, {MultiIndex{1, 1, 0}, 1},
          {MultiIndex{1, 1, 1}, 1}});
}

inline WeightFunction affine_weights() {  // f(s) = s1 + s2 + 1 on {0,1}^2
  return WeightFunction::explicit_table(
      2, {{MultiIndex{0, 0}, 1}, {MultiIndex{0, 1}, 2}, {MultiIndex{1, 0}, 2},
          {MultiIndex{1, 1}, 3}});
}

inline WeightFunction unit_sphere2_weights() {  // full 0/1 square, zero included
  return WeightFunction::indicator(
      2, {MultiIndex{0, 0}, MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}});
}

inline WeightFunction whitney_steps() {
  return WeightFunction::indicator(
      2, {MultiIndex{1, 1}, MultiIndex{1, 2}, MultiIndex{2, 1}, MultiIndex{2, 2}});
}

inline WeightFunction one_two_cube(int dim) {
  std::vector<MultiIndex> steps;
  for (long mask = 0; mask < (1L << dim); ++mask) {
    std::vector<int> c(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] = 1 + ((mask >> i) & 1);
    steps.emplace_back(std::move(c));
  }
  return WeightFunction::indicator(dim, steps);
}

inline WeightFunction unit_cube_steps(int dim) {  // {0,1}^dim minus the origin
  std::vector<MultiIndex> steps;
  for (long mask = 1; mask < (1L << dim); ++mask) {
    std::vector<int> c(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] = (mask >> i) & 1;
    steps.emplace_back(std::move(c));
  }
  return WeightFunction::indicator(dim, steps);
}

inline std::vector<Fixture> standard_fixtures() {
  return {
      {"intro", intro_weights(), MultiIndex{5, 5}},
      {"delannoy", delannoy_steps(), MultiIndex{4, 4}},
      {"five-step", five_step_weights(), MultiIndex{4, 4}},
      {"divis", divis_weights(), MultiIndex{4, 4}},
      {"affine", affine_weights(), MultiIndex{4, 4}},
      {"unit-sphere", unit_sphere2_weights(), MultiIndex{4, 4}},
      {"whitney", whitney_steps(), MultiIndex{5, 5}},
      {"product", WeightFunction::product(2), MultiIndex{4, 4}},
      {"parity3", parity3_weights(), MultiIndex{3, 3, 3}},
  };
}

inline std::vector<MultiIndex> delannoy_step_set() {
  return {MultiIndex{0, 1}, MultiIndex{1, 0}, MultiIndex{1, 1}};
}

}  // namespace veccomp::testing

#endif
