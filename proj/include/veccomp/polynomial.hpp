#ifndef VECCOMP_POLYNOMIAL_HPP
#define VECCOMP_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"

namespace veccomp {

/// Sparse multivariate polynomial with exact rational coefficients, just
/// enough machinery to differentiate, compose and evaluate the validator
/// oracles exactly. Exponents ride on MultiIndex.
class Polynomial {
 public:
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, const BigRat& value);

  int dim() const { return dim_; }
  const std::map<MultiIndex, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& exponent, const BigRat& coeff);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(const BigRat& factor) const;
  Polynomial pow(unsigned long e) const;

  Polynomial partial_derivative(int axis) const;
  Polynomial partial_derivative(const MultiIndex& order) const;

  BigRat eval(const std::vector<BigRat>& point) const;
  double eval(const std::vector<double>& point) const;

 private:
  int dim_;
  std::map<MultiIndex, BigRat> terms_;  // exponent -> coefficient, no zeros
};

/// G(F): substitute a multivariate F into a univariate G (dim-1 Polynomial).
Polynomial compose(const Polynomial& g_univariate, const Polynomial& f);

}  // namespace veccomp

#endif
