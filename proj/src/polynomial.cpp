#include "veccomp/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace veccomp {

Polynomial Polynomial::constant(int dim, const BigRat& value) {
  Polynomial p(dim);
  p.add_term(MultiIndex::zeros(dim), value);
  return p;
}

void Polynomial::add_term(const MultiIndex& exponent, const BigRat& coeff) {
  if (exponent.dim() != dim_)
    throw std::invalid_argument("exponent dimension mismatch");
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) it->second += coeff;
  it->second.canonicalize();
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial r(*this);
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial r(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::scale(const BigRat& factor) const {
  Polynomial r(dim_);
  if (factor == 0) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * factor);
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(dim_, BigRat(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Polynomial Polynomial::partial_derivative(int axis) const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    std::vector<int> ne = e.coords();
    --ne[static_cast<size_t>(axis)];
    r.add_term(MultiIndex(ne), c * BigRat(e[axis]));
  }
  return r;
}

Polynomial Polynomial::partial_derivative(const MultiIndex& order) const {
  if (order.dim() != dim_) throw std::invalid_argument("derivative order mismatch");
  Polynomial r(*this);
  for (int axis = 0; axis < dim_; ++axis)
    for (int i = 0; i < order[axis]; ++i) r = r.partial_derivative(axis);
  return r;
}

BigRat Polynomial::eval(const std::vector<BigRat>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  BigRat total(0);
  for (const auto& [e, c] : terms_) {
    BigRat term = c;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[static_cast<size_t>(i)];
    total += term;
  }
  total.canonicalize();
  return total;
}

double Polynomial::eval(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < dim_; ++i)
      term *= std::pow(point[static_cast<size_t>(i)], e[i]);
    total += term;
  }
  return total;
}

Polynomial compose(const Polynomial& g_univariate, const Polynomial& f) {
  if (g_univariate.dim() != 1)
    throw std::invalid_argument("outer function must be univariate");
  Polynomial result(f.dim());
  for (const auto& [e, c] : g_univariate.terms()) {
    result = result + f.pow(static_cast<unsigned long>(e[0])).scale(c);
  }
  return result;
}

}  // namespace veccomp
