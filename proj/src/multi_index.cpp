#include "veccomp/multi_index.hpp"

#include <limits>
#include <stdexcept>

namespace veccomp {

namespace {
void check_same_dim(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + a.to_string() +
                                " vs " + b.to_string());
  }
}
}  // namespace

MultiIndex::MultiIndex(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("multi-index needs dim >= 1");
  for (int c : coords_)
    if (c < 0) throw std::invalid_argument("negative coordinate in multi-index");
}

MultiIndex::MultiIndex(std::initializer_list<int> coords)
    : MultiIndex(std::vector<int>(coords)) {}

MultiIndex MultiIndex::zeros(int dim) {
  return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0));
}

MultiIndex MultiIndex::ones(int dim) { return uniform(dim, 1); }

MultiIndex MultiIndex::uniform(int dim, int value) {
  return MultiIndex(std::vector<int>(static_cast<size_t>(dim), value));
}

bool MultiIndex::is_zero() const {
  for (int c : coords_)
    if (c != 0) return false;
  return true;
}

long long MultiIndex::coord_sum() const {
  long long s = 0;
  for (int c : coords_) s += c;
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  check_same_dim(*this, other);
  std::vector<int> r(coords_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += other.coords_[i];
  return MultiIndex(std::move(r));
}

std::optional<MultiIndex> MultiIndex::checked_sub(const MultiIndex& other) const {
  check_same_dim(*this, other);
  std::vector<int> r(coords_);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] -= other.coords_[i];
    if (r[i] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator*(int scalar) const {
  if (scalar < 0) throw std::invalid_argument("negative scale");
  std::vector<int> r(coords_);
  for (int& c : r) {
    long long scaled = static_cast<long long>(c) * scalar;
    if (scaled > std::numeric_limits<int>::max())
      throw std::overflow_error("scaled multi-index overflows");
    c = static_cast<int>(scaled);
  }
  return MultiIndex(std::move(r));
}

bool MultiIndex::le(const MultiIndex& other) const {
  check_same_dim(*this, other);
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

MultiIndex MultiIndex::min_with(const MultiIndex& other) const {
  check_same_dim(*this, other);
  std::vector<int> r(coords_);
  for (size_t i = 0; i < r.size(); ++i)
    if (other.coords_[i] < r[i]) r[i] = other.coords_[i];
  return MultiIndex(std::move(r));
}

bool MultiIndex::divisible_by(int d) const {
  for (int c : coords_)
    if (c % d != 0) return false;
  return true;
}

MultiIndex MultiIndex::divided_by(int d) const {
  std::vector<int> r(coords_);
  for (int& c : r) c /= d;
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::mod_scalar(int d) const {
  std::vector<int> r(coords_);
  for (int& c : r) c %= d;
  return MultiIndex(std::move(r));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  s += ")";
  return s;
}

}  // namespace veccomp
