#include "veccomp/weight_function.hpp"

#include <stdexcept>

namespace veccomp {

std::vector<MultiIndex> Support::parts() const {
  std::vector<MultiIndex> r;
  r.reserve(entries.size());
  for (const auto& e : entries) r.push_back(e.part);
  return r;
}

std::vector<SupportEntry> Support::nonzero_entries() const {
  std::vector<SupportEntry> r;
  r.reserve(entries.size());
  for (const auto& e : entries)
    if (!e.part.is_zero()) r.push_back(e);
  return r;
}

WeightFunction::WeightFunction(int dim, Kind kind) : dim_(dim), kind_(kind) {
  if (dim < 1) throw std::invalid_argument("weight function needs dim >= 1");
}

WeightFunction WeightFunction::explicit_table(int dim,
                                              std::map<MultiIndex, BigInt> table) {
  WeightFunction f(dim, Kind::ExplicitTable);
  for (auto it = table.begin(); it != table.end();) {
    if (it->first.dim() != dim)
      throw std::invalid_argument("table entry dimension mismatch");
    if (it->second < 0) throw std::invalid_argument("negative weight");
    if (it->second == 0)
      it = table.erase(it);  // zero-weight entries are absent by invariant
    else
      ++it;
  }
  f.table_ = std::move(table);
  return f;
}

WeightFunction WeightFunction::indicator(int dim,
                                         const std::vector<MultiIndex>& set) {
  std::map<MultiIndex, BigInt> table;
  for (const auto& s : set) {
    if (s.dim() != dim) throw std::invalid_argument("set entry dimension mismatch");
    table[s] = 1;
  }
  WeightFunction f(dim, Kind::IndicatorSet);
  f.table_ = std::move(table);
  return f;
}

WeightFunction WeightFunction::product(int dim) {
  return WeightFunction(dim, Kind::ProductWeight);
}

WeightFunction WeightFunction::custom(
    int dim, std::function<BigInt(const MultiIndex&)> rule) {
  WeightFunction f(dim, Kind::CustomRule);
  f.rule_ = std::move(rule);
  return f;
}

WeightFunction WeightFunction::parse(const nlohmann::json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("weight spec must be an object");
  if (!spec.contains("dim") || !spec["dim"].is_number_integer())
    throw std::invalid_argument("weight spec needs integer \"dim\"");
  int dim = spec["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("weight spec dim must be >= 1");
  if (!spec.contains("kind") || !spec["kind"].is_string())
    throw std::invalid_argument("weight spec needs string \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();

  auto parse_point = [dim](const nlohmann::json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
      throw std::invalid_argument("entry dimension mismatch in weight spec");
    std::vector<int> c;
    for (const auto& v : j) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw std::invalid_argument("weight spec coordinates must be integers >= 0");
      c.push_back(v.get<int>());
    }
    return MultiIndex(std::move(c));
  };

  if (kind == "explicit") {
    if (!spec.contains("entries") || !spec["entries"].is_array())
      throw std::invalid_argument("explicit weight spec needs \"entries\"");
    std::map<MultiIndex, BigInt> table;
    for (const auto& e : spec["entries"]) {
      if (!e.contains("s") || !e.contains("w"))
        throw std::invalid_argument("explicit entry needs \"s\" and \"w\"");
      if (!e["w"].is_number_integer() || e["w"].get<long long>() < 1)
        throw std::invalid_argument("explicit entry weight must be an integer >= 1");
      MultiIndex s = parse_point(e["s"]);
      if (table.count(s)) throw std::invalid_argument("duplicate entry " + s.to_string());
      table[s] = BigInt(e["w"].get<long>());
    }
    return explicit_table(dim, std::move(table));
  }
  if (kind == "indicator") {
    if (!spec.contains("set") || !spec["set"].is_array())
      throw std::invalid_argument("indicator weight spec needs \"set\"");
    std::vector<MultiIndex> set;
    for (const auto& e : spec["set"]) set.push_back(parse_point(e));
    return indicator(dim, set);
  }
  if (kind == "product") return product(dim);
  throw std::invalid_argument("unknown weight kind \"" + kind + "\"");
}

nlohmann::ordered_json WeightFunction::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim_;
  switch (kind_) {
    case Kind::ExplicitTable: {
      j["kind"] = "explicit";
      auto entries = nlohmann::ordered_json::array();
      for (const auto& [s, w] : table_) {
        nlohmann::ordered_json e;
        e["s"] = s.coords();
        e["w"] = w.get_si();
        entries.push_back(std::move(e));
      }
      j["entries"] = std::move(entries);
      break;
    }
    case Kind::IndicatorSet: {
      j["kind"] = "indicator";
      auto set = nlohmann::ordered_json::array();
      for (const auto& [s, w] : table_) set.push_back(s.coords());
      j["set"] = std::move(set);
      break;
    }
    case Kind::ProductWeight:
      j["kind"] = "product";
      break;
    case Kind::CustomRule:
      throw std::invalid_argument("custom weight rules have no JSON form");
  }
  return j;
}

BigInt WeightFunction::eval(const MultiIndex& s) const {
  if (s.dim() != dim_) throw std::invalid_argument("weight query dimension mismatch");
  if (zeroed_.count(s)) return BigInt(0);
  switch (kind_) {
    case Kind::ExplicitTable:
    case Kind::IndicatorSet: {
      auto it = table_.find(s);
      return it == table_.end() ? BigInt(0) : it->second;
    }
    case Kind::ProductWeight: {
      BigInt w(1);
      for (int i = 0; i < dim_; ++i) w *= s[i];
      return w;
    }
    case Kind::CustomRule:
      return rule_(s);
  }
  return BigInt(0);
}

namespace {
// Lexicographic scan of the box [0, bound].
template <typename Fn>
void scan_box(const MultiIndex& bound, Fn&& fn) {
  std::vector<int> cur(static_cast<size_t>(bound.dim()), 0);
  for (;;) {
    fn(MultiIndex(cur));
    int i = bound.dim() - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == bound[i]) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
}
}  // namespace

Support WeightFunction::support_within(const MultiIndex& box) const {
  if (box.dim() != dim_) throw std::invalid_argument("support box dimension mismatch");
  Support sup;
  if (kind_ == Kind::ExplicitTable || kind_ == Kind::IndicatorSet) {
    for (const auto& [s, w] : table_) {  // std::map gives lex order
      if (!s.le(box) || zeroed_.count(s)) continue;
      if (s.is_zero()) sup.includes_zero = true;
      sup.entries.push_back({s, w});
    }
    return sup;
  }
  scan_box(box, [&](const MultiIndex& s) {
    BigInt w = eval(s);
    if (w == 0) return;
    if (s.is_zero()) sup.includes_zero = true;
    sup.entries.push_back({s, std::move(w)});
  });
  return sup;
}

bool WeightFunction::finite_support() const {
  return kind_ == Kind::ExplicitTable || kind_ == Kind::IndicatorSet;
}

MultiIndex WeightFunction::max_part() const {
  if (!finite_support())
    throw std::invalid_argument("max_part requires a finite-support weight");
  std::vector<int> m(static_cast<size_t>(dim_), 0);
  for (const auto& [s, w] : table_) {
    if (zeroed_.count(s)) continue;
    for (int i = 0; i < dim_; ++i)
      if (s[i] > m[static_cast<size_t>(i)]) m[static_cast<size_t>(i)] = s[i];
  }
  return MultiIndex(std::move(m));
}

BigInt WeightFunction::total_weight() const {
  if (!finite_support())
    throw std::invalid_argument("total weight requires a finite-support weight");
  BigInt m(0);
  for (const auto& [s, w] : table_)
    if (!zeroed_.count(s)) m += w;
  return m;
}

WeightFunction WeightFunction::with_zeroed(const MultiIndex& m) const {
  if (m.dim() != dim_) throw std::invalid_argument("with_zeroed dimension mismatch");
  WeightFunction f(*this);
  f.zeroed_.insert(m);
  return f;
}

}  // namespace veccomp
