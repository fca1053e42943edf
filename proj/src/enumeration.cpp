#include "veccomp/enumeration.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace veccomp {

int VectorPartition::parts_count() const {
  int k = zero_multiplicity;
  for (const auto& [part, mult] : multiplicities) k += mult;
  return k;
}

namespace {

struct CompositionWalk {
  const WeightFunction& f;
  std::optional<int> parts_goal;
  std::vector<SupportEntry> candidates;  // lex order, zero part first if present
  long long max_part_sum = 0;            // largest coordinate sum of a candidate
  std::vector<MultiIndex> stack;
  bool stopped = false;

  // emit(parts, weight) is called once per part sequence; weight is the
  // product of the part weights (the number of colorings of the sequence).
  std::function<bool(const std::vector<MultiIndex>&, const BigInt&)> emit;

  void walk(const MultiIndex& remaining, BigInt acc_weight) {
    if (stopped) return;
    if (parts_goal) {
      const long slots = *parts_goal - static_cast<long>(stack.size());
      if (slots == 0) {
        if (remaining.is_zero() && !emit(stack, acc_weight)) stopped = true;
        return;
      }
      if (remaining.coord_sum() > slots * max_part_sum) return;  // dead branch
    } else if (remaining.is_zero()) {
      if (!emit(stack, acc_weight)) stopped = true;
      return;
    }
    for (const auto& cand : candidates) {
      auto rest = remaining.checked_sub(cand.part);
      if (!rest) continue;
      stack.push_back(cand.part);
      walk(*rest, acc_weight * cand.weight);
      stack.pop_back();
      if (stopped) return;
    }
  }
};

void run_composition_walk(
    const MultiIndex& target, std::optional<int> parts, const WeightFunction& f,
    const std::function<bool(const std::vector<MultiIndex>&, const BigInt&)>& emit) {
  if (target.dim() != f.dim())
    throw std::invalid_argument("target dimension does not match weight function");
  if (parts && *parts < 0) throw std::invalid_argument("negative parts count");
  if (!parts && f.at_zero() != 0)
    throw std::invalid_argument(
        "unbounded number of parts diverges when f(0) != 0");
  CompositionWalk walk{f, parts};
  walk.candidates = f.support_within(target).entries;
  for (const auto& cand : walk.candidates)
    walk.max_part_sum = std::max(walk.max_part_sum, cand.part.coord_sum());
  walk.emit = emit;
  walk.walk(target, BigInt(1));
}

}  // namespace

void for_each_composition(
    const MultiIndex& target, std::optional<int> parts, const WeightFunction& f,
    const std::function<bool(const ColoredComposition&)>& visit) {
  run_composition_walk(
      target, parts, f,
      [&](const std::vector<MultiIndex>& seq, const BigInt&) {
        // Expand colors with an odometer, last position fastest, so the
        // stream is lexicographic in (parts, colors).
        std::vector<int> ranges(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
          BigInt w = f.eval(seq[i]);
          if (!w.fits_sint_p())
            throw std::invalid_argument("weight too large for color expansion");
          ranges[i] = static_cast<int>(w.get_si());
        }
        ColoredComposition comp{seq, std::vector<int>(seq.size(), 1)};
        for (;;) {
          if (!visit(comp)) return false;
          std::size_t i = seq.size();
          while (i > 0 && comp.colors[i - 1] == ranges[i - 1]) {
            comp.colors[i - 1] = 1;
            --i;
          }
          if (i == 0) break;
          ++comp.colors[i - 1];
        }
        return true;
      });
}

std::vector<ColoredComposition> list_compositions(const MultiIndex& target,
                                                  std::optional<int> parts,
                                                  const WeightFunction& f,
                                                  std::size_t limit) {
  std::vector<ColoredComposition> out;
  for_each_composition(target, parts, f, [&](const ColoredComposition& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

BigInt count_compositions(const MultiIndex& target, std::optional<int> parts,
                          const WeightFunction& f) {
  BigInt total(0);
  run_composition_walk(target, parts, f,
                       [&](const std::vector<MultiIndex>&, const BigInt& w) {
                         total += w;
                         return true;
                       });
  return total;
}

namespace {

// All nonzero sizes in the box [0, target], lexicographic.
std::vector<MultiIndex> nonzero_sizes(const MultiIndex& target) {
  std::vector<MultiIndex> sizes;
  std::vector<int> cur(static_cast<size_t>(target.dim()), 0);
  for (;;) {
    MultiIndex p(cur);
    if (!p.is_zero()) sizes.push_back(std::move(p));
    int i = target.dim() - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == target[i]) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return sizes;
}

struct PartitionWalk {
  std::vector<MultiIndex> sizes;
  std::optional<int> parts_goal;
  bool include_zero;
  VectorPartition current;
  bool stopped = false;
  const std::function<bool(const VectorPartition&)>* visit;

  void walk(std::size_t idx, const MultiIndex& remaining, int used) {
    if (stopped) return;
    if (remaining.is_zero()) {
      VectorPartition out = current;
      if (parts_goal) {
        int missing = *parts_goal - used;
        if (missing < 0 || (missing > 0 && !include_zero)) return;
        out.zero_multiplicity = missing;
      }
      if (!(*visit)(out)) stopped = true;
      return;
    }
    if (idx == sizes.size()) return;
    if (parts_goal && used > *parts_goal) return;
    const MultiIndex& s = sizes[idx];
    // multiplicity 0 first: lexicographic multiplicity vectors
    walk(idx + 1, remaining, used);
    if (stopped) return;
    MultiIndex rest = remaining;
    int mult = 0;
    while (true) {
      auto next = rest.checked_sub(s);
      if (!next) break;
      rest = *next;
      ++mult;
      if (parts_goal && used + mult > *parts_goal) break;
      current.multiplicities[s] = mult;
      walk(idx + 1, rest, used + mult);
      if (stopped) break;
    }
    current.multiplicities.erase(s);
  }
};

}  // namespace

void for_each_partition(const MultiIndex& target, std::optional<int> parts,
                        bool include_zero,
                        const std::function<bool(const VectorPartition&)>& visit) {
  if (parts && *parts < 0) throw std::invalid_argument("negative parts count");
  PartitionWalk walk;
  walk.sizes = nonzero_sizes(target);
  walk.parts_goal = parts;
  walk.include_zero = include_zero;
  walk.visit = &visit;
  walk.walk(0, target, 0);
}

std::vector<VectorPartition> list_partitions(const MultiIndex& target,
                                             std::optional<int> parts,
                                             bool include_zero) {
  std::vector<VectorPartition> out;
  for_each_partition(target, parts, include_zero, [&](const VectorPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

SetPartition to_set_partition(const VectorPartition& vp, int n) {
  SetPartition sp;
  if (vp.zero_multiplicity != 0)
    throw std::invalid_argument("set-partition correspondence needs nonzero parts");
  for (const auto& [part, mult] : vp.multiplicities) {
    if (part.dim() != n || mult != 1)
      throw std::invalid_argument("not a partition of (1,..,1) into distinct parts");
    std::vector<int> block;
    for (int i = 0; i < n; ++i) {
      if (part[i] == 1)
        block.push_back(i + 1);
      else if (part[i] != 0)
        throw std::invalid_argument("parts of (1,..,1) partitions must be 0/1");
    }
    sp.blocks.push_back(std::move(block));
  }
  std::sort(sp.blocks.begin(), sp.blocks.end());
  return sp;
}

VectorPartition to_vector_partition(const SetPartition& sp, int n) {
  VectorPartition vp;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const auto& block : sp.blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::vector<int> coords(static_cast<size_t>(n), 0);
    for (int i : block) {
      if (i < 1 || i > n || seen[static_cast<size_t>(i)])
        throw std::invalid_argument("blocks must partition {1..n}");
      seen[static_cast<size_t>(i)] = true;
      coords[static_cast<size_t>(i - 1)] = 1;
    }
    vp.multiplicities[MultiIndex(coords)] = 1;
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[static_cast<size_t>(i)])
      throw std::invalid_argument("blocks must cover {1..n}");
  return vp;
}

void for_each_set_partition(int n, int k,
                            const std::function<bool(const SetPartition&)>& visit) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (n == 0) {
    if (k == 0) visit(SetPartition{});
    return;
  }
  for_each_partition(MultiIndex::ones(n), k, /*include_zero=*/false,
                     [&](const VectorPartition& vp) {
                       return visit(to_set_partition(vp, n));
                     });
}

std::vector<SetPartition> list_set_partitions(int n, int k) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, k, [&](const SetPartition& sp) {
    out.push_back(sp);
    return true;
  });
  return out;
}

std::vector<int> split_color(const MultiIndex& part, int color) {
  long long range = 1;
  for (int i = 0; i < part.dim(); ++i) range *= part[i];
  if (color < 1 || color > range)
    throw std::invalid_argument("color out of range for part");
  std::vector<int> comp(static_cast<size_t>(part.dim()));
  long long c = color - 1;
  for (int i = 0; i < part.dim(); ++i) {
    comp[static_cast<size_t>(i)] = static_cast<int>(c % part[i]) + 1;
    c /= part[i];
  }
  return comp;
}

std::vector<MultiIndex> scolor_image(const ColoredComposition& comp, int dim) {
  const std::size_t k = comp.size();
  if (k == 0) return {};
  // Per row: parts joined by one separating cross; a part of size s with
  // color c contributes s symbols, the cross sitting at position c.
  std::vector<std::vector<int>> rows(static_cast<size_t>(dim));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> cc = split_color(comp.parts[i], comp.colors[i]);
    for (int j = 0; j < dim; ++j) {
      auto& row = rows[static_cast<size_t>(j)];
      if (i > 0) row.push_back(1);  // separator cross
      int s = comp.parts[i][j];
      for (int pos = 1; pos <= s; ++pos)
        row.push_back(pos == cc[static_cast<size_t>(j)] ? 1 : 2);
    }
  }
  const std::size_t len = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != len)
      throw std::logic_error("uneven cross-and-dash rows");
  std::vector<MultiIndex> image;
  image.reserve(len);
  for (std::size_t t = 0; t < len; ++t) {
    std::vector<int> col(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) col[static_cast<size_t>(j)] = rows[static_cast<size_t>(j)][t];
    image.emplace_back(std::move(col));
  }
  return image;
}

void for_each_scolor_pair(
    int l, int dim,
    const std::function<bool(const ColoredComposition&,
                             const std::vector<MultiIndex>&)>& visit) {
  if (l < 1) throw std::invalid_argument("scolor bijection needs l >= 1");
  WeightFunction f = WeightFunction::product(dim);
  for_each_composition(MultiIndex::uniform(dim, l), std::nullopt, f,
                       [&](const ColoredComposition& comp) {
                         return visit(comp, scolor_image(comp, dim));
                       });
}

}  // namespace veccomp
