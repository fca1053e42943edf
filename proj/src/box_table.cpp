#include "veccomp/box_table.hpp"

#include <stdexcept>

namespace veccomp {

BoxTable::BoxTable(MultiIndex bound) : bound_(std::move(bound)) {
  long long vol = volume_of(bound_);
  if (vol > (1LL << 40))
    throw std::invalid_argument("box too large: " + bound_.to_string());
  strides_.assign(static_cast<size_t>(bound_.dim()), 1);
  for (int i = bound_.dim() - 2; i >= 0; --i) {
    strides_[static_cast<size_t>(i)] =
        strides_[static_cast<size_t>(i + 1)] * (bound_[i + 1] + 1);
  }
  cells_.assign(static_cast<size_t>(vol), BigInt(0));
}

long long BoxTable::volume_of(const MultiIndex& bound) {
  long long vol = 1;
  for (int i = 0; i < bound.dim(); ++i) {
    vol *= bound[i] + 1;
    if (vol < 0 || vol > (1LL << 40)) return 1LL << 41;
  }
  return vol;
}

std::size_t BoxTable::index(const MultiIndex& p) const {
  long long flat = 0;
  for (int i = 0; i < bound_.dim(); ++i)
    flat += strides_[static_cast<size_t>(i)] * p[i];
  return static_cast<std::size_t>(flat);
}

MultiIndex BoxTable::unindex(std::size_t flat) const {
  std::vector<int> c(static_cast<size_t>(bound_.dim()));
  long long rest = static_cast<long long>(flat);
  for (int i = 0; i < bound_.dim(); ++i) {
    c[static_cast<size_t>(i)] =
        static_cast<int>(rest / strides_[static_cast<size_t>(i)]);
    rest %= strides_[static_cast<size_t>(i)];
  }
  return MultiIndex(std::move(c));
}

namespace kernels {

namespace {

void accumulate_cell(BigInt& out, const MultiIndex& t, const BoxTable& src,
                     const Support& support, const Modulus* mod) {
  out = 0;
  for (const auto& e : support.entries) {
    auto prev = t.checked_sub(e.part);
    if (!prev) continue;
    out += e.weight * src.at(*prev);
  }
  reduce_into(out, mod);
}

}  // namespace

void next_row_serial(BoxTable& dst, const BoxTable& src, const Support& support,
                     const Modulus* mod) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    accumulate_cell(dst[i], dst.unindex(i), src, support, mod);
}

void next_row_parallel(BoxTable& dst, const BoxTable& src, const Support& support,
                       const Modulus* mod) {
  const long long n = static_cast<long long>(dst.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    accumulate_cell(dst[static_cast<std::size_t>(i)],
                    dst.unindex(static_cast<std::size_t>(i)), src, support, mod);
  }
}

void next_row(BoxTable& dst, const BoxTable& src, const Support& support,
              const Modulus* mod, Kernel kernel) {
  if (kernel == Kernel::Serial)
    next_row_serial(dst, src, support, mod);
  else
    next_row_parallel(dst, src, support, mod);
}

void open_counts_serial(BoxTable& table, const Support& support,
                        const Modulus* mod) {
  const auto nonzero = support.nonzero_entries();
  for (std::size_t i = 0; i < table.size(); ++i) {
    MultiIndex t = table.unindex(i);
    if (t.is_zero()) {
      table[i] = reduced(BigInt(1), mod);
      continue;
    }
    BigInt acc(0);
    for (const auto& e : nonzero) {
      auto prev = t.checked_sub(e.part);
      if (!prev) continue;
      acc += e.weight * table.at(*prev);  // lex order: prev already filled
    }
    reduce_into(acc, mod);
    table[i] = std::move(acc);
  }
}

void open_counts_parallel(BoxTable& table, const Support& support,
                          const Modulus* mod) {
  const auto nonzero = support.nonzero_entries();
  // Group cells by coordinate sum; each wavefront only reads earlier ones.
  long long max_sum = table.bound().coord_sum();
  std::vector<std::vector<std::size_t>> waves(static_cast<size_t>(max_sum) + 1);
  for (std::size_t i = 0; i < table.size(); ++i)
    waves[static_cast<size_t>(table.unindex(i).coord_sum())].push_back(i);

  table.at(MultiIndex::zeros(table.bound().dim())) = reduced(BigInt(1), mod);
  for (long long s = 1; s <= max_sum; ++s) {
    const auto& wave = waves[static_cast<size_t>(s)];
    const long long n = static_cast<long long>(wave.size());
#pragma omp parallel for schedule(static)
    for (long long w = 0; w < n; ++w) {
      MultiIndex t = table.unindex(wave[static_cast<std::size_t>(w)]);
      BigInt acc(0);
      for (const auto& e : nonzero) {
        auto prev = t.checked_sub(e.part);
        if (!prev) continue;
        acc += e.weight * table.at(*prev);
      }
      reduce_into(acc, mod);
      table[wave[static_cast<std::size_t>(w)]] = std::move(acc);
    }
  }
}

void open_counts(BoxTable& table, const Support& support, const Modulus* mod,
                 Kernel kernel) {
  if (kernel == Kernel::Serial)
    open_counts_serial(table, support, mod);
  else
    open_counts_parallel(table, support, mod);
}

}  // namespace kernels

}  // namespace veccomp
