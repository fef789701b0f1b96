#include <cmath>
#include <sstream>
#include <string>
#include <stdexcept>
#include <utility>

#include "nlwave/errors.hpp"
#include "nlwave/multiplier.hpp"

namespace nlwave {

MultiplierTable::MultiplierTable(KernelParams params, int box_radius, std::vector<Entry> entries)
    : params_(params), box_radius_(box_radius), entries_(std::move(entries)) {
  if (box_radius_ < 1) {
    throw DomainError("MultiplierTable: box radius must be >= 1");
  }
  const int max_norm2 = params_.n * box_radius_ * box_radius_;
  slot_.assign(static_cast<std::size_t>(max_norm2) + 1, -1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.norm2 < 0 || e.norm2 > max_norm2) {
      throw CorruptedTableError("MultiplierTable: squared norm " + std::to_string(e.norm2) +
                                " outside the box");
    }
    if (e.norm2 == 0 && e.value != 0.0) {
      throw CorruptedTableError("MultiplierTable: value at |k|^2 = 0 must be exactly 0");
    }
    if (!(e.value <= 0.0)) {
      std::ostringstream s;
      s << "MultiplierTable: positive or NaN value " << e.value << " at |k|^2 = " << e.norm2;
      throw CorruptedTableError(s.str());
    }
    if (slot_[e.norm2] != -1) {
      throw CorruptedTableError("MultiplierTable: duplicate entry for |k|^2 = " +
                                std::to_string(e.norm2));
    }
    slot_[e.norm2] = static_cast<int>(i);
  }
}

bool MultiplierTable::contains(int norm2) const {
  return norm2 >= 0 && static_cast<std::size_t>(norm2) < slot_.size() && slot_[norm2] >= 0;
}

double MultiplierTable::at(int norm2) const {
  if (!contains(norm2)) {
    throw std::out_of_range("MultiplierTable: no entry for |k|^2 = " + std::to_string(norm2));
  }
  return entries_[slot_[norm2]].value;
}

std::vector<int> distinct_squared_norms(int n, int box_radius) {
  if (n < 1 || box_radius < 0) {
    throw DomainError("distinct_squared_norms: need n >= 1 and K >= 0");
  }
  // Sums of n squares from {0, 1, ..., K^2}, built one coordinate at a time.
  const int max_norm2 = n * box_radius * box_radius;
  std::vector<char> reach(static_cast<std::size_t>(max_norm2) + 1, 0);
  reach[0] = 1;
  for (int d = 0; d < n; ++d) {
    std::vector<char> next(reach.size(), 0);
    for (int s = 0; s <= max_norm2; ++s) {
      if (!reach[s]) {
        continue;
      }
      for (int k = 0; k <= box_radius && s + k * k <= max_norm2; ++k) {
        next[s + k * k] = 1;
      }
    }
    reach = std::move(next);
  }
  std::vector<int> out;
  for (int s = 0; s <= max_norm2; ++s) {
    if (reach[s]) {
      out.push_back(s);
    }
  }
  return out;
}

MultiplierTable build_table(const KernelParams& params, int box_radius) {
  params.validate();
  if (box_radius < 1) {
    throw DomainError("build_table: box radius must be >= 1");
  }
  std::vector<MultiplierTable::Entry> entries;
  for (int norm2 : distinct_squared_norms(params.n, box_radius)) {
    if (norm2 == 0) {
      entries.push_back({0, 0.0, EvalPath::Exact});
      continue;
    }
    if (params.is_laplacian()) {
      entries.push_back({norm2, -static_cast<double>(norm2), EvalPath::Exact});
      continue;
    }
    try {
      const MultiplierValue v = multiplier(params, std::sqrt(static_cast<double>(norm2)));
      entries.push_back({norm2, v.value, v.path});
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string(e.what()) + " at |k|^2 = " + std::to_string(norm2),
                             e.last_value(), e.last_error());
    }
  }
  return MultiplierTable(params, box_radius, std::move(entries));
}

}  // namespace nlwave
