#include "zerospan/multi_index.hpp"

#include <algorithm>

#include "zerospan/error.hpp"

namespace zerospan {

MultiIndex MultiIndex::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<Entry> merged;
  for (const auto& [var, exp] : entries) {
    if (var == 0) raise(Errc::InvalidInput, "variable indices are 1-based");
    if (exp == 0) continue;
    if (!merged.empty() && merged.back().first == var)
      merged.back().second += exp;
    else
      merged.emplace_back(var, exp);
  }
  MultiIndex mi;
  mi.entries_ = std::move(merged);
  return mi;
}

MultiIndex MultiIndex::unit(std::uint32_t var, std::uint32_t exp) {
  return from_entries({{var, exp}});
}

std::uint32_t MultiIndex::degree() const {
  std::uint32_t d = 0;
  for (const auto& [var, exp] : entries_) d += exp;
  return d;
}

std::uint32_t MultiIndex::exponent(std::uint32_t var) const {
  for (const auto& [v, e] : entries_)
    if (v == var) return e;
  return 0;
}

MultiIndex MultiIndex::times(const MultiIndex& o) const {
  std::vector<Entry> all = entries_;
  all.insert(all.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(std::move(all));
}

MultiIndex MultiIndex::decremented(std::uint32_t var) const {
  std::vector<Entry> out;
  bool found = false;
  for (const auto& [v, e] : entries_) {
    if (v == var) {
      found = true;
      if (e > 1) out.emplace_back(v, e - 1);
    } else {
      out.emplace_back(v, e);
    }
  }
  if (!found) raise(Errc::Internal, "decrement of absent variable");
  MultiIndex mi;
  mi.entries_ = std::move(out);
  return mi;
}

MultiIndex MultiIndex::shifted(std::uint32_t offset) const {
  MultiIndex mi;
  mi.entries_ = entries_;
  for (auto& [v, e] : mi.entries_) v += offset;
  return mi;
}

} // namespace zerospan
