#ifndef ZEROSPAN_MULTI_INDEX_HPP
#define ZEROSPAN_MULTI_INDEX_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace zerospan {

// Monomial exponent vector: strictly increasing variable indices (1-based),
// positive exponents. Ordered lexicographically by variable index so that
// serialized tables are reproducible.
class MultiIndex {
public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>; // (variable, exponent)

  MultiIndex() = default;
  static MultiIndex from_entries(std::vector<Entry> entries); // canonicalizes
  static MultiIndex unit(std::uint32_t var, std::uint32_t exp = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint32_t min_var() const { return entries_.empty() ? 0 : entries_.front().first; }
  std::uint32_t max_var() const { return entries_.empty() ? 0 : entries_.back().first; }

  MultiIndex times(const MultiIndex& o) const;     // exponent-wise sum
  MultiIndex decremented(std::uint32_t var) const; // one derivative step
  MultiIndex shifted(std::uint32_t offset) const;  // every variable += offset

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  bool operator<(const MultiIndex& o) const { return entries_ < o.entries_; }

private:
  std::vector<Entry> entries_;
};

} // namespace zerospan

#endif
