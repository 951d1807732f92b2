#pragma once

#include <cstdint>
#include <vector>

#include "babcubic/exact_number.hpp"

namespace babcubic {

enum class TableKind { Cube, CubePlusSquare };

/// Inclusive range of candidate integers for table builds and searches.
struct SearchBounds {
  std::uint64_t lower = 1;
  std::uint64_t upper = 7200;

  // Throws InvalidRange unless 1 <= lower <= upper.
  void validate() const;
  static SearchBounds defaults() { return {}; }
};

struct TableEntry {
  std::uint64_t n;
  Integer value;
};

inline constexpr std::uint64_t kTableCap = 1'000'000;

Integer table_polynomial(TableKind kind, const Integer& n);

std::vector<TableEntry> build_table(TableKind kind, SearchBounds range,
                                    std::uint64_t cap = kTableCap);

// floor(cbrt(v)) for v >= 0, by integer binary search.
Integer integer_cbrt(const Integer& v);

// x with x^3 == v; NotPerfectCube unless numerator and denominator are cubes.
ExactNumber cube_root_exact(const ExactNumber& v);

/// Prebuilt "n^3 corresponds to n" / "n^3 + n^2 corresponds to n" table.
/// Lookups past the last entry fall back to direct inversion through the
/// integer cube root instead of growing the table.
class RootTable {
 public:
  explicit RootTable(TableKind kind, std::uint64_t size = 60);

  TableKind kind() const noexcept { return kind_; }
  const std::vector<TableEntry>& entries() const noexcept { return entries_; }

  // n with polynomial(n) == value; NotFound otherwise.
  std::uint64_t inverse_lookup(const Integer& value) const;

 private:
  TableKind kind_;
  std::vector<TableEntry> entries_;
};

std::uint64_t inverse_lookup(TableKind kind, const Integer& value);

// Cube root by way of the cube table: scale by 60^3 until the value is an
// integer, look it up, and scale back. Agrees with cube_root_exact for
// regular inputs.
ExactNumber cube_root_by_table(const ExactNumber& v);

// Unique n in bounds with n^3 + k n == target (binary search over the
// strictly increasing polynomial). NotFound otherwise.
std::uint64_t search_n3_plus_kn(std::uint64_t k, const Integer& target,
                                SearchBounds bounds = SearchBounds::defaults());

// Same contract, evaluated the tablet way: n = 1, 2, 3, ... until the value
// reaches the target.
std::uint64_t scan_n3_plus_kn(std::uint64_t k, const Integer& target,
                              SearchBounds bounds = SearchBounds::defaults());

}  // namespace babcubic
