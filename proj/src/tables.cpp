#include "babcubic/tables.hpp"

#include <algorithm>
#include <string>

#include "babcubic/error.hpp"

namespace babcubic {

namespace {

std::string kind_name(TableKind kind) {
  return kind == TableKind::Cube ? "n^3" : "n^3 + n^2";
}

[[noreturn]] void not_found(const std::string& what) {
  throw Error(ErrorCode::NotFound, what);
}

Integer n3_plus_kn(std::uint64_t n, std::uint64_t k) {
  Integer v = n;
  return v * v * v + Integer(k) * v;
}

}  // namespace

void SearchBounds::validate() const {
  if (lower < 1 || lower > upper) {
    throw Error(ErrorCode::InvalidRange,
                "invalid range " + std::to_string(lower) + ".." + std::to_string(upper));
  }
}

Integer table_polynomial(TableKind kind, const Integer& n) {
  Integer sq = n * n;
  return kind == TableKind::Cube ? sq * n : sq * n + sq;
}

std::vector<TableEntry> build_table(TableKind kind, SearchBounds range,
                                    std::uint64_t cap) {
  range.validate();
  if (range.upper > cap) {
    throw Error(ErrorCode::InvalidRange,
                "range upper bound " + std::to_string(range.upper) +
                    " exceeds cap " + std::to_string(cap));
  }
  std::vector<TableEntry> table;
  table.reserve(range.upper - range.lower + 1);
  for (std::uint64_t n = range.lower; n <= range.upper; ++n) {
    table.push_back({n, table_polynomial(kind, Integer(n))});
  }
  return table;
}

Integer integer_cbrt(const Integer& v) {
  if (v.sign() < 0) throw Error(ErrorCode::NegativeInput, "cube root of a negative integer");
  if (v < 2) return v;
  Integer lo = 1;
  Integer hi = Integer(1) << (boost::multiprecision::msb(v) / 3 + 1);
  // Invariant: lo^3 <= v < hi^3.
  while (hi - lo > 1) {
    Integer mid = (lo + hi) >> 1;
    if (mid * mid * mid <= v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

ExactNumber cube_root_exact(const ExactNumber& v) {
  if (v.sign() <= 0) {
    throw Error(ErrorCode::NegativeInput, "cube root requires a positive value");
  }
  Integer n = integer_cbrt(v.numerator());
  Integer d = integer_cbrt(v.denominator());
  if (n * n * n != v.numerator() || d * d * d != v.denominator()) {
    throw Error(ErrorCode::NotPerfectCube,
                v.to_fraction_string() + " is not the cube of a rational number");
  }
  return ExactNumber(n, d);
}

RootTable::RootTable(TableKind kind, std::uint64_t size)
    : kind_(kind), entries_(build_table(kind, {1, size})) {}

std::uint64_t RootTable::inverse_lookup(const Integer& value) const {
  if (value < 1) not_found("no " + kind_name(kind_) + " root of " + value.str());
  if (value <= entries_.back().value) {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), value,
        [](const TableEntry& e, const Integer& v) { return e.value < v; });
    if (it != entries_.end() && it->value == value) return it->n;
    not_found("no " + kind_name(kind_) + " root of " + value.str());
  }
  // n^3 <= n^3 + n^2 < (n+1)^3, so floor(cbrt(value)) is the only candidate.
  Integer n = integer_cbrt(value);
  if (table_polynomial(kind_, n) != value) {
    not_found("no " + kind_name(kind_) + " root of " + value.str());
  }
  return static_cast<std::uint64_t>(n);
}

std::uint64_t inverse_lookup(TableKind kind, const Integer& value) {
  static const RootTable cube(TableKind::Cube);
  static const RootTable cube_plus_square(TableKind::CubePlusSquare);
  return (kind == TableKind::Cube ? cube : cube_plus_square).inverse_lookup(value);
}

ExactNumber cube_root_by_table(const ExactNumber& v) {
  if (v.sign() <= 0) {
    throw Error(ErrorCode::NegativeInput, "cube root requires a positive value");
  }
  ExactNumber scaled = v;
  Integer unscale = 1;
  // A regular denominator clears after at most a few dozen steps; anything
  // still fractional after that is not a finite sexagesimal number.
  for (int shift = 0; !scaled.is_integer(); ++shift) {
    if (shift > 64) {
      throw Error(ErrorCode::NotPerfectCube,
                  v.to_fraction_string() + " has no cube root in the table");
    }
    scaled *= ExactNumber(216000);
    unscale *= 60;
  }
  try {
    std::uint64_t n = inverse_lookup(TableKind::Cube, scaled.numerator());
    return ExactNumber(Integer(n), unscale);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    throw Error(ErrorCode::NotPerfectCube,
                v.to_fraction_string() + " has no cube root in the table");
  }
}

std::uint64_t search_n3_plus_kn(std::uint64_t k, const Integer& target,
                                SearchBounds bounds) {
  bounds.validate();
  std::uint64_t lo = bounds.lower;
  std::uint64_t hi = bounds.upper;
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    Integer v = n3_plus_kn(mid, k);
    if (v == target) return mid;
    if (v < target) {
      lo = mid + 1;
    } else {
      if (mid == 0) break;
      hi = mid - 1;
    }
  }
  not_found("no n in " + std::to_string(bounds.lower) + ".." +
            std::to_string(bounds.upper) + " with n^3 + " + std::to_string(k) +
            "n = " + target.str());
}

std::uint64_t scan_n3_plus_kn(std::uint64_t k, const Integer& target,
                              SearchBounds bounds) {
  bounds.validate();
  for (std::uint64_t n = bounds.lower; n <= bounds.upper; ++n) {
    Integer v = n3_plus_kn(n, k);
    if (v == target) return n;
    if (v > target) break;
    if (n == bounds.upper) break;
  }
  not_found("no n in " + std::to_string(bounds.lower) + ".." +
            std::to_string(bounds.upper) + " with n^3 + " + std::to_string(k) +
            "n = " + target.str());
}

}  // namespace babcubic
