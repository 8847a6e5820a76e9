#ifndef TREECUT_CORE_HPP
#define TREECUT_CORE_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace treecut {

// Vertices of a graph are dense ids 0..n-1; nodes of a decomposition tree are
// dense ids 0..N-1. File formats use 1-based vertex ids.
using VertexId = int;
using NodeId = int;

enum class ErrorCode {
  InvalidGraph,
  PartitionInvalid,
  NotATree,
  NotAForest,
  InvalidDecomposition,
  EmptyDecomposition,
  DisconnectedKeepTree,
  RedundantPath,
  BadFraction,
  BadSize,
  EnumerationLimit,
  ParseError,
  InternalInvariant,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Exact nonnegative rational, always kept in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw Error(ErrorCode::BadFraction, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  long double to_long_double() const {
    return static_cast<long double>(num) / static_cast<long double>(den);
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }
};

/// Parses "0.75", "3/4" or "1" into an exact fraction.
Fraction parse_fraction(const std::string& text);

/// Counts elementary work (node visits, cluster-element touches, label scans)
/// so that running-time contracts can be asserted independently of the clock.
struct OpsCounter {
  std::uint64_t touches = 0;
};

inline void tick(OpsCounter* ops, std::uint64_t k = 1) {
  if (ops != nullptr) ops->touches += k;
}

}  // namespace treecut

#endif  // TREECUT_CORE_HPP
