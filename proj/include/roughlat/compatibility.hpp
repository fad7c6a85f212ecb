#pragma once

#include <array>
#include <optional>

#include "roughlat/relation.hpp"

namespace roughlat {

// Test builds define ROUGHLAT_CROSS_CHECK for the library and everything linking it.
#if defined(ROUGHLAT_CROSS_CHECK) || !defined(NDEBUG)
inline constexpr bool kCrossCheckByDefault = true;
#else
inline constexpr bool kCrossCheckByDefault = false;
#endif

/// Failing triple for E ∘ T ⊆ T: x E z, z T y, but not x T y.
struct CompatibilityWitness {
  std::size_t x = 0;
  std::size_t z = 0;
  std::size_t y = 0;
  friend bool operator==(const CompatibilityWitness&, const CompatibilityWitness&) = default;
};

struct CompatibilityReport {
  bool compatible = false;
  /// Lexicographically least failing triple; present iff !compatible.
  std::optional<CompatibilityWitness> witness;
  /// E ⊆ ker T
  bool kernel_inclusion = false;
  /// every T-block is E-definable
  bool blocks_definable = false;
  /// whether the block criterion was computed rather than inferred
  bool cross_checked = false;
};

/// Decides E-compatibility of T. With cross_check, the product, kernel and block
/// criteria are computed independently and any disagreement aborts.
CompatibilityReport is_compatible(const Equivalence& e, const Tolerance& t, bool cross_check = kCrossCheckByDefault);

/// (Ex1) [x]_E ⊆ R(x) and (Ex2) y ∈ R(x) ⇒ [y]_E ⊆ R(x).
bool is_similarity_extension(const Equivalence& e, const Relation& r);

/// Union of the singleton E-classes.
Subset sigma_e(const Equivalence& e);
/// Union of the singleton T-neighborhoods.
Subset sigma_t(const Tolerance& t);

/// An equivalence E together with an E-compatible tolerance T. Construction
/// verifies compatibility, so every holder may rely on it.
class CompatiblePair {
 public:
  /// Throws IncompatibleError when T is not E-compatible.
  CompatiblePair(Equivalence e, Tolerance t);

  const Equivalence& equivalence() const { return e_; }
  const Tolerance& tolerance() const { return t_; }
  const Universe& universe() const { return e_.universe(); }
  Subset sigma_e() const { return sigma_e_; }
  Subset sigma_t() const { return sigma_t_; }

 private:
  Equivalence e_;
  Tolerance t_;
  Subset sigma_e_;
  Subset sigma_t_;
};

class IncompatibleError : public std::invalid_argument {
 public:
  explicit IncompatibleError(CompatibilityReport report);
  const CompatibilityReport& report() const { return report_; }

 private:
  CompatibilityReport report_;
};

}  // namespace roughlat
