#include "roughlat/compatibility.hpp"

#include "roughlat/approximation.hpp"
#include "roughlat/error.hpp"

namespace roughlat {

namespace {

std::optional<CompatibilityWitness> least_failing_triple(const Relation& e, const Relation& t) {
  const std::size_t n = e.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z : e.row(x)) {
      Subset missing = t.row(z) - t.row(x);
      if (!missing.empty()) {
        // x, then z, then y ascending: the first hit is the lexicographically least triple.
        return CompatibilityWitness{x, z, missing.first()};
      }
    }
  return std::nullopt;
}

std::string describe(const CompatibilityReport& r) {
  if (!r.witness) return "tolerance is not compatible with the equivalence";
  return "tolerance is not compatible with the equivalence (witness x=" + std::to_string(r.witness->x) +
         ", z=" + std::to_string(r.witness->z) + ", y=" + std::to_string(r.witness->y) + ")";
}

}  // namespace

CompatibilityReport is_compatible(const Equivalence& e, const Tolerance& t, bool cross_check) {
  require_same_universe(e, t);
  CompatibilityReport report;
  report.kernel_inclusion = e.relation().subset_of(kernel(t).relation());
  report.compatible = report.kernel_inclusion;
  if (cross_check) {
    const bool by_product = product(e, t).subset_of(t);
    bool all_definable = true;
    for (Subset b : blocks(t)) all_definable = all_definable && is_definable(e, b);
    report.blocks_definable = all_definable;
    report.cross_checked = true;
    if (by_product != report.kernel_inclusion || all_definable != report.kernel_inclusion) {
      internal_fault("compatibility criteria disagree (product=" + std::to_string(by_product) +
                     ", kernel=" + std::to_string(report.kernel_inclusion) +
                     ", blocks=" + std::to_string(all_definable) + ")");
    }
  } else {
    report.blocks_definable = report.kernel_inclusion;
  }
  if (!report.compatible) {
    report.witness = least_failing_triple(e, t);
    if (!report.witness) internal_fault("incompatible pair without a failing triple");
  }
  return report;
}

bool is_similarity_extension(const Equivalence& e, const Relation& r) {
  require_same_universe(e, r);
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!e.class_of(x).subset_of(r.row(x))) return false;
    for (std::size_t y : r.row(x))
      if (!e.class_of(y).subset_of(r.row(x))) return false;
  }
  return true;
}

Subset sigma_e(const Equivalence& e) {
  Subset out;
  for (std::size_t x = 0; x < e.relation().size(); ++x)
    if (e.class_of(x) == Subset::singleton(x)) out.insert(x);
  return out;
}

Subset sigma_t(const Tolerance& t) {
  Subset out;
  for (std::size_t x = 0; x < t.relation().size(); ++x)
    if (t.neighborhood(x) == Subset::singleton(x)) out.insert(x);
  return out;
}

CompatiblePair::CompatiblePair(Equivalence e, Tolerance t) : e_(std::move(e)), t_(std::move(t)) {
  auto report = is_compatible(e_, t_, false);
  if (!report.compatible) throw IncompatibleError(std::move(report));
  sigma_e_ = roughlat::sigma_e(e_);
  sigma_t_ = roughlat::sigma_t(t_);
}

IncompatibleError::IncompatibleError(CompatibilityReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

}  // namespace roughlat
