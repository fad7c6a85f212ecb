#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "roughlat/subset.hpp"
#include "roughlat/universe.hpp"

namespace roughlat {

/// Binary relation on a finite universe, one neighborhood bitset per element:
/// row(x) = R(x) = { y | x R y }.
class Relation {
 public:
  Relation(UniversePtr universe, std::vector<Subset> rows);

  static Relation empty(UniversePtr universe);
  static Relation identity(UniversePtr universe);
  static Relation full(UniversePtr universe);
  static Relation from_pairs(UniversePtr universe, std::span<const std::pair<std::size_t, std::size_t>> pairs);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t size() const { return rows_.size(); }

  bool related(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }
  Subset row(std::size_t x) const { return rows_.at(x); }
  std::span<const Subset> rows() const { return rows_; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool subset_of(const Relation& other) const;
  bool same_universe(const Relation& other) const;
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation& a, const Relation& b);
  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator|(const Relation& a, const Relation& b);

 private:
  UniversePtr universe_;
  std::vector<Subset> rows_;
};

/// Throws InvalidInput unless both relations live on equal universes.
void require_same_universe(const Relation& a, const Relation& b);

/// R ∘ S: x (R∘S) y iff x R z and z S y for some z.
Relation product(const Relation& r, const Relation& s);
Relation inverse(const Relation& r);
Subset neighborhood(const Relation& r, std::string_view label);

/// Reflexive, symmetric, transitive relation. Axioms are checked on construction.
class Equivalence {
 public:
  explicit Equivalence(Relation relation);

  static Equivalence identity(UniversePtr universe);
  static Equivalence full(UniversePtr universe);
  /// Classes must partition the universe.
  static Equivalence from_classes(UniversePtr universe, std::span<const Subset> classes);

  const Relation& relation() const { return relation_; }
  operator const Relation&() const { return relation_; }  // NOLINT(google-explicit-constructor)
  const Universe& universe() const { return relation_.universe(); }
  const UniversePtr& universe_ptr() const { return relation_.universe_ptr(); }

  Subset class_of(std::size_t x) const { return relation_.row(x); }
  /// Distinct classes ordered by smallest member.
  std::vector<Subset> classes() const;

  friend bool operator==(const Equivalence& a, const Equivalence& b) { return a.relation_ == b.relation_; }

 private:
  Relation relation_;
};

/// Reflexive, symmetric relation. Axioms are checked on construction.
class Tolerance {
 public:
  explicit Tolerance(Relation relation);
  explicit Tolerance(const Equivalence& e) : relation_(e.relation()) {}

  const Relation& relation() const { return relation_; }
  operator const Relation&() const { return relation_; }  // NOLINT(google-explicit-constructor)
  const Universe& universe() const { return relation_.universe(); }
  const UniversePtr& universe_ptr() const { return relation_.universe_ptr(); }
  Subset neighborhood(std::size_t x) const { return relation_.row(x); }

  friend bool operator==(const Tolerance& a, const Tolerance& b) { return a.relation_ == b.relation_; }

 private:
  Relation relation_;
};

/// Family of nonempty subsets whose union is the universe. Members are kept
/// deduplicated in canonical (mask) order.
class Covering {
 public:
  Covering(UniversePtr universe, std::vector<Subset> members);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::span<const Subset> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const Covering& a, const Covering& b) {
    return *a.universe_ == *b.universe_ && a.members_ == b.members_;
  }

 private:
  UniversePtr universe_;
  std::vector<Subset> members_;
};

/// ker T = { (x,y) | T(x) = T(y) }.
Equivalence kernel(const Tolerance& t);

/// All T-blocks (maximal cliques of T), sorted by mask.
std::vector<Subset> blocks(const Tolerance& t);

/// { T(x) | T(x) is a block }, sorted by mask.
std::vector<Subset> block_neighborhoods(const Tolerance& t);

/// T_C = { (x,y) | x,y ∈ B for some B ∈ C }.
Tolerance induced_tolerance(const Covering& c);

struct IrredundancyResult {
  bool irredundant = true;
  /// A member whose removal still leaves a covering; set iff !irredundant.
  std::optional<Subset> removable;
};

IrredundancyResult is_irredundant(const Covering& c);

/// Membership-profile equivalence { (x,y) | ∀B ∈ C: x ∈ B ⟺ y ∈ B }.
/// Throws HypothesisUnmet for a redundant covering.
Equivalence covering_kernel_oracle(const Covering& c);

/// The irredundant covering inducing T, if there is one.
std::optional<Covering> inducing_irredundant_covering(const Tolerance& t);

}  // namespace roughlat
