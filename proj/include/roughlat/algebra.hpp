#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "roughlat/compatibility.hpp"
#include "roughlat/limits.hpp"
#include "roughlat/rough_lattice.hpp"

namespace roughlat {

enum class Status { holds, fails, not_applicable };

/// Outcome of one structural check. A failing verdict names the lattice elements
/// (indices into the ordered set) that make it fail.
struct Verdict {
  Status status = Status::not_applicable;
  std::vector<std::size_t> witness;
  std::string detail;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }

  static Verdict yes(std::string detail = {}) { return {Status::holds, {}, std::move(detail)}; }
  static Verdict no(std::vector<std::size_t> witness, std::string detail) {
    return {Status::fails, std::move(witness), std::move(detail)};
  }
  static Verdict inapplicable(std::string reason) { return {Status::not_applicable, {}, std::move(reason)}; }
};

/// Join/meet tables of a finite lattice, derived from the order alone. Keeps its own
/// copy of the order.
class LatticeOps {
 public:
  /// nullopt when some pair lacks a least upper or greatest lower bound.
  static std::optional<LatticeOps> build(const OrderedSet& order, const Limits& limits = {});

  const OrderedSet& order() const { return order_; }
  std::size_t size() const { return n_; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return n_ - 1; }

 private:
  LatticeOps(const OrderedSet& order, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet);

  OrderedSet order_;
  std::size_t n_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
};

/// Lattice test; a failing verdict carries a pair without lub or glb.
Verdict is_lattice(const OrderedSet& order, const Limits& limits = {});

/// Both distributive laws over all triples; a failing verdict carries the first
/// failing triple (x, y, z) in index order. Parallel over x.
Verdict is_distributive(const LatticeOps& lattice, const Limits& limits = {});

/// Both laws x∧(y∨z) = (x∧y)∨(x∧z) and x∨(y∧z) = (x∨y)∧(x∨z) for one triple.
bool distributive_at(const LatticeOps& lattice, std::size_t x, std::size_t y, std::size_t z);

/// Pentagon {0, a, c, b, 1} with a < c, b incomparable to both, a∧b = c∧b = 0, a∨b = c∨b = 1.
std::optional<std::array<std::size_t, 5>> find_n5(const LatticeOps& lattice);
/// Diamond {0, a, b, c, 1} with pairwise incomparable a, b, c sharing all pairwise joins and meets.
std::optional<std::array<std::size_t, 5>> find_m3(const LatticeOps& lattice);

/// Closure of RS(E,T) inside ℘(U)_E × ℘(U)^T: ambient bounds plus the ambient binary
/// meet (A∩C, ((B∩D)_T)^T) and join (A∪C, B∪D). Witness: a non-closed pair.
Verdict is_complete_sublattice(const RoughLattice& rs);

struct CsubResult {
  /// ∀x ∈ Σ_E∖Σ_T ∃y ∉ Σ_E: T(y) ⊆ T(x)
  bool below_condition = false;
  /// ∀x ∈ Σ_E∖Σ_T with T(x) a block ∃y ∉ Σ_E: T(y) = T(x)
  bool csub = false;
  /// least x violating (CSub) when it fails
  std::optional<std::size_t> failing_element;
};

/// Evaluates both conditions and aborts if they disagree. Throws HypothesisUnmet
/// unless T is induced by an irredundant covering.
CsubResult check_csub(const CompatiblePair& et);

struct CsubCircResult {
  bool holds = false;
  std::optional<std::size_t> failing_element;
};

/// Every non-singleton F-class has a member with a non-singleton E-class.
/// Throws InvalidInput unless E ⊆ F. Cross-checked against check_csub on (E, F).
CsubCircResult check_csub_circ(const Equivalence& e, const Equivalence& f);

/// Greatest b with a∧b = 0, by search.
std::optional<std::size_t> pseudocomplement(const LatticeOps& lattice, std::size_t a);
/// Least b with a∨b = 1, by search.
std::optional<std::size_t> dual_pseudocomplement(const LatticeOps& lattice, std::size_t a);
/// Greatest x with a∧x ≤ b, by search.
std::optional<std::size_t> heyting_implication(const LatticeOps& lattice, std::size_t a, std::size_t b);

struct RoughPseudocomplements {
  RoughPair star;       // (((B^c)^T)_T, (B^c)^T)
  RoughPair plus;       // (A^c, (A^c)^T)
  RoughPair star_star;  // (B_T, B)
  RoughPair plus_plus;  // (A, A^T)
};

/// Closed forms of *, +, **, ++ on RS(E,T). Throws HypothesisUnmet unless T is induced
/// by an irredundant covering and (CSub) holds.
RoughPseudocomplements rough_pseudocomplements(const CompatiblePair& et, const RoughPair& p);

/// Search-based * and + for every element (absent where they do not exist).
struct PseudocomplementTable {
  std::vector<std::optional<std::size_t>> star;
  std::vector<std::optional<std::size_t>> plus;
  bool total() const;
};
PseudocomplementTable pseudocomplements(const LatticeOps& lattice);

/// a* = b* and a+ = b+ imply a = b. Witness: an offending pair.
Verdict is_regular_double_p(const LatticeOps& lattice, const PseudocomplementTable& ops);
/// Distributive p-algebra with a* ∨ a** = 1.
Verdict is_stone(const LatticeOps& lattice, const PseudocomplementTable& ops, const Limits& limits = {});
/// Stone and additionally a+ ∧ a++ = 0.
Verdict is_double_stone(const LatticeOps& lattice, const PseudocomplementTable& ops, const Limits& limits = {});
/// a ⇒ b exists for every pair. Witness: a pair without relative pseudocomplement.
Verdict is_heyting(const LatticeOps& lattice, const Limits& limits = {});

/// Searches for an order isomorphism (L, ≤) → (L, ≥). A holding verdict carries the
/// map as its witness (witness[x] = image of x).
Verdict is_self_dual(const OrderedSet& order);

/// Aggregate of every check on the approximation pairs of (E, T).
struct AlgebraReport {
  CompatibilityReport compatibility;
  std::size_t element_count = 0;
  Verdict is_lattice;
  Verdict is_distributive;
  std::optional<std::array<std::size_t, 5>> n5;
  std::optional<std::array<std::size_t, 5>> m3;
  /// Finite distributive lattices are completely distributive and algebraic.
  Verdict completely_distributive;
  Verdict is_complete_sublattice;
  Verdict csub_holds;
  Verdict csub_circ_holds;
  Verdict pseudocomplements_exist;
  Verdict is_regular_double_p;
  Verdict is_stone;
  Verdict is_double_stone;
  Verdict is_heyting;
  Verdict is_self_dual;
};

struct AnalyzedPairs {
  OrderedSet order;
  AlgebraReport report;
};

/// Enumerates the (X_E, X^T) pairs (also for incompatible T) and runs every check
/// whose hypotheses hold; others are reported as not applicable.
AnalyzedPairs analyze(const Equivalence& e, const Tolerance& t, const Limits& limits = {});

}  // namespace roughlat
