#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/presentations.hpp"
#include "kleinian/trace_core.hpp"

namespace kleinian {

/// Rows 11 and 12 carry a (√5 ± 1)/2 value and are split into two sub-rows.
enum class RowSign { None, Plus, Minus };

struct FamilyId {
  int row = 1;
  RowSign sign = RowSign::None;

  Schema schema() const;
  /// "5", "11+", "12-".
  std::string label() const;
  static std::optional<FamilyId> parse(const std::string& label);

  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

using IntSlots = std::map<std::string, int>;
using UPointSlots = std::map<std::string, UPoint>;

struct FamilyInstance {
  FamilyId id;
  IntSlots ints;
  UPointSlots upoints;
  /// (β, β′, γ) in the row's own order.
  Parameters params;
  GroupSpec group;
  /// Matched with the roles of f and g exchanged.
  bool swapped = false;
  /// Matched after replacing f (resp. g) by this power to make it primitive.
  int f_power = 1;
  int g_power = 1;

  /// "row 1 GT[3,3;3] {u=angle:3, v=angle:3, w=angle:6}".
  std::string describe() const;
  bool same_data(const FamilyInstance& o, double tol = kDefaultTolerance) const;
};

struct RowInfo {
  FamilyId id;
  std::vector<std::string> int_slots;
  std::vector<std::string> upoint_slots;
  std::string beta_cell;
  std::string gamma_cell;
  std::string beta_prime_cell;
  std::string group_cell;
  /// Exchanging f and g maps the row to itself (with u ↔ v).
  bool symmetric = false;
};

/// All 26 registry rows in table order (11+, 11-, 12+, 12- expanded).
const std::vector<RowInfo>& family_rows();
const RowInfo& row_info(FamilyId id);

struct Violation {
  std::string condition;
  /// A strict real inequality that fails only within tolerance.
  bool near_boundary = false;
};

struct RowEvaluation {
  Parameters params;
  std::optional<GroupSpec> group;
  std::vector<Violation> violations;
};

/// Evaluates the row's formulas and side conditions (plus the class-D gate)
/// without throwing on violations. Throws MissingSlot.
RowEvaluation evaluate_row(FamilyId id, const IntSlots& ints,
                           const UPointSlots& upoints,
                           double tol = kDefaultTolerance);

/// Throws ConditionViolated on the first failed condition, MissingSlot when a
/// slot is absent.
FamilyInstance generate_family(FamilyId id, const IntSlots& ints,
                               const UPointSlots& upoints,
                               double tol = kDefaultTolerance);

struct SlotCandidate {
  IntSlots ints;
  UPointSlots upoints;
};

/// Slot assignments obtained by inverting the row's formulas at p. Every
/// candidate still has to be confirmed by evaluate_row.
std::vector<SlotCandidate> invert_row(FamilyId id, const Parameters& p,
                                      double tol = kDefaultTolerance);

}  // namespace kleinian
