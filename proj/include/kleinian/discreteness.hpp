#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kleinian/family.hpp"

namespace kleinian {

struct SearchBounds {
  double tol = kDefaultTolerance;
  /// Largest integer slot (n, m, q, or an angle index) accepted in a match.
  int int_bound = 200;
  int order_bound = kDefaultOrderBound;
};

enum class Verdict { NotClassD, DiscreteInD, NotDiscrete, Unresolved };

std::string_view verdict_name(Verdict v);

struct ClassificationResult {
  Verdict verdict = Verdict::NotDiscrete;
  /// Non-empty exactly for DiscreteInD; ascending row order.
  std::vector<FamilyInstance> matches;
  /// Why NotClassD / Unresolved.
  std::string reason;
};

/// Decides discreteness of a class-D triple by inverting every family row.
/// Matches found with f and g exchanged, or after replacing a non-primitive
/// elliptic generator by a primitive power, are flagged on the instance.
ClassificationResult classify(const Parameters& p, const SearchBounds& bounds = {});

/// The three-clause criterion for two primitive elliptics of orders n and m.
ClassificationResult two_elliptic_discrete(int n, int m, double gamma,
                                           const SearchBounds& bounds = {});

/// Normalizes order-symmetric slots: GT and Tet sort [n,m], H sorts n,m.
GroupSpec canonical_form(const GroupSpec& g);

/// The arithmetic conditions of the class-D group list, on canonical_form(g).
/// Throws ArityError on a malformed spec.
bool group_conditions(const GroupSpec& g);

}  // namespace kleinian
