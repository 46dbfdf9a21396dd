#pragma once

#include <array>
#include <string>

#include "hosvd3/qubit3.hpp"

namespace hosvd3::qubit3 {

/// Largest one-body RDM eigenvalues (σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²) of a state.
struct PolytopePoint {
  std::array<double, 3> s{};  // raw values
  std::string tag;            // "<separability>/<case>/<special>" when built from a classification

  /// Values clamped to [1/2, 1] for reporting.
  std::array<double, 3> clamped() const;
};

PolytopePoint polytope_point(const ThreeQubitState& state, double tol = kDefaultTol);
PolytopePoint polytope_point(const Classification& c);

/// Slacks of the constraint families; a constraint holds when its slack is ≥ −tol.
struct PolytopeMembership {
  bool inside = false;
  // 1 − (s1+s2−s3), 1 − (s1+s3−s2), 1 − (s2+s3−s1)
  std::array<double, 3> facet_slack{};
  std::array<double, 3> lower_slack{};  // sᵢ − 1/2
  std::array<double, 3> upper_slack{};  // 1 − sᵢ
  double worst_slack = 0.0;
};

PolytopeMembership polytope_membership(const PolytopePoint& p, double tol = kDefaultTol);

}  // namespace hosvd3::qubit3
