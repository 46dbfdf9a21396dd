#include "hosvd3/polytope.hpp"

#include <algorithm>

namespace hosvd3::qubit3 {

std::array<double, 3> PolytopePoint::clamped() const {
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = std::clamp(s[k], 0.5, 1.0);
  return out;
}

PolytopePoint polytope_point(const ThreeQubitState& state, double tol) {
  const auto r = hosvd(state.tensor(), tol);
  PolytopePoint p;
  for (std::size_t n = 0; n < 3; ++n) p.s[n] = r.spectra[n][0] * r.spectra[n][0];
  return p;
}

PolytopePoint polytope_point(const Classification& c) {
  PolytopePoint p;
  p.s = c.sigma_triple;
  p.tag = std::string(to_string(c.separability)) + "/" + std::string(to_string(c.case_tag)) + "/" +
          std::string(to_string(c.special));
  return p;
}

PolytopeMembership polytope_membership(const PolytopePoint& p, double tol) {
  const auto& s = p.s;
  PolytopeMembership m;
  m.facet_slack = {1.0 - (s[0] + s[1] - s[2]), 1.0 - (s[0] + s[2] - s[1]), 1.0 - (s[1] + s[2] - s[0])};
  for (std::size_t k = 0; k < 3; ++k) {
    m.lower_slack[k] = s[k] - 0.5;
    m.upper_slack[k] = 1.0 - s[k];
  }
  double worst = m.facet_slack[0];
  for (const auto* family : {&m.facet_slack, &m.lower_slack, &m.upper_slack})
    for (double v : *family) worst = std::min(worst, v);
  m.worst_slack = worst;
  m.inside = worst >= -tol;
  return m;
}

}  // namespace hosvd3::qubit3
