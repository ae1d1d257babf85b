#include "fitt/verify.hpp"

namespace fitt {

NonNormalProbe probe_nonnormal(std::uint64_t p, bool free_variables) {
  // a = (x_c^p, x_d^(p^2)); with the free variables present c = 3, d = 4.
  const int c = free_variables ? 3 : 1;
  const int d = c + 1;
  const auto p32 = static_cast<std::uint32_t>(p);
  PowerIdeal a{p, d, c, {p32, p32 * p32}};
  ChartAlgebra chart = chart_presentation(a, c);
  const RingPtr& ring = chart.algebra.ring;
  const Ideal& relations = chart.algebra.relations;

  Polynomial xc = Polynomial::variable(ring, x_name(c));
  Polynomial xd = Polynomial::variable(ring, x_name(d));
  Polynomial u = Polynomial::variable(ring, u_name(d));
  Polynomial binomial = u * xc.pow(p) - xd.pow(p * p);

  NonNormalProbe probe;
  probe.chart_matches = ideal_equal(relations, Ideal(ring, {binomial}));
  // x_d^p / x_c is a root of Z^p - U, hence integral over the chart ring.
  probe.integral = ideal_member(xd.pow(p * p) - u * xc.pow(p), relations);
  probe.outside = !ideal_member(xd.pow(p), ideal_sum(Ideal(ring, {xc}), relations));
  probe.sanity = ideal_member(xd.pow(p * p), ideal_sum(Ideal(ring, {xc.pow(p)}), relations));
  return probe;
}

bool check_nonnormal(std::uint64_t p) { return probe_nonnormal(p).ok(); }

}  // namespace fitt
