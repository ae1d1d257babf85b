#include "fitt/errors.hpp"
#include "fitt/rees.hpp"

namespace fitt {

std::string x_name(int i) { return "x" + std::to_string(i); }
std::string t_name(int i) { return "T" + std::to_string(i); }
std::string u_name(int i) { return "U" + std::to_string(i); }

namespace {

std::vector<std::string> x_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(x_name(i));
  return names;
}

Polynomial x_power(const RingPtr& ring, const PowerIdeal& a, int i) {
  return Polynomial::variable(ring, x_name(i), a.exponent(i));
}

std::vector<Polynomial> binomials(const RingPtr& ring, const PowerIdeal& a) {
  std::vector<Polynomial> out;
  for (int i = a.s; i <= a.n; ++i) {
    for (int j = i + 1; j <= a.n; ++j) {
      out.push_back(x_power(ring, a, i) * Polynomial::variable(ring, t_name(j)) -
                    x_power(ring, a, j) * Polynomial::variable(ring, t_name(i)));
    }
  }
  return out;
}

}  // namespace

RingPtr rees_ring(const PowerIdeal& a) {
  a.validate();
  auto names = x_names(a.n);
  for (int i = a.s; i <= a.n; ++i) names.push_back(t_name(i));
  return make_ring(a.field(), std::move(names));
}

PresentedAlgebra rees_presentation(const PowerIdeal& a) {
  RingPtr ring = rees_ring(a);
  return PresentedAlgebra(Ideal(ring, binomials(ring, a)));
}

PresentedAlgebra rees_presentation(const ReesParams& params) {
  params.validate();
  return rees_presentation(params.power_ideal());
}

Polynomial chart_element(const PowerIdeal& a, int r) {
  if (r < a.s || r > a.n) throw ValidationError("chart index must satisfy s <= r <= n");
  return Polynomial::variable(rees_ring(a), t_name(r));
}

Ideal target_ideal(const ReesParams& params) {
  params.validate();
  PowerIdeal a = params.power_ideal();
  PresentedAlgebra rees = rees_presentation(a);
  auto gens = rees.relations.generators();
  for (int i = a.s; i <= a.n; ++i) gens.push_back(x_power(rees.ring, a, i));
  for (int i = a.s; i <= params.l; ++i) gens.push_back(Polynomial::variable(rees.ring, t_name(i)));
  return Ideal(rees.ring, std::move(gens));
}

Ideal exceptional_ideal(const PowerIdeal& a) {
  PresentedAlgebra rees = rees_presentation(a);
  auto gens = rees.relations.generators();
  for (int i = a.s; i <= a.n; ++i) gens.push_back(x_power(rees.ring, a, i));
  return Ideal(rees.ring, std::move(gens));
}

Ideal center_ideal(const PowerIdeal& a) {
  a.validate();
  RingPtr ring = make_ring(a.field(), x_names(a.n));
  std::vector<Polynomial> gens;
  for (int i = a.s; i <= a.n; ++i) gens.push_back(x_power(ring, a, i));
  return Ideal(ring, std::move(gens));
}

ChartAlgebra chart_presentation(const PowerIdeal& a, int r) {
  a.validate();
  if (r < a.s || r > a.n) throw ValidationError("chart index must satisfy s <= r <= n");
  auto names = x_names(a.n);
  std::vector<std::size_t> block;
  for (int i = a.s; i <= a.n; ++i) {
    block.push_back(names.size());
    names.push_back(t_name(i));
  }
  block.push_back(names.size());
  names.push_back("w");
  for (int i = a.s; i <= a.n; ++i) {
    if (i != r) names.push_back(u_name(i));
  }
  RingPtr big = make_ring(a.field(), std::move(names));

  auto gens = binomials(big, a);
  Polynomial w = Polynomial::variable(big, "w");
  gens.push_back(w * Polynomial::variable(big, t_name(r)) - Polynomial::from_int(big, 1));
  for (int i = a.s; i <= a.n; ++i) {
    if (i != r) gens.push_back(Polynomial::variable(big, u_name(i)) - w * Polynomial::variable(big, t_name(i)));
  }
  Ideal relations = eliminate(Ideal(big, std::move(gens)), block);
  return ChartAlgebra{r, PresentedAlgebra(std::move(relations))};
}

Ideal micali_kernel(const PowerIdeal& a) {
  RingPtr rees = rees_ring(a);
  RingPtr big = extend_ring(rees, {"t"});
  Polynomial t = Polynomial::variable(big, "t");
  std::vector<Polynomial> gens;
  for (int i = a.s; i <= a.n; ++i) gens.push_back(Polynomial::variable(big, t_name(i)) - x_power(big, a, i) * t);
  std::size_t t_index = big->nvars() - 1;
  return map_ideal(eliminate(Ideal(big, std::move(gens)), std::span<const std::size_t>(&t_index, 1)), rees);
}

}  // namespace fitt
