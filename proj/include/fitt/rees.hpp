#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fitt/fitting.hpp"

namespace fitt {

/// The monomial complete intersection a = (x_s^{v_s}, ..., x_n^{v_n}) inside
/// F_p[x1..xn]. v[k] is the exponent of x_{s+k}.
struct PowerIdeal {
  std::uint64_t p = 0;
  int n = 0;
  int s = 0;
  std::vector<std::uint32_t> v;

  /// Checks p prime, 1 <= s <= n, one exponent >= 1 per index s..n.
  void validate() const;
  std::uint32_t exponent(int i) const { return v.at(static_cast<std::size_t>(i - s)); }
  Field field() const { return Field::prime(p); }
};

/// Shape required for the Fitting-ideal comparison: p | v_i for s <= i <= l,
/// v_i = 1 for i > l, and 1 <= s <= l < n.
struct ReesParams {
  std::uint64_t p = 0;
  int n = 0;
  int s = 0;
  int l = 0;
  std::vector<std::uint32_t> v;

  /// Throws ValidationError naming the first violated condition. With
  /// `strict_p_power`, v_s..v_l must also be powers of p.
  void validate(bool strict_p_power = false) const;
  PowerIdeal power_ideal() const { return PowerIdeal{p, n, s, v}; }
  /// Flag syntax, e.g. "p=2 n=3 s=1 l=2 v=2,2,1".
  std::string to_string() const;

  friend bool operator==(const ReesParams&, const ReesParams&) = default;
};

/// Parses the flag syntax; keys may come in any order. Only the syntax is
/// checked here (ParseError); call validate() for the mathematical shape.
ReesParams parse_rees_params(std::string_view text);

std::string x_name(int i);
std::string t_name(int i);
std::string u_name(int i);

/// F_p[x1..xn, T_s..T_n], where T_i stands for x_i^{v_i} T.
RingPtr rees_ring(const PowerIdeal& a);
/// Relations x_i^{v_i} T_j - x_j^{v_j} T_i for s <= i < j <= n.
PresentedAlgebra rees_presentation(const PowerIdeal& a);
/// Validates first.
PresentedAlgebra rees_presentation(const ReesParams& params);

/// The chart element g = x_r^{v_r} T, i.e. the variable T_r.
Polynomial chart_element(const PowerIdeal& a, int r);

/// (x_s^{v_s}, ..., x_n^{v_n}, T_s, ..., T_l) + J in the Rees ring.
Ideal target_ideal(const ReesParams& params);
/// (x_s^{v_s}, ..., x_n^{v_n}) + J in the Rees ring.
Ideal exceptional_ideal(const PowerIdeal& a);
/// a itself, in F_p[x1..xn].
Ideal center_ideal(const PowerIdeal& a);

/// Degree-zero localization of the Rees ring at g = T_r, presented over
/// F_p[x1..xn, U_i (s <= i <= n, i != r)] with U_i = T_i / T_r.
struct ChartAlgebra {
  int r;
  PresentedAlgebra algebra;
};

/// Eliminates T_s..T_n and w from J + (w*T_r - 1) + (U_i - w*T_i). The
/// relation generators are the elimination basis, not minimized.
ChartAlgebra chart_presentation(const PowerIdeal& a, int r);

/// Kernel of F_p[x, T_s..T_n] -> F_p[x, t], T_i -> x_i^{v_i} t, over the
/// Rees ring's variables.
Ideal micali_kernel(const PowerIdeal& a);

}  // namespace fitt
