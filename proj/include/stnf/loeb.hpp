/* Copyright 2026 The stnf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef STNF_LOEB_HPP_
#define STNF_LOEB_HPP_

#include <functional>
#include <optional>
#include <string>

#include "stnf/normalizer.hpp"

namespace stnf {

// A property of standard grid points: membership in a grid set variable, or
// a formula in a hole variable of type real.
class PointProperty {
 public:
  static PointProperty explicit_set(std::string set_var = "A");
  // Internal formulas, normal forms and (exists-st)(forall-st)(exists-st)
  // formulas are accepted; anything else is UnsupportedShape.
  static PointProperty formula(Formula f, std::string hole = "a");

  bool is_set() const { return !prop_.has_value(); }
  const std::string& set_var() const { return set_var_; }
  const std::string& hole() const { return hole_; }
  const std::optional<Formula>& prop() const { return prop_; }

  Formula member(const Term& x) const;
  PointProperty negated() const;

 private:
  std::string set_var_;
  std::optional<Formula> prop_;
  std::string hole_;
};

enum class LoebVariant { kFirst = 1, kSecond = 2 };

// A set of grid points given by membership and non-membership formulas.
struct PointSet {
  std::function<Formula(const Term&)> member;
  std::function<Formula(const Term&)> non_member;
};

PointSet grid_set(const Term& d);
PointSet st_preimage(const PointProperty& a, LoebVariant v = LoebVariant::kFirst);

Formula approx(const Term& a, const Term& b, const std::string& n = "n");
Formula not_approx(const Term& a, const Term& b, const std::string& n = "n");
// a < b or a ~ b
Formula almost_leq(const Term& a, const Term& b, const std::string& n = "n");

// |L*(B)| <= 1/k
Formula grid_measure_atom(const Term& b, const Term& k);
// L*(B) ~ 0
Formula measure_zero(const Term& b, const std::string& k = "k");
// C almost a subset of D: (forall E)(E subset C \ D -> L*(E) ~ 0)
Formula almost_subset_formula(const Term& c, const PointSet& d,
                              const std::string& e_set = "E",
                              const std::string& e = "e");

Formula st_preimage_membership(const Term& b, const PointProperty& a);
Formula st_preimage2_membership(const Term& b, const PointProperty& a);

// (forall e in E)(e in B and |a - e| > 1/l)
Formula a0_template(const Term& a, const Term& e_set, const Term& b, const Term& l);
// (forall E)(exists a in b)(a in A and (A0(a, E, B, g(a)) -> |L*(E)| <= 1/k))
Formula b0_template(const Term& b_set, const Term& k, const Term& g,
                    const Term& b, const PointProperty& a);

// L*(A) ~ 0, unfolded.
Formula loeb_zero_formula(const PointProperty& a, LoebVariant v);
NormalizeResult loeb_zero_normal_form(const PointProperty& a, LoebVariant v);
// The property holds almost everywhere: L*({a : not P(a)}) ~ 0.
Formula almost_everywhere_formula(const PointProperty& p, LoebVariant v);

}  // namespace stnf

#endif  // STNF_LOEB_HPP_
