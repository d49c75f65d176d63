#include "linkinv/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace linkinv {

void LinkSurgeryDescriptor::validate() const {
  const int n = num_components();
  for (const auto& row : linking) {
    if (static_cast<int>(row.size()) != n) throw domain_error("linking matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (linking[i][i] != 0) throw domain_error("linking matrix must have zero diagonal");
    for (int j = 0; j < n; ++j) {
      if (linking[i][j] != linking[j][i]) throw domain_error("linking matrix must be symmetric");
    }
  }
  if (static_cast<int>(m.size()) != n) {
    throw arity_error("fiber class m needs one entry per component");
  }
  if (!relative_sw.empty()) {
    if (static_cast<int>(relative_sw.size()) != n) {
      throw arity_error("relative SW list needs one polynomial per component");
    }
    for (const auto& sw : relative_sw) {
      if (sw.num_vars() != 1) throw arity_error("relative SW polynomials are one-variable");
    }
  }
}

SlopeData slope(const LinkSurgeryDescriptor& desc, int i) {
  desc.validate();
  const int n = desc.num_components();
  if (i < 0 || i >= n) throw domain_error("component index out of range");

  SlopeData s;
  s.component = i;
  long long mu = 0;
  for (int j = 0; j < n; ++j) {
    if (j != i) mu -= static_cast<long long>(desc.m[j]) * desc.linking[i][j];
  }
  s.mu_coeff = mu;
  s.lambda_coeff = desc.m[i];
  if (s.mu_coeff == 0 && s.lambda_coeff == 0) {
    throw fiber_disjoint_error("fiber class is disjoint from component " + std::to_string(i + 1));
  }
  s.divisibility = std::gcd(std::abs(s.mu_coeff), std::abs(s.lambda_coeff));
  s.sigma = {s.mu_coeff / s.divisibility, s.lambda_coeff / s.divisibility};
  return s;
}

bool TorusClass::is_nullhomologous() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](int c) { return c == 0; });
}

TorusClass torus_class(const std::vector<int>& gamma_linking) {
  return TorusClass{gamma_linking};
}

TorusClass torus_class(const LinkSurgeryDescriptor& desc, const std::vector<int>& gamma_linking) {
  if (static_cast<int>(gamma_linking.size()) != desc.num_components()) {
    throw arity_error("linking vector length must equal the component count");
  }
  return TorusClass{gamma_linking};
}

bool classes_equal(const TorusClass& a, const TorusClass& b) {
  return a.coefficients == b.coefficients;
}

}  // namespace linkinv
