#pragma once

#include <utility>
#include <vector>

#include "linkinv/laurent.hpp"

namespace linkinv {

// Combinatorial data of a link surgery manifold: the linking matrix of L, the
// fiber class m (Poincare dual of Sigma), and one relative SW polynomial per
// component (one formal variable each, defaulting to 1, the E(1) piece).
struct LinkSurgeryDescriptor {
  std::vector<std::vector<int>> linking;  // symmetric, zero diagonal
  std::vector<int> m;
  std::vector<LaurentPoly> relative_sw;   // empty = all 1

  int num_components() const { return static_cast<int>(linking.size()); }
  void validate() const;  // throws domain_error / arity_error
};

// Surgery slope on boundary component i:
//   d_i sigma_i = -(sum_{j != i} m_j lk(K_i, K_j)) mu(K_i) + m_i lambda(K_i).
struct SlopeData {
  int component = 0;
  long long mu_coeff = 0;
  long long lambda_coeff = 0;
  long long divisibility = 1;               // gcd(|mu|, |lambda|)
  std::pair<long long, long long> sigma{0, 1};  // primitive (mu, lambda)/d
};

// Throws fiber_disjoint_error when both coefficients vanish.
SlopeData slope(const LinkSurgeryDescriptor& desc, int i);

// Homology class of S^1 x gamma in the basis [S^1 x mu(K_j)]: the linking
// numbers verbatim.
struct TorusClass {
  std::vector<int> coefficients;

  bool is_nullhomologous() const;
};

TorusClass torus_class(const std::vector<int>& gamma_linking);
// Validates the vector length against the descriptor's component count.
TorusClass torus_class(const LinkSurgeryDescriptor& desc, const std::vector<int>& gamma_linking);

bool classes_equal(const TorusClass& a, const TorusClass& b);

}  // namespace linkinv
