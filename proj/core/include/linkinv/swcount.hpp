#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkinv/alexander.hpp"
#include "linkinv/braid.hpp"
#include "linkinv/laurent.hpp"
#include "linkinv/surgery.hpp"

namespace linkinv {

// SW_{X_L} = (prod_i SW_i) * Delta_L(t_1^2, ..., t_n^2), the product formula
// for link surgery manifolds (valid for n > 1).
struct SWPolynomial {
  LaurentPoly poly;
  std::string provenance;  // descriptor and Delta summary
};

SWPolynomial sw_polynomial(const LinkSurgeryDescriptor& desc, const LaurentPoly& delta);

// Number of basic classes = number of nonzero terms.
std::size_t basic_class_count(const SWPolynomial& sw);

struct BetaRow {
  int p = 1;
  std::string gamma;              // knot type label of gamma_p
  std::size_t lower_bound = 0;    // Torres lower bound on beta_p
  std::optional<std::size_t> beta;  // exact count when the full Delta is known
};

struct BetaTable {
  std::vector<BetaRow> rows;
};

// Supplies the full multivariable Delta of the family link for a given p when
// one is computable (e.g. from an explicit braid); absent otherwise.
using DeltaProvider = std::function<std::optional<LaurentPoly>(int p)>;

// Sweeps p over [p_min, p_max]. The lower bound is the term count of
// Delta_{gamma_p}, doubled for the three-component reduction. When a provider
// returns the full Delta, beta_p = basic_class_count of the product formula
// with all relative SW inputs 1 (or those of *host when given).
BetaTable beta_sweep(FamilyKind kind, int p_min, int p_max, bool three_component = false,
                     const LaurentPoly* companion = nullptr,
                     const DeltaProvider& full_delta = {},
                     const LinkSurgeryDescriptor* host = nullptr);

}  // namespace linkinv
