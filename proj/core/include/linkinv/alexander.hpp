#pragma once

#include <cstddef>
#include <string>

#include "linkinv/braid.hpp"
#include "linkinv/fox.hpp"
#include "linkinv/laurent.hpp"

namespace linkinv {

enum class AlexanderRoute { MinorDivision, Burau, ClosedForm };
std::string to_string(AlexanderRoute route);

struct AlexanderResult {
  LaurentPoly poly;  // normalize_symmetric canonical
  int num_components = 1;
  AlexanderRoute route = AlexanderRoute::MinorDivision;
};

// General pipeline: closure presentation -> Fox matrix -> delete one column ->
// determinant; links with >= 2 components additionally divide by (t_c - 1)
// where c colors the deleted generator. The result class is independent of the
// deleted column (asserted in tests).
AlexanderResult alexander_from_braid(const BraidWord& b);

// Same computation from an explicit colored presentation, with a chosen
// deleted column. Exposed so tests can assert column independence.
LaurentPoly alexander_from_presentation(const GroupPresentation& pres, int dropped_column);

// Independent route for knot closures via the reduced Burau representation:
// Delta = det(I - Burau(b)) * (t - 1) / (t^k - 1) up to units.
LaurentPoly alexander_burau(const BraidWord& b);

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), the closed form for T(p,q).
LaurentPoly torus_knot_alexander(int p, int q);

// Satellite formula for the (p,q)-cable: Delta_companion(t^p) * Delta_{T(p,q)}.
LaurentPoly cable_alexander(const LaurentPoly& companion, int p, int q);

// Knot type of gamma_p for a family descriptor: T(p,p+1) for the trefoil-fiber
// family, the (p,1)-cable of the companion for the generic family (companion
// defaults to the trefoil).
LaurentPoly gamma_alexander(const FamilyDescriptor& fam, const LaurentPoly* companion = nullptr);

// Sets the chosen variable to 1 and drops its slot (Torres specialization,
// left-hand side).
LaurentPoly torres_specialize(const LaurentPoly& link_poly, int component);

// Torres-predicted right-hand side from sublink data after killing one
// component: for a 1-component sublink [(t^l - 1)/(t - 1)] * Delta_sub, for
// larger sublinks (prod_i t_i^{l_i} - 1) * Delta_sub, where l_i is the linking
// number of the killed component with remaining component i.
LaurentPoly torres_expected(const std::vector<int>& linking, const LaurentPoly& sublink_delta);

// The computable (Torres-reduced) polynomial of a curve family.
// Two-component K u gamma_p: Delta(1, t2) as a one-variable polynomial.
// Three-component K u M u gamma_p (gamma on the fiber, lk(K, gamma) = 0,
// lk(K, M) = 1): (t2 - 1) * Delta_gamma(t3) over (t2, t3); requires
// lk(gamma, M) = 1, the only case where Delta_{M u gamma} is determined by the
// descriptor.
LaurentPoly family_reduced_delta(const FamilyDescriptor& fam, bool three_component = false,
                                 const LaurentPoly* companion = nullptr);

std::size_t nonzero_term_count(const LaurentPoly& p);

}  // namespace linkinv
