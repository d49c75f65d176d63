#include "linkinv/alexander.hpp"

#include <numeric>

namespace linkinv {

std::string to_string(AlexanderRoute route) {
  switch (route) {
    case AlexanderRoute::MinorDivision: return "minor";
    case AlexanderRoute::Burau: return "burau";
    case AlexanderRoute::ClosedForm: return "closed-form";
  }
  return "?";
}

LaurentPoly alexander_from_presentation(const GroupPresentation& pres, int dropped_column) {
  pres.validate();
  if (!pres.has_coloring()) throw domain_error("alexander computation needs a coloring");
  if (dropped_column < 0 || dropped_column >= pres.num_generators) {
    throw domain_error("dropped column out of range");
  }
  const int n = pres.num_components();

  if (pres.relators.empty()) {
    // Free group: unknot convention Delta = 1 (rank 1); higher rank has no
    // square minor and the convention does not apply.
    if (pres.num_generators != 1) {
      throw domain_error("presentation without relators is not a knot-closure presentation");
    }
    return LaurentPoly::constant(n, 1);
  }

  const PolyMatrix m = alexander_matrix(pres);
  if (m.size() + 1 != static_cast<std::size_t>(pres.num_generators)) {
    throw domain_error("alexander minor needs exactly generators-1 relators");
  }

  PolyMatrix minor(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (int j = 0; j < pres.num_generators; ++j) {
      if (j != dropped_column) minor[r].push_back(m[r][j]);
    }
  }
  const LaurentPoly d = det(minor);

  if (n == 1) return d;
  const LaurentPoly divisor =
      sub(LaurentPoly::variable(n, pres.coloring[dropped_column]), LaurentPoly::constant(n, 1));
  return exact_div(d, divisor);
}

AlexanderResult alexander_from_braid(const BraidWord& b) {
  const GroupPresentation pres = closure_presentation(b);
  AlexanderResult out;
  out.num_components = pres.num_components();
  out.route = AlexanderRoute::MinorDivision;
  out.poly = normalize_symmetric(alexander_from_presentation(pres, 0));
  return out;
}

namespace {

PolyMatrix identity_matrix(std::size_t n, int nv) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(nv)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly::constant(nv, 1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const int nv = a[0][0].num_vars();
  PolyMatrix out(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(nv)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = add(out[i][j], mul(a[i][k], b[k][j]));
      }
    }
  }
  return out;
}

// Reduced Burau matrix of one letter: the unreduced row action on e_0..e_{k-1}
// descends to the quotient by the fixed vector (1,...,1) with basis
// e_0,...,e_{k-2}.
PolyMatrix burau_letter(int letter, int k) {
  const int i = std::abs(letter) - 1;
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly tinv = LaurentPoly::variable(1, 0, -1);
  const LaurentPoly one = LaurentPoly::constant(1, 1);

  PolyMatrix full = identity_matrix(k, 1);
  if (letter > 0) {
    full[i][i] = sub(one, t);
    full[i][i + 1] = t;
    full[i + 1][i] = one;
    full[i + 1][i + 1] = LaurentPoly::zero(1);
  } else {
    full[i][i] = LaurentPoly::zero(1);
    full[i][i + 1] = one;
    full[i + 1][i] = tinv;
    full[i + 1][i + 1] = sub(one, tinv);
  }
  PolyMatrix reduced(k - 1, std::vector<LaurentPoly>(k - 1, LaurentPoly::zero(1)));
  for (int r = 0; r + 1 < k; ++r) {
    for (int j = 0; j + 1 < k; ++j) {
      reduced[r][j] = sub(full[r][j], full[k - 1][j]);
    }
  }
  return reduced;
}

}  // namespace

LaurentPoly alexander_burau(const BraidWord& b) {
  const ClosureInfo info = closure_info(b);
  if (info.num_components() != 1) {
    throw domain_error("burau route applies to knot closures only");
  }
  const int k = b.strands;
  if (k == 1) return LaurentPoly::constant(1, 1);

  PolyMatrix m = identity_matrix(k - 1, 1);
  for (int letter : b.letters) m = mat_mul(m, burau_letter(letter, k));

  PolyMatrix diff = identity_matrix(k - 1, 1);
  for (int r = 0; r + 1 < k; ++r) {
    for (int j = 0; j + 1 < k; ++j) diff[r][j] = sub(diff[r][j], m[r][j]);
  }
  const LaurentPoly d = det(diff);

  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  const LaurentPoly num = mul(d, sub(t, one));
  const LaurentPoly den = sub(LaurentPoly::variable(1, 0, k), one);
  return normalize_symmetric(exact_div(num, den));
}

LaurentPoly torus_knot_alexander(int p, int q) {
  if (p < 1 || q < 1) throw domain_error("torus knot parameters must be positive");
  if (std::gcd(p, q) != 1) {
    throw domain_error("torus knot parameters must be coprime, got (" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
  }
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  auto tpow_minus_1 = [&](int e) { return sub(LaurentPoly::variable(1, 0, e), one); };
  if (p == 1 || q == 1) return one;
  const LaurentPoly num = mul(tpow_minus_1(p * q), tpow_minus_1(1));
  const LaurentPoly den = mul(tpow_minus_1(p), tpow_minus_1(q));
  return normalize_symmetric(exact_div(num, den));
}

LaurentPoly cable_alexander(const LaurentPoly& companion, int p, int q) {
  if (companion.num_vars() != 1) throw arity_error("companion polynomial must be one-variable");
  if (p < 1) throw domain_error("cable parameter p must be positive");
  if (std::gcd(p, std::abs(q)) != 1) throw domain_error("cable parameters must be coprime");
  const LaurentPoly comp_at_tp = substitute(companion, {LaurentPoly::variable(1, 0, p)});
  return normalize_symmetric(mul(comp_at_tp, torus_knot_alexander(p, std::abs(q))));
}

LaurentPoly gamma_alexander(const FamilyDescriptor& fam, const LaurentPoly* companion) {
  if (fam.kind == FamilyKind::TrefoilFiber) {
    return torus_knot_alexander(fam.p, fam.p + 1);
  }
  const LaurentPoly comp = companion ? *companion : torus_knot_alexander(2, 3);
  return cable_alexander(comp, fam.p, 1);
}

LaurentPoly torres_specialize(const LaurentPoly& link_poly, int component) {
  if (link_poly.num_vars() < 2) {
    throw arity_error("torres specialization needs a polynomial in >= 2 variables");
  }
  return set_variable_to_one(link_poly, component);
}

LaurentPoly torres_expected(const std::vector<int>& linking, const LaurentPoly& sublink_delta) {
  const int n = static_cast<int>(linking.size());
  if (n < 1) throw arity_error("sublink must keep at least one component");
  if (sublink_delta.num_vars() != n) {
    throw arity_error("sublink polynomial arity does not match linking vector");
  }
  const LaurentPoly one = LaurentPoly::constant(n, 1);
  if (n == 1) {
    const LaurentPoly num = sub(LaurentPoly::variable(1, 0, linking[0]), one);
    const LaurentPoly den = sub(LaurentPoly::variable(1, 0), one);
    return mul(exact_div(num, den), sublink_delta);
  }
  Exponents e(linking.begin(), linking.end());
  const LaurentPoly factor = sub(LaurentPoly::monomial(n, e, 1), one);
  return mul(factor, sublink_delta);
}

LaurentPoly family_reduced_delta(const FamilyDescriptor& fam, bool three_component,
                                 const LaurentPoly* companion) {
  const LaurentPoly gamma = gamma_alexander(fam, companion);
  if (!three_component) {
    return torres_expected({fam.lk_gamma_host}, gamma);
  }
  if (fam.lk_gamma_meridian != 1) {
    throw domain_error(
        "three-component reduction needs lk(gamma, M) = 1; other values leave "
        "Delta_{M u gamma} undetermined by the descriptor");
  }
  // (t2^{lk(K,M)} t3^{lk(K,gamma)} - 1) * Delta_{M u gamma}(t2, t3) with
  // lk(K,M) = 1, lk(K,gamma) = 0, Delta_{M u gamma} = Delta_gamma(t3).
  const LaurentPoly factor = sub(LaurentPoly::variable(2, 0), LaurentPoly::constant(2, 1));
  const LaurentPoly gamma_t3 = remap_variables(gamma, 2, {1});
  return mul(factor, gamma_t3);
}

std::size_t nonzero_term_count(const LaurentPoly& p) { return p.term_count(); }

}  // namespace linkinv
