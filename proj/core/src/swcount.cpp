#include "linkinv/swcount.hpp"

#include <sstream>

namespace linkinv {

SWPolynomial sw_polynomial(const LinkSurgeryDescriptor& desc, const LaurentPoly& delta) {
  desc.validate();
  const int n = desc.num_components();
  if (n < 2) throw domain_error("the SW product formula requires n >= 2 components");
  if (delta.num_vars() != n) {
    throw arity_error("Delta arity does not match the descriptor component count");
  }

  std::vector<LaurentPoly> squares;
  squares.reserve(n);
  for (int i = 0; i < n; ++i) squares.push_back(LaurentPoly::variable(n, i, 2));
  LaurentPoly out = substitute(delta, squares);

  if (!desc.relative_sw.empty()) {
    for (int i = 0; i < n; ++i) {
      out = mul(out, remap_variables(desc.relative_sw[i], n, {i}));
    }
  }

  std::ostringstream prov;
  prov << "n=" << n << " delta_terms=" << delta.term_count();
  return SWPolynomial{std::move(out), prov.str()};
}

std::size_t basic_class_count(const SWPolynomial& sw) { return sw.poly.term_count(); }

namespace {

std::string gamma_label(FamilyKind kind, int p) {
  if (kind == FamilyKind::TrefoilFiber) {
    return "T(" + std::to_string(p) + "," + std::to_string(p + 1) + ")";
  }
  return "(" + std::to_string(p) + ",1)-cable";
}

}  // namespace

BetaTable beta_sweep(FamilyKind kind, int p_min, int p_max, bool three_component,
                     const LaurentPoly* companion, const DeltaProvider& full_delta,
                     const LinkSurgeryDescriptor* host) {
  if (p_min < 1 || p_max < p_min) throw domain_error("empty or invalid p range");

  BetaTable table;
  for (int p = p_min; p <= p_max; ++p) {
    const FamilyDescriptor fam = cable_family_descriptor(p, kind);
    BetaRow row;
    row.p = p;
    row.gamma = gamma_label(kind, p);
    const std::size_t gamma_terms = nonzero_term_count(gamma_alexander(fam, companion));
    row.lower_bound = three_component ? 2 * gamma_terms : gamma_terms;

    if (full_delta) {
      if (const std::optional<LaurentPoly> delta = full_delta(p)) {
        LinkSurgeryDescriptor trivial;
        const LinkSurgeryDescriptor* d = host;
        if (d == nullptr) {
          const int n = delta->num_vars();
          trivial.linking.assign(n, std::vector<int>(n, 0));
          trivial.m.assign(n, 1);
          d = &trivial;
        }
        row.beta = basic_class_count(sw_polynomial(*d, *delta));
        if (*row.beta < row.lower_bound) {
          throw domain_error("internal: beta_p fell below its Torres lower bound");
        }
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace linkinv
