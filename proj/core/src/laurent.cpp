#include "linkinv/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace linkinv {

namespace {

void require_same_arity(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw arity_error("variable-count mismatch: " + std::to_string(a.num_vars()) +
                      " vs " + std::to_string(b.num_vars()));
  }
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw arity_error("negative variable count");
}

LaurentPoly LaurentPoly::zero(int num_vars) { return LaurentPoly(num_vars); }

LaurentPoly LaurentPoly::constant(int num_vars, const Integer& c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, const Exponents& exps, const Integer& c) {
  LaurentPoly p(num_vars);
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index, int power) {
  if (index < 0 || index >= num_vars) throw arity_error("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = power;
  return monomial(num_vars, e, 1);
}

Integer LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

Monomial LaurentPoly::leading_term() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
  const auto& [e, c] = *terms_.begin();
  return Monomial{c, e};
}

void LaurentPoly::add_term(const Exponents& exps, const Integer& c) {
  if (static_cast<int>(exps.size()) != num_vars_) {
    throw arity_error("exponent vector length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

LaurentPoly neg(const LaurentPoly& a) {
  LaurentPoly out(a.num_vars());
  for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
  return out;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  LaurentPoly out(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.add_term(exps_add(ea, eb), ca * cb);
    }
  }
  return out;
}

LaurentPoly mul(const LaurentPoly& a, const Integer& c) {
  LaurentPoly out(a.num_vars());
  if (c == 0) return out;
  for (const auto& [e, k] : a.terms()) out.add_term(e, k * c);
  return out;
}

LaurentPoly mirror(const LaurentPoly& p) {
  LaurentPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly shift(const LaurentPoly& p, const Exponents& delta) {
  if (static_cast<int>(delta.size()) != p.num_vars()) {
    throw arity_error("shift vector length does not match variable count");
  }
  LaurentPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) out.add_term(exps_add(e, delta), c);
  return out;
}

namespace {

// Per-variable minimum exponent over the support; p must be nonzero.
Exponents min_exponents(const LaurentPoly& p) {
  Exponents mins(p.num_vars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      mins = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    }
  }
  return mins;
}

Exponents max_exponents(const LaurentPoly& p) {
  Exponents maxs(p.num_vars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      maxs = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) maxs[i] = std::max(maxs[i], e[i]);
    }
  }
  return maxs;
}

Exponents negated(const Exponents& e) {
  Exponents out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = -e[i];
  return out;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b);
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly::zero(a.num_vars());

  // Shift both operands to honest polynomials. Divisibility is preserved: over
  // an integral domain the minimal exponent of a product is the sum of the
  // factors' minimal exponents, so the shifted quotient has no negative
  // exponents either.
  const Exponents ma = min_exponents(a);
  const Exponents mb = min_exponents(b);
  LaurentPoly r = shift(a, negated(ma));
  const LaurentPoly bp = shift(b, negated(mb));
  const Monomial ltb = bp.leading_term();

  LaurentPoly q(a.num_vars());
  while (!r.is_zero()) {
    const Monomial ltr = r.leading_term();
    Exponents de = exps_sub(ltr.exponents, ltb.exponents);
    for (int x : de) {
      if (x < 0) throw non_divisible_error("leading-term exponent underflow");
    }
    if (ltr.coefficient % ltb.coefficient != 0) {
      throw non_divisible_error("leading coefficient not divisible");
    }
    const Integer qc = ltr.coefficient / ltb.coefficient;
    LaurentPoly m = LaurentPoly::monomial(a.num_vars(), de, qc);
    q = add(q, m);
    r = sub(r, mul(m, bp));
  }
  // Undo the shifts: a = t^ma * a', b = t^mb * b', so q_actual = t^(ma-mb) * q.
  return shift(q, exps_sub(ma, mb));
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  if (static_cast<int>(images.size()) != p.num_vars()) {
    throw arity_error("substitute needs exactly one image per variable");
  }
  int target = 0;
  if (!images.empty()) {
    target = images[0].num_vars();
    for (const auto& im : images) {
      if (im.num_vars() != target) throw arity_error("images disagree on variable count");
    }
  }

  // Per-variable power cache; negative powers require invertible images.
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  const auto power = [&](int var, int e) -> const LaurentPoly& {
    auto it = cache[var].find(e);
    if (it != cache[var].end()) return it->second;
    LaurentPoly base = images[var];
    if (e < 0) {
      if (base.term_count() != 1 || !base.leading_term().is_unit()) {
        throw domain_error("negative exponent requires an invertible (unit monomial) image");
      }
      const Monomial lt = base.leading_term();
      base = LaurentPoly::monomial(target, negated(lt.exponents), lt.coefficient);
    }
    LaurentPoly val = LaurentPoly::constant(target, 1);
    for (int k = 0; k < std::abs(e); ++k) val = mul(val, base);
    return cache[var].emplace(e, std::move(val)).first->second;
  };

  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly prod = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) prod = mul(prod, power(static_cast<int>(i), e[i]));
    }
    out = add(out, prod);
  }
  return out;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (m.empty()) throw domain_error("determinant of an empty matrix is undefined here");
  const std::size_t n = m.size();
  int nv = m[0].empty() ? -1 : m[0][0].num_vars();
  for (const auto& row : m) {
    if (row.size() != n) throw domain_error("matrix is not square");
    for (const auto& entry : row) {
      if (nv == -1) nv = entry.num_vars();
      if (entry.num_vars() != nv) throw arity_error("matrix entries disagree on variable count");
    }
  }
}

}  // namespace

LaurentPoly det_cofactor(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  const int nv = m[0][0].num_vars();
  if (n == 1) return m[0][0];

  LaurentPoly out(nv);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i, sign = -sign) {
    if (m[i][0].is_zero()) continue;
    PolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    LaurentPoly contrib = mul(m[i][0], det_cofactor(minor));
    out = sign > 0 ? add(out, contrib) : sub(out, contrib);
  }
  return out;
}

LaurentPoly det_bareiss(const PolyMatrix& m_in) {
  require_square(m_in);
  PolyMatrix m = m_in;
  const std::size_t n = m.size();
  const int nv = m[0][0].num_vars();
  if (n == 1) return m[0][0];

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == k) return LaurentPoly::zero(nv);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = LaurentPoly::zero(nv);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : neg(m[n - 1][n - 1]);
}

LaurentPoly det(const PolyMatrix& m) {
  require_square(m);
  return m.size() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) return p;

  auto fix_sign = [](LaurentPoly q) {
    if (q.leading_term().coefficient < 0) return neg(q);
    return q;
  };

  const LaurentPoly pbar = mirror(p);
  const Monomial lp = p.leading_term();
  const Monomial lb = pbar.leading_term();
  if (abs(lp.coefficient) == abs(lb.coefficient)) {
    const Exponents e = exps_sub(lb.exponents, lp.exponents);
    const bool even = std::all_of(e.begin(), e.end(), [](int x) { return x % 2 == 0; });
    const bool same_sign = (lp.coefficient > 0) == (lb.coefficient > 0);
    if (even && same_sign && pbar == shift(p, e)) {
      Exponents half(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) half[i] = e[i] / 2;
      return fix_sign(shift(p, half));
    }
  }

  // No symmetric representative: center the support instead.
  const Exponents mins = min_exponents(p);
  const Exponents maxs = max_exponents(p);
  Exponents center(mins.size());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    // floor division, exponent sums may be negative
    int s = mins[i] + maxs[i];
    center[i] = -(s >= 0 ? s / 2 : -((-s + 1) / 2));
  }
  return fix_sign(shift(p, center));
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  const Monomial la = a.leading_term();
  const Monomial lb = b.leading_term();
  int sign;
  if (la.coefficient == lb.coefficient) {
    sign = 1;
  } else if (la.coefficient == -lb.coefficient) {
    sign = -1;
  } else {
    return false;
  }
  LaurentPoly candidate = shift(b, exps_sub(la.exponents, lb.exponents));
  if (sign < 0) candidate = neg(candidate);
  return a == candidate;
}

LaurentPoly set_variable_to_one(const LaurentPoly& p, int index) {
  if (index < 0 || index >= p.num_vars()) throw arity_error("variable index out of range");
  LaurentPoly out(p.num_vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne;
    ne.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != index) ne.push_back(e[i]);
    }
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly remap_variables(const LaurentPoly& p, int new_num_vars, const std::vector<int>& where) {
  if (static_cast<int>(where.size()) != p.num_vars()) {
    throw arity_error("remap vector length does not match variable count");
  }
  std::vector<bool> used(new_num_vars, false);
  for (int w : where) {
    if (w < 0 || w >= new_num_vars || used[w]) throw arity_error("remap target invalid or repeated");
    used[w] = true;
  }
  LaurentPoly out(new_num_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(new_num_vars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string part = "t" + std::to_string(i + 1);
      if (e[i] != 1) part += "^" + std::to_string(e[i]);
      parts.push_back(std::move(part));
    }
    if (parts.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

std::string to_json_text(const LaurentPoly& p) {
  nlohmann::ordered_json doc;
  doc["vars"] = p.num_vars();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term = nlohmann::ordered_json::array();
    for (int x : e) term.push_back(x);
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      term.push_back(static_cast<std::int64_t>(c));
    } else {
      term.push_back(c.str());
    }
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

LaurentPoly laurent_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("terms") ||
      !doc["vars"].is_number_integer() || !doc["terms"].is_array()) {
    throw parse_error("polynomial JSON must be {\"vars\": n, \"terms\": [...]}");
  }
  const int nv = doc["vars"].get<int>();
  if (nv < 0) throw parse_error("vars must be nonnegative");
  LaurentPoly out(nv);
  for (const auto& term : doc["terms"]) {
    if (!term.is_array() || static_cast<int>(term.size()) != nv + 1) {
      throw parse_error("each term must be an array of vars exponents plus a coefficient");
    }
    Exponents e(nv);
    for (int i = 0; i < nv; ++i) {
      if (!term[i].is_number_integer()) throw parse_error("exponents must be integers");
      e[i] = term[i].get<int>();
    }
    const auto& cj = term[nv];
    Integer c;
    if (cj.is_number_integer()) {
      c = Integer(cj.get<std::int64_t>());
    } else if (cj.is_string()) {
      try {
        c = Integer(cj.get<std::string>());
      } catch (const std::exception&) {
        throw parse_error("coefficient string is not a decimal integer");
      }
    } else {
      throw parse_error("coefficient must be an integer or decimal string");
    }
    out.add_term(e, c);
  }
  return out;
}

}  // namespace linkinv
