#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linkinv/errors.hpp"

namespace linkinv {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

struct Monomial {
  Integer coefficient;
  Exponents exponents;

  bool is_unit() const { return coefficient == 1 || coefficient == -1; }
};

// Sparse multivariable Laurent polynomial with exact integer coefficients.
// Terms are kept in descending lexicographic order of exponent vectors; that
// order is canonical for iteration and serialization. Values are immutable
// once built (add_term is the builder hook) and safe to share across threads.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer, std::greater<Exponents>>;

  explicit LaurentPoly(int num_vars = 1);

  static LaurentPoly zero(int num_vars);
  static LaurentPoly constant(int num_vars, const Integer& c);
  static LaurentPoly monomial(int num_vars, const Exponents& exps, const Integer& c);
  static LaurentPoly variable(int num_vars, int index, int power = 1);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coefficient(const Exponents& exps) const;
  // Lexicographically largest term; throws domain_error on the zero polynomial.
  Monomial leading_term() const;

  // Accumulates c * t^exps, erasing the term if the sum cancels.
  void add_term(const Exponents& exps, const Integer& c);

  bool operator==(const LaurentPoly&) const = default;

 private:
  int num_vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const Integer& c);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a) { return neg(a); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

// Exact division in the Laurent ring; throws non_divisible_error if b does not
// divide a, and domain_error if b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Ring homomorphism determined by one image per variable. All images must share
// a variable count, which becomes the arity of the result. A variable occurring
// with negative exponents needs an invertible image (single term, coefficient
// +-1).
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

// Determinant of a square matrix. Dispatches to cofactor expansion for small
// sizes and fraction-free Bareiss elimination above that; the two paths agree
// and both are exposed for cross-checking.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
LaurentPoly det(const PolyMatrix& m);
LaurentPoly det_cofactor(const PolyMatrix& m);
LaurentPoly det_bareiss(const PolyMatrix& m);

// Multiplies by a unit +-t^a so the result is fixed by t_i -> t_i^-1 whenever
// such a representative exists; otherwise centers the exponent support. Sign
// convention: the lexicographically first term is positive.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

// True iff a = u*b for a unit monomial u = +-t^e. Decided by aligning leading
// terms, no search.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

// p with every exponent vector negated (the t_i -> t_i^-1 image).
LaurentPoly mirror(const LaurentPoly& p);

// p shifted by t^delta.
LaurentPoly shift(const LaurentPoly& p, const Exponents& delta);

// Sets variable `index` to 1 and drops that slot; the result has one variable
// fewer (minimum result arity 1 is not enforced; a 0-variable polynomial is a
// constant).
LaurentPoly set_variable_to_one(const LaurentPoly& p, int index);

// Scatter p's variables into a wider (or reordered) variable set:
// where[i] = index of old variable i in the result.
LaurentPoly remap_variables(const LaurentPoly& p, int new_num_vars, const std::vector<int>& where);

// Canonical text form, e.g. "t1^2 - t1 + 1" or "3*t1^2*t2^-1 + t2".
std::string to_string(const LaurentPoly& p);

// JSON form {"vars": n, "terms": [[e1, ..., en, coeff], ...]} with terms in
// canonical order; coefficients are JSON numbers when they fit in 64 bits and
// decimal strings otherwise. from_json accepts both.
std::string to_json_text(const LaurentPoly& p);
LaurentPoly laurent_from_json_text(const std::string& text);

}  // namespace linkinv
