#include <doctest.h>

#include <random>
#include <vector>

#include "linkinv/laurent.hpp"

using namespace linkinv;

namespace {

LaurentPoly make(int nv, const std::vector<std::pair<Exponents, long long>>& terms) {
  LaurentPoly p(nv);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly random_poly(std::mt19937& rng, int nv, int max_terms = 4, int max_exp = 3,
                        int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  LaurentPoly p(nv);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e(nv);
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

LaurentPoly random_nonzero(std::mt19937& rng, int nv) {
  for (;;) {
    LaurentPoly p = random_poly(rng, nv);
    if (!p.is_zero()) return p;
  }
}

LaurentPoly random_unit(std::mt19937& rng, int nv) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  Exponents e(nv);
  for (auto& x : e) x = exp(rng);
  return LaurentPoly::monomial(nv, e, sign(rng) ? 1 : -1);
}

}  // namespace

TEST_CASE("terms iterate in descending lexicographic order") {
  const LaurentPoly p = make(2, {{{0, 1}, 2}, {{1, -1}, 3}, {{-1, 2}, 5}, {{1, 0}, 7}});
  Exponents prev;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) CHECK(e < prev);
    prev = e;
    first = false;
  }
  CHECK(p.term_count() == 4);
}

TEST_CASE("add_term accumulates and cancels") {
  LaurentPoly p(1);
  p.add_term({2}, 3);
  p.add_term({2}, -3);
  CHECK(p.is_zero());
  p.add_term({1}, 0);
  CHECK(p.is_zero());
  p.add_term({0}, 1);
  p.add_term({0}, 1);
  CHECK(p.coefficient({0}) == 2);
}

TEST_CASE("factories and leading term") {
  CHECK(LaurentPoly::zero(2).is_zero());
  CHECK(LaurentPoly::constant(1, 4).coefficient({0}) == 4);
  const LaurentPoly t2 = LaurentPoly::variable(3, 1);
  CHECK(t2.coefficient({0, 1, 0}) == 1);
  CHECK(LaurentPoly::variable(1, 0, -2).coefficient({-2}) == 1);
  CHECK_THROWS_AS((void)LaurentPoly::variable(2, 5), arity_error);

  const Monomial lt = make(1, {{{3}, -2}, {{0}, 1}}).leading_term();
  CHECK(lt.exponents == Exponents{3});
  CHECK(lt.coefficient == -2);
  CHECK_THROWS_AS((void)LaurentPoly::zero(1).leading_term(), domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7001);
  for (int iter = 0; iter < 300; ++iter) {
    const int nv = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly a = random_poly(rng, nv);
    const LaurentPoly b = random_poly(rng, nv);
    const LaurentPoly c = random_poly(rng, nv);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(sub(a, a).is_zero());
    CHECK(add(a, neg(a)).is_zero());
  }
}

TEST_CASE("arity mismatches are rejected") {
  const LaurentPoly a(1);
  const LaurentPoly b(2);
  CHECK_THROWS_AS((void)add(a, b), arity_error);
  CHECK_THROWS_AS((void)mul(a, b), arity_error);
}

TEST_CASE("exact division fixtures") {
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  // (t^2 - 1) / (t - 1) = t + 1
  CHECK(exact_div(sub(mul(t, t), one), sub(t, one)) == add(t, one));
  // Laurent operands: (t^-1 - t^-2) / t^-1 = 1 - t^-1
  const LaurentPoly a = make(1, {{{-1}, 1}, {{-2}, -1}});
  const LaurentPoly b = make(1, {{{-1}, 1}});
  CHECK(exact_div(a, b) == make(1, {{{0}, 1}, {{-1}, -1}}));
  CHECK(exact_div(LaurentPoly::zero(1), b).is_zero());

  CHECK_THROWS_AS((void)exact_div(add(mul(t, t), one), add(t, one)), non_divisible_error);
  CHECK_THROWS_AS((void)exact_div(mul(t, Integer(2)), mul(t, Integer(3))), non_divisible_error);
  CHECK_THROWS_AS((void)exact_div(t, LaurentPoly::zero(1)), domain_error);
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(7002);
  for (int iter = 0; iter < 500; ++iter) {
    const int nv = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly a = random_poly(rng, nv);
    const LaurentPoly b = random_nonzero(rng, nv);
    CHECK(exact_div(mul(a, b), b) == a);
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  // t -> t^2 on t + 1
  CHECK(substitute(add(t, one), {LaurentPoly::variable(1, 0, 2)}) ==
        add(LaurentPoly::variable(1, 0, 2), one));

  std::mt19937 rng(7003);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly a = random_poly(rng, 2, 3, 2, 3);
    LaurentPoly b = random_poly(rng, 2, 3, 2, 3);
    // Nonnegative exponents so arbitrary (non-unit) images are allowed.
    LaurentPoly a2(2);
    for (const auto& [e, c] : a.terms()) a2.add_term({std::abs(e[0]), std::abs(e[1])}, c);
    LaurentPoly b2(2);
    for (const auto& [e, c] : b.terms()) b2.add_term({std::abs(e[0]), std::abs(e[1])}, c);
    const std::vector<LaurentPoly> images{random_poly(rng, 2, 2, 1, 2),
                                          random_poly(rng, 2, 2, 1, 2)};
    CHECK(substitute(mul(a2, b2), images) ==
          mul(substitute(a2, images), substitute(b2, images)));
    CHECK(substitute(add(a2, b2), images) ==
          add(substitute(a2, images), substitute(b2, images)));
  }
}

TEST_CASE("substitute handles negative exponents only for unit images") {
  const LaurentPoly p = make(1, {{{-2}, 3}});
  // t -> t1*t2 is a unit monomial: t^-2 -> t1^-2 t2^-2
  const LaurentPoly im = LaurentPoly::monomial(2, {1, 1}, 1);
  CHECK(substitute(p, {im}) == make(2, {{{-2, -2}, 3}}));

  CHECK_THROWS_AS((void)substitute(p, {LaurentPoly::constant(1, 2)}), domain_error);
  const LaurentPoly two_terms = make(1, {{{1}, 1}, {{0}, 1}});
  CHECK_THROWS_AS((void)substitute(p, {two_terms}), domain_error);
  CHECK_THROWS_AS((void)substitute(p, {im, im}), arity_error);
}

TEST_CASE("determinant fixtures") {
  const LaurentPoly t1 = LaurentPoly::variable(2, 0);
  const LaurentPoly t2 = LaurentPoly::variable(2, 1);
  const LaurentPoly one = LaurentPoly::constant(2, 1);

  CHECK(det({{t1}}) == t1);
  // [[t1, 1], [1, t2]] -> t1 t2 - 1
  CHECK(det({{t1, one}, {one, t2}}) == sub(mul(t1, t2), one));
  // Repeated rows are singular.
  CHECK(det({{t1, t2}, {t1, t2}}).is_zero());
  CHECK_THROWS_AS((void)det({{t1, t2}}), domain_error);
}

TEST_CASE("cofactor and Bareiss determinants agree") {
  std::mt19937 rng(7004);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 4);
    PolyMatrix m(n, std::vector<LaurentPoly>());
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m[r].push_back(random_poly(rng, 2, 2, 1, 3));
    }
    CHECK(det_cofactor(m) == det_bareiss(m));
    CHECK(det(m) == det_bareiss(m));
  }
}

TEST_CASE("Bareiss handles zero pivots and zero columns") {
  const LaurentPoly z = LaurentPoly::zero(1);
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  // Zero in the pivot position forces a row swap (sign tracked).
  const PolyMatrix swap{{z, one, z}, {one, z, z}, {z, z, t}};
  CHECK(det_bareiss(swap) == neg(t));
  CHECK(det_cofactor(swap) == neg(t));
  // An all-zero column kills the determinant.
  const PolyMatrix zc{{z, one, one}, {z, t, one}, {z, one, t}};
  CHECK(det_bareiss(zc).is_zero());
}

TEST_CASE("normalize_symmetric fixtures") {
  const LaurentPoly t = LaurentPoly::variable(1, 0);
  const LaurentPoly one = LaurentPoly::constant(1, 1);

  CHECK(normalize_symmetric(neg(t)) == one);
  // t^2 - t + 1 -> t - 1 + t^-1
  const LaurentPoly tref = make(1, {{{2}, 1}, {{1}, -1}, {{0}, 1}});
  const LaurentPoly sym = make(1, {{{1}, 1}, {{0}, -1}, {{-1}, 1}});
  CHECK(normalize_symmetric(tref) == sym);
  CHECK(normalize_symmetric(mul(tref, make(1, {{{5}, -1}}))) == sym);
  // Non-palindromic support gets centered with a positive leading coefficient.
  CHECK(normalize_symmetric(make(1, {{{2}, 1}, {{1}, 2}})) == make(1, {{{1}, 1}, {{0}, 2}}));
  CHECK(normalize_symmetric(make(1, {{{2}, -1}, {{1}, -2}})) == make(1, {{{1}, 1}, {{0}, 2}}));
  CHECK(normalize_symmetric(LaurentPoly::zero(1)).is_zero());
}

TEST_CASE("normalize_symmetric is idempotent and unit-invariant") {
  std::mt19937 rng(7005);
  for (int iter = 0; iter < 300; ++iter) {
    const int nv = 1 + static_cast<int>(rng() % 2);
    const LaurentPoly p = random_poly(rng, nv);
    const LaurentPoly n1 = normalize_symmetric(p);
    CHECK(normalize_symmetric(n1) == n1);
    CHECK(normalize_symmetric(mul(p, random_unit(rng, nv))) == n1);
  }
}

TEST_CASE("equal_up_to_units") {
  std::mt19937 rng(7006);
  for (int iter = 0; iter < 200; ++iter) {
    const int nv = 1 + static_cast<int>(rng() % 2);
    const LaurentPoly p = random_nonzero(rng, nv);
    CHECK(equal_up_to_units(p, mul(p, random_unit(rng, nv))));
    CHECK_FALSE(equal_up_to_units(p, mul(p, Integer(2))));
  }
  CHECK(equal_up_to_units(LaurentPoly::zero(1), LaurentPoly::zero(1)));
  CHECK_FALSE(equal_up_to_units(LaurentPoly::zero(1), LaurentPoly::constant(1, 1)));
}

TEST_CASE("mirror, shift, specialization, remap") {
  const LaurentPoly p = make(2, {{{1, 2}, 3}, {{0, -1}, -1}});
  CHECK(mirror(p) == make(2, {{{-1, -2}, 3}, {{0, 1}, -1}}));
  CHECK(shift(p, {1, 0}) == make(2, {{{2, 2}, 3}, {{1, -1}, -1}}));
  // t2 -> 1 drops the slot.
  CHECK(set_variable_to_one(p, 1) == make(1, {{{1}, 3}, {{0}, -1}}));
  CHECK(set_variable_to_one(p, 0) == make(1, {{{2}, 3}, {{-1}, -1}}));
  // Scatter one variable into slot 1 of a 2-variable ring.
  const LaurentPoly q = make(1, {{{2}, 5}, {{0}, 1}});
  CHECK(remap_variables(q, 2, {1}) == make(2, {{{0, 2}, 5}, {{0, 0}, 1}}));
  CHECK_THROWS_AS((void)remap_variables(q, 2, {3}), arity_error);
}

TEST_CASE("to_string fixtures") {
  CHECK(to_string(LaurentPoly::zero(2)) == "0");
  CHECK(to_string(LaurentPoly::constant(1, -3)) == "-3");
  const LaurentPoly tref = make(1, {{{2}, 1}, {{1}, -1}, {{0}, 1}});
  CHECK(to_string(tref) == "t1^2 - t1 + 1");
  CHECK(to_string(make(2, {{{2, -1}, 3}, {{0, 1}, 1}})) == "3*t1^2*t2^-1 + t2");
  CHECK(to_string(make(1, {{{1}, -1}, {{0}, 1}})) == "-t1 + 1");
}

TEST_CASE("json round trip") {
  const LaurentPoly tref = make(1, {{{2}, 1}, {{1}, -1}, {{0}, 1}});
  CHECK(to_json_text(tref) == R"({"vars":1,"terms":[[2,1],[1,-1],[0,1]]})");
  CHECK(laurent_from_json_text(to_json_text(tref)) == tref);

  // Coefficients beyond 64 bits survive via decimal strings.
  LaurentPoly big(2);
  big.add_term({1, -4}, Integer("1267650600228229401496703205376"));
  big.add_term({0, 0}, -7);
  CHECK(laurent_from_json_text(to_json_text(big)) == big);

  std::mt19937 rng(7007);
  for (int iter = 0; iter < 200; ++iter) {
    const LaurentPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    CHECK(laurent_from_json_text(to_json_text(p)) == p);
  }

  CHECK_THROWS_AS((void)laurent_from_json_text("{"), parse_error);
  CHECK_THROWS_AS((void)laurent_from_json_text(R"({"vars":1})"), parse_error);
  CHECK_THROWS_AS((void)laurent_from_json_text(R"({"vars":1,"terms":[[1]]})"), parse_error);
}
