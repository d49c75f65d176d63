#pragma once

#include <string>
#include <vector>

#include "linkinv/braid.hpp"
#include "linkinv/laurent.hpp"

namespace linkinv {

// Freely reduced word in a free group. Letters are (generator index 0-based,
// exponent +-1); the reduction invariant is maintained by the builder API.
struct FreeWord {
  std::vector<std::pair<int, int>> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  // Appends one letter, cancelling against the current tail.
  void append(int gen, int exp);

  bool operator==(const FreeWord&) const = default;
};

FreeWord word_from_letters(const std::vector<std::pair<int, int>>& letters);
// Signed 1-based letters, e.g. {1, 2, -1} = x1 x2 x1^-1.
FreeWord word_from_signed(const std::vector<int>& signed_letters);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, int n);
// Conjugate u w u^-1.
FreeWord conjugate(const FreeWord& u, const FreeWord& w);

// Finitely presented group with the bookkeeping the pipeline needs: a
// component coloring of the generators and, when known, distinguished
// meridian/longitude words per component.
struct GroupPresentation {
  int num_generators = 0;
  std::vector<FreeWord> relators;
  std::vector<int> coloring;         // generator -> component index; empty if absent
  std::vector<FreeWord> meridians;   // one per component when present
  std::vector<FreeWord> longitudes;  // one per component when present

  bool has_coloring() const { return !coloring.empty(); }
  int num_components() const;
  void validate() const;  // throws domain_error on inconsistent data
};

// Images of the free generators under one Artin generator: sigma_i maps
// x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i; the inverse letter uses the
// inverse substitution. `letter` is signed 1-based.
std::vector<FreeWord> artin_generator_images(int letter, int strands);

// w with every generator replaced by its image.
FreeWord apply_endomorphism(const std::vector<FreeWord>& images, const FreeWord& w);

// Action of the whole braid word, composed left to right: the image under
// sigma_{l1} ... sigma_{lm} is phi_{lm}( ... phi_{l1}(x) ... ).
std::vector<FreeWord> artin_action(const BraidWord& b);

// Presentation of the fundamental group of the closure complement:
// generators x_1..x_k, relators x_j^-1 beta(x_j) with the last one dropped,
// coloring from closure components, and per-component meridian/longitude.
// The longitude is the conjugator word accumulated along the strand cycle,
// corrected by a meridian power so it abelianizes to zero on its own
// component (the 0-framed longitude).
GroupPresentation closure_presentation(const BraidWord& b);

// Abelianized Fox derivative d(w)/d(x_j) as a Laurent polynomial in one
// variable per component of the coloring.
LaurentPoly fox_derivative(const FreeWord& w, int j, const std::vector<int>& coloring,
                           int num_components);

// Abelianization t^[w] of a word (a unit monomial).
LaurentPoly abelianize_word(const FreeWord& w, const std::vector<int>& coloring,
                            int num_components);

// Matrix of abelianized Fox derivatives, (#relators) x (#generators).
PolyMatrix alexander_matrix(const GroupPresentation& p);

// Presentation text format: "gens=2; rel= 1 2 1 -2 -1 -2; color= 1 1" with
// optional "mu=" / "lambda=" entries (repeat rel/mu/lambda for several
// relators/components). Indices are signed 1-based; colors are 1-based.
GroupPresentation presentation_from_text(const std::string& text);
std::string to_text(const GroupPresentation& p);
std::string to_text(const FreeWord& w);

}  // namespace linkinv
