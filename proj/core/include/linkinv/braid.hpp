#pragma once

#include <string>
#include <vector>

#include "linkinv/errors.hpp"

namespace linkinv {

// Word in the Artin generators of the braid group on `strands` strands.
// Letters are signed 1-based generator indices: +i is sigma_i, -i its inverse,
// with 1 <= i <= strands-1. The empty word is the trivial braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// Validates strand count and letter ranges; throws domain_error.
void validate(const BraidWord& b);

// Combinatorial data of the braid closure. Components are the cycles of the
// underlying permutation, indexed by their smallest strand (0-based strands).
struct ClosureInfo {
  std::vector<int> permutation;               // strand j ends at position permutation[j]
  std::vector<std::vector<int>> components;   // sorted cycles, ordered by smallest strand
  std::vector<int> component_of;              // strand -> component index
  std::vector<std::vector<int>> linking;      // lk(K_i, K_j), zero diagonal
  std::vector<int> writhe;                    // signed self-crossing count per component

  int num_components() const { return static_cast<int>(components.size()); }
};

// Walks the word tracking strand positions. lk(K_i, K_j) is half the signed
// count of crossings between strands of components i and j (the total is
// always even); writhe_i is the signed count internal to component i.
ClosureInfo closure_info(const BraidWord& b);

// (sigma_1 ... sigma_{q-1})^p on q strands; closure is the torus link T(p,q).
BraidWord torus_braid(int p, int q);

// ((sigma_1 sigma_2^-1)^3)^p on 3 strands; p = 1 closes to the Borromean
// rings, higher p to the iterated version. p = 0 is the trivial 3-strand braid.
BraidWord borromean_block_braid(int p);

// The curve-family descriptors consumed by the alexander and swcount modules.
// TrefoilFiber: gamma_p is the torus knot T(p,p+1) (the circle sum of p fiber
// copies over the trefoil), lk(gamma_p, K) = 1, lk(gamma_p, M) = q in the
// three-component variant K u M u gamma_p.
// GenericCable: gamma_p is the (p,1)-cable of an arbitrary companion K,
// lk(gamma_p, K) = 1.
enum class FamilyKind { TrefoilFiber, GenericCable };

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::TrefoilFiber;
  int p = 1;
  int lk_gamma_host = 1;      // lk(gamma_p, K)
  int lk_gamma_meridian = 1;  // lk(gamma_p, M), three-component variant only
};

FamilyDescriptor cable_family_descriptor(int p, FamilyKind kind = FamilyKind::TrefoilFiber,
                                         int meridian_linking = 1);

// Braid text syntax: optional "strands=k;" header followed by whitespace- or
// semicolon-separated signed generator indices, e.g. "strands=3; 1 2 -1".
// Without a header the strand count is 1 + max generator index.
BraidWord braid_from_text(const std::string& text);
std::string to_text(const BraidWord& b);

}  // namespace linkinv
