#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkinv/fox.hpp"
#include "linkinv/laurent.hpp"

namespace linkinv {

// Finite group as an explicit multiplication table. Built from permutation
// composition; identity and inverses are verified exhaustively at
// construction and associativity is spot-checked.
struct FiniteGroupTable {
  std::string name;
  int order = 1;
  int identity = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inverse;
  std::vector<std::string> labels;    // one-line permutation images

  static FiniteGroupTable from_permutations(std::string name,
                                            std::vector<std::vector<int>> elements);
  static FiniteGroupTable symmetric(int n);    // "S<n>"
  static FiniteGroupTable alternating(int n);  // "A<n>"
  static FiniteGroupTable cyclic(int n);       // "Z<n>"
};

// Resolves "S3", "S4", "A5", "Z<n>"; throws parse_error otherwise.
FiniteGroupTable target_group(const std::string& name);

inline constexpr std::uint64_t kDefaultHomBudget = 3600;  // 60^2

// Appends the relator mu * lambda^p for the chosen component, presenting
// pi_1 of 1/p surgery. p may be negative; p = 0 kills the meridian alone
// (degenerate as a 1/p coefficient but well defined as a quotient).
GroupPresentation surgery_quotient(const GroupPresentation& k, int p, int component = 0);

// Diagonal of the Smith normal form of the relator exponent matrix, reported
// as the nontrivial elementary divisors: entries > 1 in divisor-chain order,
// one 0 per free factor; [] means trivial H_1.
std::vector<Integer> abelianization_invariants(const GroupPresentation& g);

struct HomCountReport {
  std::string target;
  std::uint64_t total = 0;             // includes the trivial homomorphism
  std::uint64_t nonabelian_image = 0;  // images generating a nonabelian subgroup
};

// Counts homomorphisms by backtracking over generator images with early
// relator pruning, parallelized over the image of the first generator.
// Throws budget_error when |target|^generators exceeds the budget.
HomCountReport hom_count(const GroupPresentation& g, const FiniteGroupTable& target,
                         std::uint64_t budget = kDefaultHomBudget);

// Partition of a family by the vector of hom counts across targets. Members in
// different blocks are certified non-isomorphic; members sharing a block are
// merely not separated by these targets.
struct FamilyPartition {
  std::vector<std::vector<std::uint64_t>> signatures;  // per member, per target
  std::vector<std::vector<int>> blocks;                // member indices, grouped
};

FamilyPartition distinguish_family(const std::vector<GroupPresentation>& members,
                                   const std::vector<FiniteGroupTable>& targets,
                                   std::uint64_t budget = kDefaultHomBudget);

}  // namespace linkinv
