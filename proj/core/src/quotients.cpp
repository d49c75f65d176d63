#include "linkinv/quotients.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace linkinv {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_permutations(std::string name,
                                                     std::vector<std::vector<int>> elements) {
  std::sort(elements.begin(), elements.end());
  const int order = static_cast<int>(elements.size());
  if (order == 0) throw domain_error("empty element list");

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[elements[i]] = i;

  FiniteGroupTable g;
  g.name = std::move(name);
  g.order = order;
  g.mul.assign(order, std::vector<int>(order, -1));
  g.inverse.assign(order, -1);

  const std::size_t degree = elements[0].size();
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(degree);
      for (std::size_t x = 0; x < degree; ++x) c[x] = elements[a][elements[b][x]];
      const auto it = index.find(c);
      if (it == index.end()) throw domain_error("element set is not closed under composition");
      g.mul[a][b] = it->second;
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  const auto id_it = index.find(id);
  if (id_it == index.end()) throw domain_error("element set lacks the identity");
  g.identity = id_it->second;

  for (int a = 0; a < order; ++a) {
    if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a) {
      throw domain_error("identity verification failed");
    }
    for (int b = 0; b < order; ++b) {
      if (g.mul[a][b] == g.identity) {
        if (g.mul[b][a] != g.identity) throw domain_error("one-sided inverse");
        g.inverse[a] = b;
      }
    }
    if (g.inverse[a] < 0) throw domain_error("element without inverse");
  }

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, order - 1);
  for (int trial = 0; trial < 256; ++trial) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
      throw domain_error("associativity spot-check failed");
    }
  }

  g.labels.reserve(order);
  for (const auto& e : elements) {
    std::string label;
    for (int x : e) label += std::to_string(x);
    g.labels.push_back(std::move(label));
  }
  return g;
}

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
  if (n < 1 || n > 6) throw domain_error("symmetric group degree out of supported range");
  return from_permutations("S" + std::to_string(n), all_permutations(n));
}

FiniteGroupTable FiniteGroupTable::alternating(int n) {
  if (n < 1 || n > 6) throw domain_error("alternating group degree out of supported range");
  std::vector<std::vector<int>> evens;
  for (auto& p : all_permutations(n)) {
    if (permutation_sign(p) == 1) evens.push_back(std::move(p));
  }
  return from_permutations("A" + std::to_string(n), evens);
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw domain_error("cyclic group order must be positive");
  // rotation permutations of {0..n-1}
  std::vector<std::vector<int>> rotations;
  for (int s = 0; s < n; ++s) {
    std::vector<int> rot(n);
    for (int x = 0; x < n; ++x) rot[x] = (x + s) % n;
    rotations.push_back(std::move(rot));
  }
  return from_permutations("Z" + std::to_string(n), rotations);
}

FiniteGroupTable target_group(const std::string& name) {
  if (name == "S3") return FiniteGroupTable::symmetric(3);
  if (name == "S4") return FiniteGroupTable::symmetric(4);
  if (name == "S5") return FiniteGroupTable::symmetric(5);
  if (name == "A4") return FiniteGroupTable::alternating(4);
  if (name == "A5") return FiniteGroupTable::alternating(5);
  if (name.size() > 1 && name[0] == 'Z') {
    try {
      return FiniteGroupTable::cyclic(std::stoi(name.substr(1)));
    } catch (const std::exception&) {
      throw parse_error("unknown target group '" + name + "'");
    }
  }
  throw parse_error("unknown target group '" + name + "'");
}

GroupPresentation surgery_quotient(const GroupPresentation& k, int p, int component) {
  k.validate();
  if (component < 0 || component >= static_cast<int>(k.meridians.size()) ||
      component >= static_cast<int>(k.longitudes.size())) {
    throw domain_error("surgery quotient needs meridian and longitude words for the component");
  }
  GroupPresentation out = k;
  out.relators.push_back(concat(k.meridians[component], power(k.longitudes[component], p)));
  return out;
}

namespace {

// Smith normal form diagonal of an integer matrix (destructive).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> diag;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate a pivot of minimal absolute value in the remaining block
    std::size_t pr = t, pc = t;
    bool found = false;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        const Integer mag = abs(a[i][j]);
        if (!found || mag < best) {
          best = mag;
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(a[t], a[pr]);
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // make the pivot divide everything that remains
      for (std::size_t i = t + 1; i < rows && clean; ++i) {
        for (std::size_t j = t + 1; j < cols && clean; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            clean = false;
          }
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<Integer> abelianization_invariants(const GroupPresentation& g) {
  g.validate();
  std::vector<std::vector<Integer>> m(g.relators.size(),
                                      std::vector<Integer>(g.num_generators, 0));
  for (std::size_t r = 0; r < g.relators.size(); ++r) {
    for (const auto& [gen, e] : g.relators[r].letters) m[r][gen] += e;
  }
  const std::vector<Integer> diag = smith_diagonal(std::move(m));

  std::vector<Integer> out;
  int rank = 0;
  for (const Integer& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.push_back(d);
  }
  const int free_rank = g.num_generators - rank;
  for (int i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

namespace {

struct HomSearch {
  const FiniteGroupTable& target;
  int num_generators;
  // relators grouped by the highest generator they mention
  std::vector<std::vector<const FreeWord*>> checks;

  bool satisfied(const FreeWord& w, const std::vector<int>& images) const {
    int cur = target.identity;
    for (const auto& [g, e] : w.letters) {
      const int x = e > 0 ? images[g] : target.inverse[images[g]];
      cur = target.mul[cur][x];
    }
    return cur == target.identity;
  }

  void enumerate(int next_gen, std::vector<int>& images, std::uint64_t& total,
                 std::uint64_t& nonabelian) const {
    if (next_gen == num_generators) {
      ++total;
      for (int a = 0; a < num_generators; ++a) {
        for (int b = a + 1; b < num_generators; ++b) {
          if (target.mul[images[a]][images[b]] != target.mul[images[b]][images[a]]) {
            ++nonabelian;
            return;
          }
        }
      }
      return;
    }
    for (int img = 0; img < target.order; ++img) {
      images[next_gen] = img;
      bool ok = true;
      for (const FreeWord* w : checks[next_gen]) {
        if (!satisfied(*w, images)) {
          ok = false;
          break;
        }
      }
      if (ok) enumerate(next_gen + 1, images, total, nonabelian);
    }
  }
};

}  // namespace

HomCountReport hom_count(const GroupPresentation& g, const FiniteGroupTable& target,
                         std::uint64_t budget) {
  g.validate();

  std::uint64_t space = 1;
  for (int i = 0; i < g.num_generators; ++i) {
    if (space > budget / static_cast<std::uint64_t>(target.order)) {
      space = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    space *= static_cast<std::uint64_t>(target.order);
  }
  if (space > budget) {
    throw budget_error("enumeration space |" + target.name + "|^" +
                       std::to_string(g.num_generators) + " exceeds budget " +
                       std::to_string(budget));
  }

  HomCountReport report;
  report.target = target.name;
  if (g.num_generators == 0) {
    report.total = 1;
    return report;
  }

  HomSearch search{target, g.num_generators, {}};
  search.checks.assign(g.num_generators, {});
  for (const auto& rel : g.relators) {
    int top = -1;
    for (const auto& [gen, e] : rel.letters) top = std::max(top, gen);
    if (top < 0) continue;  // empty relator holds trivially
    search.checks[top].push_back(&rel);
  }

  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(target.order));
  std::vector<std::future<std::pair<std::uint64_t, std::uint64_t>>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w]() {
      std::uint64_t total = 0, nonabelian = 0;
      std::vector<int> images(search.num_generators, 0);
      for (int first = static_cast<int>(w); first < target.order;
           first += static_cast<int>(workers)) {
        images[0] = first;
        bool ok = true;
        for (const FreeWord* rel : search.checks[0]) {
          if (!search.satisfied(*rel, images)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (search.num_generators == 1) {
          ++total;
        } else {
          search.enumerate(1, images, total, nonabelian);
        }
      }
      return std::make_pair(total, nonabelian);
    }));
  }
  for (auto& part : parts) {
    const auto [total, nonabelian] = part.get();
    report.total += total;
    report.nonabelian_image += nonabelian;
  }
  return report;
}

FamilyPartition distinguish_family(const std::vector<GroupPresentation>& members,
                                   const std::vector<FiniteGroupTable>& targets,
                                   std::uint64_t budget) {
  FamilyPartition out;
  for (const auto& member : members) {
    std::vector<std::uint64_t> sig;
    sig.reserve(targets.size());
    for (const auto& target : targets) sig.push_back(hom_count(member, target, budget).total);
    out.signatures.push_back(std::move(sig));
  }
  std::map<std::vector<std::uint64_t>, int> block_of;
  for (std::size_t i = 0; i < out.signatures.size(); ++i) {
    const auto it = block_of.find(out.signatures[i]);
    if (it == block_of.end()) {
      block_of[out.signatures[i]] = static_cast<int>(out.blocks.size());
      out.blocks.push_back({static_cast<int>(i)});
    } else {
      out.blocks[it->second].push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace linkinv
