#include "linkinv/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace linkinv {

void validate(const BraidWord& b) {
  if (b.strands < 1) throw domain_error("braid needs at least one strand");
  for (int letter : b.letters) {
    const int idx = std::abs(letter);
    if (idx < 1 || idx > b.strands - 1) {
      throw domain_error("generator index " + std::to_string(letter) + " out of range for " +
                         std::to_string(b.strands) + " strands");
    }
  }
}

ClosureInfo closure_info(const BraidWord& b) {
  validate(b);
  const int k = b.strands;

  std::vector<int> occupant(k);
  std::iota(occupant.begin(), occupant.end(), 0);
  // signed crossing count per unordered strand pair
  std::map<std::pair<int, int>, int> pair_crossings;
  for (int letter : b.letters) {
    const int pos = std::abs(letter) - 1;
    const int sign = letter > 0 ? 1 : -1;
    const int a = occupant[pos];
    const int c = occupant[pos + 1];
    pair_crossings[{std::min(a, c), std::max(a, c)}] += sign;
    std::swap(occupant[pos], occupant[pos + 1]);
  }

  ClosureInfo info;
  info.permutation.assign(k, 0);
  for (int pos = 0; pos < k; ++pos) info.permutation[occupant[pos]] = pos;

  std::vector<bool> seen(k, false);
  for (int j = 0; j < k; ++j) {
    if (seen[j]) continue;
    std::vector<int> cycle;
    int cur = j;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = info.permutation[cur];
    }
    std::sort(cycle.begin(), cycle.end());
    info.components.push_back(std::move(cycle));
  }
  std::sort(info.components.begin(), info.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  info.component_of.assign(k, 0);
  for (std::size_t ci = 0; ci < info.components.size(); ++ci) {
    for (int s : info.components[ci]) info.component_of[s] = static_cast<int>(ci);
  }

  const int n = info.num_components();
  info.linking.assign(n, std::vector<int>(n, 0));
  info.writhe.assign(n, 0);
  for (const auto& [strands, count] : pair_crossings) {
    const int ci = info.component_of[strands.first];
    const int cj = info.component_of[strands.second];
    if (ci == cj) {
      info.writhe[ci] += count;
    } else {
      info.linking[ci][cj] += count;
      info.linking[cj][ci] += count;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (info.linking[i][j] % 2 != 0) {
        throw domain_error("internal: odd signed crossing count between components");
      }
      info.linking[i][j] /= 2;
    }
  }
  return info;
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 1) throw domain_error("torus braid parameters must be positive");
  BraidWord b;
  b.strands = q;
  b.letters.reserve(static_cast<std::size_t>(p) * (q - 1));
  for (int rep = 0; rep < p; ++rep) {
    for (int i = 1; i < q; ++i) b.letters.push_back(i);
  }
  return b;
}

BraidWord borromean_block_braid(int p) {
  if (p < 0) throw domain_error("block iteration count must be nonnegative");
  BraidWord b;
  b.strands = 3;
  b.letters.reserve(static_cast<std::size_t>(p) * 6);
  for (int rep = 0; rep < 3 * p; ++rep) {
    b.letters.push_back(1);
    b.letters.push_back(-2);
  }
  return b;
}

FamilyDescriptor cable_family_descriptor(int p, FamilyKind kind, int meridian_linking) {
  if (p < 1) throw domain_error("family parameter p must be positive");
  FamilyDescriptor d;
  d.kind = kind;
  d.p = p;
  d.lk_gamma_host = 1;
  d.lk_gamma_meridian = meridian_linking;
  return d;
}

BraidWord braid_from_text(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ';', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::replace(cleaned.begin(), cleaned.end(), '\n', ' ');

  BraidWord b;
  bool have_strands = false;
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    if (token.rfind("strands=", 0) == 0) {
      try {
        b.strands = std::stoi(token.substr(8));
      } catch (const std::exception&) {
        throw parse_error("invalid strand count in '" + token + "'");
      }
      have_strands = true;
      continue;
    }
    try {
      std::size_t used = 0;
      const int letter = std::stoi(token, &used);
      if (used != token.size() || letter == 0) throw std::invalid_argument(token);
      b.letters.push_back(letter);
    } catch (const std::exception&) {
      throw parse_error("invalid braid letter '" + token + "'");
    }
  }
  if (!have_strands) {
    int max_index = 0;
    for (int letter : b.letters) max_index = std::max(max_index, std::abs(letter));
    b.strands = max_index + 1;
  }
  try {
    validate(b);
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
  return b;
}

std::string to_text(const BraidWord& b) {
  std::ostringstream os;
  os << "strands=" << b.strands << ";";
  for (int letter : b.letters) os << " " << letter;
  return os.str();
}

}  // namespace linkinv
