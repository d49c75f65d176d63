#include "linkinv/fox.hpp"

#include <algorithm>
#include <sstream>

namespace linkinv {

void FreeWord::append(int gen, int exp) {
  if (exp != 1 && exp != -1) throw domain_error("free-word exponents must be +-1");
  if (!letters.empty() && letters.back().first == gen && letters.back().second == -exp) {
    letters.pop_back();
  } else {
    letters.emplace_back(gen, exp);
  }
}

FreeWord word_from_letters(const std::vector<std::pair<int, int>>& letters) {
  FreeWord w;
  for (const auto& [g, e] : letters) w.append(g, e);
  return w;
}

FreeWord word_from_signed(const std::vector<int>& signed_letters) {
  FreeWord w;
  for (int letter : signed_letters) {
    if (letter == 0) throw domain_error("0 is not a valid signed generator letter");
    w.append(std::abs(letter) - 1, letter > 0 ? 1 : -1);
  }
  return w;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const auto& [g, e] : b.letters) out.append(g, e);
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.append(it->first, -it->second);
  }
  return out;
}

FreeWord power(const FreeWord& w, int n) {
  const FreeWord base = n < 0 ? inverse(w) : w;
  FreeWord out;
  for (int i = 0; i < std::abs(n); ++i) out = concat(out, base);
  return out;
}

FreeWord conjugate(const FreeWord& u, const FreeWord& w) {
  return concat(concat(u, w), inverse(u));
}

int GroupPresentation::num_components() const {
  int n = 0;
  for (int c : coloring) n = std::max(n, c + 1);
  return n;
}

void GroupPresentation::validate() const {
  if (num_generators < 0) throw domain_error("negative generator count");
  for (const auto& r : relators) {
    for (const auto& [g, e] : r.letters) {
      if (g < 0 || g >= num_generators) throw domain_error("relator references unknown generator");
    }
  }
  if (has_coloring()) {
    if (static_cast<int>(coloring.size()) != num_generators) {
      throw domain_error("coloring must assign a component to every generator");
    }
    for (int c : coloring) {
      if (c < 0) throw domain_error("negative component index in coloring");
    }
  }
  for (const auto* words : {&meridians, &longitudes}) {
    for (const auto& w : *words) {
      for (const auto& [g, e] : w.letters) {
        if (g < 0 || g >= num_generators) {
          throw domain_error("peripheral word references unknown generator");
        }
      }
    }
  }
}

std::vector<FreeWord> artin_generator_images(int letter, int strands) {
  const int i = std::abs(letter) - 1;
  if (i < 0 || i + 1 >= strands) throw domain_error("generator index out of range");
  std::vector<FreeWord> images(strands);
  for (int g = 0; g < strands; ++g) images[g] = word_from_letters({{g, 1}});
  if (letter > 0) {
    images[i] = word_from_letters({{i, 1}, {i + 1, 1}, {i, -1}});
    images[i + 1] = word_from_letters({{i, 1}});
  } else {
    images[i] = word_from_letters({{i + 1, 1}});
    images[i + 1] = word_from_letters({{i + 1, -1}, {i, 1}, {i + 1, 1}});
  }
  return images;
}

FreeWord apply_endomorphism(const std::vector<FreeWord>& images, const FreeWord& w) {
  FreeWord out;
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= static_cast<int>(images.size())) {
      throw domain_error("word references a generator without an image");
    }
    const FreeWord piece = e > 0 ? images[g] : inverse(images[g]);
    for (const auto& [pg, pe] : piece.letters) out.append(pg, pe);
  }
  return out;
}

std::vector<FreeWord> artin_action(const BraidWord& b) {
  validate(b);
  std::vector<FreeWord> images(b.strands);
  for (int g = 0; g < b.strands; ++g) images[g] = word_from_letters({{g, 1}});
  for (int letter : b.letters) {
    const std::vector<FreeWord> step = artin_generator_images(letter, b.strands);
    for (auto& im : images) im = apply_endomorphism(step, im);
  }
  return images;
}

GroupPresentation closure_presentation(const BraidWord& b) {
  const ClosureInfo info = closure_info(b);
  const std::vector<FreeWord> images = artin_action(b);
  const int k = b.strands;

  GroupPresentation pres;
  pres.num_generators = k;
  pres.coloring = info.component_of;

  for (int j = 0; j + 1 < k; ++j) {
    FreeWord rel = word_from_letters({{j, -1}});
    pres.relators.push_back(concat(rel, images[j]));
  }

  // beta(x_j) reduces to u_j x_{pi(j)} u_j^-1; extract the conjugators.
  std::vector<FreeWord> conjugators(k);
  for (int j = 0; j < k; ++j) {
    const auto& w = images[j].letters;
    if (w.size() % 2 != 1) throw domain_error("internal: braid image is not a conjugate");
    const std::size_t mid = w.size() / 2;
    if (w[mid].second != 1 || w[mid].first != info.permutation[j]) {
      throw domain_error("internal: braid image middle letter mismatch");
    }
    FreeWord u;
    for (std::size_t t = 0; t < mid; ++t) u.append(w[t].first, w[t].second);
    FreeWord tail;
    for (std::size_t t = mid + 1; t < w.size(); ++t) tail.append(w[t].first, w[t].second);
    if (tail != inverse(u)) throw domain_error("internal: braid image is not palindromic");
    conjugators[j] = std::move(u);
  }

  for (const auto& cycle : info.components) {
    const int j0 = cycle.front();
    pres.meridians.push_back(word_from_letters({{j0, 1}}));

    FreeWord prod;
    int cur = j0;
    for (std::size_t step = 0; step < cycle.size(); ++step) {
      prod = concat(prod, conjugators[cur]);
      cur = info.permutation[cur];
    }
    if (cur != j0) throw domain_error("internal: strand cycle did not close");

    // Strip the self-linking so the longitude is 0-framed.
    const int own = info.component_of[j0];
    int self_exponent = 0;
    for (const auto& [g, e] : prod.letters) {
      if (info.component_of[g] == own) self_exponent += e;
    }
    FreeWord correction = power(word_from_letters({{j0, 1}}), -self_exponent);
    pres.longitudes.push_back(concat(prod, correction));
  }

  pres.validate();
  return pres;
}

LaurentPoly fox_derivative(const FreeWord& w, int j, const std::vector<int>& coloring,
                           int num_components) {
  LaurentPoly out(num_components);
  Exponents v(num_components, 0);
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= static_cast<int>(coloring.size())) {
      throw domain_error("word references a generator without a color");
    }
    if (e == 1) {
      if (g == j) out.add_term(v, 1);
      v[coloring[g]] += 1;
    } else {
      v[coloring[g]] -= 1;
      if (g == j) out.add_term(v, -1);
    }
  }
  return out;
}

LaurentPoly abelianize_word(const FreeWord& w, const std::vector<int>& coloring,
                            int num_components) {
  Exponents v(num_components, 0);
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= static_cast<int>(coloring.size())) {
      throw domain_error("word references a generator without a color");
    }
    v[coloring[g]] += e;
  }
  return LaurentPoly::monomial(num_components, v, 1);
}

PolyMatrix alexander_matrix(const GroupPresentation& p) {
  p.validate();
  if (!p.has_coloring()) throw domain_error("alexander matrix needs a component coloring");
  const int n = p.num_components();
  PolyMatrix m(p.relators.size(), std::vector<LaurentPoly>(p.num_generators, LaurentPoly(n)));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int j = 0; j < p.num_generators; ++j) {
      m[r][j] = fox_derivative(p.relators[r], j, p.coloring, n);
    }
  }
  return m;
}

namespace {

std::vector<int> parse_int_list(const std::string& body, const std::string& what) {
  std::vector<int> out;
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw parse_error("invalid integer '" + token + "' in " + what);
    }
  }
  return out;
}

}  // namespace

GroupPresentation presentation_from_text(const std::string& text) {
  GroupPresentation pres;
  bool have_gens = false;

  const auto signed_word = [](const std::vector<int>& letters, const char* what) {
    try {
      return word_from_signed(letters);
    } catch (const domain_error& e) {
      throw parse_error(std::string(what) + ": " + e.what());
    }
  };

  std::string segment;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), '\n', ';');
  std::istringstream in(cleaned);
  while (std::getline(in, segment, ';')) {
    const auto first = segment.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    segment = segment.substr(first);

    auto consume = [&](const char* key) -> const char* {
      const std::size_t n = std::string(key).size();
      if (segment.rfind(key, 0) == 0) return segment.c_str() + n;
      return nullptr;
    };
    if (const char* body = consume("gens=")) {
      try {
        pres.num_generators = std::stoi(body);
      } catch (const std::exception&) {
        throw parse_error("invalid generator count in '" + segment + "'");
      }
      have_gens = true;
    } else if (const char* body = consume("rel=")) {
      pres.relators.push_back(signed_word(parse_int_list(body, "rel"), "rel"));
    } else if (const char* body = consume("color=")) {
      pres.coloring = parse_int_list(body, "color");
      for (int& c : pres.coloring) {
        if (c < 1) throw parse_error("colors are 1-based component indices");
        c -= 1;
      }
    } else if (const char* body = consume("mu=")) {
      pres.meridians.push_back(signed_word(parse_int_list(body, "mu"), "mu"));
    } else if (const char* body = consume("lambda=")) {
      pres.longitudes.push_back(signed_word(parse_int_list(body, "lambda"), "lambda"));
    } else {
      throw parse_error("unrecognized presentation entry '" + segment + "'");
    }
  }
  if (!have_gens) throw parse_error("presentation text needs a gens= entry");
  try {
    pres.validate();
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
  return pres;
}

std::string to_text(const FreeWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : w.letters) {
    if (!first) os << " ";
    os << (e > 0 ? g + 1 : -(g + 1));
    first = false;
  }
  return os.str();
}

std::string to_text(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens=" << p.num_generators;
  for (const auto& r : p.relators) os << "; rel= " << to_text(r);
  if (p.has_coloring()) {
    os << "; color=";
    for (int c : p.coloring) os << " " << c + 1;
  }
  for (const auto& m : p.meridians) os << "; mu= " << to_text(m);
  for (const auto& l : p.longitudes) os << "; lambda= " << to_text(l);
  return os.str();
}

}  // namespace linkinv
