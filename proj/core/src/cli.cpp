#include "linkinv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "linkinv/alexander.hpp"
#include "linkinv/braid.hpp"
#include "linkinv/fox.hpp"
#include "linkinv/laurent.hpp"
#include "linkinv/surgery.hpp"
#include "linkinv/swcount.hpp"

namespace linkinv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_to_json(const LaurentPoly& p) { return ordered_json::parse(to_json_text(p)); }

std::vector<std::vector<int>> matrix_from_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text).get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string(what) + ": " + e.what());
  }
}

std::vector<int> vector_from_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text).get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string(what) + ": " + e.what());
  }
}

std::string invariants_text(const std::vector<Integer>& inv) {
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i != 0) s += ", ";
    s += inv[i].str();
  }
  return s + "]";
}

std::string h1_name(const std::vector<Integer>& inv) {
  if (inv.empty()) return "trivial";
  std::string s;
  for (const auto& d : inv) {
    if (!s.empty()) s += " x ";
    s += (d == 0) ? "Z" : "Z/" + d.str();
  }
  return s;
}

ordered_json invariants_json(const std::vector<Integer>& inv) {
  ordered_json a = ordered_json::array();
  for (const auto& d : inv) a.push_back(d.convert_to<long long>());
  return a;
}

std::string int_list_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Left-aligned column layout with two-space gutters.
std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  const auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  };
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return os.str();
}

void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& doc,
          const std::string& text) {
  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

int surgery_denominator(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos || s.substr(0, slash) != "1") {
    throw parse_error("--surgery must be a 1/p coefficient, e.g. \"1/3\"");
  }
  const std::string tail = s.substr(slash + 1);
  try {
    std::size_t used = 0;
    const int p = std::stoi(tail, &used);
    if (used != tail.size()) throw parse_error("--surgery: trailing characters after 1/" + tail);
    return p;
  } catch (const std::invalid_argument&) {
    throw parse_error("--surgery: cannot read the denominator in \"" + s + "\"");
  } catch (const std::out_of_range&) {
    throw parse_error("--surgery: denominator out of range in \"" + s + "\"");
  }
}

int cmd_alex(const RunConfig& cfg, std::ostream& out) {
  LaurentPoly poly(1);
  int components = 1;
  std::string route = cfg.route;
  std::string input;

  if (!cfg.torus.empty()) {
    route = "closed-form";
    input = "T(" + std::to_string(cfg.torus[0]) + "," + std::to_string(cfg.torus[1]) + ")";
    poly = torus_knot_alexander(cfg.torus[0], cfg.torus[1]);
  } else if (!cfg.braid_text.empty()) {
    const BraidWord b = braid_from_text(cfg.braid_text);
    input = to_text(b);
    if (route == "burau") {
      poly = alexander_burau(b);
    } else {
      const AlexanderResult res = alexander_from_braid(b);
      poly = res.poly;
      components = res.num_components;
    }
  } else {
    const GroupPresentation pres = presentation_from_text(cfg.presentation_text);
    input = to_text(pres);
    poly = normalize_symmetric(alexander_from_presentation(pres, 0));
    components = pres.num_components();
  }

  ordered_json doc;
  doc["command"] = "alex";
  doc["input"] = input;
  doc["route"] = route;
  doc["components"] = components;
  doc["terms"] = poly.term_count();
  doc["polynomial"] = to_string(poly);
  doc["poly"] = poly_to_json(poly);

  std::ostringstream text;
  text << "input: " << input << "\n"
       << "route: " << route << "\n"
       << "components: " << components << "\n"
       << "terms: " << poly.term_count() << "\n"
       << "polynomial: " << to_string(poly) << "\n";
  emit(cfg, out, doc, text.str());
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const FamilyKind kind =
      cfg.family == "generic-cable" ? FamilyKind::GenericCable : FamilyKind::TrefoilFiber;
  const BetaTable t = beta_sweep(kind, cfg.p_min, cfg.p_max, cfg.three_component);

  ordered_json doc;
  doc["command"] = "sweep";
  doc["family"] = cfg.family;
  doc["three_component"] = cfg.three_component;
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> cells;
  for (const BetaRow& r : t.rows) {
    ordered_json row;
    row["p"] = r.p;
    row["gamma"] = r.gamma;
    row["lower_bound"] = r.lower_bound;
    std::vector<std::string> line{std::to_string(r.p), r.gamma, std::to_string(r.lower_bound)};
    if (r.beta) {
      row["beta"] = *r.beta;
      line.push_back(std::to_string(*r.beta));
    }
    rows.push_back(std::move(row));
    cells.push_back(std::move(line));
  }
  doc["rows"] = std::move(rows);

  std::ostringstream text;
  text << "family: " << cfg.family << "\n"
       << "variant: " << (cfg.three_component ? "three-component" : "two-component") << "\n";
  std::vector<std::string> header{"p", "gamma", "bound"};
  if (!t.rows.empty() && t.rows.front().beta) header.push_back("beta");
  text << table(header, cells);
  emit(cfg, out, doc, text.str());
  return 0;
}

int cmd_slope(const RunConfig& cfg, std::ostream& out) {
  LinkSurgeryDescriptor desc;
  desc.linking = matrix_from_json(cfg.link_json, "--link");
  desc.m = vector_from_json(cfg.m_json, "--m");
  desc.validate();

  const int n = desc.num_components();
  int lo = 0;
  int hi = n - 1;
  if (cfg.component != 0) {
    if (cfg.component < 1 || cfg.component > n) {
      throw domain_error("--component out of range");
    }
    lo = hi = cfg.component - 1;
  }

  ordered_json doc;
  doc["command"] = "slope";
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> cells;
  for (int i = lo; i <= hi; ++i) {
    ordered_json row;
    row["component"] = i + 1;
    std::vector<std::string> line{std::to_string(i + 1)};
    try {
      const SlopeData s = slope(desc, i);
      row["mu"] = s.mu_coeff;
      row["lambda"] = s.lambda_coeff;
      row["d"] = s.divisibility;
      row["sigma"] = ordered_json::array({s.sigma.first, s.sigma.second});
      line.push_back(std::to_string(s.mu_coeff));
      line.push_back(std::to_string(s.lambda_coeff));
      line.push_back(std::to_string(s.divisibility));
      line.push_back("(" + std::to_string(s.sigma.first) + ", " +
                     std::to_string(s.sigma.second) + ")");
    } catch (const fiber_disjoint_error&) {
      // Only tolerated in the all-components listing; a single requested
      // component should fail loudly.
      if (lo == hi) throw;
      row["fiber_disjoint"] = true;
      line.insert(line.end(), {"-", "-", "-", "fiber-disjoint"});
    }
    rows.push_back(std::move(row));
    cells.push_back(std::move(line));
  }
  doc["rows"] = std::move(rows);

  std::ostringstream text;
  text << table({"component", "mu", "lambda", "d", "sigma"}, cells);
  emit(cfg, out, doc, text.str());
  return 0;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  ordered_json doc;
  doc["command"] = "homology";
  std::ostringstream text;

  if (!cfg.presentation_text.empty()) {
    const GroupPresentation pres = presentation_from_text(cfg.presentation_text);
    const std::vector<Integer> inv = abelianization_invariants(pres);
    doc["abelianization"] = invariants_json(inv);
    doc["h1"] = h1_name(inv);
    text << "abelianization: " << invariants_text(inv) << "\n"
         << "h1: " << h1_name(inv) << "\n";
  } else {
    const std::vector<int> gamma = vector_from_json(cfg.gamma_json, "--gamma");
    if (!cfg.link_json.empty()) {
      const auto lk = matrix_from_json(cfg.link_json, "--link");
      if (lk.size() != gamma.size()) {
        throw domain_error("--gamma length does not match the linking matrix");
      }
    }
    const TorusClass cls = torus_class(gamma);
    doc["class"] = cls.coefficients;
    doc["nullhomologous"] = cls.is_nullhomologous();
    text << "class: " << int_list_text(cls.coefficients) << "\n"
         << "nullhomologous: " << (cls.is_nullhomologous() ? "yes" : "no") << "\n";
  }
  emit(cfg, out, doc, text.str());
  return 0;
}

GroupPresentation pi1_base(const RunConfig& cfg) {
  if (!cfg.braid_text.empty()) return closure_presentation(braid_from_text(cfg.braid_text));
  if (!cfg.presentation_text.empty()) return presentation_from_text(cfg.presentation_text);
  // Family mode defaults to the trefoil closure.
  return closure_presentation(braid_from_text("1 1 1"));
}

int cmd_pi1_family(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p_min < 1 || cfg.p_max < cfg.p_min) throw domain_error("empty or invalid p range");
  const GroupPresentation base = pi1_base(cfg);
  const int comp = cfg.component == 0 ? 0 : cfg.component - 1;

  std::vector<std::string> names = cfg.targets;
  if (names.empty()) names = {"S3", "S4", "A5"};
  std::vector<FiniteGroupTable> groups;
  groups.reserve(names.size());
  for (const auto& n : names) groups.push_back(target_group(n));

  std::vector<GroupPresentation> members;
  for (int p = cfg.p_min; p <= cfg.p_max; ++p) members.push_back(surgery_quotient(base, p, comp));
  const FamilyPartition part = distinguish_family(members, groups, cfg.budget);

  ordered_json doc;
  doc["command"] = "pi1";
  doc["family"] = true;
  doc["p_min"] = cfg.p_min;
  doc["p_max"] = cfg.p_max;
  doc["targets"] = names;
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < part.signatures.size(); ++i) {
    ordered_json row;
    row["p"] = cfg.p_min + static_cast<int>(i);
    row["counts"] = part.signatures[i];
    rows.push_back(std::move(row));
    std::vector<std::string> line{std::to_string(cfg.p_min + static_cast<int>(i))};
    for (std::uint64_t c : part.signatures[i]) line.push_back(std::to_string(c));
    cells.push_back(std::move(line));
  }
  doc["rows"] = std::move(rows);
  ordered_json blocks = ordered_json::array();
  std::string blocks_text;
  for (const auto& block : part.blocks) {
    ordered_json b = ordered_json::array();
    std::string bt;
    for (int idx : block) {
      b.push_back(cfg.p_min + idx);
      if (!bt.empty()) bt += ", ";
      bt += "p=" + std::to_string(cfg.p_min + idx);
    }
    blocks.push_back(std::move(b));
    if (!blocks_text.empty()) blocks_text += " ";
    blocks_text += "{" + bt + "}";
  }
  doc["blocks"] = std::move(blocks);

  std::ostringstream text;
  text << "family: 1/p surgery quotients, p = " << cfg.p_min << ".." << cfg.p_max << "\n";
  std::vector<std::string> header{"p"};
  header.insert(header.end(), names.begin(), names.end());
  text << table(header, cells);
  text << "blocks: " << blocks_text << "\n";
  emit(cfg, out, doc, text.str());
  return 0;
}

int cmd_pi1(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family_mode) return cmd_pi1_family(cfg, out);

  GroupPresentation pres = pi1_base(cfg);
  std::string surgery_label;
  if (!cfg.surgery.empty()) {
    const int p = surgery_denominator(cfg.surgery);
    const int comp = cfg.component == 0 ? 0 : cfg.component - 1;
    pres = surgery_quotient(pres, p, comp);
    surgery_label = cfg.surgery;
  }
  const std::vector<Integer> inv = abelianization_invariants(pres);

  ordered_json doc;
  doc["command"] = "pi1";
  doc["generators"] = pres.num_generators;
  doc["relators"] = pres.relators.size();
  if (!surgery_label.empty()) doc["surgery"] = surgery_label;
  doc["abelianization"] = invariants_json(inv);
  doc["h1"] = h1_name(inv);

  std::ostringstream text;
  text << "generators: " << pres.num_generators << "\n"
       << "relators: " << pres.relators.size() << "\n";
  if (!surgery_label.empty()) text << "surgery: " << surgery_label << "\n";
  text << "abelianization: " << invariants_text(inv) << " (" << h1_name(inv) << ")\n";

  ordered_json counts = ordered_json::array();
  for (const auto& name : cfg.targets) {
    const HomCountReport r = hom_count(pres, target_group(name), cfg.budget);
    ordered_json row;
    row["target"] = r.target;
    row["total"] = r.total;
    row["nonabelian_image"] = r.nonabelian_image;
    counts.push_back(std::move(row));
    text << r.target << ": " << r.total << " homs, " << r.nonabelian_image
         << " with nonabelian image\n";
  }
  if (!cfg.targets.empty()) doc["hom_counts"] = std::move(counts);

  emit(cfg, out, doc, text.str());
  return 0;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  ordered_json doc;
  doc["command"] = "reproduce-paper";
  std::ostringstream text;

  // (a) term growth of the gamma_p knot polynomials
  {
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<std::string>> cells;
    for (int p = 1; p <= 10; ++p) {
      const LaurentPoly d = torus_knot_alexander(p, p + 1);
      const std::string label = "T(" + std::to_string(p) + "," + std::to_string(p + 1) + ")";
      ordered_json row;
      row["p"] = p;
      row["knot"] = label;
      row["terms"] = d.term_count();
      row["polynomial"] = to_string(d);
      rows.push_back(std::move(row));
      cells.push_back({std::to_string(p), label, std::to_string(d.term_count()), to_string(d)});
    }
    doc["growth"] = std::move(rows);
    text << "== torus-knot term growth ==\n"
         << table({"p", "knot", "terms", "polynomial"}, cells) << "\n";
  }

  // (b) Torres lower bounds for the two- and three-component families
  {
    const BetaTable two = beta_sweep(FamilyKind::TrefoilFiber, 1, 6, false);
    const BetaTable three = beta_sweep(FamilyKind::TrefoilFiber, 1, 6, true);
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < two.rows.size(); ++i) {
      ordered_json row;
      row["p"] = two.rows[i].p;
      row["gamma"] = two.rows[i].gamma;
      row["two_component"] = two.rows[i].lower_bound;
      row["three_component"] = three.rows[i].lower_bound;
      rows.push_back(std::move(row));
      cells.push_back({std::to_string(two.rows[i].p), two.rows[i].gamma,
                       std::to_string(two.rows[i].lower_bound),
                       std::to_string(three.rows[i].lower_bound)});
    }
    doc["torres_bounds"] = std::move(rows);
    text << "== Torres lower bounds ==\n"
         << table({"p", "gamma", "two-component", "three-component"}, cells) << "\n";
  }

  const std::vector<std::string> names{"S3", "S4", "A5"};
  std::vector<FiniteGroupTable> groups;
  for (const auto& n : names) groups.push_back(target_group(n));

  const auto quotient_section = [&](const GroupPresentation& base, int p_max) {
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<std::string>> cells;
    for (int p = 1; p <= p_max; ++p) {
      const GroupPresentation q = surgery_quotient(base, p, 0);
      const std::vector<Integer> inv = abelianization_invariants(q);
      ordered_json row;
      row["p"] = p;
      row["abelianization"] = invariants_json(inv);
      ordered_json counts;
      std::vector<std::string> line{std::to_string(p), h1_name(inv)};
      for (std::size_t t = 0; t < names.size(); ++t) {
        const HomCountReport r = hom_count(q, groups[t], cfg.budget);
        counts[names[t]] = r.total;
        line.push_back(std::to_string(r.total));
      }
      row["hom_counts"] = std::move(counts);
      rows.push_back(std::move(row));
      cells.push_back(std::move(line));
    }
    return std::make_pair(std::move(rows), std::move(cells));
  };

  // (c) unknot controls: every quotient is trivial
  {
    BraidWord unknot;
    unknot.strands = 1;
    auto [rows, cells] = quotient_section(closure_presentation(unknot), 5);
    doc["unknot_controls"] = std::move(rows);
    text << "== unknot family controls ==\n"
         << table({"p", "H1", "S3", "S4", "A5"}, cells) << "\n";
  }

  // (d) trefoil surgery quotients
  {
    auto [rows, cells] = quotient_section(closure_presentation(braid_from_text("1 1 1")), 4);
    doc["trefoil_quotients"] = std::move(rows);
    text << "== trefoil surgery quotients ==\n"
         << table({"p", "H1", "S3", "S4", "A5"}, cells);
  }

  emit(cfg, out, doc, text.str());
  return 0;
}

std::uint64_t budget_from_env(const char* value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != std::string(value).size() || v == 0) {
      throw parse_error(std::string("LINKINV_HOM_BUDGET: not a positive integer: ") + value);
    }
    return v;
  } catch (const std::invalid_argument&) {
    throw parse_error(std::string("LINKINV_HOM_BUDGET: not a positive integer: ") + value);
  } catch (const std::out_of_range&) {
    throw parse_error(std::string("LINKINV_HOM_BUDGET: out of range: ") + value);
  }
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args) {
  ParseOutcome outcome;
  RunConfig& cfg = outcome.config;

  if (const char* env = std::getenv("LINKINV_HOM_BUDGET")) cfg.budget = budget_from_env(env);

  CLI::App app{"braid-closure invariants: Alexander polynomials, SW basic-class counts, "
               "surgery slopes, and finite quotient enumeration",
               "linkinv"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "enumeration budget for hom counting")
      ->check(CLI::PositiveNumber);

  CLI::App* alex = app.add_subcommand(
      "alex", "Alexander polynomial of a braid closure, presentation, or torus knot");
  alex->add_option("--braid", cfg.braid_text, "braid word, e.g. \"strands=3; 1 2 -1\"");
  alex->add_option("--presentation", cfg.presentation_text, "colored presentation text");
  alex->add_option("--torus", cfg.torus, "torus knot parameters p q")->expected(2);
  alex->add_option("--route", cfg.route, "computation route")
      ->check(CLI::IsMember({"minor", "burau", "closed-form"}))
      ->capture_default_str();

  CLI::App* sweep =
      app.add_subcommand("sweep", "Torres lower bounds on basic classes for a curve family");
  sweep->add_option("--family", cfg.family, "curve family")
      ->check(CLI::IsMember({"trefoil-fiber", "generic-cable"}))
      ->capture_default_str();
  sweep->add_option("--pmin", cfg.p_min, "first p")->capture_default_str();
  sweep->add_option("--pmax", cfg.p_max, "last p")->capture_default_str();
  sweep->add_flag("--three-component", cfg.three_component,
                  "three-component reduction (doubled bound)");

  CLI::App* slope_cmd =
      app.add_subcommand("slope", "surgery slopes from a linking matrix and fiber class");
  slope_cmd->add_option("--link", cfg.link_json, "linking matrix as JSON, e.g. [[0,1],[1,0]]")
      ->required();
  slope_cmd->add_option("--m", cfg.m_json, "fiber class as JSON, e.g. [1,0]")->required();
  slope_cmd->add_option("--component", cfg.component, "1-based component (default: all)");

  CLI::App* hom =
      app.add_subcommand("homology", "torus homology classes and abelianization invariants");
  hom->add_option("--gamma", cfg.gamma_json, "linking vector of the curve as JSON");
  hom->add_option("--link", cfg.link_json, "linking matrix as JSON (length check only)");
  hom->add_option("--presentation", cfg.presentation_text, "presentation for H1 invariants");

  CLI::App* pi1 =
      app.add_subcommand("pi1", "fundamental-group surgery quotients and finite hom counts");
  pi1->add_option("--braid", cfg.braid_text, "braid word whose closure complement is the group");
  pi1->add_option("--presentation", cfg.presentation_text, "explicit presentation text");
  pi1->add_option("--surgery", cfg.surgery, "surgery coefficient 1/p, e.g. \"1/3\"");
  pi1->add_option("--component", cfg.component, "1-based surgery component");
  pi1->add_flag("--family", cfg.family_mode, "sweep 1/p quotients over p and partition them");
  pi1->add_option("--pmin", cfg.p_min, "first p (family mode)")->capture_default_str();
  pi1->add_option("--pmax", cfg.p_max, "last p (family mode)")->capture_default_str();
  pi1->add_option("--targets", cfg.targets, "finite targets, e.g. S3,S4,A5")->delimiter(',');

  CLI::App* rep = app.add_subcommand(
      "reproduce-paper", "growth table, Torres bounds, and quotient control cases end to end");

  for (CLI::App* sub : {alex, sweep, slope_cmd, hom, pi1, rep}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    outcome.help_requested = true;
    const auto subs = app.get_subcommands();
    outcome.help_text = subs.empty() ? app.help() : subs.front()->help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.help_requested = true;
    outcome.help_text = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    throw parse_error(e.what());
  }

  if (alex->parsed()) {
    cfg.command = "alex";
    const int inputs = (cfg.braid_text.empty() ? 0 : 1) + (cfg.presentation_text.empty() ? 0 : 1) +
                       (cfg.torus.empty() ? 0 : 1);
    if (inputs != 1) {
      throw parse_error("alex needs exactly one of --braid, --presentation, --torus");
    }
    if (cfg.route == "closed-form" && cfg.torus.empty()) {
      throw parse_error("the closed-form route needs --torus");
    }
    if (cfg.route == "burau" && cfg.braid_text.empty()) {
      throw parse_error("the burau route needs --braid");
    }
  } else if (sweep->parsed()) {
    cfg.command = "sweep";
  } else if (slope_cmd->parsed()) {
    cfg.command = "slope";
  } else if (hom->parsed()) {
    cfg.command = "homology";
    if (cfg.presentation_text.empty() == cfg.gamma_json.empty()) {
      throw parse_error("homology needs exactly one of --gamma, --presentation");
    }
  } else if (pi1->parsed()) {
    cfg.command = "pi1";
    if (!cfg.braid_text.empty() && !cfg.presentation_text.empty()) {
      throw parse_error("pi1 takes at most one of --braid, --presentation");
    }
    if (!cfg.family_mode && cfg.braid_text.empty() && cfg.presentation_text.empty()) {
      throw parse_error("pi1 needs --braid, --presentation, or --family");
    }
    if (cfg.family_mode && !cfg.surgery.empty()) {
      throw parse_error("--family sweeps p itself; drop --surgery");
    }
  } else {
    cfg.command = "reproduce-paper";
  }
  return outcome;
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "alex") return cmd_alex(cfg, out);
  if (cfg.command == "sweep") return cmd_sweep(cfg, out);
  if (cfg.command == "slope") return cmd_slope(cfg, out);
  if (cfg.command == "homology") return cmd_homology(cfg, out);
  if (cfg.command == "pi1") return cmd_pi1(cfg, out);
  if (cfg.command == "reproduce-paper") return cmd_reproduce(cfg, out);
  throw parse_error("unknown command: " + cfg.command);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const ParseOutcome outcome = parse_args(args);
    if (outcome.help_requested) {
      out << outcome.help_text;
      return 0;
    }
    return run(outcome.config, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace linkinv
