#include "polyvec/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyvec/arith.hpp"
#include "polyvec/flag_cohomology.hpp"

namespace polyvec {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOpts {
  std::string type;
  int rank = 0;
  std::string format = "table";
  std::string output;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_force) {
  cmd->add_option("--type", o.type, "simple type label (A-G)")->required();
  cmd->add_option("--rank", o.rank, "rank of the root system")->required();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "write the report to this path");
  if (with_force)
    cmd->add_flag("--force", o.force,
                  "override the feasibility gate for large types");
}

RootSystem build_system(const CommonOpts& o) {
  if (o.type.size() != 1)
    throw std::invalid_argument("type label must be a single letter A-G");
  return RootSystem::build(o.type[0], o.rank);
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<std::int64_t> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    coords.push_back(std::stoll(part, &used));
    if (used != part.size())
      throw std::invalid_argument("malformed weight coordinate '" + part + "'");
  }
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("weight must have exactly " +
                                std::to_string(rank) + " coordinates");
  return Weight(coords);
}

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

std::string weight_csv(const Weight& w) {
  std::string s = "\"";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += " ";
    s += std::to_string(w[i]);
  }
  return s + "\"";
}

/// One finished report, renderable in all three formats.
struct Report {
  std::string command;
  std::string type;
  int rank = 0;
  Json result;                       // json format
  std::string csv;                   // csv format
  std::string table;                 // table format

  void emit(const CommonOpts& o, std::ostream& out) const {
    std::ofstream file;
    std::ostream* dst = &out;
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw std::invalid_argument("cannot open output path " + o.output);
      dst = &file;
    }
    if (o.format == "json") {
      Json top;
      top["type"] = type;
      top["rank"] = rank;
      top["command"] = command;
      top["result"] = result;
      *dst << top.dump(2) << "\n";
    } else if (o.format == "csv") {
      *dst << csv;
    } else {
      *dst << table;
    }
  }
};

Json decomposition_json(const RootSystem& rs, const Decomposition& d) {
  Json components = Json::array();
  for (const auto& [w, m] : d.sorted_parts(rs)) {
    Json entry;
    entry["weight"] = weight_json(w);
    entry["multiplicity"] = m;
    entry["dimension"] = weyl_dimension(rs, w).str();
    components.push_back(std::move(entry));
  }
  Json r;
  r["components"] = std::move(components);
  r["component_count"] = d.multiplicity_sum().str();
  r["virtual"] = d.is_virtual();
  return r;
}

std::string decomposition_csv(const RootSystem& rs, const Decomposition& d) {
  std::string s = "weight,multiplicity,dimension\n";
  for (const auto& [w, m] : d.sorted_parts(rs))
    s += weight_csv(w) + "," + std::to_string(m) + "," +
         weyl_dimension(rs, w).str() + "\n";
  return s;
}

std::string decomposition_table(const RootSystem& rs, const Decomposition& d,
                                const std::string& title) {
  std::ostringstream s;
  s << title << " (" << rs.name() << ")\n";
  s << std::left << std::setw(18) << "weight" << std::setw(14) << "multiplicity"
    << "dimension\n";
  BigInt dim_total = 0;
  for (const auto& [w, m] : d.sorted_parts(rs)) {
    const BigInt dim = weyl_dimension(rs, w);
    dim_total += m * dim;
    s << std::left << std::setw(18) << w.to_string() << std::setw(14) << m
      << dim.str() << "\n";
  }
  s << "components: " << d.multiplicity_sum().str()
    << "  total dimension: " << dim_total.str() << "\n";
  return s.str();
}

Report make_decomposition_report(const RootSystem& rs, const CommonOpts& o,
                                 const std::string& command,
                                 const Decomposition& d,
                                 const std::string& title) {
  Report r;
  r.command = command;
  r.type = o.type;
  r.rank = o.rank;
  r.result = decomposition_json(rs, d);
  r.csv = decomposition_csv(rs, d);
  r.table = decomposition_table(rs, d, title);
  return r;
}

Report run_decompose_tensor(const CommonOpts& o, const std::string& lambda_s,
                            const std::string& mu_s) {
  const RootSystem rs = build_system(o);
  check_feasible(rs, o.force);
  const Weight lambda = parse_weight(lambda_s, rs.rank());
  const Weight mu = parse_weight(mu_s, rs.rank());
  const Decomposition d = decompose(rs, tensor_character(rs, lambda, mu));
  return make_decomposition_report(
      rs, o, "decompose-tensor", d,
      "V" + lambda.to_string() + " (x) V" + mu.to_string());
}

Report run_verify_kostant(const CommonOpts& o) {
  const RootSystem rs = build_system(o);
  const KostantReport k = verify_kostant(rs, o.force);
  Report r;
  r.command = "verify-kostant";
  r.type = o.type;
  r.rank = o.rank;
  Json result;
  result["conjecture_holds"] = k.conjecture_holds;
  Json support = Json::array();
  for (const auto& [w, m] : k.multiplicities.sorted_parts(rs)) {
    Json e;
    e["weight"] = weight_json(w);
    e["multiplicity"] = m;
    support.push_back(std::move(e));
  }
  result["multiplicities"] = std::move(support);
  result["support_tensor_size"] = k.support_tensor.size();
  result["support_order_size"] = k.support_order.size();
  Json cex = Json::array();
  for (const auto& w : k.counterexamples) cex.push_back(weight_json(w));
  result["counterexamples"] = std::move(cex);
  r.result = std::move(result);

  std::string csv = "weight,multiplicity\n";
  for (const auto& [w, m] : k.multiplicities.sorted_parts(rs))
    csv += weight_csv(w) + "," + std::to_string(m) + "\n";
  r.csv = std::move(csv);

  std::ostringstream t;
  t << "Kostant support check (" << rs.name() << ")\n"
    << "tensor support:    " << k.support_tensor.size() << " weights\n"
    << "dominance support: " << k.support_order.size() << " weights\n"
    << "conjecture holds:  " << (k.conjecture_holds ? "yes" : "NO") << "\n";
  if (!k.counterexamples.empty()) {
    t << "counterexamples:\n";
    for (const auto& w : k.counterexamples) t << "  " << w.to_string() << "\n";
  }
  t << decomposition_table(rs, k.multiplicities, "V(rho) (x) V(rho)");
  r.table = t.str();
  return r;
}

Report run_euler_char(const CommonOpts& o, const std::string& degree_s) {
  const RootSystem rs = build_system(o);
  check_feasible(rs, o.force);
  const GradedCharacter g = exterior_character(rs, /*positive=*/false);
  CharacterElt ch(rs.rank());
  std::string label;
  if (degree_s == "total") {
    ch = g.total();
    label = "total";
  } else {
    const int p = std::stoi(degree_s);
    if (p < 0 || p > g.top_degree())
      throw std::invalid_argument("degree out of range 0.." +
                                  std::to_string(g.top_degree()));
    ch = g.by_degree[static_cast<std::size_t>(p)];
    label = std::to_string(p);
  }
  const Decomposition d = decompose(rs, euler_characteristic(rs, ch));
  Report r = make_decomposition_report(rs, o, "euler-char", d,
                                       "chi_T of polyvectors, degree " + label);
  r.result["degree"] = label;
  return r;
}

Report run_bwb(const CommonOpts& o, const std::string& weight_s) {
  const RootSystem rs = build_system(o);
  const Weight lambda = parse_weight(weight_s, rs.rank());
  const BwbResult b = bwb_line_bundle(rs, lambda);
  Report r;
  r.command = "bwb";
  r.type = o.type;
  r.rank = o.rank;
  Json result;
  result["weight"] = weight_json(lambda);
  result["vanishes"] = b.vanishes;
  if (!b.vanishes) {
    result["degree"] = b.degree;
    result["dual_highest_weight"] = weight_json(b.dual_highest_weight);
    result["dimension"] = weyl_dimension(rs, b.dual_highest_weight).str();
  }
  r.result = std::move(result);
  if (b.vanishes) {
    r.csv = "vanishes,degree,dual_highest_weight\ntrue,,\n";
    r.table = "H^i(G/B, L" + lambda.to_string() + ") = 0 for all i\n";
  } else {
    r.csv = "vanishes,degree,dual_highest_weight\nfalse," +
            std::to_string(b.degree) + "," + weight_csv(b.dual_highest_weight) +
            "\n";
    r.table = "H^" + std::to_string(b.degree) + "(G/B, L" + lambda.to_string() +
              ") = V" + b.dual_highest_weight.to_string() + "^*" +
              (b.dual_highest_weight.is_zero() ? " (trivial)" : "") + "\n";
  }
  return r;
}

Report run_wahl(const CommonOpts& o) {
  const RootSystem rs = build_system(o);
  check_feasible(rs, o.force);
  const Decomposition d = wahl_h0(rs);
  return make_decomposition_report(rs, o, "wahl", d,
                                   "H^0 of the (n-1)-st polyvector bundle");
}

Report run_report_hh(const CommonOpts& o) {
  const RootSystem rs = build_system(o);
  const HhComponentReport h = hh_component_report(rs, o.force);
  Report r;
  r.command = "report-hh";
  r.type = o.type;
  r.rank = o.rank;
  Json entries = Json::array();
  for (const auto& e : h.entries) {
    Json j;
    j["weight"] = weight_json(e.lambda);
    j["multiplicity_lower_bound"] = e.multiplicity_lower_bound;
    j["passes_candidate_filter"] = e.passes_candidate_filter;
    entries.push_back(std::move(j));
  }
  Json result;
  result["note"] =
      "multiplicities are lower bounds for the total cohomology of the "
      "polyvector bundle, not exact values";
  result["entries"] = std::move(entries);
  r.result = std::move(result);

  std::string csv = "weight,lower_bound,passes_filter\n";
  for (const auto& e : h.entries)
    csv += weight_csv(e.lambda) + "," + std::to_string(e.multiplicity_lower_bound) +
           "," + (e.passes_candidate_filter ? "true" : "false") + "\n";
  r.csv = std::move(csv);

  std::ostringstream t;
  t << "Lower bounds on components of H^*(G/B, poly vectors) (" << rs.name()
    << ")\n"
    << "(bounds only; higher cohomology can add components)\n"
    << std::left << std::setw(18) << "weight" << std::setw(14) << "lower bound"
    << "candidate filter\n";
  for (const auto& e : h.entries)
    t << std::left << std::setw(18) << e.lambda.to_string() << std::setw(14)
      << e.multiplicity_lower_bound
      << (e.passes_candidate_filter ? "pass" : "FLAGGED") << "\n";
  r.table = t.str();
  return r;
}

Report run_dominant_below(const CommonOpts& o, const std::string& weight_s) {
  const RootSystem rs = build_system(o);
  const Weight mu = parse_weight(weight_s, rs.rank());
  const std::vector<Weight> below = rs.dominant_below(mu);
  Report r;
  r.command = "dominant-below";
  r.type = o.type;
  r.rank = o.rank;
  Json weights = Json::array();
  for (const auto& w : below) weights.push_back(weight_json(w));
  Json result;
  result["count"] = below.size();
  result["weights"] = std::move(weights);
  r.result = std::move(result);
  std::string csv = "weight\n";
  for (const auto& w : below) csv += weight_csv(w) + "\n";
  r.csv = std::move(csv);
  std::ostringstream t;
  t << below.size() << " dominant weights below " << mu.to_string() << " ("
    << rs.name() << ")\n";
  for (const auto& w : below) t << "  " << w.to_string() << "\n";
  r.table = t.str();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact character computations for flag-variety polyvector fields"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string lambda_s, mu_s, weight_s, degree_s = "total";

  auto* dt = app.add_subcommand("decompose-tensor",
                                "decompose V(lambda) (x) V(mu)");
  add_common(dt, opts, true);
  dt->add_option("--lambda", lambda_s, "highest weight, comma-separated")->required();
  dt->add_option("--mu", mu_s, "highest weight, comma-separated")->required();

  auto* vk = app.add_subcommand("verify-kostant",
                                "compare tensor support with the 2rho interval");
  add_common(vk, opts, true);

  auto* ec = app.add_subcommand("euler-char",
                                "chi_T of a polyvector bundle degree");
  add_common(ec, opts, true);
  ec->add_option("--degree", degree_s, "exterior degree p, or 'total'")
      ->capture_default_str();

  auto* bw = app.add_subcommand("bwb", "Borel-Weil-Bott for a line bundle");
  add_common(bw, opts, false);
  bw->add_option("--weight", weight_s, "lambda of L(lambda)")->required();

  auto* wa = app.add_subcommand("wahl", "H^0 of the (n-1)-st polyvector bundle");
  add_common(wa, opts, true);

  auto* hh = app.add_subcommand("report-hh",
                                "multiplicity lower bounds below 2rho");
  add_common(hh, opts, true);

  auto* db = app.add_subcommand("dominant-below",
                                "dominant weights below mu in dominance order");
  add_common(db, opts, false);
  db->add_option("--weight", weight_s, "dominant weight mu")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report report;
    if (dt->parsed()) report = run_decompose_tensor(opts, lambda_s, mu_s);
    else if (vk->parsed()) report = run_verify_kostant(opts);
    else if (ec->parsed()) report = run_euler_char(opts, degree_s);
    else if (bw->parsed()) report = run_bwb(opts, weight_s);
    else if (wa->parsed()) report = run_wahl(opts);
    else if (hh->parsed()) report = run_report_hh(opts);
    else report = run_dominant_below(opts, weight_s);
    report.emit(opts, out);
    return 0;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << " (pass --force to override)\n";
    return 3;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polyvec
