// Command-line front end. Subcommands: invariants, classify, epower,
// braid-check, measure, basis-search, catalog. Every command is
// deterministic for fixed flags and seed; --json emits a single JSON
// document with byte-identical output across runs.
//
// Exit codes: 0 success (and, for check commands, the check passed);
// 1 check failed; 2 invalid input or usage.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qent/braid.hpp"
#include "qent/classify.hpp"
#include "qent/epower.hpp"
#include "qent/gates.hpp"
#include "qent/matrix_io.hpp"
#include "qent/states.hpp"

using nlohmann::json;
using namespace qent;

namespace {

constexpr const char* kVersion = "qent 0.1.0";
constexpr double kCatalogUnitarityTol = 1e-10;
constexpr double kFileUnitarityTol = 1e-8;  // admits text rounding

struct Options {
  bool as_json = false;
  int digits = 12;
};

// ---- formatting -----------------------------------------------------------

double scrub(double x) { return x + 0.0; }  // drops negative zero

std::string fmt_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, scrub(x));
  return buf;
}

std::string fmt_complex(const Complex& z, int digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, scrub(z.real()), digits,
                scrub(z.imag()));
  return buf;
}

json json_complex(const Complex& z) {
  return json::array({scrub(z.real()), scrub(z.imag())});
}

json json_complex_list(std::span<const Complex> zs) {
  json arr = json::array();
  for (const Complex& z : zs) arr.push_back(json_complex(z));
  return arr;
}

// ---- input parsing --------------------------------------------------------

// Accepts "1", "-0.25", "1e-3", "i", "-i", "2i", "0.5+0.866i", "1-2e-3i".
Complex parse_complex(const std::string& token) {
  std::string t = token;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty()) throw std::invalid_argument("empty number");
  const auto to_double = [](const std::string& s) {
    if (s == "+" || s.empty()) return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };
  if (t.back() != 'i' && t.back() != 'I')
    return Complex(to_double(t), 0.0);
  t.pop_back();
  // split off the real part, if any: last +/- not part of an exponent
  for (std::size_t pos = t.size(); pos-- > 1;) {
    if ((t[pos] == '+' || t[pos] == '-') &&
        t[pos - 1] != 'e' && t[pos - 1] != 'E') {
      return Complex(to_double(t.substr(0, pos)), to_double(t.substr(pos)));
    }
  }
  return Complex(0.0, to_double(t));
}

std::vector<Complex> parse_params(const std::string& csv) {
  std::vector<Complex> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string tok =
        csv.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_real_params(const std::string& csv) {
  std::vector<double> out;
  for (const Complex& z : parse_params(csv)) {
    if (z.imag() != 0.0)
      throw std::invalid_argument("expected real parameters");
    out.push_back(z.real());
  }
  return out;
}

// ---- gate/state resolution ------------------------------------------------

struct GateFlags {
  std::string name;
  std::string params_csv;
  std::string file;
};

void add_gate_flags(CLI::App* cmd, GateFlags& flags) {
  cmd->add_option("--gate", flags.name, "catalog gate name");
  cmd->add_option("--params", flags.params_csv,
                  "comma-separated gate parameters (complex: a+bi)");
  cmd->add_option("--file", flags.file, "matrix JSON file (dim + entries)");
}

Gate resolve_gate(const GateFlags& flags, json& inputs) {
  if (flags.name.empty() == flags.file.empty()) {
    throw std::invalid_argument("specify exactly one of --gate or --file");
  }
  if (!flags.file.empty()) {
    inputs["source"] = "file";
    inputs["file"] = flags.file;
    return gate_from_matrix(flags.file, read_matrix_json(flags.file),
                            kFileUnitarityTol);
  }
  const std::vector<Complex> params = parse_params(flags.params_csv);
  inputs["source"] = "catalog";
  inputs["gate"] = flags.name;
  inputs["params"] = json_complex_list(params);
  return catalog_gate(flags.name, params);
}

void emit(const Options& opt, const json& doc,
          const std::function<void()>& human) {
  if (opt.as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    human();
  }
}

// ---- commands --------------------------------------------------------------

int cmd_invariants(const Options& opt, const GateFlags& flags) {
  json doc;
  doc["command"] = "invariants";
  doc["version"] = kVersion;
  json inputs;
  const Gate g = resolve_gate(flags, inputs);
  doc["inputs"] = inputs;

  const InvariantPair inv = invariants(g);
  const SquareMatrix m = m_matrix(g);
  const auto ev = eigenvalues4(m);

  doc["results"]["g1"] = json_complex(inv.g1);
  doc["results"]["g2"] = json_complex(inv.g2);
  doc["results"]["m_eigenvalues"] = json_complex_list(ev);
  doc["tolerances"]["unitarity"] =
      flags.file.empty() ? kCatalogUnitarityTol : kFileUnitarityTol;
  doc["tolerances"]["eigenvalue_residual"] = 1e-10;

  emit(opt, doc, [&] {
    std::cout << "gate: " << (flags.file.empty() ? flags.name : flags.file)
              << "\n";
    std::cout << "G1: " << fmt_complex(inv.g1, opt.digits) << "\n";
    std::cout << "G2: " << fmt_complex(inv.g2, opt.digits) << "\n";
    std::cout << "m(U) eigenvalues:";
    for (const Complex& z : ev) std::cout << " " << fmt_complex(z, opt.digits);
    std::cout << "\n";
    std::cout << "tolerances: unitarity "
              << (flags.file.empty() ? kCatalogUnitarityTol : kFileUnitarityTol)
              << ", eigenvalue residual 1e-10\n";
  });
  return 0;
}

int cmd_classify(const Options& opt, const GateFlags& flags, double tol) {
  json doc;
  doc["command"] = "classify";
  doc["version"] = kVersion;
  json inputs;
  const Gate g = resolve_gate(flags, inputs);
  doc["inputs"] = inputs;

  const GateClass cls = classify(g, tol);
  const auto ev = eigenvalues4(m_matrix(g));
  const double dist = hull_origin_distance(ev);

  doc["results"]["class"] = to_string(cls);
  doc["results"]["hull_points"] = json_complex_list(ev);
  doc["results"]["hull_distance"] = dist;
  doc["tolerances"]["classification"] = tol;

  emit(opt, doc, [&] {
    std::cout << "class: " << to_string(cls) << "\n";
    std::cout << "hull points:";
    for (const Complex& z : ev) std::cout << " " << fmt_complex(z, opt.digits);
    std::cout << "\n";
    std::cout << "hull-to-origin distance: " << fmt_real(dist, opt.digits)
              << " (tol " << fmt_real(tol, 6) << ")\n";
  });
  return 0;
}

int cmd_epower(const Options& opt, const GateFlags& flags,
               const std::string& method, int nodes, std::int64_t samples,
               std::uint64_t seed) {
  json doc;
  doc["command"] = "epower";
  doc["version"] = kVersion;
  json inputs;
  const Gate g = resolve_gate(flags, inputs);
  inputs["method"] = method;
  doc["inputs"] = inputs;

  EPowerEstimate est{};
  if (method == "quad") {
    est = entangling_power_quadrature(g, nodes, 2 * nodes);
    doc["inputs"]["nodes_theta"] = nodes;
    doc["inputs"]["nodes_phi"] = 2 * nodes;
  } else if (method == "mc") {
    est = entangling_power_mc(g, samples, seed);
    doc["inputs"]["samples"] = samples;
    doc["seeds"]["mc"] = seed;
  } else if (method == "closed") {
    if (flags.name.empty())
      throw std::invalid_argument(
          "closed form needs a catalog gate; use --method quad for files");
    est = entangling_power_closed_form(flags.name, parse_params(flags.params_csv));
  } else {
    throw std::invalid_argument("unknown method '" + method +
                                "' (quad, mc, closed)");
  }

  doc["results"]["value"] = est.value;
  doc["results"]["method"] = to_string(est.method);
  doc["results"]["nodes_or_samples"] = est.nodes_or_samples;
  if (est.stderr_est) {
    doc["results"]["stderr"] = *est.stderr_est;
  } else if (est.method == EPowerMethod::Quadrature) {
    doc["tolerances"]["quadrature_abs"] = 1e-9;
  } else {
    doc["tolerances"]["closed_form_abs"] = 0.0;  // exact rational/trig value
  }

  emit(opt, doc, [&] {
    std::cout << "entangling power: " << fmt_real(est.value, opt.digits)
              << "\n";
    std::cout << "method: " << to_string(est.method) << "\n";
    if (est.stderr_est)
      std::cout << "stderr: " << fmt_real(*est.stderr_est, opt.digits)
                << " (samples " << est.nodes_or_samples << ", seed " << seed
                << ")\n";
    else if (est.method == EPowerMethod::Quadrature)
      std::cout << "nodes: " << est.nodes_or_samples << " (abs tol 1e-9)\n";
  });
  return 0;
}

int cmd_braid_check(const Options& opt, const GateFlags& flags,
                    const std::string& relation, std::optional<double> tol_opt) {
  json doc;
  doc["command"] = "braid-check";
  doc["version"] = kVersion;
  json inputs;

  SquareMatrix m(4);
  double tol = 0.0;
  if (!flags.file.empty()) {
    if (!flags.name.empty())
      throw std::invalid_argument("specify exactly one of --gate or --file");
    m = read_matrix_json(flags.file);
    inputs["source"] = "file";
    inputs["file"] = flags.file;
    tol = tol_opt.value_or(1e-10);  // user matrices carry text rounding
  } else {
    const Gate g = resolve_gate(flags, inputs);
    m = g.matrix;
    tol = tol_opt.value_or(1e-12);  // exact catalog constants
  }
  inputs["relation"] = relation;
  doc["inputs"] = inputs;

  RelationCheck check{};
  if (relation == "braid") {
    check = check_braid_relation(m, tol);
  } else if (relation == "yang-baxter") {
    check = check_yang_baxter(m, tol);
  } else {
    throw std::invalid_argument("unknown relation '" + relation +
                                "' (braid, yang-baxter)");
  }

  doc["results"]["pass"] = check.ok;
  doc["results"]["residual"] = check.residual;
  doc["tolerances"]["residual"] = tol;

  emit(opt, doc, [&] {
    std::cout << "relation: " << relation << "\n";
    std::cout << (check.ok ? "pass" : "fail") << " (residual "
              << fmt_real(check.residual, opt.digits) << ", tol "
              << fmt_real(tol, 6) << ")\n";
  });
  return check.ok ? 0 : 1;
}

int cmd_measure(const Options& opt, const std::string& state_name,
                const std::string& params_csv, const std::string& file,
                int qubit, const std::string& basis_name) {
  json doc;
  doc["command"] = "measure";
  doc["version"] = kVersion;
  json inputs;

  std::optional<PureState> state;
  if (!file.empty()) {
    if (!state_name.empty())
      throw std::invalid_argument("specify exactly one of --state or --file");
    state = read_state_json(file);
    inputs["source"] = "file";
    inputs["file"] = file;
  } else if (!state_name.empty()) {
    const std::vector<double> params = parse_real_params(params_csv);
    state = catalog_state(state_name, params);
    inputs["source"] = "catalog";
    inputs["state"] = state_name;
    inputs["params"] = params;
  } else {
    throw std::invalid_argument("specify exactly one of --state or --file");
  }
  inputs["qubit"] = qubit;
  inputs["basis"] = basis_name;
  doc["inputs"] = inputs;

  QubitBasis basis;
  if (basis_name == "comp") {
    basis = computational_basis();
  } else if (basis_name == "x") {
    basis = x_basis();
  } else {
    throw std::invalid_argument("unknown basis '" + basis_name +
                                "' (comp, x)");
  }

  const auto records = measure_qubit(*state, qubit, basis);
  doc["tolerances"]["probability_sum"] = 1e-10;
  json outcomes = json::array();
  for (const auto& rec : records) {
    json o;
    o["outcome"] = rec.outcome;
    o["probability"] = rec.probability;
    o["possible"] = rec.possible;
    if (rec.possible) {
      o["residual"] = json_complex_list(rec.residual.amplitudes());
      if (rec.residual.qubits() == 2)
        o["residual_concurrence"] = concurrence(rec.residual);
    }
    outcomes.push_back(std::move(o));
  }
  doc["results"]["outcomes"] = std::move(outcomes);

  emit(opt, doc, [&] {
    std::cout << "basis: " << basis_name
              << " (probability-sum tolerance 1e-10)\n";
    for (const auto& rec : records) {
      std::cout << "outcome " << rec.outcome << ": p = "
                << fmt_real(rec.probability, opt.digits);
      if (!rec.possible) {
        std::cout << " (impossible)\n";
        continue;
      }
      if (rec.residual.qubits() == 2)
        std::cout << ", residual concurrence = "
                  << fmt_real(concurrence(rec.residual), opt.digits);
      std::cout << "\n  residual:";
      for (const Complex& z : rec.residual.amplitudes())
        std::cout << " " << fmt_complex(z, opt.digits);
      std::cout << "\n";
    }
  });
  return 0;
}

int cmd_basis_search(const Options& opt, const GateFlags& flags, int restarts,
                     std::uint64_t seed) {
  json doc;
  doc["command"] = "basis-search";
  doc["version"] = kVersion;
  json inputs;
  const Gate g = resolve_gate(flags, inputs);
  inputs["restarts"] = restarts;
  doc["inputs"] = inputs;
  doc["seeds"]["search"] = seed;

  const BasisSearchResult res = max_min_basis_search(g, restarts, seed);
  doc["results"]["value"] = res.value;
  doc["results"]["basis"] =
      json::array({res.basis.theta1, res.basis.phi1, res.basis.theta2,
                   res.basis.phi2, res.basis.theta3, res.basis.phi3});
  doc["tolerances"]["simplex_diameter"] = 1e-8;

  emit(opt, doc, [&] {
    std::cout << "best min-concurrence: " << fmt_real(res.value, opt.digits)
              << " (restarts " << restarts << ", seed " << seed << ")\n";
    std::cout << "basis parameters (theta1 phi1 theta2 phi2 theta3 phi3):";
    for (double v : {res.basis.theta1, res.basis.phi1, res.basis.theta2,
                     res.basis.phi2, res.basis.theta3, res.basis.phi3})
      std::cout << " " << fmt_real(v, opt.digits);
    std::cout << "\n";
  });
  return 0;
}

int cmd_catalog(const Options& opt, const std::string& gate_name,
                const std::string& params_csv, const std::string& export_path) {
  json doc;
  doc["command"] = "catalog";
  doc["version"] = kVersion;
  doc["results"]["gates"] = catalog_gate_names();
  doc["results"]["states"] = catalog_state_names();

  if (!export_path.empty()) {
    if (gate_name.empty())
      throw std::invalid_argument("--export needs --gate");
    const Gate g = catalog_gate(gate_name, parse_params(params_csv));
    write_matrix_json(g.matrix, export_path);
    doc["results"]["exported"] = export_path;
  }

  emit(opt, doc, [&] {
    std::cout << "gates:";
    for (const auto& n : catalog_gate_names()) std::cout << " " << n;
    std::cout << "\nstates:";
    for (const auto& n : catalog_state_names()) std::cout << " " << n;
    std::cout << "\n";
    if (!export_path.empty())
      std::cout << "wrote " << export_path << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entangling properties of two-qubit gates and braid operators"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "emit a single JSON document");
  app.add_option("--digits", opt.digits, "significant digits in human output")
      ->default_val(12);

  int exit_code = 0;

  GateFlags inv_flags;
  CLI::App* inv = app.add_subcommand("invariants", "local invariants (G1, G2)");
  add_gate_flags(inv, inv_flags);
  inv->callback([&] { exit_code = cmd_invariants(opt, inv_flags); });

  GateFlags cls_flags;
  double cls_tol = 1e-9;
  CLI::App* cls = app.add_subcommand("classify",
                                     "local / perfect-entangler / non-perfect");
  add_gate_flags(cls, cls_flags);
  cls->add_option("--tol", cls_tol, "classification tolerance")
      ->default_val(1e-9);
  cls->callback([&] { exit_code = cmd_classify(opt, cls_flags, cls_tol); });

  GateFlags ep_flags;
  std::string ep_method = "quad";
  int ep_nodes = 16;
  std::int64_t ep_samples = 1000000;
  std::uint64_t ep_seed = 42;
  CLI::App* ep = app.add_subcommand("epower", "entangling power");
  add_gate_flags(ep, ep_flags);
  ep->add_option("--method", ep_method, "quad | mc | closed")
      ->default_val("quad");
  ep->add_option("--nodes", ep_nodes, "Gauss-Legendre nodes per theta axis")
      ->default_val(16);
  ep->add_option("--samples", ep_samples, "Monte Carlo samples")
      ->default_val(1000000);
  ep->add_option("--seed", ep_seed, "Monte Carlo seed")->default_val(42);
  ep->callback([&] {
    exit_code = cmd_epower(opt, ep_flags, ep_method, ep_nodes, ep_samples,
                           ep_seed);
  });

  GateFlags bc_flags;
  std::string bc_relation = "braid";
  double bc_tol = -1.0;
  CLI::App* bc = app.add_subcommand("braid-check",
                                    "braid / Yang-Baxter relation check");
  add_gate_flags(bc, bc_flags);
  bc->add_option("--relation", bc_relation, "braid | yang-baxter")
      ->default_val("braid");
  bc->add_option("--tol", bc_tol,
                 "residual tolerance (default 1e-12 catalog, 1e-10 file)");
  bc->callback([&] {
    exit_code = cmd_braid_check(
        opt, bc_flags, bc_relation,
        bc_tol >= 0.0 ? std::optional<double>(bc_tol) : std::nullopt);
  });

  std::string ms_state, ms_params, ms_file, ms_basis = "comp";
  int ms_qubit = 1;
  CLI::App* ms = app.add_subcommand("measure", "single-qubit measurement");
  ms->add_option("--state", ms_state, "catalog state name");
  ms->add_option("--params", ms_params, "state parameters");
  ms->add_option("--file", ms_file, "state JSON file (qubits + amplitudes)");
  ms->add_option("--qubit", ms_qubit, "qubit to measure (1 = leftmost)")
      ->default_val(1);
  ms->add_option("--basis", ms_basis, "comp | x")->default_val("comp");
  ms->callback([&] {
    exit_code = cmd_measure(opt, ms_state, ms_params, ms_file, ms_qubit,
                            ms_basis);
  });

  GateFlags bs_flags;
  int bs_restarts = 50;
  std::uint64_t bs_seed = 7;
  CLI::App* bs = app.add_subcommand("basis-search",
                                    "max-min concurrence over product bases");
  add_gate_flags(bs, bs_flags);
  bs->add_option("--restarts", bs_restarts, "seeded restarts")->default_val(50);
  bs->add_option("--seed", bs_seed, "search seed")->default_val(7);
  bs->callback([&] {
    exit_code = cmd_basis_search(opt, bs_flags, bs_restarts, bs_seed);
  });

  std::string cat_gate, cat_params, cat_export;
  CLI::App* cat = app.add_subcommand("catalog", "list gates and states");
  cat->add_option("--gate", cat_gate, "gate to export");
  cat->add_option("--params", cat_params, "gate parameters");
  cat->add_option("--export", cat_export, "write the gate matrix to this file");
  cat->callback([&] {
    exit_code = cmd_catalog(opt, cat_gate, cat_params, cat_export);
  });

  // allow global flags (--json, --digits) after the subcommand too
  for (CLI::App* sub : {inv, cls, ep, bc, ms, bs, cat}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
