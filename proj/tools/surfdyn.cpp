#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "surfdyn/io/json_io.hpp"
#include "surfdyn/verify/suite.hpp"

using namespace surfdyn;
using io::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void write_json(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::InvalidInput, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

ScalarMode parse_mode(const std::string& s) { return s == "float" ? ScalarMode::Float : ScalarMode::Exact; }

template <class F>
json run_normalize(const Jet<F>& f, const io::GermDocument& doc, int order) {
  const DiagonalGroup g = doc.group.value_or(DiagonalGroup::trivial(f.dimension()));
  return io::normal_form_to_json(poincare_dulac(f, g, doc.k_twist.value_or(1), order));
}

int jet_order(const AnyJet& j) {
  return std::visit([](const auto& f) { return f.order(); }, j);
}

json normalize(const json& input, std::optional<int> requested, ScalarMode mode) {
  const auto doc = io::germ_from_json(input);
  const int order = requested.value_or(jet_order(doc.jet));
  if (const auto* exact = std::get_if<Jet<ExactScalar>>(&doc.jet))
    return mode == ScalarMode::Float ? run_normalize(to_float(*exact), doc, order) : run_normalize(*exact, doc, order);
  require(mode == ScalarMode::Float, ErrorCode::InvalidInput, "floating coefficients need --mode float");
  return run_normalize(std::get<Jet<FloatScalar>>(doc.jet), doc, order);
}

json linearize(const json& input, std::optional<int> requested, ScalarMode mode) {
  const auto doc = io::germ_from_json(input);
  const int order = requested.value_or(jet_order(doc.jet));
  if (const auto* exact = std::get_if<Jet<ExactScalar>>(&doc.jet))
    return mode == ScalarMode::Float ? io::koenigs_to_json(koenigs(to_float(*exact), order))
                                     : io::koenigs_to_json(koenigs(*exact, order));
  require(mode == ScalarMode::Float, ErrorCode::InvalidInput, "floating coefficients need --mode float");
  return io::koenigs_to_json(koenigs(std::get<Jet<FloatScalar>>(doc.jet), order));
}

json graph_shape(const DualGraph& g) {
  const auto s = shape(g);
  json out{{"kind", to_string(s.kind)}, {"branch_points", s.branch_points}, {"tree", is_tree(g)}};
  if (s.center) out["center"] = *s.center;
  return out;
}

json graph_check(const DualGraph& g) {
  const auto m = intersection_matrix(g);
  json minors = json::array();
  for (const auto& x : leading_minors_of_negation(m)) minors.push_back(x.get_str());
  return {{"negative_definite", is_negative_definite(m)},
          {"leading_minors", minors},
          {"snc", g.is_snc()},
          {"connected", g.connected()},
          {"shape", graph_shape(g)}};
}

json graph_contract(const DualGraph& g) {
  const auto model = minimal_negative_model(g);
  return {{"graph", io::graph_to_json(model.graph)},
          {"contracted", model.contracted},
          {"smooth_point", model.smooth_point},
          {"shape", model.smooth_point ? json(nullptr) : graph_shape(model.graph)}};
}

json orbifold_cover(const OrbifoldSurface& s, long degree) {
  if (degree <= 0) degree = canonical_cover_degree(s);
  const auto c = smooth_cover_data(s, degree);
  return {{"degree", c.degree}, {"genus", c.genus.get_str()}, {"integral", c.integral}};
}

json orbifold_degree(const json& input) {
  const auto bundle = io::orbibundle_from_json(input);
  require(bundle.has_value(), ErrorCode::InvalidInput, "orbifold document has no bundle");
  bundle->validate();
  return {{"orbidegree", orbidegree(*bundle).get_str()}, {"contractible", is_contractible(*bundle)}};
}

int run_verify(bool serial, std::uint64_t seed) {
  verify::SuiteOptions opt;
  opt.parallel = !serial;
  opt.seed = seed;
  bool all = true;
  for (const auto& r : verify::full_suite(opt)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
              << " s): " << r.detail << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contracting germs on normal surface singularities"};
  app.require_subcommand(1);

  std::string input, output, mode = "exact";
  int order = kDefaultOrder;
  const auto add_io = [&](CLI::App* sub, bool needs_input = true) {
    auto* opt = sub->add_option("-i,--input", input, "input JSON file");
    if (needs_input) opt->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", output, "output JSON file (stdout when absent)");
  };
  const auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("-n,--order", order, "truncation order")->check(CLI::Range(1, 64));
    sub->add_option("-m,--mode", mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}));
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "equivariant Poincare-Dulac normal form of a germ");
  add_io(normalize_cmd);
  add_numeric(normalize_cmd);

  auto* koenigs_cmd = app.add_subcommand("koenigs", "Koenigs linearization of (z, alpha w (1 + eps))");
  add_io(koenigs_cmd);
  add_numeric(koenigs_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "dual graph utilities");
  graph_cmd->require_subcommand(1);
  auto* graph_check_cmd = graph_cmd->add_subcommand("check", "intersection form and negative definiteness");
  auto* graph_contract_cmd = graph_cmd->add_subcommand("contract", "minimal negative model");
  auto* graph_shape_cmd = graph_cmd->add_subcommand("shape", "chain, cycle, star or general tree");
  for (auto* sub : {graph_check_cmd, graph_contract_cmd, graph_shape_cmd}) add_io(sub);

  auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions");
  hj_cmd->require_subcommand(1);
  long hj_m = 0, hj_q = 0;
  std::vector<long> weights;
  auto* hj_expand_cmd = hj_cmd->add_subcommand("expand", "chain weights of (m, q)");
  hj_expand_cmd->add_option("m", hj_m)->required();
  hj_expand_cmd->add_option("q", hj_q)->required();
  auto* hj_fold_cmd = hj_cmd->add_subcommand("fold", "(m, q) of a chain");
  hj_fold_cmd->add_option("weights", weights)->required()->expected(1, -1);

  auto* orb_cmd = app.add_subcommand("orbifold", "orbifold and orbibundle numerics");
  orb_cmd->require_subcommand(1);
  long cover_degree = 0;
  auto* orb_classify_cmd = orb_cmd->add_subcommand("classify", "Euler characteristic and geometrization");
  auto* orb_cover_cmd = orb_cmd->add_subcommand("cover", "genus of the smooth cover");
  orb_cover_cmd->add_option("-d,--degree", cover_degree, "cover degree NN (canonical when absent)");
  auto* orb_degree_cmd = orb_cmd->add_subcommand("degree", "orbidegree of the bundle member");
  for (auto* sub : {orb_classify_cmd, orb_cover_cmd, orb_degree_cmd}) add_io(sub);

  auto* classify_cmd = app.add_subcommand("classify", "classify a singularity document");
  add_io(classify_cmd);
  add_numeric(classify_cmd);

  bool serial = false;
  std::uint64_t seed = verify::SuiteOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
  verify_cmd->add_flag("--serial", serial, "run trial batches serially");
  verify_cmd->add_option("--seed", seed, "base seed");

  CLI11_PARSE(app, argc, argv);

  // Without --order, germ inputs are normalized at their own truncation order.
  const auto order_for = [&](const CLI::App* sub) -> std::optional<int> {
    if (sub->count("--order") > 0) return order;
    return std::nullopt;
  };

  try {
    if (verify_cmd->parsed()) return run_verify(serial, seed);
    json result;
    if (normalize_cmd->parsed()) {
      result = normalize(read_json(input), order_for(normalize_cmd), parse_mode(mode));
    } else if (koenigs_cmd->parsed()) {
      result = linearize(read_json(input), order_for(koenigs_cmd), parse_mode(mode));
    } else if (graph_check_cmd->parsed()) {
      result = graph_check(io::graph_from_json(read_json(input)));
    } else if (graph_contract_cmd->parsed()) {
      result = graph_contract(io::graph_from_json(read_json(input)));
    } else if (graph_shape_cmd->parsed()) {
      result = graph_shape(io::graph_from_json(read_json(input)));
    } else if (hj_expand_cmd->parsed()) {
      result = {{"m", hj_m}, {"q", hj_q}, {"weights", hj_expand(hj_m, hj_q).weights}};
    } else if (hj_fold_cmd->parsed()) {
      const auto c = hj_fold(weights);
      result = {{"m", c.m}, {"q", c.q}, {"dual_q", dual_q(c.m, c.q)}};
    } else if (orb_classify_cmd->parsed()) {
      const auto s = io::orbifold_from_json(read_json(input));
      result = {{"orbifold", io::orbifold_to_json(s)},
                {"euler_characteristic", euler_characteristic(s).get_str()},
                {"type", to_string(classify_orbifold(s))}};
    } else if (orb_cover_cmd->parsed()) {
      result = orbifold_cover(io::orbifold_from_json(read_json(input)), cover_degree);
    } else if (orb_degree_cmd->parsed()) {
      result = orbifold_degree(read_json(input));
    } else if (classify_cmd->parsed()) {
      const auto doc = io::admissible_from_json(read_json(input));
      int n = kDefaultOrder;
      if (const auto given = order_for(classify_cmd))
        n = *given;
      else if (doc.chain && doc.chain->germ)
        n = std::min(n, jet_order(*doc.chain->germ));
      result = io::report_to_json(classify_singularity(doc, n, parse_mode(mode)));
    }
    write_json(result, output);
    return 0;
  } catch (const Error& e) {
    const json err = io::error_to_json(e);
    std::cerr << err.dump() << "\n";
    if (classify_cmd->parsed() && !output.empty()) write_json(err, output);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
}
