#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "hkts/catalog.hpp"
#include "hkts/expr.hpp"
#include "hkts/integrator.hpp"
#include "hkts/serialize.hpp"
#include "hkts/verify.hpp"

namespace {

using nlohmann::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  json j;
  in >> j;
  return j;
}

struct Job {
  hkts::TsInterval interval;
  hkts::Integrand f;
  hkts::LatticeElement tol;
  hkts::HkConfig hk;
  bool oracle = false;
};

Job parse_job(const json& cfg, uint64_t seed_override, bool has_seed_override) {
  hkts::TimeScale scale = hkts::timescale_from_json(cfg.at("timescale"));
  const auto& iv = cfg.at("interval");
  hkts::TsInterval interval(std::move(scale), iv.at(0).get<double>(), iv.at(1).get<double>());

  const std::string text = cfg.at("expr").get<std::string>();
  auto parsed = hkts::expr::parse(text);
  if (!parsed.ok()) throw std::invalid_argument(parsed.error->render());
  const auto vars = hkts::expr::free_vars(parsed.ast);
  for (const auto& v : vars)
    if (v != "t") throw std::invalid_argument("unknown variable in expr: " + v);
  const int dim = hkts::expr::dimension(parsed.ast);
  if (cfg.contains("space")) {
    const auto& sp = cfg.at("space");
    const int want = sp.is_string() ? 1 : sp.at("dim").get<int>();
    if (want != dim)
      throw std::invalid_argument("space dim does not match expr vector arity");
  }
  hkts::Integrand f{dim, [ast = parsed.ast](double t) { return hkts::expr::eval(ast, t); }};

  hkts::LatticeElement tol;
  const auto& tj = cfg.at("tolerance");
  if (tj.is_number()) {
    tol = hkts::LatticeElement::constant(dim, tj.get<double>());
  } else {
    std::vector<double> v = tj.get<std::vector<double>>();
    tol = hkts::LatticeElement(std::move(v));
  }
  if (!hkts::leq(hkts::LatticeElement::zeros(dim), tol) || hkts::is_zero(tol))
    throw std::invalid_argument("tolerance must be positive");

  hkts::HkConfig hk;
  hk.seed = cfg.value("seed", 0ULL);
  if (has_seed_override) hk.seed = seed_override;
  hk.samples_per_level = cfg.value("samples_per_level", 8);
  hk.max_levels = cfg.value("max_levels", 40);
  hk.initial_scale = cfg.value("initial_scale", 0.25);

  return Job{std::move(interval), std::move(f), std::move(tol), hk,
             cfg.value("oracle", false)};
}

int cmd_integrate(const std::string& config_path, uint64_t seed, bool has_seed) {
  const Job job = parse_job(load_config(config_path), seed, has_seed);
  const hkts::IntegralResult res = hkts::hk_integrate(job.f, job.interval, job.tol, job.hk);
  json rep = hkts::to_json(res);
  if (job.oracle) {
    const hkts::LatticeElement oracle = hkts::oracle_integrate(job.f, job.interval);
    rep["oracle"] = hkts::to_json(oracle);
    rep["oracle_gap"] = hkts::to_json(hkts::abs(res.value - oracle));
  }
  std::cout << rep.dump() << "\n";
  std::cerr << (res.converged ? "converged" : "NOT converged") << " after "
            << res.levels_used << " levels, " << res.partitions_evaluated
            << " partitions\n";
  return res.converged ? 0 : 2;
}

int cmd_partition(const std::string& config_path, double dl, double dr, uint64_t seed,
                  bool has_seed) {
  const json cfg = load_config(config_path);
  hkts::TimeScale scale = hkts::timescale_from_json(cfg.at("timescale"));
  const auto& iv = cfg.at("interval");
  hkts::TsInterval interval(std::move(scale), iv.at(0).get<double>(), iv.at(1).get<double>());
  const hkts::DeltaGauge gauge = hkts::DeltaGauge::constant(interval, dl, dr);
  const hkts::TaggedPartition p =
      has_seed ? hkts::random_fine_partition(interval, gauge, seed)
               : hkts::cousin_partition(interval, gauge);
  json rep = hkts::to_json(p, interval);
  rep["fine"] = hkts::is_fine(p, gauge);
  std::cout << rep.dump() << "\n";
  std::cerr << p.size() << " items, fine=" << (rep["fine"].get<bool>() ? "yes" : "no")
            << ", full=" << (rep["full"].get<bool>() ? "yes" : "no") << "\n";
  return rep["fine"].get<bool>() && rep["full"].get<bool>() ? 0 : 1;
}

int cmd_verify(const std::string& suite, uint64_t seed, bool as_json) {
  const auto results = hkts::verify::run(suite, seed);
  bool all = true;
  json out = json::array();
  for (const auto& s : results) {
    for (const auto& c : s.cases) {
      all = all && c.pass;
      std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << s.suite << "/" << c.name
                << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
      out.push_back({{"suite", s.suite}, {"case", c.name}, {"pass", c.pass}});
    }
  }
  if (as_json) std::cout << out.dump() << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Henstock-Kurzweil delta integration on time scales"};
  app.require_subcommand(1);

  std::string config_path;
  std::string suite = "all";
  uint64_t seed = 0;
  double dl = 0.25, dr = 0.25;
  bool as_json = false;

  auto* integrate = app.add_subcommand("integrate", "run the gauge-refinement engine");
  integrate->add_option("--config", config_path, "job config JSON")->required();
  auto* int_seed = integrate->add_option("--seed", seed, "seed override");

  auto* partition = app.add_subcommand("partition", "emit a fine tagged partition");
  partition->add_option("--config", config_path, "scale/interval config JSON")->required();
  partition->add_option("--dL", dl, "left gauge radius");
  partition->add_option("--dR", dr, "right gauge radius");
  auto* part_seed = partition->add_option("--seed", seed, "randomized partition seed");

  auto* verify = app.add_subcommand("verify", "run a theorem suite over the catalog");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "seed");
  verify->add_flag("--json", as_json, "emit per-case JSON on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (integrate->parsed())
      return cmd_integrate(config_path, seed, int_seed->count() > 0);
    if (partition->parsed())
      return cmd_partition(config_path, dl, dr, seed, part_seed->count() > 0);
    return cmd_verify(suite, seed, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
