#pragma once

#include <json.hpp>

#include "hkts/gauge.hpp"
#include "hkts/integrator.hpp"
#include "hkts/riesz.hpp"
#include "hkts/timescale.hpp"

namespace hkts {

inline nlohmann::json to_json(const LatticeElement& x) {
  return nlohmann::json(x.coords());
}

inline nlohmann::json to_json(const Regulator& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& u : r.rows()) rows.push_back(u.coords());
  return {{"base", r.base()}, {"rows", rows}};
}

inline nlohmann::json to_json(const IntegralResult& r) {
  return {{"value", to_json(r.value)},
          {"spread", to_json(r.spread)},
          {"converged", r.converged},
          {"levels", r.levels_used},
          {"partitions", r.partitions_evaluated},
          {"regulator", to_json(r.fitted_regulator)}};
}

inline nlohmann::json to_json(const TaggedPartition& p, const TsInterval& interval) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : p.items)
    items.push_back({{"left", it.left}, {"right", it.right}, {"tag", it.tag}});
  return {{"items", items}, {"full", is_full(p, interval)}};
}

inline nlohmann::json to_json(const TimeScale& ts) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : ts.components()) {
    if (c.is_point())
      comps.push_back({{"point", c.lo}});
    else
      comps.push_back({{"interval", {c.lo, c.hi}}});
  }
  return {{"components", comps}};
}

/// Accepts {"components":[{"interval":[lo,hi]}|{"point":p},...]} or
/// {"generator":{"type":"uniform"|"qscale"|"cantor"|"interval", ...}}.
inline TimeScale timescale_from_json(const nlohmann::json& spec) {
  if (spec.contains("components")) {
    std::vector<Component> comps;
    for (const auto& c : spec.at("components")) {
      if (c.contains("interval")) {
        const auto& iv = c.at("interval");
        comps.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
      } else if (c.contains("point")) {
        const double p = c.at("point").get<double>();
        comps.push_back({p, p});
      } else {
        throw std::invalid_argument("time scale component needs 'interval' or 'point'");
      }
    }
    return TimeScale(std::move(comps));
  }
  if (spec.contains("generator")) {
    const auto& g = spec.at("generator");
    const std::string type = g.at("type").get<std::string>();
    if (type == "uniform")
      return TimeScale::uniform_grid(g.at("start").get<double>(), g.at("stop").get<double>(),
                                     g.at("step").get<double>());
    if (type == "qscale")
      return TimeScale::geometric(g.at("q").get<double>(), g.at("s").get<double>(),
                                  g.at("k").get<int>());
    if (type == "cantor") return TimeScale::cantor(g.at("depth").get<int>());
    if (type == "interval")
      return TimeScale::interval(g.at("lo").get<double>(), g.at("hi").get<double>());
    throw std::invalid_argument("unknown time scale generator: " + type);
  }
  throw std::invalid_argument("time scale spec needs 'components' or 'generator'");
}

}  // namespace hkts
