#include "hkts/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace hkts::catalog {

namespace {

Integrand vec2(std::function<double(double)> f0, std::function<double(double)> f1) {
  return {2, [f0 = std::move(f0), f1 = std::move(f1)](double t) {
            return LatticeElement({f0(t), f1(t)});
          }};
}

double oscillatory(double t) {
  // Derivative of t^2 sin(t^-2); HK-integrable but not absolutely so.
  if (t == 0.0) return 0.0;
  const double w = 1.0 / (t * t);
  return 2.0 * t * std::sin(w) - (2.0 / t) * std::cos(w);
}

std::vector<Problem> build_problems() {
  std::vector<Problem> ps;
  const TimeScale unit = scale("unit-interval");
  const TimeScale grid = scale("grid-0-5");
  const TimeScale hybrid = scale("hybrid");
  const TimeScale q = scale("qscale");
  const TimeScale cantor3 = scale("cantor3");

  ps.push_back({"one-on-hybrid", TsInterval(hybrid, 0.0, 3.0),
                Integrand::scalar([](double) { return 1.0; }), true,
                LatticeElement::scalar(3.0)});
  ps.push_back({"t-on-unit", TsInterval(unit, 0.0, 1.0),
                Integrand::scalar([](double t) { return t; }), true,
                LatticeElement::scalar(0.5)});
  ps.push_back({"t2-on-unit", TsInterval(unit, 0.0, 1.0),
                Integrand::scalar([](double t) { return t * t; }), true,
                LatticeElement::scalar(1.0 / 3.0)});
  ps.push_back({"sin-on-unit", TsInterval(unit, 0.0, 1.0),
                Integrand::scalar([](double t) { return std::sin(t); }), true,
                LatticeElement::scalar(1.0 - std::cos(1.0))});
  ps.push_back({"t2-on-grid", TsInterval(grid, 0.0, 5.0),
                Integrand::scalar([](double t) { return t * t; }), true,
                LatticeElement::scalar(30.0)});
  ps.push_back({"t-on-hybrid", TsInterval(hybrid, 0.0, 3.0),
                Integrand::scalar([](double t) { return t; }), true,
                LatticeElement::scalar(4.25)});
  // 0*(1/8) + (1/8)^2 + (1/4)^2 + (1/2)^2 over the geometric jumps.
  ps.push_back({"t-on-qscale", TsInterval(q, 0.0, 1.0),
                Integrand::scalar([](double t) { return t; }), true,
                LatticeElement::scalar(21.0 / 64.0)});
  ps.push_back({"t-on-cantor3", TsInterval(cantor3, 0.0, 1.0),
                Integrand::scalar([](double t) { return t; }), true, std::nullopt});
  ps.push_back({"vec-t-one-on-unit", TsInterval(unit, 0.0, 1.0),
                vec2([](double t) { return t; }, [](double) { return 1.0; }), true,
                LatticeElement({0.5, 1.0})});
  ps.push_back({"oscillatory-showcase", TsInterval(unit, 0.0, 1.0),
                Integrand::scalar(oscillatory), false,
                LatticeElement::scalar(std::sin(1.0))});
  return ps;
}

}  // namespace

TimeScale scale(const std::string& name) {
  if (name == "unit-interval") return TimeScale::interval(0.0, 1.0);
  if (name == "grid-0-5") return TimeScale::uniform_grid(0.0, 5.0, 1.0);
  if (name == "hybrid") return TimeScale({{0.0, 1.0}, {1.5, 1.5}, {2.0, 3.0}});
  if (name == "qscale") return TimeScale::geometric(0.5, 1.0, 3);
  if (name == "cantor3") return TimeScale::cantor(3);
  throw std::invalid_argument("unknown catalog scale: " + name);
}

std::vector<std::string> scale_names() {
  return {"unit-interval", "grid-0-5", "hybrid", "qscale", "cantor3"};
}

const std::vector<Problem>& problems() {
  static const std::vector<Problem> ps = build_problems();
  return ps;
}

const Problem& problem(const std::string& name) {
  for (const auto& p : problems())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown catalog problem: " + name);
}

FunctionSequence sequence(const std::string& name, const TimeScale&) {
  if (name == "linear-shrink") {
    return {1,
            [](int n) {
              return Integrand::scalar([n](double t) { return t * (1.0 - 1.0 / n); });
            },
            Integrand::scalar([](double t) { return t; })};
  }
  if (name == "constant") {
    return {1, [](int) { return Integrand::scalar([](double) { return 1.0; }); },
            Integrand::scalar([](double) { return 1.0; })};
  }
  if (name == "plus-inv-n") {
    return {1,
            [](int n) {
              return Integrand::scalar([n](double t) { return t + 1.0 / n; });
            },
            Integrand::scalar([](double t) { return t; })};
  }
  if (name == "mass-concentration-counterexample") {
    // I(f_n) = 1 for every n while the pointwise limit is 0.
    return {1,
            [](int n) {
              return Integrand::scalar([n](double t) {
                return (t > 0.0 && t < 1.0 / n) ? static_cast<double>(n) : 0.0;
              });
            },
            Integrand::scalar([](double) { return 0.0; })};
  }
  throw std::invalid_argument("unknown catalog sequence: " + name);
}

std::vector<std::string> sequence_names() {
  return {"linear-shrink", "constant", "plus-inv-n", "mass-concentration-counterexample"};
}

std::vector<Regulator> regulators() {
  std::vector<Regulator> rs;
  rs.push_back(Regulator({LatticeElement::scalar(1.0)}, 0.5));
  {
    std::vector<LatticeElement> rows;
    for (int i = 1; i <= 8; ++i) rows.push_back(LatticeElement::scalar(std::pow(2.0, -i)));
    rs.push_back(Regulator(std::move(rows), 0.5));
  }
  rs.push_back(Regulator({LatticeElement({1.0, 2.0})}, 0.5));
  rs.push_back(Regulator::zero(1, 0.5));
  return rs;
}

}  // namespace hkts::catalog
