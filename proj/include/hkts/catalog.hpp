#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkts/convergence.hpp"
#include "hkts/integrator.hpp"
#include "hkts/riesz.hpp"
#include "hkts/timescale.hpp"

namespace hkts::catalog {

/// Named integration problem with an independently known value where one
/// exists (closed form or the quadrature/jump oracle).
struct Problem {
  std::string name;
  TsInterval interval;
  Integrand f;
  bool oracle_eligible = true;
  std::optional<LatticeElement> closed_form;
};

TimeScale scale(const std::string& name);  // unit-interval, grid-0-5, hybrid, qscale, cantor3
std::vector<std::string> scale_names();

const std::vector<Problem>& problems();
const Problem& problem(const std::string& name);

FunctionSequence sequence(const std::string& name, const TimeScale& domain);
std::vector<std::string> sequence_names();

std::vector<Regulator> regulators();  // canonical desk-scale regulators

}  // namespace hkts::catalog
