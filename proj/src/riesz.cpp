#include "hkts/riesz.hpp"

#include <algorithm>

namespace hkts {

Regulator::Regulator(std::vector<LatticeElement> rows, double base)
    : rows_(std::move(rows)), base_(base) {
  if (!(base_ > 0.0 && base_ < 1.0))
    throw std::invalid_argument("regulator base must lie in (0,1)");
  if (rows_.empty())
    throw std::invalid_argument("regulator needs at least one row; use Regulator::zero");
  dim_ = rows_.front().dim();
  for (const auto& u : rows_) {
    if (u.dim() != dim_) throw std::invalid_argument("regulator rows mix spaces");
    if (!leq(LatticeElement::zeros(dim_), u))
      throw std::invalid_argument("regulator rows must be nonnegative");
  }
}

LatticeElement Regulator::entry(int i, int j) const {
  if (i < 1 || i > row_count()) return LatticeElement::zeros(dim_);
  return std::pow(base_, j) * rows_[static_cast<size_t>(i - 1)];
}

LatticeElement Regulator::row_mass() const {
  LatticeElement s = LatticeElement::zeros(dim_);
  for (const auto& u : rows_) s = s + u;
  return s;
}

LatticeElement regulator_eval(const Regulator& r, const EvalMap& phi) {
  LatticeElement v = LatticeElement::zeros(r.dim());
  for (int i = 1; i <= r.row_count(); ++i) v = join(v, r.entry(i, phi.at(i)));
  return v;
}

Regulator regulator_combine(const std::vector<Regulator>& rs) {
  if (rs.empty()) throw std::invalid_argument("regulator_combine: empty list");
  const double base = rs.front().base();
  const int dim = rs.front().dim();
  int widest = 0;
  LatticeElement total = LatticeElement::zeros(dim);
  for (const auto& r : rs) {
    if (r.dim() != dim) throw std::invalid_argument("regulator_combine: space mismatch");
    if (r.base() != base) throw std::invalid_argument("regulator_combine: base mismatch");
    widest = std::max(widest, r.row_count());
    total = total + r.row_mass();
  }
  if (is_zero(total) || widest == 0) return Regulator::zero(dim, base);
  // Row u = (sum of masses)/base replicated across every occupied index, so
  // c_{i,j} = (sum of masses) * base^(j-1) and
  // eval(c, phi) = (sum of masses) * base^(min_i phi(i) - 1).
  const LatticeElement row = (1.0 / base) * total;
  return Regulator(std::vector<LatticeElement>(static_cast<size_t>(widest), row), base);
}

Regulator regulator_scale(const Regulator& r, double c) {
  if (r.row_count() == 0) return r;
  std::vector<LatticeElement> rows;
  rows.reserve(static_cast<size_t>(r.row_count()));
  for (const auto& u : r.rows()) rows.push_back(std::fabs(c) * u);
  return Regulator(std::move(rows), r.base());
}

SigmaDistributivityReport sigma_distributivity_check(const Regulator& r, int depth) {
  if (depth < 1) throw std::invalid_argument("sigma_distributivity_check: depth >= 1");
  SigmaDistributivityReport rep;
  rep.values.reserve(static_cast<size_t>(depth));
  rep.decreasing = true;
  for (int n = 1; n <= depth; ++n) {
    LatticeElement v = regulator_eval(r, EvalMap::constant(n));
    if (!rep.values.empty() && !leq(v, rep.values.back())) rep.decreasing = false;
    rep.values.push_back(std::move(v));
  }
  rep.infimum_proxy = rep.values.back();
  return rep;
}

Regulator fremlin_combine(const std::vector<Regulator>& family,
                          const LatticeElement& x) {
  const int dim = x.dim();
  if (!leq(LatticeElement::zeros(dim), x))
    throw std::invalid_argument("fremlin_combine: x must be nonnegative");
  if (family.size() > 32)
    throw std::invalid_argument("fremlin_combine: family truncated to N <= 32");
  if (family.empty()) return Regulator::zero(dim, 0.5);
  const double base = family.front().base();
  int widest = 0;
  LatticeElement shifted_total = LatticeElement::zeros(dim);
  int n = 0;
  for (const auto& r : family) {
    ++n;
    if (r.dim() != dim) throw std::invalid_argument("fremlin_combine: space mismatch");
    if (r.base() != base) throw std::invalid_argument("fremlin_combine: base mismatch");
    widest = std::max(widest, r.row_count());
    shifted_total = shifted_total + std::pow(base, n) * r.row_mass();
  }
  if (is_zero(shifted_total) || widest == 0) return Regulator::zero(dim, base);
  const LatticeElement row = (1.0 / base) * shifted_total;
  return Regulator(std::vector<LatticeElement>(static_cast<size_t>(widest), row), base);
}

LatticeElement fremlin_lhs(const std::vector<Regulator>& family,
                           const LatticeElement& x, const EvalMap& phi) {
  LatticeElement sum = LatticeElement::zeros(x.dim());
  int n = 0;
  for (const auto& r : family) {
    ++n;
    LatticeElement v = LatticeElement::zeros(x.dim());
    for (int i = 1; i <= r.row_count(); ++i) v = join(v, r.entry(i, phi.at(i) + n));
    sum = sum + v;
  }
  return meet(x, sum);
}

bool fremlin_check(const std::vector<Regulator>& family, const LatticeElement& x,
                   const EvalMap& phi) {
  const Regulator c = fremlin_combine(family, x);
  return leq(fremlin_lhs(family, x, phi), regulator_eval(c, phi));
}

}  // namespace hkts
