#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkts {

/// Element of a Dedekind-complete lattice instance: the reals (dim 1) or
/// R^d with componentwise order. Two elements of dim > 1 may be incomparable.
class LatticeElement {
 public:
  LatticeElement() = default;
  explicit LatticeElement(std::vector<double> coords) : c_(std::move(coords)) {}

  static LatticeElement scalar(double v) { return LatticeElement({v}); }
  static LatticeElement zeros(int dim) {
    return LatticeElement(std::vector<double>(static_cast<size_t>(dim), 0.0));
  }
  static LatticeElement constant(int dim, double v) {
    return LatticeElement(std::vector<double>(static_cast<size_t>(dim), v));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return c_; }

  bool operator==(const LatticeElement& o) const { return c_ == o.c_; }

 private:
  std::vector<double> c_;
};

inline void require_same_space(const LatticeElement& x, const LatticeElement& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("lattice space mismatch: dim " +
                                std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
}

inline LatticeElement join(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

inline LatticeElement meet(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

inline LatticeElement operator+(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline LatticeElement operator-(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = x[i] - y[i];
  return r;
}

inline LatticeElement operator-(const LatticeElement& x) {
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = -x[i];
  return r;
}

inline LatticeElement operator*(double a, const LatticeElement& x) {
  LatticeElement r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = a * x[i];
  return r;
}

/// |x| = x v (-x).
inline LatticeElement abs(const LatticeElement& x) { return join(x, -x); }

/// Componentwise x <= y (exact double comparison, no tolerance).
inline bool leq(const LatticeElement& x, const LatticeElement& y) {
  require_same_space(x, y);
  for (int i = 0; i < x.dim(); ++i)
    if (!(x[i] <= y[i])) return false;
  return true;
}

inline bool is_zero(const LatticeElement& x) {
  for (int i = 0; i < x.dim(); ++i)
    if (x[i] != 0.0) return false;
  return true;
}

inline double max_norm(const LatticeElement& x) {
  double m = 0.0;
  for (int i = 0; i < x.dim(); ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

/// Index map phi: N -> N, finitely many explicit values plus a constant tail.
struct EvalMap {
  std::vector<int> values;
  int tail_value = 1;

  static EvalMap constant(int n) {
    EvalMap m;
    m.tail_value = n;
    return m;
  }

  int at(int i) const {  // 1-based row index
    if (i >= 1 && i <= static_cast<int>(values.size()))
      return values[static_cast<size_t>(i - 1)];
    return tail_value;
  }
};

/// Regulator in canonical dyadically-dominated form: row i is the
/// (o)-sequence j |-> u_i * base^j, rows beyond the stored ones are zero.
class Regulator {
 public:
  Regulator() = default;
  Regulator(std::vector<LatticeElement> rows, double base = 0.5);

  static Regulator zero(int dim, double base = 0.5) {
    Regulator r;
    r.dim_ = dim;
    r.base_ = base;
    return r;
  }

  const std::vector<LatticeElement>& rows() const { return rows_; }
  double base() const { return base_; }
  int dim() const { return dim_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  /// a_{i,j} = u_i * base^j (zero beyond the stored rows).
  LatticeElement entry(int i, int j) const;

  /// Sum over rows of the componentwise row sum.
  LatticeElement row_mass() const;

 private:
  std::vector<LatticeElement> rows_;
  double base_ = 0.5;
  int dim_ = 1;
};

/// v_i a_{i,phi(i)} over the stored rows.
LatticeElement regulator_eval(const Regulator& r, const EvalMap& phi);

/// Dominating regulator c with sum_r eval(r, phi) <= eval(c, phi) for every
/// phi. Rows are replicated to the widest input so that the evaluation sees
/// min_i phi(i) over every index an input row occupies.
Regulator regulator_combine(const std::vector<Regulator>& rs);

/// Row-wise scalar multiple |c| * a.
Regulator regulator_scale(const Regulator& r, double c);

struct SigmaDistributivityReport {
  std::vector<LatticeElement> values;  // eval at phi = n for n = 1..depth
  LatticeElement infimum_proxy;
  bool decreasing = false;
};

SigmaDistributivityReport sigma_distributivity_check(const Regulator& r, int depth);

/// Dominating regulator for a finite truncated family, per the countable
/// combination lemma: x ^ sum_n (v_i a^n_{i,phi(i)+n}) <= eval(result, phi).
Regulator fremlin_combine(const std::vector<Regulator>& family,
                          const LatticeElement& x);

/// Left-hand side of the combination inequality for a given phi.
LatticeElement fremlin_lhs(const std::vector<Regulator>& family,
                           const LatticeElement& x, const EvalMap& phi);

/// Checks the inequality for one phi sample.
bool fremlin_check(const std::vector<Regulator>& family, const LatticeElement& x,
                   const EvalMap& phi);

}  // namespace hkts
