#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "liemarkov/errors.hpp"
#include "liemarkov/modelgen.hpp"
#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// [A, B] = AB - BA.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> commutator(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw OrderMismatch("commutator of matrices with different shapes");
  }
  return a * b - b * a;
}

/// A generator pair (1-based labels, as in L_i) whose bracket or product
/// leaves the span.
struct ClosureWitness {
  int i = 0;
  int j = 0;
  IntMatrix matrix;
};

struct ExactClosure {
  bool closed = true;
  std::optional<ClosureWitness> witness;
};

/// [B_i, B_j] in span for every generator pair.
ExactClosure check_lie_closed(const ModelSubspace& m);

/// B_i B_j in span for every ordered generator pair (including i == j).
ExactClosure check_algebra_closed(const ModelSubspace& m);

/// e^{Qt} by scaling and squaring a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd& q, double t = 1.0);

/// Principal matrix logarithm by inverse scaling and squaring: repeated
/// Denman-Beavers square roots until ||P - I||_1 < 0.25, then the Mercator
/// series. Throws NonConvergence after kMaxSqrtDepth square roots or on a
/// singular iterate.
Eigen::MatrixXd logm(const Eigen::MatrixXd& p);

inline constexpr int kMaxSqrtDepth = 40;

enum class ClosureStatus { pass, fail, inconclusive };

std::string to_string(ClosureStatus s);

struct ClosureOptions {
  int trials = 100;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  double t_max = 1.0;
  int attempts_per_trial = 5;  // logm failures tolerated before giving up
};

struct ClosureReport {
  bool lie_closed = true;
  std::optional<ClosureWitness> lie_witness;
  bool algebra_closed = true;
  std::optional<ClosureWitness> algebra_witness;
  int numeric_trials = 0;
  int discarded = 0;  // samples dropped after logm nonconvergence
  double max_residual = 0.0;
  double tolerance = 0.0;
  ClosureStatus status = ClosureStatus::pass;
};

/// Exact Lie/algebra checks plus a randomized test of multiplicative closure:
/// for sampled Q1, Q2 in the cone and t1, t2 in (0, t_max], the residual of
/// log(e^{Q1 t1} e^{Q2 t2}) after least-squares projection onto the span.
/// Requires m.dim >= 1.
ClosureReport verify_multiplicative_closure(const ModelSubspace& m,
                                            const ClosureOptions& options = {});

}  // namespace liemarkov
