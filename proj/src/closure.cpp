#include "liemarkov/closure.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "liemarkov/linalg.hpp"

namespace liemarkov {

namespace {

// Products run over mixed pairs before squares, so the first witness is a
// genuine cross term whenever one exists.
ExactClosure check_pairs(const ModelSubspace& m, bool bracket) {
  ExactClosure result;
  const auto n = m.basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = bracket ? a + 1 : 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  if (!bracket)
    for (std::size_t a = 0; a < n; ++a) pairs.emplace_back(a, a);
  for (const auto& [a, b] : pairs) {
    IntMatrix x = bracket ? commutator(m.basis[a], m.basis[b])
                          : IntMatrix(m.basis[a] * m.basis[b]);
    if (!contains(m, x)) {
      result.closed = false;
      result.witness = ClosureWitness{m.labels[a], m.labels[b], std::move(x)};
      return result;
    }
  }
  return result;
}

double norm1(const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

Eigen::MatrixXd sqrtm_denman_beavers(const Eigen::MatrixXd& p) {
  constexpr int kMaxIterations = 100;
  Eigen::MatrixXd y = p;
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(p.rows(), p.cols());
  for (int it = 0; it < kMaxIterations; ++it) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> ly(y), lz(z);
    const Eigen::MatrixXd y_next = 0.5 * (y + lz.inverse());
    const Eigen::MatrixXd z_next = 0.5 * (z + ly.inverse());
    if (!y_next.allFinite() || !z_next.allFinite()) {
      throw NonConvergence("matrix square root hit a singular iterate");
    }
    const double change = norm1(y_next - y);
    y = y_next;
    z = z_next;
    if (change <= 1e-15 * norm1(y)) return y;
  }
  throw NonConvergence("Denman-Beavers iteration did not converge");
}

}  // namespace

ExactClosure check_lie_closed(const ModelSubspace& m) { return check_pairs(m, true); }

ExactClosure check_algebra_closed(const ModelSubspace& m) { return check_pairs(m, false); }

Eigen::MatrixXd expm(const Eigen::MatrixXd& q, double t) {
  const Eigen::Index k = q.rows();
  Eigen::MatrixXd a = q * t;
  int squarings = 0;
  const double norm = norm1(a);
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  a /= std::ldexp(1.0, squarings);

  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(k, k);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(k, k);
  for (int n = 1; n < 100; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
    if (norm1(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::MatrixXd logm(const Eigen::MatrixXd& p) {
  const Eigen::Index k = p.rows();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(k, k);
  Eigen::MatrixXd root = p;
  int depth = 0;
  while (norm1(root - identity) >= 0.25) {
    if (depth == kMaxSqrtDepth) {
      throw NonConvergence("logm: no convergence after " + std::to_string(kMaxSqrtDepth) +
                           " square roots");
    }
    root = sqrtm_denman_beavers(root);
    ++depth;
  }

  const Eigen::MatrixXd x = root - identity;
  Eigen::MatrixXd power = x;
  Eigen::MatrixXd sum = x;
  for (int n = 2; n < 500; ++n) {
    power = power * x;
    const Eigen::MatrixXd term = power / static_cast<double>(n);
    if (n % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
    if (norm1(term) < 1e-18) break;
  }
  return std::ldexp(1.0, depth) * sum;
}

std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::pass:
      return "pass";
    case ClosureStatus::fail:
      return "fail";
    case ClosureStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ClosureReport verify_multiplicative_closure(const ModelSubspace& m,
                                            const ClosureOptions& options) {
  if (m.dim < 1) throw Error("multiplicative closure needs a model of dimension >= 1");

  ClosureReport report;
  const ExactClosure lie = check_lie_closed(m);
  const ExactClosure algebra = check_algebra_closed(m);
  report.lie_closed = lie.closed;
  report.lie_witness = lie.witness;
  report.algebra_closed = algebra.closed;
  report.algebra_witness = algebra.witness;
  report.tolerance = options.tolerance;

  const Eigen::Index k = m.order;
  const Eigen::MatrixXd span_basis = to_double(m.rref).transpose();
  const auto projector = span_basis.colPivHouseholderQr();
  std::vector<Eigen::MatrixXd> generators;
  for (const IntMatrix& b : m.basis) generators.push_back(to_double(b));

  bool gave_up = false;
  for (int trial = 0; trial < options.trials; ++trial) {
    bool done = false;
    for (int attempt = 0; attempt < options.attempts_per_trial && !done; ++attempt) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      auto open_closed = [&] { return 1.0 - unit(rng); };  // (0, 1]

      auto sample_rate = [&] {
        Eigen::MatrixXd q = Eigen::MatrixXd::Zero(k, k);
        for (const auto& g : generators) q += open_closed() * g;
        return q;
      };
      const Eigen::MatrixXd q1 = sample_rate();
      const Eigen::MatrixXd q2 = sample_rate();
      const double t1 = options.t_max * open_closed();
      const double t2 = options.t_max * open_closed();

      Eigen::MatrixXd x;
      try {
        x = logm(expm(q1, t1) * expm(q2, t2));
      } catch (const NonConvergence&) {
        ++report.discarded;
        continue;
      }
      const Eigen::VectorXd flat = vectorize(x).transpose();
      const Eigen::VectorXd coeffs = projector.solve(flat);
      const double residual = (flat - span_basis * coeffs).cwiseAbs().maxCoeff();
      report.max_residual = std::max(report.max_residual, residual);
      ++report.numeric_trials;
      done = true;
    }
    if (!done) gave_up = true;
  }

  if (report.max_residual >= options.tolerance) {
    report.status = ClosureStatus::fail;
  } else if (gave_up) {
    report.status = ClosureStatus::inconclusive;
  } else {
    report.status = ClosureStatus::pass;
  }
  return report;
}

}  // namespace liemarkov
