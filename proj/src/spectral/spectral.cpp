// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpstab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mpstab/kernels/kernels.hpp"
#include "mpstab/ops.hpp"

namespace mpstab {
namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

// Tarjan's algorithm on the precedence graph (j -> i iff A_ij finite).
// Components come out sinks-first; the caller reverses them.
class Tarjan {
 public:
  explicit Tarjan(const Matrix& a)
      : a_(a), n_(a.rows()), index_(n_, kUnvisited), low_(n_, 0), on_stack_(n_, false) {}

  std::vector<std::vector<std::size_t>> run() {
    for (std::size_t v = 0; v < n_; ++v)
      if (index_[v] == kUnvisited) visit(v);
    return std::move(out_);
  }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  void visit(std::size_t v) {
    index_[v] = low_[v] = next_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (std::size_t w = 0; w < n_; ++w) {
      if (a_(w, v).is_eps()) continue;  // edge v -> w
      if (index_[w] == kUnvisited) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      std::vector<std::size_t> comp;
      std::size_t w = 0;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out_.push_back(std::move(comp));
    }
  }

  const Matrix& a_;
  std::size_t n_;
  std::size_t next_ = 0;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> low_;
  std::vector<bool> on_stack_;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> out_;
};

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& nodes) {
  Matrix s(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) s.set(i, j, a(nodes[i], nodes[j]));
  return s;
}

// Karp on a strongly connected matrix. Walk weights D_k(v) of exactly k
// edges from node 0; λ = max_v min_k (D_m(v) - D_k(v)) / (m - k).
double karp_strongly_connected(const Matrix& b) {
  const std::size_t m = b.rows();
  std::vector<double> d((m + 1) * m, kEps);
  d[0] = 0.0;
  const auto& k = kernels::active();
  for (std::size_t step = 1; step <= m; ++step)
    k.gemv(b.raw().data(), d.data() + (step - 1) * m, d.data() + step * m, m, m);

  double best = kEps;
  for (std::size_t v = 0; v < m; ++v) {
    const double dm = d[m * m + v];
    if (dm == kEps) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t step = 0; step < m; ++step) {
      const double dk = d[step * m + v];
      if (dk == kEps) continue;
      worst = std::min(worst, (dm - dk) / static_cast<double>(m - step));
    }
    best = std::max(best, worst);
  }
  return best;
}

// In-place Floyd-Warshall longest-path relaxation: s becomes A⁺ when A has
// no positive cycle.
void closure_in_place(Matrix& s) {
  const std::size_t n = s.rows();
  const auto& k = kernels::active();
  for (std::size_t p = 0; p < n; ++p) {
    const double* row_p = s.row_raw(p).data();
    for (std::size_t i = 0; i < n; ++i) {
      const double sip = s.raw()[i * n + p];
      if (sip == kEps) continue;
      k.axpy_max(sip, row_p, s.row_raw_mut(i).data(), n);
    }
  }
}

bool diagonal_positive(const Matrix& s, double tol) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (s(i, i).is_finite() && s(i, i).raw() > tol) return true;
  return false;
}

// Smallest q in 1..n with q·λ integral, for integral matrices.
std::optional<std::size_t> cycle_denominator(double lambda, std::size_t n) {
  for (std::size_t q = 1; q <= n; ++q) {
    const double scaled = lambda * static_cast<double>(q);
    if (std::fabs(scaled - std::nearbyint(scaled)) <= 1e-9) return q;
  }
  return std::nullopt;
}

}  // namespace

SccPartition precedence_scc(const Matrix& a) {
  require_square(a, "precedence_scc");
  auto comps = Tarjan(a).run();
  std::reverse(comps.begin(), comps.end());
  const bool irreducible = comps.size() == 1 && (a.rows() > 1 || a(0, 0).is_finite());
  return SccPartition{std::move(comps), irreducible};
}

bool is_irreducible(const Matrix& a) { return precedence_scc(a).irreducible; }

Scalar max_cycle_mean(const Matrix& a) {
  require_square(a, "max_cycle_mean");
  double best = kEps;
  for (const auto& comp : precedence_scc(a).components) {
    if (comp.size() == 1) {
      best = std::max(best, a(comp[0], comp[0]).raw());
      continue;
    }
    best = std::max(best, karp_strongly_connected(submatrix(a, comp)));
  }
  return Scalar(best);
}

Scalar lambda_star(const Matrix& a) {
  require_square(a, "lambda_star");
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.rows(); ++i) lo = std::min(lo, a(i, i).raw());
  return Scalar(lo);
}

Matrix normalize(const Matrix& a, double mu) {
  if (!std::isfinite(mu)) throw DomainError("normalize: μ must be finite");
  Matrix out(a.rows(), a.cols());
  kernels::active().shift(a.raw().data(), -mu, out.raw_mut().data(), a.raw().size());
  return out;
}

Matrix kleene_plus(const Matrix& a, double tol) {
  require_square(a, "kleene_plus");
  const Scalar lambda = max_cycle_mean(a);
  const bool diverges = lambda.is_finite() && lambda.raw() > tol;
  Matrix s = a;
  closure_in_place(s);
  // The closure and the cycle-mean precheck are independent divergence
  // tests; disagreement means a bug, not bad input.
  const bool diag = diagonal_positive(s, tol);
  if ((diverges && !diag) || (!diverges && lambda.raw() <= 0.0 && diag))
    throw std::logic_error("kleene_star: closure and cycle-mean divergence tests disagree");
  if (diverges)
    throw StarDivergenceError(lambda.raw(), "Kleene star diverges: maximum cycle mean " +
                                                lambda.to_string() + " > 0");
  return s;
}

Matrix kleene_star(const Matrix& a, double tol) {
  return mat_oplus(Matrix::identity(a.rows()), kleene_plus(a, tol));
}

std::optional<Eigenpair> eigenpair(const Matrix& a) {
  require_square(a, "eigenvector");
  const Scalar lambda = max_cycle_mean(a);
  if (lambda.is_eps()) return std::nullopt;
  const std::size_t n = a.rows();

  // Integral data is scaled by the cycle-length denominator so the closure
  // runs on integers and the critical test is exact.
  double scale = 1.0;
  double shift = lambda.raw();
  double tol = kDefaultTolerance;
  Matrix work = a;
  if (a.is_integral()) {
    if (auto q = cycle_denominator(lambda.raw(), n)) {
      scale = static_cast<double>(*q);
      shift = std::nearbyint(lambda.raw() * scale);
      tol = 0.0;
      for (double& v : work.raw_mut()) v *= scale;
    }
  }
  const Matrix normalized = normalize(work, shift);
  const Matrix star = kleene_star(normalized, tol > 0 ? tol : kDefaultTolerance);
  const Matrix plus = mat_otimes(normalized, star);

  Eigenpair out{lambda.raw(), Vector{}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (plus(i, i).is_finite() && std::fabs(plus(i, i).raw()) <= tol)
      out.critical_nodes.push_back(i);
  }

  std::optional<Vector> chosen;
  for (std::size_t i : out.critical_nodes) {
    Vector c = star.col(i);
    if (c.all_finite()) {
      chosen = std::move(c);
      break;
    }
  }
  if (!chosen && !out.critical_nodes.empty()) {
    Vector sum(n);
    for (std::size_t i : out.critical_nodes) sum = vec_oplus(sum, star.col(i));
    if (sum.all_finite()) chosen = std::move(sum);
  }
  if (!chosen) return std::nullopt;
  if (scale != 1.0) {
    std::vector<double> z(chosen->raw().begin(), chosen->raw().end());
    for (double& v : z) v /= scale;
    chosen = Vector(std::move(z));
  }
  out.eigenvector = std::move(*chosen);
  return out;
}

std::optional<Vector> eigenvector(const Matrix& a) {
  auto ep = eigenpair(a);
  if (!ep) return std::nullopt;
  return std::move(ep->eigenvector);
}

SpectralData analyze_spectrum(const Matrix& a) {
  require_square(a, "analyze_spectrum");
  SpectralData d;
  d.lambda_max = max_cycle_mean(a);
  d.lambda_star = lambda_star(a);
  d.scc = precedence_scc(a);
  d.irreducible = d.scc.irreducible;
  if (d.lambda_max.is_finite()) {
    if (auto ep = eigenpair(a)) {
      d.eigenvector = std::move(ep->eigenvector);
      d.critical_nodes = std::move(ep->critical_nodes);
    }
  }
  return d;
}

}  // namespace mpstab
