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

#include "mpstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "mpstab/ops.hpp"
#include "mpstab/spectral.hpp"

namespace mpstab {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kCertified:
      return "certified";
    case Verdict::kNotCertified:
      return "not-certified";
    case Verdict::kUnsupportedRegion:
      return "unsupported-region";
  }
  return "unknown";
}

std::string_view to_string(Notion n) noexcept {
  switch (n) {
    case Notion::kUniformLipschitz:
      return "uniform-lipschitz";
    case Notion::kUniformWeakBounded:
      return "uniform-weak-bounded";
    case Notion::kPathCompleteLipschitz:
      return "path-complete-lipschitz";
    case Notion::kPathCompleteWeakBounded:
      return "path-complete-weak-bounded";
    case Notion::kStrongBounded:
      return "strong-bounded";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) { return format_scalar(v); }

void require_system_shape(const SmplSystem& sys, const Matrix& q, const char* what) {
  if (!q.is_square()) throw ArgumentError(std::string(what) + ": Q must be square");
  if (q.rows() != sys.dimension())
    throw DimensionError(std::string(what) + ": Q is " + std::to_string(q.rows()) +
                         "x" + std::to_string(q.rows()) + " but the system has dimension " +
                         std::to_string(sys.dimension()));
}

// A finite eigenvector of Q inside S with eigenvalue in [α, β]. Returns a
// diagnostic on failure.
std::optional<std::string> eigen_witness(const Matrix& q, const SliceSpace& s,
                                         const std::string& name) {
  const std::optional<Eigenpair> ep = eigenpair(q);
  if (!ep) return name + " has no finite max-plus eigenvector";
  if (!approx_le(s.alpha().raw(), ep->eigenvalue) || !approx_le(ep->eigenvalue, s.beta()))
    return name + " eigenvalue " + fmt(ep->eigenvalue) + " lies outside [α, β]";
  if (!slice_membership(s, ep->eigenvector))
    return name + " eigenvector " + ep->eigenvector.to_string() + " is not in the slice space";
  return std::nullopt;
}

void set_lipschitz(StabilityCertificate& cert, const SmplSystem& sys,
                   const std::vector<const SliceSpace*>& used) {
  cert.lipschitz_bounds = lipschitz_bounds(sys, used);
}

}  // namespace

std::optional<LipschitzBounds> lipschitz_bounds(const SmplSystem& sys,
                                                const std::vector<const SliceSpace*>& cones) {
  if (cones.empty()) return std::nullopt;
  double lo = kInf;
  double hi = -kInf;
  for (const SliceSpace* s : cones) {
    if (!s->has_generators()) return std::nullopt;
    const Matrix& g = *s->generators();
    const std::size_t n = g.rows();
    // On the cone x_i - x_j >= g_ij, so x_j - x_i lies in [g_ji, -g_ij].
    for (const Matrix& a : sys.modes()) {
      for (std::size_t i = 0; i < n; ++i) {
        double row_lo = -kInf;
        double row_hi = -kInf;
        for (std::size_t j = 0; j < n; ++j) {
          if (a(i, j).is_eps()) continue;
          const double aij = a(i, j).raw();
          if (g(i, j).is_eps()) return std::nullopt;
          row_hi = std::max(row_hi, aij - g(i, j).raw());
          if (g(j, i).is_finite()) row_lo = std::max(row_lo, aij + g(j, i).raw());
        }
        if (row_lo == -kInf || row_hi == -kInf) return std::nullopt;
        lo = std::min(lo, row_lo);
        hi = std::max(hi, row_hi);
      }
    }
  }
  return LipschitzBounds{lo, hi};
}

StabilityCertificate check_uniform(const SmplSystem& sys, const Matrix& q,
                                   std::optional<double> alpha, std::optional<double> beta) {
  require_system_shape(sys, q, "check_uniform");
  if (!q.has_finite_diagonal())
    throw ArgumentError("check_uniform: Q has an ε diagonal entry");

  const double lstar = lambda_star(q).raw();
  const double lmax = max_cycle_mean(q).raw();
  const double a = alpha.value_or(lstar);
  const double b = beta.value_or(lmax);

  StabilityCertificate cert;
  cert.notion = Notion::kUniformLipschitz;
  cert.alpha = Scalar(a);
  cert.beta = b;
  cert.cones.push_back(build_slice_space(q, a, b));
  const SliceSpace& s = cert.cones.front();

  if (!s.has_generators()) {
    cert.verdict = Verdict::kUnsupportedRegion;
    if (!approx_le(a, lstar))
      cert.diagnostics.push_back("α = " + fmt(a) + " exceeds λ*(Q) = " + fmt(lstar) +
                                 "; the slice space is predicate-only");
    if (!approx_le(lmax, b))
      cert.diagnostics.push_back("β = " + fmt(b) + " is below λ̄(Q) = " + fmt(lmax) +
                                 "; the subeigenspace construction does not apply");
    return cert;
  }

  if (auto why = eigen_witness(q, s, "Q")) {
    cert.verdict = Verdict::kNotCertified;
    cert.diagnostics.push_back(*why);
    return cert;
  }

  bool all = true;
  for (std::size_t l = 0; l < sys.mode_count(); ++l) {
    const InclusionCheck c = check_map_inclusion(sys.mode(l), s, s);
    if (c.holds) {
      cert.edges.push_back({0, l, 0});
    } else {
      all = false;
      cert.diagnostics.push_back("mode " + std::to_string(l + 1) + ": " + c.diagnostic);
    }
  }
  cert.relation = cert.edges;
  if (!all) {
    cert.verdict = Verdict::kNotCertified;
    return cert;
  }

  cert.verdict = Verdict::kCertified;
  set_lipschitz(cert, sys, {&s});
  if (is_irreducible(q)) {
    if (auto delta = is_bounded_projective(s)) {
      cert.notion = Notion::kUniformWeakBounded;
      cert.proj_bound = delta;
    }
  }
  return cert;
}

StabilityCertificate check_path_complete(const SmplSystem& sys, const std::vector<Matrix>& qs,
                                         double alpha, double beta,
                                         const std::optional<Automaton>& constraint) {
  if (qs.empty()) throw ArgumentError("check_path_complete: empty family of matrices");
  for (const auto& q : qs) {
    require_system_shape(sys, q, "check_path_complete");
    if (!q.has_finite_diagonal())
      throw ArgumentError("check_path_complete: a Q matrix has an ε diagonal entry");
  }
  if (alpha > beta) throw ArgumentError("check_path_complete: α exceeds β");

  StabilityCertificate cert;
  cert.notion = Notion::kPathCompleteLipschitz;
  cert.alpha = Scalar(alpha);
  cert.beta = beta;
  const std::size_t r = qs.size();
  const std::size_t modes = sys.mode_count();

  bool supported = true;
  for (std::size_t j = 0; j < r; ++j) {
    cert.cones.push_back(build_slice_space(qs[j], alpha, beta));
    if (!cert.cones.back().has_generators()) {
      supported = false;
      cert.diagnostics.push_back("Q" + std::to_string(j + 1) + ": need α <= λ* = " +
                                 lambda_star(qs[j]).to_string() + " and β >= λ̄ = " +
                                 max_cycle_mean(qs[j]).to_string());
    }
  }
  if (!supported) {
    cert.verdict = Verdict::kUnsupportedRegion;
    return cert;
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (auto why = eigen_witness(qs[j], cert.cones[j], "Q" + std::to_string(j + 1))) {
      cert.verdict = Verdict::kNotCertified;
      cert.diagnostics.push_back(*why);
      return cert;
    }
  }

  // related[i][l][j] <=> A^(l) S_i ⊆ S_j
  std::vector<std::vector<std::vector<bool>>> related(
      r, std::vector<std::vector<bool>>(modes, std::vector<bool>(r, false)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < modes; ++l)
      for (std::size_t j = 0; j < r; ++j)
        if (map_inclusion(sys.mode(l), cert.cones[i], cert.cones[j])) {
          related[i][l][j] = true;
          cert.relation.push_back({i, l, j});
        }

  std::set<std::size_t> used;
  if (!constraint) {
    // Greatest family N of cones such that every cone in N has a successor
    // in N for every mode.
    std::vector<bool> alive(r, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < r; ++i) {
        if (!alive[i]) continue;
        for (std::size_t l = 0; l < modes; ++l) {
          bool has = false;
          for (std::size_t j = 0; j < r; ++j) has = has || (alive[j] && related[i][l][j]);
          if (!has) {
            alive[i] = false;
            changed = true;
            cert.diagnostics.push_back("cone " + std::to_string(i + 1) +
                                       " removed: no mode-" + std::to_string(l + 1) +
                                       " successor among the remaining cones");
            break;
          }
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (!alive[i]) continue;
      used.insert(i);
      for (std::size_t l = 0; l < modes; ++l)
        for (std::size_t j = 0; j < r; ++j)
          if (alive[j] && related[i][l][j]) {
            cert.edges.push_back({i, l, j});
            break;
          }
    }
    if (used.empty()) {
      cert.verdict = Verdict::kNotCertified;
      cert.diagnostics.push_back("no non-empty family of cones is closed under all modes");
      return cert;
    }
  } else {
    const Automaton& aut = *constraint;
    const std::size_t qn = aut.states.size();
    for (const auto& t : aut.transitions) {
      if (t.from >= qn || t.to >= qn) throw ArgumentError("automaton transition out of range");
      if (t.mode >= modes)
        throw ArgumentError("automaton transition uses mode " + std::to_string(t.mode + 1) +
                            " but the system has " + std::to_string(modes));
    }
    // Greatest simulation: (q, c) survives if every transition q -l-> q'
    // is matched by an inclusion edge (c, l, c') with (q', c') surviving.
    std::vector<std::vector<bool>> sim(qn, std::vector<bool>(r, true));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t q = 0; q < qn; ++q)
        for (std::size_t c = 0; c < r; ++c) {
          if (!sim[q][c]) continue;
          for (const auto& t : aut.transitions) {
            if (t.from != q) continue;
            bool matched = false;
            for (std::size_t c2 = 0; c2 < r && !matched; ++c2)
              matched = related[c][t.mode][c2] && sim[t.to][c2];
            if (!matched) {
              sim[q][c] = false;
              changed = true;
              break;
            }
          }
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t q0 : aut.initial) {
      std::optional<std::size_t> c0;
      for (std::size_t c = 0; c < r && !c0; ++c)
        if (sim[q0][c]) c0 = c;
      if (!c0) {
        cert.diagnostics.push_back("automaton state '" + aut.states[q0] +
                                   "' is not tracked by any cone");
        continue;
      }
      if (seen.insert({q0, *c0}).second) todo.emplace_back(q0, *c0);
    }
    if (!cert.diagnostics.empty()) {
      cert.verdict = Verdict::kNotCertified;
      return cert;
    }
    std::set<InclusionEdge> edges;
    while (!todo.empty()) {
      const auto [q, c] = todo.back();
      todo.pop_back();
      used.insert(c);
      for (const auto& t : aut.transitions) {
        if (t.from != q) continue;
        for (std::size_t c2 = 0; c2 < r; ++c2) {
          if (related[c][t.mode][c2] && sim[t.to][c2]) {
            edges.insert({c, t.mode, c2});
            if (seen.insert({t.to, c2}).second) todo.emplace_back(t.to, c2);
            break;
          }
        }
      }
    }
    cert.edges.assign(edges.begin(), edges.end());
  }

  cert.verdict = Verdict::kCertified;
  std::vector<const SliceSpace*> used_cones;
  for (std::size_t i : used) used_cones.push_back(&cert.cones[i]);
  set_lipschitz(cert, sys, used_cones);

  bool bounded = true;
  double delta = 0;
  for (std::size_t i : used) {
    auto d = is_bounded_projective(cert.cones[i]);
    if (!d || !is_irreducible(qs[i])) {
      bounded = false;
      break;
    }
    delta = std::max(delta, *d);
  }
  if (bounded) {
    cert.notion = Notion::kPathCompleteWeakBounded;
    cert.proj_bound = delta;
  }
  return cert;
}

StabilityCertificate check_strong_bounded(const SmplSystem& sys, const Matrix& q) {
  if (!q.is_square()) throw ArgumentError("check_strong_bounded: Q must be square");
  require_system_shape(sys, q, "check_strong_bounded");
  const Scalar lmax = max_cycle_mean(q);
  if (lmax.is_finite() && lmax.raw() > kDefaultTolerance)
    throw EmptyConeError("K = {x | Q ⊗ x <= x} is empty: λ̄(Q) = " + lmax.to_string() + " > 0");

  StabilityCertificate cert;
  cert.notion = Notion::kStrongBounded;
  cert.alpha = Scalar::eps();
  cert.beta = 0.0;
  cert.cones.push_back(build_slice_space(q, Scalar::eps(), 0.0));
  const SliceSpace& k = cert.cones.front();
  if (!is_irreducible(q)) {
    cert.verdict = Verdict::kUnsupportedRegion;
    cert.diagnostics.push_back("Q is reducible; no generator construction for K");
    return cert;
  }

  bool all = true;
  for (std::size_t l = 0; l < sys.mode_count(); ++l) {
    const InclusionCheck c = check_map_inclusion(sys.mode(l), k, k);
    if (c.holds) {
      cert.edges.push_back({0, l, 0});
    } else {
      all = false;
      cert.diagnostics.push_back("mode " + std::to_string(l + 1) + ": " + c.diagnostic);
    }
  }
  cert.relation = cert.edges;
  if (!all) {
    cert.verdict = Verdict::kNotCertified;
    return cert;
  }
  cert.verdict = Verdict::kCertified;
  set_lipschitz(cert, sys, {&k});
  cert.proj_bound = is_bounded_projective(k);
  if (cert.proj_bound)
    cert.diagnostics.push_back("strong bound implies the weak bound ‖x(k)‖_P <= " +
                               fmt(*cert.proj_bound));
  if (q.all_finite())
    cert.diagnostics.push_back("‖Q‖_P = " + fmt(projective_norm_matrix(q)));
  return cert;
}

namespace {

StabilityCertificate check_min_family(const SmplSystem& sys, const std::vector<Matrix>& qs,
                                      double alpha, double beta) {
  for (const auto& q : qs) {
    require_system_shape(sys, q, "check_proposition1");
    if (!q.has_finite_diagonal())
      throw ArgumentError("check_proposition1: a Q matrix has an ε diagonal entry");
  }
  StabilityCertificate cert;
  cert.notion = Notion::kUniformLipschitz;
  cert.alpha = Scalar(alpha);
  cert.beta = beta;
  cert.cones.push_back(build_min_slice_space(qs, Scalar(alpha), beta));
  const SliceSpace& s = cert.cones.front();

  std::vector<SliceSpace> parts;
  for (std::size_t j = 0; j < qs.size(); ++j) {
    parts.push_back(build_slice_space(qs[j], alpha, beta));
    if (!parts.back().has_generators()) {
      cert.verdict = Verdict::kUnsupportedRegion;
      cert.diagnostics.push_back("Q" + std::to_string(j + 1) +
                                 " slice space has no generator construction");
      return cert;
    }
  }

  // Eigenvector of g: try the eigenvectors of the individual matrices.
  bool found = false;
  for (const auto& q : qs) {
    const std::optional<Vector> z = eigenvector(q);
    if (!z) continue;
    Vector gz;
    try {
      gz = min_mpl_apply(qs, *z);
    } catch (const DomainError&) {
      continue;
    }
    const Vector d = difference(gz, *z);
    const auto [lo_it, hi_it] = std::minmax_element(d.raw().begin(), d.raw().end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (approx_eq(lo, hi) && approx_le(alpha, lo) && approx_le(hi, beta)) {
      found = true;
      break;
    }
  }
  if (!found) {
    cert.verdict = Verdict::kNotCertified;
    cert.diagnostics.push_back("no finite eigenvector of the min-of function found");
    return cert;
  }

  bool all = true;
  for (std::size_t l = 0; l < sys.mode_count() && all; ++l) {
    for (std::size_t p = 0; p < parts.size() && all; ++p) {
      const Matrix& g = *parts[p].generators();
      for (std::size_t c = 0; c < g.cols(); ++c) {
        const Vector img = mat_otimes(sys.mode(l), g.col(c));
        std::string why;
        if (!img.all_finite()) {
          why = "image " + img.to_string() + " leaves Rⁿ";
        } else if (auto v = slice_violation(s, img)) {
          why = "image " + img.to_string() + " violates row " + std::to_string(v->row + 1) +
                (v->upper ? " upper" : " lower") + " bound";
        }
        if (!why.empty()) {
          all = false;
          cert.diagnostics.push_back("mode " + std::to_string(l + 1) + ", generator " +
                                     std::to_string(c + 1) + " of Q" +
                                     std::to_string(p + 1) + ": " + why);
          break;
        }
      }
    }
    if (all) cert.edges.push_back({0, l, 0});
  }
  cert.relation = cert.edges;
  if (!all) {
    cert.verdict = Verdict::kNotCertified;
    return cert;
  }
  cert.verdict = Verdict::kCertified;

  // S(g) ⊆ { x | P ⊗ x <= β + x } with P the entrywise minimum of the family.
  Matrix pmin = qs.front();
  for (std::size_t j = 1; j < qs.size(); ++j)
    for (std::size_t i = 0; i < pmin.raw().size(); ++i)
      pmin.raw_mut()[i] = std::min(pmin.raw()[i], qs[j].raw()[i]);
  const SliceSpace outer = build_slice_space(pmin, Scalar::eps(), beta);
  set_lipschitz(cert, sys, {&outer});
  if (is_irreducible(pmin)) {
    if (auto delta = is_bounded_projective(outer)) {
      cert.notion = Notion::kUniformWeakBounded;
      cert.proj_bound = delta;
    }
  }
  return cert;
}

}  // namespace

StabilityCertificate check_proposition1(const SmplSystem& sys, const GeneratingFunction& g,
                                        double alpha, double beta) {
  if (const auto* single = std::get_if<SingleMatrix>(&g))
    return check_uniform(sys, single->q, alpha, beta);
  const auto& family = std::get<MinOfMatrices>(g).qs;
  if (family.empty()) throw ArgumentError("check_proposition1: empty family");
  if (alpha > beta) throw ArgumentError("check_proposition1: α exceeds β");
  if (family.size() == 1) return check_uniform(sys, family.front(), alpha, beta);
  return check_min_family(sys, family, alpha, beta);
}

}  // namespace mpstab
