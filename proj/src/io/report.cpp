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

#include "mpstab/report.hpp"

#include "mpstab/model.hpp"
#include "mpstab/ops.hpp"

namespace mpstab {

using nlohmann::ordered_json;

int exit_code(Verdict v) noexcept {
  switch (v) {
    case Verdict::kCertified:
      return 0;
    case Verdict::kNotCertified:
      return 1;
    case Verdict::kUnsupportedRegion:
      return 2;
  }
  return 1;
}

namespace {

ordered_json optional_number(const std::optional<double>& v) {
  return v ? scalar_to_json(*v) : ordered_json(nullptr);
}

ordered_json edges_to_json(const std::vector<InclusionEdge>& edges) {
  ordered_json out = ordered_json::array();
  for (const auto& e : edges) out.push_back({e.from + 1, e.mode + 1, e.to + 1});
  return out;
}

ordered_json cone_to_json(std::size_t index, const SliceSpace& s) {
  ordered_json c;
  c["index"] = index + 1;
  if (s.is_min_family()) {
    ordered_json fam = ordered_json::array();
    for (const auto& q : s.family()) fam.push_back(matrix_to_json(q));
    c["family"] = std::move(fam);
  } else {
    c["Q"] = matrix_to_json(s.q());
  }
  c["alpha"] = scalar_to_json(s.alpha().raw());
  c["beta"] = scalar_to_json(s.beta());
  c["generators"] = s.has_generators() ? matrix_to_json(*s.generators()) : ordered_json(nullptr);
  if (auto hs = half_space_form(s)) {
    ordered_json h;
    h["lower"] = scalar_to_json(hs->lower);
    h["upper"] = scalar_to_json(hs->upper);
    h["text"] = hs->to_string();
    c["half_space"] = std::move(h);
  } else {
    c["half_space"] = nullptr;
  }
  c["proj_bound"] = optional_number(is_bounded_projective(s));
  return c;
}

}  // namespace

ordered_json certificate_to_json(const StabilityCertificate& cert) {
  ordered_json j;
  j["schema"] = "mpstab-certificate/1";
  j["notion"] = std::string(to_string(cert.notion));
  j["verdict"] = std::string(to_string(cert.verdict));
  j["alpha"] = scalar_to_json(cert.alpha.raw());
  j["beta"] = scalar_to_json(cert.beta);
  ordered_json cones = ordered_json::array();
  for (std::size_t i = 0; i < cert.cones.size(); ++i) cones.push_back(cone_to_json(i, cert.cones[i]));
  j["cones"] = std::move(cones);
  j["relation"] = edges_to_json(cert.relation);
  j["edges"] = edges_to_json(cert.edges);
  j["proj_bound"] = optional_number(cert.proj_bound);
  if (cert.lipschitz_bounds) {
    ordered_json lb;
    lb["lower"] = scalar_to_json(cert.lipschitz_bounds->lower);
    lb["upper"] = scalar_to_json(cert.lipschitz_bounds->upper);
    j["lipschitz_bounds"] = std::move(lb);
  } else {
    j["lipschitz_bounds"] = nullptr;
  }
  j["diagnostics"] = cert.diagnostics;
  j["exit_code"] = exit_code(cert.verdict);
  return j;
}

ordered_json spectral_to_json(const Matrix& a, const SpectralData& d) {
  ordered_json j;
  j["schema"] = "mpstab-spectral/1";
  j["matrix"] = matrix_to_json(a);
  j["lambda_max"] = scalar_to_json(d.lambda_max.raw());
  j["lambda_star"] = scalar_to_json(d.lambda_star.raw());
  j["irreducible"] = d.irreducible;
  ordered_json comps = ordered_json::array();
  for (const auto& c : d.scc.components) {
    ordered_json comp = ordered_json::array();
    for (std::size_t v : c) comp.push_back(v + 1);
    comps.push_back(std::move(comp));
  }
  j["scc"] = std::move(comps);
  j["eigenvector"] = d.eigenvector ? vector_to_json(*d.eigenvector) : ordered_json(nullptr);
  ordered_json crit = ordered_json::array();
  for (std::size_t v : d.critical_nodes) crit.push_back(v + 1);
  j["critical_nodes"] = std::move(crit);
  return j;
}

}  // namespace mpstab
