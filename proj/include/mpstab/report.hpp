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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mpstab/spectral.hpp"
#include "mpstab/stability.hpp"

namespace mpstab {

/// 0 certified, 1 not certified, 2 unsupported region.
int exit_code(Verdict v) noexcept;

/// Certificate document with deterministic field order. Edges are 1-based
/// (i, l, j) triples.
nlohmann::ordered_json certificate_to_json(const StabilityCertificate& cert);

nlohmann::ordered_json spectral_to_json(const Matrix& a, const SpectralData& d);

}  // namespace mpstab
