// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpc/tolerances.hpp"

#include <fstream>
#include <map>

#include "json.hpp"
#include "qpc/errors.hpp"

namespace qpc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension mismatch";
    case ErrorKind::NotFinite: return "non-finite entry";
    case ErrorKind::NotHermitian: return "not hermitian";
    case ErrorKind::NotSymmetric: return "not symmetric";
    case ErrorKind::Trace: return "trace not one";
    case ErrorKind::NotPositive: return "not positive semidefinite";
    case ErrorKind::NotNormalized: return "not normalized";
    case ErrorKind::NotLeftUnitary: return "not left-unitary";
    case ErrorKind::Domain: return "argument out of domain";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown error";
}

const Tolerances& default_tolerances() noexcept {
  static const Tolerances defaults{};
  return defaults;
}

Tolerances load_tolerance_override(const std::string& path, const Tolerances& base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open tolerance override file '" + path + "'");

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "tolerance override '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "tolerance override must be a JSON object");

  Tolerances out = base;
  const std::map<std::string, double Tolerances::*> fields = {
      {"hermiticity", &Tolerances::hermiticity},
      {"symmetry", &Tolerances::symmetry},
      {"trace", &Tolerances::trace},
      {"psd", &Tolerances::psd},
      {"norm", &Tolerances::norm},
      {"left_unitary", &Tolerances::left_unitary},
      {"degenerate", &Tolerances::degenerate},
      {"phase_fix", &Tolerances::phase_fix},
      {"spectral_cutoff", &Tolerances::spectral_cutoff},
      {"entropy_cutoff", &Tolerances::entropy_cutoff},
      {"decomposition_cutoff", &Tolerances::decomposition_cutoff},
      {"radicand_clamp", &Tolerances::radicand_clamp},
      {"separable_dominant", &Tolerances::separable_dominant},
      {"membership", &Tolerances::membership},
  };
  for (const auto& [key, value] : doc.items()) {
    auto it = fields.find(key);
    if (it == fields.end()) throw Error(ErrorKind::Parse, "unknown tolerance '" + key + "'");
    if (!value.is_number()) throw Error(ErrorKind::Parse, "tolerance '" + key + "' must be a number");
    const double v = value.get<double>();
    if (!(v > 0.0)) throw Error(ErrorKind::Parse, "tolerance '" + key + "' must be positive");
    out.*(it->second) = v;
  }
  return out;
}

}  // namespace qpc
