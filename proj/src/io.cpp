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

#include "qpc/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qpc/errors.hpp"

namespace qpc::io {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

Eigen::Index positive_dim(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

cplx complex_entry(const json& pair, std::size_t index) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw Error(ErrorKind::Parse, "entry " + std::to_string(index) + " is not a [re, im] pair");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

ComplexVector complex_list(const json& list, Eigen::Index expected, const char* what) {
  if (!list.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of [re, im] pairs");
  if (static_cast<Eigen::Index>(list.size()) != expected) {
    throw Error(ErrorKind::Parse, std::string(what) + " has " + std::to_string(list.size()) + " entries, expected " +
                                      std::to_string(expected));
  }
  ComplexVector out(expected);
  for (std::size_t i = 0; i < list.size(); ++i) out(static_cast<Eigen::Index>(i)) = complex_entry(list[i], i);
  return out;
}

}  // namespace

DensityMatrix parse_state(const std::string& text, const Tolerances& tol) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "state file must be a JSON object");
  const Eigen::Index d1 = positive_dim(doc, "d1");
  const Eigen::Index d2 = positive_dim(doc, "d2");
  if (!doc.contains("matrix")) throw Error(ErrorKind::Parse, "missing 'matrix'");
  const Eigen::Index d = d1 * d2;
  const ComplexVector flat = complex_list(doc.at("matrix"), d * d, "'matrix'");
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = flat(i * d + j);
  }
  return DensityMatrix(d1, d2, std::move(m), tol);
}

DensityMatrix read_state_file(const std::string& path, const Tolerances& tol) { return parse_state(slurp(path), tol); }

std::string write_state(const DensityMatrix& rho) {
  // Hand-rolled so every number carries 17 significant digits.
  std::string out = "{\"d1\": " + std::to_string(rho.d1()) + ", \"d2\": " + std::to_string(rho.d2()) + ", \"matrix\": [";
  const Eigen::Index d = rho.dim();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i + j > 0) out += ", ";
      const cplx z = rho.matrix()(i, j);
      out += "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
    }
  }
  out += "]}\n";
  return out;
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << write_state(rho);
}

SimConfig parse_sim_config(const std::string& text, SimConfig base) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "config must be a JSON object");
  SimConfig c = std::move(base);
  for (const auto& [key, value] : doc.items()) {
    auto number = [&]() {
      if (!value.is_number()) throw Error(ErrorKind::Parse, "'" + key + "' must be a number");
      return value.get<double>();
    };
    auto integer = [&]() {
      if (!value.is_number_integer()) throw Error(ErrorKind::Parse, "'" + key + "' must be an integer");
      return value.get<long long>();
    };
    if (key == "d1") c.d1 = integer();
    else if (key == "d2") c.d2 = integer();
    else if (key == "d_bath") c.d_bath = integer();
    else if (key == "alpha_s") c.alpha_s = number();
    else if (key == "alpha_sb") c.alpha_sb = number();
    else if (key == "t_start") c.t_start = number();
    else if (key == "t_end") c.t_end = number();
    else if (key == "t_steps") c.t_steps = static_cast<int>(integer());
    else if (key == "seed") {
      if (!value.is_number_unsigned()) throw Error(ErrorKind::Parse, "'seed' must be a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "initial_state") {
      // Dimensions may appear after this key; size is checked in validate().
      c.initial_state = complex_list(value, static_cast<Eigen::Index>(value.is_array() ? value.size() : 0), "'initial_state'");
    } else {
      throw Error(ErrorKind::Parse, "unknown config key '" + key + "'");
    }
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid config: ") + e.what());
  }
  return c;
}

SimConfig read_sim_config_file(const std::string& path, SimConfig base) { return parse_sim_config(slurp(path), std::move(base)); }

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<HorodeckiRow> horodecki_sweep(double a_min, double a_max, int steps, const Tolerances& tol) {
  if (!(a_min >= 0.0 && a_max <= 1.0 && a_min <= a_max) || steps < 1) {
    throw Error(ErrorKind::Domain, "sweep needs 0 <= a_min <= a_max <= 1 and steps >= 1");
  }
  std::vector<HorodeckiRow> rows;
  for (int i = 0; i < steps; ++i) {
    const double a = steps == 1 ? a_min : a_min + (a_max - a_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    const DensityMatrix rho = horodecki_state(a);
    HorodeckiRow row;
    row.a = a;
    row.c_qp = qp_concurrence(rho, tol).value;
    row.entropy = von_neumann_entropy(rho, tol);
    row.min_eig_pt = min_eigenvalue(partial_transpose_over_2(rho.matrix(), 3, 3), tol);
    rows.push_back(row);
  }
  return rows;
}

void write_horodecki_csv(std::ostream& out, const std::vector<HorodeckiRow>& rows) {
  out << "a,c_qp,entropy,min_eig_pt\n";
  for (const HorodeckiRow& r : rows) {
    out << format_double(r.a) << ',' << format_double(r.c_qp) << ',' << format_double(r.entropy) << ','
        << format_double(r.min_eig_pt) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const SimConfig& config, const std::vector<TrajectoryPoint>& points) {
  out << "# seed=" << config.seed << '\n';
  out << "t,c_qp,entropy,purity,mu1\n";
  for (const TrajectoryPoint& p : points) {
    out << format_double(p.t) << ',' << format_double(p.c_qp) << ',' << format_double(p.entropy) << ','
        << format_double(p.purity) << ',' << format_double(p.dominant_weight) << '\n';
  }
}

}  // namespace qpc::io
