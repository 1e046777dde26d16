// CLI configuration: a single JSON document shared by every subcommand.
// Complex numbers are serialized as two-element arrays [re, im].

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gqm/deformation.hpp"
#include "gqm/hilbert.hpp"

namespace gqm {

struct DeformationConfig {
  std::string type = "none";  // none | scalar_curvature | constant_torsion | custom
  double epsilon = 0.0;
  double curvature = 0.0;                // key "R"
  std::optional<RMatrix> theta;          // constant_torsion / custom base term
  // custom only: theta(x) = theta + sum_k coords[index_k] * matrix_k
  std::vector<std::pair<int, RMatrix>> linear;
};

struct LoopConfig {
  double colatitude = M_PI / 2.0;
  int segments = 10000;
  int mesh = 64;  // radial subdivisions of the surface quadrature
};

struct OutputConfig {
  std::string csv_path;
  std::string json_path;
};

struct Config {
  double hbar = 1.0;
  std::optional<CMatrix> hamiltonian;
  std::optional<CVector> initial_state;
  std::optional<CMatrix> observable;
  DeformationConfig deformation;
  double dt = 1e-3;
  double t_end = 10.0;
  std::uint64_t seed = 0;
  int verify_instances = 20;
  LoopConfig loop;
  OutputConfig output;
};

nlohmann::json load_json_file(const std::string& path);

/// Applies a dotted-path override "a.b.c=value"; the value is parsed as JSON
/// when possible and kept as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& key_value);

Config config_from_json(const nlohmann::json& doc);

StateVector state_from_config(const Config& cfg);
HermitianOperator hamiltonian_from_config(const Config& cfg);
HermitianOperator observable_from_config(const Config& cfg);

/// Builds the deformation for a system of the given Hilbert dimension.  A
/// constant-torsion matrix is interpreted in the chart with reference_pivot.
DeformationSpec deformation_from_config(const DeformationConfig& dc,
                                        int hilbert_dim, int reference_pivot);

}  // namespace gqm
