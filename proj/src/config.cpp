#include "gqm/config.hpp"

#include <fstream>

namespace gqm {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(
        "config: complex numbers must be two-element arrays [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector parse_cvector(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("config: expected a non-empty array");
  }
  CVector v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v[k] = parse_complex(j[k]);
  return v;
}

CMatrix parse_cmatrix(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("config: expected a non-empty matrix");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw std::invalid_argument("config: ragged matrix");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

RMatrix parse_rmatrix(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("config: expected a non-empty matrix");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw std::invalid_argument("config: ragged matrix");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) {
        throw std::invalid_argument("config: matrix entries must be numbers");
      }
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") +
                                e.what());
  }
  return doc;
}

void apply_override(nlohmann::json& doc, const std::string& key_value) {
  const auto eq = key_value.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("override must look like key.path=value");
  }
  const std::string path = key_value.substr(0, eq);
  const std::string raw = key_value.substr(eq + 1);

  json value;
  try {
    value = json::parse(raw);
  } catch (const json::exception&) {
    value = raw;  // fall back to a plain string
  }

  json* node = &doc;
  std::size_t begin = 0;
  while (true) {
    const std::size_t dot = path.find('.', begin);
    const std::string key = path.substr(begin, dot - begin);
    if (key.empty()) {
      throw std::invalid_argument("override has an empty path segment");
    }
    if (dot == std::string::npos) {
      (*node)[key] = value;
      break;
    }
    node = &(*node)[key];
    begin = dot + 1;
  }
}

Config config_from_json(const nlohmann::json& doc) {
  try {
    Config cfg;
    cfg.hbar = doc.value("hbar", 1.0);
    if (doc.contains("hamiltonian")) {
      cfg.hamiltonian = parse_cmatrix(doc.at("hamiltonian"));
    }
    if (doc.contains("initial_state")) {
      cfg.initial_state = parse_cvector(doc.at("initial_state"));
    }
    if (doc.contains("observable")) {
      cfg.observable = parse_cmatrix(doc.at("observable"));
    }
    if (doc.contains("deformation")) {
      const json& d = doc.at("deformation");
      cfg.deformation.type = d.value("type", "none");
      cfg.deformation.epsilon = d.value("epsilon", 0.0);
      cfg.deformation.curvature = d.value("R", 0.0);
      if (d.contains("theta")) {
        cfg.deformation.theta = parse_rmatrix(d.at("theta"));
      }
      if (d.contains("linear")) {
        for (const json& term : d.at("linear")) {
          cfg.deformation.linear.emplace_back(term.at("index").get<int>(),
                                              parse_rmatrix(term.at("matrix")));
        }
      }
    }
    if (doc.contains("integrator")) {
      const json& i = doc.at("integrator");
      cfg.dt = i.value("dt", cfg.dt);
      cfg.t_end = i.value("t_end", cfg.t_end);
    }
    cfg.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("verify")) {
      cfg.verify_instances = doc.at("verify").value("instances", 20);
    }
    if (doc.contains("loop")) {
      const json& l = doc.at("loop");
      cfg.loop.colatitude = l.value("colatitude", cfg.loop.colatitude);
      cfg.loop.segments = l.value("segments", cfg.loop.segments);
      cfg.loop.mesh = l.value("mesh", cfg.loop.mesh);
    }
    if (doc.contains("output")) {
      const json& o = doc.at("output");
      cfg.output.csv_path = o.value("csv_path", "");
      cfg.output.json_path = o.value("json_path", "");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

StateVector state_from_config(const Config& cfg) {
  if (!cfg.initial_state.has_value()) {
    throw std::invalid_argument("config: initial_state is required");
  }
  return StateVector(*cfg.initial_state, cfg.hbar);
}

HermitianOperator hamiltonian_from_config(const Config& cfg) {
  if (!cfg.hamiltonian.has_value()) {
    throw std::invalid_argument("config: hamiltonian is required");
  }
  return HermitianOperator(*cfg.hamiltonian);
}

HermitianOperator observable_from_config(const Config& cfg) {
  if (!cfg.observable.has_value()) {
    throw std::invalid_argument("config: observable is required");
  }
  return HermitianOperator(*cfg.observable);
}

DeformationSpec deformation_from_config(const DeformationConfig& dc,
                                        int hilbert_dim, int reference_pivot) {
  const int d = 2 * (hilbert_dim - 1);
  if (dc.type == "none") {
    return DeformationSpec::none();
  }
  if (dc.type == "scalar_curvature") {
    return DeformationSpec::scalar_curvature(dc.epsilon, dc.curvature);
  }
  if (dc.type == "constant_torsion") {
    if (!dc.theta.has_value() || dc.theta->rows() != d || dc.theta->cols() != d) {
      throw std::invalid_argument(
          "config: constant_torsion requires a 2(n-1) x 2(n-1) theta matrix");
    }
    return DeformationSpec::constant_torsion(dc.epsilon, *dc.theta,
                                             reference_pivot);
  }
  if (dc.type == "custom") {
    RMatrix base = dc.theta.value_or(RMatrix::Zero(d, d));
    if (base.rows() != d || base.cols() != d) {
      throw std::invalid_argument("config: custom theta has wrong size");
    }
    for (const auto& [index, matrix] : dc.linear) {
      if (index < 0 || index >= d) {
        throw std::invalid_argument("config: custom linear index out of range");
      }
      if (matrix.rows() != d || matrix.cols() != d) {
        throw std::invalid_argument("config: custom linear matrix wrong size");
      }
    }
    auto linear = dc.linear;
    return DeformationSpec::custom_field(
        dc.epsilon, [base, linear](const ChartPoint& p) {
          RMatrix t = base;
          for (const auto& [index, matrix] : linear) {
            t += p.coords()[index] * matrix;
          }
          return t;
        });
  }
  throw std::invalid_argument("config: unknown deformation type '" + dc.type +
                              "'");
}

}  // namespace gqm
