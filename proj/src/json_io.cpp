#include "micpovm/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "micpovm/error.hpp"

namespace micpovm::json {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j) {
  if (!j.is_number()) malformed("expected a number");
  return j.get<double>();
}

Json nullable(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json operator_list(const std::vector<HermitianOperator>& ops) {
  Json arr = Json::array();
  for (const auto& op : ops) arr.push_back(from_matrix(op.matrix()));
  return arr;
}

std::vector<HermitianOperator> parse_operator_list(const Json& arr, const Tolerances& tol) {
  if (!arr.is_array()) malformed("expected an array of matrices");
  std::vector<HermitianOperator> out;
  for (const auto& m : arr) out.push_back(to_hermitian(m, tol));
  return out;
}

void write_number(std::ostringstream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  os << s;
}

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
  };
  // Innermost numeric arrays such as [re, im] or [x, y, z] stay on one line.
  const auto flat = [](const Json& a) {
    for (const auto& e : a)
      if (e.is_structured()) return false;
    return true;
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << Json(k).dump() << (indent < 0 ? ":" : ": ");
        write(os, v, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool inline_array = flat(j);
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << (inline_array && indent >= 0 ? ", " : ",");
        first = false;
        if (!inline_array) newline(depth + 1);
        write(os, v, indent, depth + 1);
      }
      if (!inline_array) newline(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

Json from_matrix(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  Json out;
  out["dim"] = m.rows();
  out["entries"] = std::move(rows);
  return out;
}

ComplexMatrix to_matrix(const Json& j) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) malformed("'dim' must be a positive integer");
  const auto d = dim_j.get<Eigen::Index>();
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) malformed("'entries' must have dim rows");
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) malformed("matrix row has wrong length");
    for (Eigen::Index k = 0; k < d; ++k) {
      const Json& z = row[static_cast<std::size_t>(k)];
      if (!z.is_array() || z.size() != 2) malformed("matrix entries must be [re, im] pairs");
      m(i, k) = Complex(number(z[0]), number(z[1]));
    }
  }
  return m;
}

HermitianOperator to_hermitian(const Json& j, const Tolerances& tol) {
  return HermitianOperator(to_matrix(j), tol);
}

Json from_directions(const std::vector<Direction>& dirs, std::optional<std::uint64_t> seed) {
  Json arr = Json::array();
  for (const auto& n : dirs) arr.push_back(Json::array({n.x(), n.y(), n.z()}));
  Json out;
  out["directions"] = std::move(arr);
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  return out;
}

std::vector<Direction> to_directions(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "directions");
  if (!arr.is_array()) malformed("'directions' must be an array");
  std::vector<Direction> out;
  for (const auto& v : arr) {
    if (!v.is_array() || v.size() != 3) malformed("directions must be [x, y, z] triples");
    out.emplace_back(number(v[0]), number(v[1]), number(v[2]));
  }
  return out;
}

Json from_frame(const OperatorFrame& f, const Json& meta) {
  Json gram = Json::array();
  for (Eigen::Index i = 0; i < f.gram().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < f.gram().cols(); ++k) row.push_back(f.gram()(i, k));
    gram.push_back(std::move(row));
  }
  Json out;
  out["dim"] = f.dim();
  out["operators"] = operator_list(f.operators());
  out["gram"] = std::move(gram);
  out["duals"] = operator_list(f.duals());
  Json m = meta;
  m["condition_number"] = nullable(f.condition_number());
  out["meta"] = std::move(m);
  return out;
}

std::vector<HermitianOperator> to_operators(const Json& j, const Tolerances& tol) {
  return parse_operator_list(j.is_array() ? j : field(j, "operators"), tol);
}

Json from_povm(const Povm& p) {
  Json meta;
  meta["method"] = p.meta.method;
  meta["seed"] = p.meta.seed ? Json(*p.meta.seed) : Json(nullptr);
  meta["directions"] = p.meta.directions ? from_directions(*p.meta.directions, std::nullopt)["directions"]
                                         : Json(nullptr);
  meta["C"] = p.meta.shift ? nullable(*p.meta.shift) : Json(nullptr);
  meta["mode"] = p.meta.mode ? Json(*p.meta.mode) : Json(nullptr);
  meta["side"] = p.meta.side ? Json(*p.meta.side) : Json(nullptr);
  meta["weights"] = p.meta.weights ? Json(*p.meta.weights) : Json(nullptr);

  Json out;
  out["dim"] = p.dim;
  out["elements"] = operator_list(p.elements);
  out["duals"] = p.duals ? operator_list(*p.duals) : Json(nullptr);
  out["meta"] = std::move(meta);
  return out;
}

Povm to_povm(const Json& j, const Tolerances& tol) {
  Povm p;
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) malformed("'dim' must be a positive integer");
  p.dim = dim_j.get<int>();
  p.elements = parse_operator_list(field(j, "elements"), tol);
  if (p.elements.empty()) malformed("POVM has no elements");
  for (const auto& e : p.elements)
    if (e.dim() != p.dim) malformed("element dimension does not match 'dim'");
  if (j.contains("duals") && !j.at("duals").is_null()) {
    p.duals = parse_operator_list(j.at("duals"), tol);
    for (const auto& e : *p.duals)
      if (e.dim() != p.dim) malformed("dual dimension does not match 'dim'");
  }
  if (j.contains("meta") && j.at("meta").is_object()) {
    const Json& m = j.at("meta");
    auto str = [&](const char* key) -> std::optional<std::string> {
      if (!m.contains(key) || m.at(key).is_null()) return std::nullopt;
      if (!m.at(key).is_string()) malformed(std::string("meta.") + key + " must be a string");
      return m.at(key).get<std::string>();
    };
    p.meta.method = str("method").value_or("");
    p.meta.mode = str("mode");
    p.meta.side = str("side");
    if (m.contains("seed") && !m.at("seed").is_null()) {
      if (!m.at("seed").is_number_unsigned()) malformed("meta.seed must be an unsigned integer");
      p.meta.seed = m.at("seed").get<std::uint64_t>();
    }
    if (m.contains("directions") && !m.at("directions").is_null()) {
      p.meta.directions = to_directions(m.at("directions"));
    }
    if (m.contains("C") && !m.at("C").is_null()) p.meta.shift = number(m.at("C"));
    if (m.contains("weights") && !m.at("weights").is_null()) {
      std::vector<double> w;
      for (const auto& v : m.at("weights")) w.push_back(number(v));
      p.meta.weights = std::move(w);
    }
  }
  return p;
}

Json from_state(const DensityMatrix& rho) {
  Json out;
  out["dim"] = rho.dim();
  out["matrix"] = from_matrix(rho.matrix().matrix());
  return out;
}

DensityMatrix to_state(const Json& j, const Tolerances& tol) {
  const HermitianOperator m = to_hermitian(field(j, "matrix"), tol);
  if (j.contains("dim") && j.at("dim").is_number_integer() && j.at("dim").get<int>() != m.dim()) {
    malformed("state 'dim' does not match its matrix");
  }
  return DensityMatrix(m, tol);
}

Json from_report(const PovmReport& r) {
  Json out;
  out["dim"] = r.dim;
  out["element_count"] = r.element_count;
  out["completeness_residual"] = nullable(r.completeness_residual);
  out["min_element_eigenvalue"] = nullable(r.min_element_eigenvalue);
  out["gram_condition"] = nullable(r.gram_condition);
  out["complete"] = r.complete;
  out["positive"] = r.positive;
  out["informationally_complete"] = r.informationally_complete;
  out["sic"] = r.sic;
  out["element_ranks"] = r.element_ranks;
  out["sic_overlap_deviation"] = r.sic_overlap_deviation ? nullable(*r.sic_overlap_deviation) : Json(nullptr);
  out["duality_residual"] = r.duality_residual ? nullable(*r.duality_residual) : Json(nullptr);
  return out;
}

Json from_result(const TomographyResult& r) {
  Json out;
  out["probabilities"] = r.probabilities;
  out["counts"] = r.counts ? Json(*r.counts) : Json(nullptr);
  out["reconstructed"] = from_matrix(r.reconstructed.matrix());
  out["fidelity"] = r.fidelity;
  out["trace_distance"] = r.trace_distance;
  out["shots"] = r.shots ? Json(*r.shots) : Json("exact");
  out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  out["psd_clip"] = r.psd_clip;
  return out;
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace micpovm::json
