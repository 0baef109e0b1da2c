#include "mdisc/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace mdisc {

namespace {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& v : m.data()) entries.push_back({v.real(), v.imag()});
  return entries;
}

ComplexMatrix matrix_from_json(const json& entries, std::size_t rows, std::size_t cols) {
  if (!entries.is_array() || entries.size() != rows * cols)
    throw std::invalid_argument("json: matrix entry count mismatch");
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (auto& v : m.data()) {
    const auto& pair = entries[idx++];
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("json: entries must be [re, im] pairs");
    v = cplx(pair[0].get<double>(), pair[1].get<double>());
  }
  return m;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

std::string ensemble_to_json(const MeasurementEnsemble& ens, int indent) {
  json j;
  j["dim"] = ens.dim;
  j["priors"] = ens.priors;
  json measurements = json::array();
  for (const auto& povm : ens.measurements) {
    json outcomes = json::array();
    for (const auto& e : povm.elements) outcomes.push_back(matrix_to_json(e));
    measurements.push_back(std::move(outcomes));
  }
  j["measurements"] = std::move(measurements);
  return dump(j, indent);
}

MeasurementEnsemble ensemble_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const auto priors = j.at("priors").get<std::vector<double>>();
  std::vector<Povm> povms;
  for (const auto& outcomes : j.at("measurements")) {
    std::vector<ComplexMatrix> elems;
    for (const auto& entries : outcomes) elems.push_back(matrix_from_json(entries, dim, dim));
    povms.emplace_back(dim, std::move(elems));
  }
  return MeasurementEnsemble(std::move(povms), priors);
}

std::string basis_to_json(const Basis& basis, int indent) {
  json j;
  j["dim"] = basis.dim;
  json vectors = json::array();
  for (const auto& v : basis.vectors) {
    json entries = json::array();
    for (const auto& x : v) entries.push_back({x.real(), x.imag()});
    vectors.push_back(std::move(entries));
  }
  j["vectors"] = std::move(vectors);
  return dump(j, indent);
}

Basis basis_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<CVec> vectors;
  for (const auto& entries : j.at("vectors")) {
    CVec v;
    for (const auto& pair : entries) v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    if (v.size() != dim) throw std::invalid_argument("json: basis vector length mismatch");
    vectors.push_back(std::move(v));
  }
  return Basis(dim, std::move(vectors));
}

std::string bipartite_to_json(const BipartiteDensity& rho, int indent) {
  json j;
  j["dim_A"] = rho.dim_a;
  j["dim_B"] = rho.dim_b;
  j["matrix"] = matrix_to_json(rho.matrix);
  return dump(j, indent);
}

BipartiteDensity bipartite_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::size_t da = j.at("dim_A").get<std::size_t>();
  const std::size_t db = j.at("dim_B").get<std::size_t>();
  return BipartiteDensity(da, db, matrix_from_json(j.at("matrix"), da * db, da * db));
}

}  // namespace mdisc
