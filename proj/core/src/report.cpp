#include "sqfree/report.hpp"

#include "sqfree/errors.hpp"

namespace sqfree {

Json index_set_json(IndexSet set) { return Json(set.members()); }
Json exponent_json(const ExponentVector& a) { return Json(a.coords()); }

namespace {

IndexSet read_set(const Json& j) { return IndexSet::from_members(j.get<std::vector<int>>()); }
ExponentVector read_vector(const Json& j) { return ExponentVector(j.get<std::vector<int>>()); }

Json sets_json(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (IndexSet s : sets) out.push_back(index_set_json(s));
  return out;
}

std::vector<IndexSet> read_sets(const Json& j) {
  std::vector<IndexSet> out;
  for (const auto& s : j) out.push_back(read_set(s));
  return out;
}

Json vectors_json(const std::vector<ExponentVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(exponent_json(v));
  return out;
}

std::vector<ExponentVector> read_vectors(const Json& j) {
  std::vector<ExponentVector> out;
  for (const auto& v : j) out.push_back(read_vector(v));
  return out;
}

Json dims_json(const std::map<int, std::size_t>& dims) {
  Json out = Json::array();
  for (const auto& [i, d] : dims) out.push_back({{"i", i}, {"value", d}});
  return out;
}

std::map<int, std::size_t> read_dims(const Json& j) {
  std::map<int, std::size_t> out;
  for (const auto& e : j) out[e.at("i").get<int>()] = e.at("value").get<std::size_t>();
  return out;
}

template <typename T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <typename T>
std::optional<T> get_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json input_json(const MatrixFile& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries)
    entries.push_back(
        {{"i", e.row}, {"j", e.col}, {"coefficient", e.coefficient.to_string()}, {"exponent", exponent_json(e.exponent)}});
  return {{"n", f.n}, {"vars", f.vars}, {"s", f.s}, {"l", f.l}, {"entries", entries}};
}

MatrixFile read_input(const Json& j) {
  MatrixFile f;
  f.n = j.at("n").get<int>();
  f.vars = j.at("vars").get<std::vector<std::string>>();
  f.s = j.at("s").get<std::size_t>();
  f.l = j.at("l").get<std::size_t>();
  for (const auto& e : j.at("entries"))
    f.entries.push_back({e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(),
                         Rational::parse(e.at("coefficient").get<std::string>()), read_vector(e.at("exponent"))});
  return f;
}

}  // namespace

Json to_json(const InvariantReport& r) {
  Json j;
  j["command"] = r.command;
  j["input"] = input_json(r.input);
  j["order"] = r.order;
  if (r.grading) {
    const GradingReport& g = *r.grading;
    j["grading"] = {{"multigraded", g.multigraded},
                    {"inconsistency", g.inconsistency},
                    {"components", g.components},
                    {"column_component", g.column_component},
                    {"row_component", g.row_component},
                    {"base_gammas", vectors_json(g.base_gammas)},
                    {"base_betas", vectors_json(g.base_betas)},
                    {"squarefree", g.squarefree},
                    {"uniform_rank", g.uniform_rank},
                    {"gammas", vectors_json(g.gammas)},
                    {"betas", vectors_json(g.betas)}};
  }
  if (r.ideals) {
    Json list = Json::array();
    for (const auto& ideal : *r.ideals)
      list.push_back({{"generators", sets_json(ideal.generators)}, {"facets", sets_json(ideal.facets)}});
    j["ideals"] = list;
  }
  if (r.annihilator)
    j["annihilator"] = {{"method", r.annihilator->method}, {"generators", sets_json(r.annihilator->generators)}};
  if (r.dimension) {
    Json d;
    d["krull"] = r.dimension->krull;
    put_optional(d, "min_local_cohomology", r.dimension->min_local_cohomology);
    put_optional(d, "max_local_cohomology", r.dimension->max_local_cohomology);
    put_optional(d, "projective_dimension", r.dimension->projective_dimension);
    j["dimension"] = d;
  }
  if (r.betti) {
    Json list = Json::array();
    for (const auto& e : *r.betti) list.push_back({{"i", e.i}, {"degree", exponent_json(e.degree)}, {"value", e.value}});
    j["betti"] = list;
  }
  if (r.local_cohomology) {
    Json list = Json::array();
    for (const auto& row : *r.local_cohomology)
      list.push_back({{"pattern_plus", index_set_json(row.plus)},
                      {"pattern_minus", index_set_json(row.minus)},
                      {"dims", dims_json(row.dims)}});
    j["local_cohomology"] = list;
  }
  if (r.verification)
    j["verification"] = {{"checked", r.verification->checked}, {"mismatches", r.verification->mismatches}};
  if (!r.details.is_null()) j["details"] = r.details;
  j["warnings"] = r.warnings;
  return j;
}

InvariantReport report_from_json(const Json& j) {
  try {
    InvariantReport r;
    r.command = j.at("command").get<std::string>();
    r.input = read_input(j.at("input"));
    r.order = j.at("order").get<std::vector<std::size_t>>();
    if (j.contains("grading")) {
      const Json& g = j.at("grading");
      GradingReport out;
      out.multigraded = g.at("multigraded").get<bool>();
      out.inconsistency = g.at("inconsistency").get<std::string>();
      out.components = g.at("components").get<std::size_t>();
      out.column_component = g.at("column_component").get<std::vector<std::size_t>>();
      out.row_component = g.at("row_component").get<std::vector<std::size_t>>();
      out.base_gammas = read_vectors(g.at("base_gammas"));
      out.base_betas = read_vectors(g.at("base_betas"));
      out.squarefree = g.at("squarefree").get<bool>();
      out.uniform_rank = g.at("uniform_rank").get<bool>();
      out.gammas = read_vectors(g.at("gammas"));
      out.betas = read_vectors(g.at("betas"));
      r.grading = out;
    }
    if (j.contains("ideals")) {
      r.ideals.emplace();
      for (const auto& ideal : j.at("ideals"))
        r.ideals->push_back({read_sets(ideal.at("generators")), read_sets(ideal.at("facets"))});
    }
    if (j.contains("annihilator"))
      r.annihilator = AnnihilatorReport{j.at("annihilator").at("method").get<std::string>(),
                                        read_sets(j.at("annihilator").at("generators"))};
    if (j.contains("dimension")) {
      const Json& d = j.at("dimension");
      r.dimension = DimensionReport{d.at("krull").get<int>(), get_optional<int>(d, "min_local_cohomology"),
                                    get_optional<int>(d, "max_local_cohomology"),
                                    get_optional<int>(d, "projective_dimension")};
    }
    if (j.contains("betti")) {
      r.betti.emplace();
      for (const auto& e : j.at("betti"))
        r.betti->push_back({e.at("i").get<int>(), read_vector(e.at("degree")), e.at("value").get<std::size_t>()});
    }
    if (j.contains("local_cohomology")) {
      r.local_cohomology.emplace();
      for (const auto& row : j.at("local_cohomology"))
        r.local_cohomology->push_back(
            {read_set(row.at("pattern_plus")), read_set(row.at("pattern_minus")), read_dims(row.at("dims"))});
    }
    if (j.contains("verification"))
      r.verification = VerificationReport{j.at("verification").at("checked").get<std::size_t>(),
                                          j.at("verification").at("mismatches").get<std::vector<std::string>>()};
    if (j.contains("details")) r.details = j.at("details");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const InvariantReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace sqfree
