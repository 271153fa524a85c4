#include "horoaut/json_io.hpp"

#include "horoaut/error.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <limits>

namespace horoaut {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, path + ": " + msg);
}

void check_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema(path, "unknown field \"" + key + "\"");
  }
  for (std::string_view key : required)
    if (!j.contains(key)) schema(path, "missing field \"" + std::string(key) + "\"");
}

std::string at(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
    schema(path, "integer out of range");
  }
  return j.get<Int>();
}

int get_small_int(const Json& j, const std::string& path) {
  const Int v = get_int(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) schema(path, "integer out of range");
  return static_cast<int>(v);
}

std::size_t get_index(const Json& j, const std::string& path) {
  const Int v = get_int(j, path);
  if (v < 0) schema(path, "expected a non-negative index");
  return static_cast<std::size_t>(v);
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) schema(path, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

IntVector get_int_vector(const Json& j, const std::string& path) {
  IntVector out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(get_int(j[i], at(path, i)));
  return out;
}

std::vector<IntVector> get_int_rows(const Json& j, const std::string& path) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(get_int_vector(j[i], at(path, i)));
  return out;
}

void check_kind(const Json& j, const std::string& path, std::string_view expected) {
  if (j.contains("kind") && get_string(j["kind"], at(path, "kind")) != expected) {
    schema(at(path, "kind"), "expected \"" + std::string(expected) + "\"");
  }
}

std::vector<SimpleFactor> get_factors(const Json& j, const std::string& path) {
  std::vector<SimpleFactor> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    check_keys(j[i], p, {"type", "rank"});
    const std::string letter = get_string(j[i]["type"], at(p, "type"));
    if (letter.size() != 1 || std::string_view("ABCDEFG").find(letter[0]) == std::string_view::npos) {
      schema(at(p, "type"), "expected one of A, B, C, D, E, F, G");
    }
    out.push_back({parse_type_letter(letter[0]), get_small_int(j[i]["rank"], at(p, "rank"))});
  }
  return out;
}

std::vector<NodeRef> get_marking(const Json& j, const std::string& path) {
  std::vector<NodeRef> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    if (!j[i].is_array() || j[i].size() != 2) schema(p, "expected [factor, node]");
    out.push_back({get_index(j[i][0], at(p, 0)), get_small_int(j[i][1], at(p, 1))});
  }
  return out;
}

Json weight_json(const Weight& w) { return Json{{"fw", w.fw}, {"torus", w.torus}}; }

Weight weight_from(const Json& j, const std::string& path) {
  check_keys(j, path, {"fw", "torus"});
  return {get_int_vector(j["fw"], at(path, "fw")), get_int_vector(j["torus"], at(path, "torus"))};
}

Json marking_json(const std::vector<NodeRef>& marking) {
  Json out = Json::array();
  for (const NodeRef& r : marking) out.push_back(Json::array({r.factor, r.node}));
  return out;
}

Json factors_json(const std::vector<SimpleFactor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(Json{{"type", std::string(1, type_letter(f.type))}, {"rank", f.rank}});
  return out;
}

Fan fan_fields(const Json& j, const std::string& path) {
  Fan fan;
  const Int dim = get_int(j["dim"], at(path, "dim"));
  if (dim < 0 || dim > std::numeric_limits<int>::max()) schema(at(path, "dim"), "expected a non-negative dimension");
  fan.dim = static_cast<int>(dim);
  fan.rays = get_int_rows(j["rays"], at(path, "rays"));
  const Json& cones = get_array(j["maximal_cones"], at(path, "maximal_cones"));
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string p = at(at(path, "maximal_cones"), c);
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r < get_array(cones[c], p).size(); ++r) cone.push_back(get_index(cones[c][r], at(p, r)));
    fan.maximal_cones.push_back(std::move(cone));
  }
  return fan;
}

Fan fan_at(const Json& j, const std::string& path) {
  check_keys(j, path, {"dim", "rays", "maximal_cones"}, {"kind"});
  check_kind(j, path, "fan");
  return fan_fields(j, path);
}

BundleSpec bundle_at(const Json& j, const std::string& path) {
  check_keys(j, path, {"base", "marking", "line_bundles"}, {"kind"});
  check_kind(j, path, "bundle");
  BundleSpec spec;
  const std::string base = at(path, "base");
  check_keys(j["base"], base, {"simple_factors"}, {"torus_rank"});
  spec.base = get_factors(j["base"]["simple_factors"], at(base, "simple_factors"));
  if (j["base"].contains("torus_rank") && get_int(j["base"]["torus_rank"], at(base, "torus_rank")) != 0) {
    throw Error(ErrorKind::InvalidBundle, "the base group must have torus_rank 0");
  }
  spec.marking = get_marking(j["marking"], at(path, "marking"));
  spec.line_bundles = get_int_rows(j["line_bundles"], at(path, "line_bundles"));
  return spec;
}

HorosphericalDatum datum_at(const Json& j, const std::string& path) {
  check_keys(j, path, {"group", "marking", "fiber_fan", "embedding"}, {"kind"});
  check_kind(j, path, "horospherical");
  HorosphericalDatum d;
  const std::string group = at(path, "group");
  check_keys(j["group"], group, {"simple_factors"}, {"torus_rank"});
  d.group.simple_factors = get_factors(j["group"]["simple_factors"], at(group, "simple_factors"));
  if (j["group"].contains("torus_rank")) {
    const int r = get_small_int(j["group"]["torus_rank"], at(group, "torus_rank"));
    if (r < 0) schema(at(group, "torus_rank"), "expected a non-negative rank");
    d.group.torus_rank = r;
  }
  d.marking = get_marking(j["marking"], at(path, "marking"));
  d.fiber_fan = fan_at(j["fiber_fan"], at(path, "fiber_fan"));
  const Json& emb = get_array(j["embedding"], at(path, "embedding"));
  for (std::size_t i = 0; i < emb.size(); ++i) d.embedding.push_back(weight_from(emb[i], at(at(path, "embedding"), i)));
  return d;
}

Json root_json(const DemazureRoot& r) { return Json{{"m", r.m}, {"ray", r.ray_index}}; }

std::vector<DemazureRoot> roots_from(const Json& j, const std::string& path) {
  std::vector<DemazureRoot> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    check_keys(j[i], p, {"m", "ray"});
    out.push_back({get_int_vector(j[i]["m"], at(p, "m")), get_index(j[i]["ray"], at(p, "ray"))});
  }
  return out;
}

Json roots_json(const std::vector<DemazureRoot>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(root_json(r));
  return out;
}

std::vector<std::string> get_strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < get_array(j, path).size(); ++i) out.push_back(get_string(j[i], at(path, i)));
  return out;
}

template <class E, std::size_t N>
E enum_from(const Json& j, const std::string& path, const std::array<E, N>& values, std::string_view (*name)(E)) {
  const std::string s = get_string(j, path);
  for (E v : values)
    if (name(v) == s) return v;
  schema(path, "unexpected value \"" + s + "\"");
}

}  // namespace

Fan fan_from_json(const Json& j) { return fan_at(j, "$"); }
HorosphericalDatum datum_from_json(const Json& j) { return datum_at(j, "$"); }
BundleSpec bundle_from_json(const Json& j) { return bundle_at(j, "$"); }

InputDocument parse_document_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  if (!j.contains("kind")) schema("$", "missing field \"kind\"");
  const std::string kind = get_string(j["kind"], "$.kind");
  if (kind == "fan") return fan_at(j, "$");
  if (kind == "horospherical") return datum_at(j, "$");
  if (kind == "bundle") return bundle_at(j, "$");
  if (kind == "bundle_batch") {
    check_keys(j, "$", {"kind", "specs"});
    BundleBatch batch;
    const Json& specs = get_array(j["specs"], "$.specs");
    for (std::size_t i = 0; i < specs.size(); ++i) batch.specs.push_back(bundle_at(specs[i], at("$.specs", i)));
    return batch;
  }
  schema("$.kind", "unknown kind \"" + kind + "\"");
}

InputDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    schema("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_document_json(j);
}

Json to_json(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones) cones.push_back(c);
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(r);
  return Json{{"dim", fan.dim}, {"rays", rays}, {"maximal_cones", cones}};
}

Json to_json(const HorosphericalDatum& d) {
  Json emb = Json::array();
  for (const Weight& w : d.embedding) emb.push_back(weight_json(w));
  return Json{{"kind", "horospherical"},
              {"group", {{"simple_factors", factors_json(d.group.simple_factors)}, {"torus_rank", d.group.torus_rank}}},
              {"marking", marking_json(d.marking)},
              {"fiber_fan", to_json(d.fiber_fan)},
              {"embedding", emb}};
}

Json to_json(const BundleSpec& spec) {
  Json lines = Json::array();
  for (const auto& l : spec.line_bundles) lines.push_back(l);
  return Json{{"kind", "bundle"},
              {"base", {{"simple_factors", factors_json(spec.base)}}},
              {"marking", marking_json(spec.marking)},
              {"line_bundles", lines}};
}

Json to_json(const FanRootsDocument& doc) {
  const ToricAutReport& r = doc.report;
  Json j{{"kind", "toric_report"},
         {"dim_aut", r.dim_aut},
         {"n_semisimple", r.n_semisimple},
         {"n_unipotent", r.n_unipotent},
         {"reductive", r.reductive},
         {"roots", roots_json(r.roots)},
         {"semisimple", roots_json(r.partition.semisimple)},
         {"unipotent", roots_json(r.partition.unipotent)}};
  if (doc.oracle_radius) j["oracle_radius"] = *doc.oracle_radius;
  return j;
}

FanRootsDocument fan_roots_document_from_json(const Json& j) {
  check_keys(j, "$", {"kind", "dim_aut", "n_semisimple", "n_unipotent", "reductive", "roots", "semisimple", "unipotent"},
             {"oracle_radius"});
  check_kind(j, "$", "toric_report");
  FanRootsDocument doc;
  ToricAutReport& r = doc.report;
  r.dim_aut = get_int(j["dim_aut"], "$.dim_aut");
  r.n_semisimple = get_index(j["n_semisimple"], "$.n_semisimple");
  r.n_unipotent = get_index(j["n_unipotent"], "$.n_unipotent");
  r.reductive = get_bool(j["reductive"], "$.reductive");
  r.roots = roots_from(j["roots"], "$.roots");
  r.partition.semisimple = roots_from(j["semisimple"], "$.semisimple");
  r.partition.unipotent = roots_from(j["unipotent"], "$.unipotent");
  if (j.contains("oracle_radius")) doc.oracle_radius = get_int(j["oracle_radius"], "$.oracle_radius");
  return doc;
}

Json to_json(const HoroDocument& doc) {
  const AutReport& r = doc.report;
  Json roots = Json::array();
  for (const BRoot& b : r.roots) {
    roots.push_back(Json{{"m_fiber", b.m_fiber},
                         {"ray_index", b.ray_index},
                         {"m_ambient", weight_json(b.m_ambient)},
                         {"kind", root_kind_name(b.kind)},
                         {"v_dim", b.v_dim}});
  }
  Json extends = Json::array();
  for (const auto& e : doc.extendability.extends)
    extends.push_back(Json{{"m_fiber", e.m_fiber}, {"g_normalized", e.g_normalized}});
  Json not_extend = Json::array();
  for (const auto& m : doc.extendability.does_not_extend) not_extend.push_back(m);
  return Json{{"kind", "horospherical_report"},
              {"dim_aut_gp", r.dim_aut_gp},
              {"g_surjects", r.g_surjects},
              {"dim_s", r.dim_s},
              {"roots", roots},
              {"n_semisimple", r.n_semisimple},
              {"unipotent_dims", r.unipotent_dims},
              {"dim_aut_total", r.dim_aut_total},
              {"dim_unipotent_radical", r.dim_unipotent_radical},
              {"dim_levi", r.dim_levi},
              {"reductive", r.reductive},
              {"levi_generators", r.levi_generators},
              {"radical_generators", r.radical_generators},
              {"levi_generated_by_g", r.levi_generated_by_g},
              {"extendability", {{"extends", extends}, {"does_not_extend", not_extend}}}};
}

HoroDocument horo_document_from_json(const Json& j) {
  check_keys(j, "$",
             {"kind", "dim_aut_gp", "g_surjects", "dim_s", "roots", "n_semisimple", "unipotent_dims", "dim_aut_total",
              "dim_unipotent_radical", "dim_levi", "reductive", "levi_generators", "radical_generators",
              "levi_generated_by_g", "extendability"});
  check_kind(j, "$", "horospherical_report");
  HoroDocument doc;
  AutReport& r = doc.report;
  r.dim_aut_gp = get_int(j["dim_aut_gp"], "$.dim_aut_gp");
  r.g_surjects = get_bool(j["g_surjects"], "$.g_surjects");
  r.dim_s = get_int(j["dim_s"], "$.dim_s");
  const Json& roots = get_array(j["roots"], "$.roots");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::string p = at("$.roots", i);
    check_keys(roots[i], p, {"m_fiber", "ray_index", "m_ambient", "kind", "v_dim"});
    BRoot b;
    b.m_fiber = get_int_vector(roots[i]["m_fiber"], at(p, "m_fiber"));
    b.ray_index = get_index(roots[i]["ray_index"], at(p, "ray_index"));
    b.m_ambient = weight_from(roots[i]["m_ambient"], at(p, "m_ambient"));
    b.kind = enum_from(roots[i]["kind"], at(p, "kind"), std::array{RootKind::semisimple, RootKind::unipotent},
                       root_kind_name);
    b.v_dim = get_int(roots[i]["v_dim"], at(p, "v_dim"));
    r.roots.push_back(std::move(b));
  }
  r.n_semisimple = get_int(j["n_semisimple"], "$.n_semisimple");
  r.unipotent_dims = get_int_vector(j["unipotent_dims"], "$.unipotent_dims");
  r.dim_aut_total = get_int(j["dim_aut_total"], "$.dim_aut_total");
  r.dim_unipotent_radical = get_int(j["dim_unipotent_radical"], "$.dim_unipotent_radical");
  r.dim_levi = get_int(j["dim_levi"], "$.dim_levi");
  r.reductive = get_bool(j["reductive"], "$.reductive");
  r.levi_generators = get_strings(j["levi_generators"], "$.levi_generators");
  r.radical_generators = get_strings(j["radical_generators"], "$.radical_generators");
  r.levi_generated_by_g = get_bool(j["levi_generated_by_g"], "$.levi_generated_by_g");

  const Json& ext = j["extendability"];
  check_keys(ext, "$.extendability", {"extends", "does_not_extend"});
  const Json& extends = get_array(ext["extends"], "$.extendability.extends");
  for (std::size_t i = 0; i < extends.size(); ++i) {
    const std::string p = at("$.extendability.extends", i);
    check_keys(extends[i], p, {"m_fiber", "g_normalized"});
    doc.extendability.extends.push_back(
        {get_int_vector(extends[i]["m_fiber"], at(p, "m_fiber")), get_bool(extends[i]["g_normalized"], at(p, "g_normalized"))});
  }
  doc.extendability.does_not_extend = get_int_rows(ext["does_not_extend"], "$.extendability.does_not_extend");
  return doc;
}

Json to_json(const BundleDocument& doc) {
  const BundleReport& r = doc.report;
  Json pairs = Json::array();
  for (const PairRoot& p : r.roots.pair_roots) {
    Json pj{{"i", p.i}, {"j", p.j}, {"nef", p.nef}, {"iso", p.iso}};
    if (p.v_dim) pj["v_dim"] = *p.v_dim;
    pairs.push_back(std::move(pj));
  }
  Json j{{"kind", "bundle_report"},
         {"pair_roots", pairs},
         {"reductive", r.roots.reductive},
         {"dim_aut_base", r.roots.dim_aut_base},
         {"g_surjects", r.roots.g_surjects},
         {"dim_aut_total", r.roots.dim_aut_total},
         {"fano", fano_status_name(r.fano)},
         {"k_unstable", k_unstability_name(r.k_unstable)},
         {"base_anticanonical", r.base_anticanonical},
         {"base_fano_index", r.base_fano_index}};
  if (doc.pipeline_agrees) j["pipeline_agrees"] = *doc.pipeline_agrees;
  return j;
}

BundleDocument bundle_document_from_json(const Json& j) {
  check_keys(j, "$",
             {"kind", "pair_roots", "reductive", "dim_aut_base", "g_surjects", "dim_aut_total", "fano", "k_unstable",
              "base_anticanonical", "base_fano_index"},
             {"pipeline_agrees"});
  check_kind(j, "$", "bundle_report");
  BundleDocument doc;
  BundleReport& r = doc.report;
  const Json& pairs = get_array(j["pair_roots"], "$.pair_roots");
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const std::string p = at("$.pair_roots", n);
    check_keys(pairs[n], p, {"i", "j", "nef", "iso"}, {"v_dim"});
    PairRoot pr{get_index(pairs[n]["i"], at(p, "i")), get_index(pairs[n]["j"], at(p, "j")),
                get_bool(pairs[n]["nef"], at(p, "nef")), get_bool(pairs[n]["iso"], at(p, "iso")), std::nullopt};
    if (pairs[n].contains("v_dim")) pr.v_dim = get_int(pairs[n]["v_dim"], at(p, "v_dim"));
    r.roots.pair_roots.push_back(pr);
  }
  r.roots.reductive = get_bool(j["reductive"], "$.reductive");
  r.roots.dim_aut_base = get_int(j["dim_aut_base"], "$.dim_aut_base");
  r.roots.g_surjects = get_bool(j["g_surjects"], "$.g_surjects");
  r.roots.dim_aut_total = get_int(j["dim_aut_total"], "$.dim_aut_total");
  r.fano = enum_from(j["fano"], "$.fano",
                     std::array{FanoStatus::certified_fano, FanoStatus::certified_not_fano, FanoStatus::unknown},
                     fano_status_name);
  r.k_unstable = enum_from(j["k_unstable"], "$.k_unstable",
                           std::array{KUnstability::certified, KUnstability::not_applicable, KUnstability::unknown},
                           k_unstability_name);
  r.base_anticanonical = get_int_vector(j["base_anticanonical"], "$.base_anticanonical");
  r.base_fano_index = get_int(j["base_fano_index"], "$.base_fano_index");
  if (j.contains("pipeline_agrees")) doc.pipeline_agrees = get_bool(j["pipeline_agrees"], "$.pipeline_agrees");
  return doc;
}

std::string dump_canonical(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1); }

}  // namespace horoaut
