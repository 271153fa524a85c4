#include "horoaut/bundles.hpp"
#include "horoaut/error.hpp"
#include "horoaut/fan.hpp"
#include "horoaut/horospherical.hpp"
#include "horoaut/json_io.hpp"
#include "horoaut/render.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace horoaut;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

struct Mismatch {
  std::string what;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

template <class T>
const T& expect_kind(const InputDocument& doc, const char* kind) {
  if (const T* p = std::get_if<T>(&doc)) return *p;
  throw Error(ErrorKind::SchemaError, std::string("expected a document of kind \"") + kind + "\"");
}

struct Options {
  std::string path;
  bool json = false;
  bool text = false;
  std::string oracle_radius;
  bool check_pipeline = false;
};

std::string emit(const Json& j, const std::string& text, const Options& opt) {
  return opt.json ? dump_canonical(j, true) + "\n" : text;
}

std::string run_fan_roots(const Options& opt, bool color) {
  const Fan fan = expect_kind<Fan>(parse_document(read_input(opt.path)), "fan");
  const ValidatedFan vf = validate_fan(fan);
  FanRootsDocument doc{toric_aut_report(vf), std::nullopt};
  if (!opt.oracle_radius.empty()) {
    Int radius = 0;
    if (opt.oracle_radius == "auto") {
      radius = oracle_safe_radius(vf);
    } else {
      try {
        std::size_t used = 0;
        radius = std::stoll(opt.oracle_radius, &used);
        if (used != opt.oracle_radius.size() || radius < 0) throw std::invalid_argument("radius");
      } catch (const std::exception&) {
        throw Error(ErrorKind::SchemaError, "--oracle-radius expects a non-negative integer or auto");
      }
    }
    const auto brute = demazure_roots_bruteforce(vf, radius);
    if (brute != doc.report.roots) {
      throw Mismatch{"OracleMismatch: brute force over radius " + std::to_string(radius) + " found " +
                     std::to_string(brute.size()) + " roots, enumeration found " +
                     std::to_string(doc.report.roots.size())};
    }
    doc.oracle_radius = radius;
  }
  return emit(to_json(doc), render_text(doc, color), opt);
}

std::string run_horo_aut(const Options& opt, bool color) {
  const HorosphericalDatum d = expect_kind<HorosphericalDatum>(parse_document(read_input(opt.path)), "horospherical");
  const ValidatedDatum vd = validate_datum(d);
  const HoroDocument doc{aut_report(vd), extendable_fiber_roots(vd)};
  return emit(to_json(doc), render_text(doc, color), opt);
}

BundleDocument bundle_document(const BundleSpec& spec, bool check_pipeline) {
  const ValidatedBundle vb = validate_bundle(spec);
  BundleDocument doc{bundle_report(vb), std::nullopt};
  if (check_pipeline) {
    const PipelineComparison cmp = check_against_pipeline(vb);
    if (!cmp.agree) {
      std::string msg = "PipelineMismatch:";
      for (const auto& d : cmp.differences) msg += " " + d + ";";
      throw Mismatch{msg};
    }
    doc.pipeline_agrees = true;
  }
  return doc;
}

std::string run_bundle(const Options& opt, bool color) {
  const InputDocument input = parse_document(read_input(opt.path));
  if (const auto* batch = std::get_if<BundleBatch>(&input)) {
    std::string out;
    for (const BundleSpec& spec : batch->specs)
      out += dump_canonical(to_json(bundle_document(spec, opt.check_pipeline)), false) + "\n";
    return out;
  }
  const BundleDocument doc = bundle_document(expect_kind<BundleSpec>(input, "bundle"), opt.check_pipeline);
  return emit(to_json(doc), render_text(doc, color), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of smooth toroidal horospherical varieties"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("path", opt.path, "input JSON file, - for stdin")->required();
    auto* json = sub->add_flag("--json", opt.json, "canonical JSON output");
    auto* text = sub->add_flag("--text", opt.text, "human-readable output (default)");
    json->excludes(text);
  };
  auto* fan = app.add_subcommand("fan-roots", "Demazure roots and Aut of a complete smooth toric variety");
  add_common(fan);
  fan->add_option("--oracle-radius", opt.oracle_radius, "cross-check against a box scan: N or auto");
  auto* horo = app.add_subcommand("horo-aut", "Aut of a toroidal horospherical variety");
  add_common(horo);
  auto* bundle = app.add_subcommand("bundle", "Projective bundles P(L_1 + ... + L_k) over G/P");
  add_common(bundle);
  bundle->add_flag("--check-pipeline", opt.check_pipeline, "also run the general horospherical pipeline");

  CLI11_PARSE(app, argc, argv);

  const bool color = color_enabled(isatty(fileno(stdout)) != 0);
  try {
    std::string out;
    if (fan->parsed()) out = run_fan_roots(opt, color);
    else if (horo->parsed()) out = run_horo_aut(opt, color);
    else out = run_bundle(opt, color);
    std::cout << out;
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::SchemaError ? kExitSchema : kExitValidation;
  } catch (const Mismatch& m) {
    std::cerr << m.what << "\n";
    return kExitMismatch;
  }
}
