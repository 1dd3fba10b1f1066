#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "homsurf/catalogue.hpp"
#include "homsurf/json_io.hpp"
#include "homsurf/verify.hpp"

using namespace homsurf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// A file path, "-" for stdin, or inline JSON.
Json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(arg + ": " + e.what());
  }
}

double eps_from_env() {
  const char* env = std::getenv("HOMSURF_EPS");
  if (!env || !*env) return kDefaultEps;
  char* end = nullptr;
  double eps = std::strtod(env, &end);
  if (*end != '\0' || !(eps > 0.0)) throw InputError("HOMSURF_EPS must be a positive number");
  return eps;
}

// Pads by code points so Greek labels line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t chars = 0;
  for (unsigned char c : s) chars += (c & 0xC0) != 0x80;
  return s + std::string(width > chars ? width - chars : 0, ' ');
}

Json row_to_json(const CatalogueRow& r) {
  return {{"label", r.label},       {"family", family_name(r.family)}, {"parent", r.parent},
          {"surface", r.surface},   {"group", r.group},                {"stabilizer", r.stabilizer},
          {"constraints", r.constraints}, {"parameters", r.parameters}, {"quotient_policy", r.quotient_policy},
          {"topic", r.topic}};
}

int run_catalogue(const std::string& filter, bool json) {
  auto rows = enumerate_catalogue(filter.empty() ? std::nullopt : std::optional(filter));
  if (json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(row_to_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : rows) std::cout << r.label << '\t' << r.surface << '\t' << r.group << '\t' << r.stabilizer << '\n';
  }
  return 0;
}

int run_classify(const std::string& file) {
  std::cout << classify_json(load_json(file)).dump(2) << '\n';
  return 0;
}

int run_act(const std::string& family, const std::string& element_arg, const std::string& point_arg, const std::string& cover) {
  Json element = load_json(element_arg);
  Json params, cover_params, payload = element;
  if (element.is_object() && element.contains("element")) {
    payload = element.at("element");
    if (element.contains("params")) params = element.at("params");
    if (element.contains("cover")) cover_params = element.at("cover");
  }
  FamilyId id = family_from_json(family, params);
  GroupElement g = element_from_json(id, payload);
  Json point = load_json(point_arg);
  if (point.is_object() && point.contains("point")) point = point.at("point");
  SurfacePoint y = act(g, point_from_json(id, point));
  Json out{{"family", id.name()}, {"point", point_to_json(y)}};
  if (!cover.empty()) {
    out["cover"] = cover;
    out["cover_point"] = point_to_json(apply_cover(cover, id, cover_params, y));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"samples", c.samples}, {"max_error", c.max_error}, {"pass", c.pass}});
  return {{"family", r.family}, {"samples", r.samples}, {"max_error", r.max_error}, {"pass", r.pass}, {"checks", checks}};
}

int run_verify(const std::string& target, int samples, std::uint64_t seed, const std::string& params, bool json) {
  if (samples < 1) throw InputError("--samples must be positive");
  const double eps = eps_from_env();
  std::vector<VerificationReport> reports;
  if (target == "all") {
    if (!params.empty()) throw InputError("--params needs a single family");
    reports = verify_all(samples, seed, eps);
  } else {
    reports.push_back(verify_family(family_from_json(target, params.empty() ? Json() : load_json(params)), samples, seed, eps));
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (json) {
      out.push_back(report_to_json(r));
      continue;
    }
    std::cout << pad(r.family, 6) << (r.pass ? " PASS" : " FAIL") << "  checks=" << r.checks.size()
              << " samples=" << r.samples << " max_error=" << std::scientific << std::setprecision(2) << r.max_error
              << std::defaultfloat << '\n';
    for (const auto& c : r.checks)
      std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << "  max_error=" << std::scientific
                << std::setprecision(2) << c.max_error << std::defaultfloat << '\n';
  }
  if (json) std::cout << out.dump(2) << '\n';
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous complex surfaces: catalogue, classification and action checks"};
  app.require_subcommand(1);

  std::string filter;
  bool cat_json = false;
  auto* cat = app.add_subcommand("catalogue", "List the classification table");
  cat->add_option("--filter", filter, "Label prefix");
  cat->add_flag("--json", cat_json, "Emit JSON");

  std::string classify_file;
  auto* cls = app.add_subcommand("classify", "Normal form of a discrete subgroup");
  cls->add_option("file", classify_file, "Generator file (JSON, or - for stdin)")->required();

  std::string family, element, point, cover;
  auto* act_cmd = app.add_subcommand("act", "Apply a group element to a point");
  act_cmd->add_option("--family", family, "Family label, e.g. D1, Bβ1 or Bb1")->required();
  act_cmd->add_option("--element", element, "Element JSON file or inline JSON")->required();
  act_cmd->add_option("--point", point, "Point JSON file or inline JSON")->required();
  act_cmd->add_option("--cover", cover, "Project to this quotient row");

  std::string target = "all", params;
  int samples = 100;
  std::uint64_t seed = 1;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "Run property checks");
  ver->add_option("family", target, "Family label or all");
  ver->add_option("--samples", samples, "Samples per check");
  ver->add_option("--seed", seed, "Random seed");
  ver->add_option("--params", params, "Family parameters (JSON), single family only");
  ver->add_flag("--json", verify_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*cat) return run_catalogue(filter, cat_json);
    if (*cls) return run_classify(classify_file);
    if (*act_cmd) return run_act(family, element, point, cover);
    return run_verify(target, samples, seed, params, verify_json);
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInput;
}
