#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "so2n/battery.hpp"
#include "so2n/report.hpp"

using namespace so2n;

namespace {

enum Exit { Ok = 0, InputFailure = 1, Withheld = 2, BatteryFailure = 3 };

struct Common {
  std::uint64_t seed = default_seed;
  std::size_t budget = default_budget;
  bool human = false;
  std::string output;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "2..6" or "2,3,4,6"
std::vector<std::size_t> parse_n_range(const std::string& s) {
  std::vector<std::size_t> ns;
  try {
    if (auto dots = s.find(".."); dots != std::string::npos) {
      auto lo = std::stoul(s.substr(0, dots)), hi = std::stoul(s.substr(dots + 2));
      require(lo <= hi, ErrorCode::InputError, "empty n range '" + s + "'");
      for (auto n = lo; n <= hi; ++n) ns.push_back(n);
    } else {
      for (const auto& t : split(s, ',')) ns.push_back(std::stoul(t));
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InputError, "bad n range '" + s + "'");
  }
  return ns;
}

std::vector<GaussRat> parse_point(const std::vector<std::string>& entries) {
  std::vector<GaussRat> z;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    try {
      z.push_back(parse_scalar<GaussRat>(entries[k], 0));
    } catch (const Error& e) {
      throw Error(ErrorCode::InputError, "point[" + std::to_string(k) + "]: " + e.message());
    }
  }
  return z;
}

void render_human(std::ostream& os, const json& j, const std::string& indent = "") {
  auto flat = [](const json& a) {
    if (!a.is_array()) return false;
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << indent << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << indent << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else {
        os << indent << k << ":\n";
        render_human(os, v, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (flat(v)) {
        os << indent << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else if (v.is_primitive()) {
        os << indent << "- " << scalar(v) << "\n";
      } else {
        os << indent << "-\n";
        render_human(os, v, indent + "  ");
      }
    }
  }
}

void render_battery(std::ostream& os, const json& r) {
  for (const auto& it : r["items"])
    os << (it["pass"].get<bool>() ? "PASS" : "FAIL") << "  [" << it["criterion"].get<int>() << "] "
       << it["name"].get<std::string>() << "  (" << it["detail"].get<std::string>() << ")\n";
  os << r["passed_items"].get<std::size_t>() << "/" << r["items"].size() << " items passed\n";
}

void emit(const Common& c, const json& report, bool battery = false) {
  std::ostringstream os;
  if (c.human) {
    if (battery) render_battery(os, report);
    else render_human(os, report);
  } else {
    os << report.dump(2) << "\n";
  }
  if (c.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.output);
    if (!f) throw Error(ErrorCode::InputError, "cannot write '" + c.output + "'");
    f << os.str();
  }
}

json header() {
  json r;
  r["tool"] = "so2n";
  r["version"] = tool_version;
  r["exact"] = true;
  return r;
}

template <class C>
json point_json(const ProjectivePoint<C>& p) {
  json j;
  long d = 0;
  for (const auto& x : p.z)
    if (long r = radicand(x)) d = r;
  j["D"] = d;
  j["coords"] = to_json(Vector<C>(p.z));
  return j;
}

template <class C>
json point_checks(const ProjectivePoint<C>& p) {
  json j;
  j["quadric_residual"] = format_scalar(quadric_residual(p));
  j["on_quadric"] = on_quadric(p);
  j["hermitian_norm"] = format_scalar(hermitian_q(p, p));
  j["orientation"] = format_scalar(orientation(p));
  j["in_lieball"] = in_lieball(p);
  return j;
}

int run_analyze(const Common& c, const std::string& builtin_name, const std::vector<std::string>& params,
                const std::string& file, const std::string& tasks) {
  require(builtin_name.empty() != file.empty(), ErrorCode::InputError, "give exactly one of --builtin or --file");
  AnalysisRequest req;
  req.seed = c.seed;
  req.budget = c.budget;
  if (tasks.empty() || tasks == "ALL") {
    req.tasks.insert(all_tasks().begin(), all_tasks().end());
  } else {
    for (const auto& t : split(tasks, ',')) req.tasks.insert(parse_task(t));
  }
  AlgebraSource src;
  if (!file.empty()) {
    req.source = file;
    src = load_algebra_file(file);
  } else {
    std::map<std::string, long> kv;
    for (const auto& p : params) {
      auto eq = p.find('=');
      require(eq != std::string::npos && eq > 0, ErrorCode::InputError, "parameter '" + p + "' is not key=value");
      try {
        kv[p.substr(0, eq)] = std::stol(p.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InputError, "parameter '" + p + "' needs an integer value");
      }
    }
    req.source = "builtin:" + builtin_name;
    for (const auto& [k, v] : kv) req.source += " " + k + "=" + std::to_string(v);
    src = algebra_from_builtin(builtin_name, kv);
  }
  auto out = analyze(src, req);
  emit(c, out.report);
  return out.withheld ? Withheld : Ok;
}

int run_verify(const Common& c, const std::vector<std::string>& names, const std::string& range, std::size_t samples) {
  BatteryOptions o;
  o.seed = c.seed;
  o.budget = c.budget;
  o.samples = samples;
  if (!range.empty()) o.ns = parse_n_range(range);
  std::vector<Battery> bs;
  if (names.empty() || (names.size() == 1 && names[0] == "ALL")) bs = all_batteries();
  else
    for (const auto& n : names) bs.push_back(parse_battery(n));
  json r = header();
  json bj = json::array();
  for (auto b : bs) bj.push_back(battery_name(b));
  r["request"] = {{"batteries", bj}, {"n", range.empty() ? json("default") : json(o.ns)}, {"seed", c.seed},
                  {"budget", c.budget}, {"samples", samples}};
  json items = json::array();
  std::size_t passed = 0;
  for (auto b : bs)
    for (const auto& it : run_battery(b, o)) {
      passed += it.pass;
      items.push_back({{"battery", battery_name(b)},
                       {"criterion", it.criterion},
                       {"name", it.name},
                       {"pass", it.pass},
                       {"detail", it.detail}});
    }
  r["items"] = items;
  r["passed_items"] = passed;
  r["passed"] = passed == items.size();
  emit(c, r, true);
  return passed == items.size() ? Ok : BatteryFailure;
}

int run_embed(const Common& c, const std::string& type, std::size_t k1, std::size_t k2, std::size_t n,
              const std::vector<std::string>& entries) {
  EmbeddingSpec spec{parse_embedding_type(type), k1, k2, n};
  spec.validate();
  auto z = parse_point(entries);
  json r = header();
  r["spec"] = spec.label();
  r["input"] = to_json(Vector<GaussRat>(z));
  auto p = embed(spec, z);
  r["point"] = point_json(p);
  r["checks"] = point_checks(p);
  emit(c, r);
  return Ok;
}

int run_map_iv(const Common& c, const std::vector<std::string>& entries) {
  DomainPoint p{parse_point(entries)};
  json r = header();
  r["input"] = to_json(Vector<GaussRat>(p.z));
  r["lambda"] = format_scalar(lambda_of(p));
  r["squared_norm"] = format_scalar(squared_norm(p));
  r["margin"] = format_scalar(margin(p));
  r["in_domain_iv"] = in_domain_iv(p);
  auto f = cartan_iv_map(p);
  r["image"] = point_json(f);
  r["checks"] = point_checks(f);
  emit(c, r);
  return Ok;
}

int run_recheck(const Common& c, const std::string& file) {
  auto report = parse_json_text(read_file(file));
  if (!report.is_object() || !report.contains("algebra") || !report.contains("results") ||
      !report["results"].contains("IRREDUCIBILITY"))
    throw Error(ErrorCode::InputError, "report has no IRREDUCIBILITY result to recheck");
  bool ok = recheck_report(report);
  json r = header();
  r["source"] = file;
  r["verdict"] = report["results"]["IRREDUCIBILITY"].value("verdict", std::string("?"));
  r["verified"] = ok;
  emit(c, r);
  return ok ? Ok : BatteryFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of real Lie algebras acting on R^{2,n}"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("--budget", c.budget, "singular-element attempts")->capture_default_str();
  app.add_flag("--human", c.human, "render tables instead of JSON");
  app.add_option("--output", c.output, "write the report to a file");

  std::string builtin_name, file, tasks;
  std::vector<std::string> params;
  auto* analyze_cmd = app.add_subcommand("analyze", "run analysis tasks on an algebra");
  analyze_cmd->add_option("--builtin", builtin_name, "builtin algebra name, e.g. SO(2,3)");
  analyze_cmd->add_option("--param", params, "builtin parameter key=value");
  analyze_cmd->add_option("--file", file, "algebra definition (JSON)");
  analyze_cmd->add_option("--tasks", tasks, "comma-separated tasks or ALL")->capture_default_str();

  std::vector<std::string> batteries;
  std::string range;
  std::size_t samples = 100;
  auto* verify_cmd = app.add_subcommand("verify", "run verification batteries");
  verify_cmd->add_option("battery", batteries, "THEOREM1, APPENDIX_A, APPENDIX_B, EMBEDDINGS, LEMMA_FORMS, TYPES, FIXERS or ALL");
  verify_cmd->add_option("--n", range, "n range, e.g. 2..6 or 2,3,4");
  verify_cmd->add_option("--samples", samples, "random points per sampled item")->capture_default_str();

  std::string type;
  std::size_t k1 = 1, k2 = 0, n = 2;
  std::vector<std::string> point;
  auto* embed_cmd = app.add_subcommand("embed", "evaluate a totally geodesic embedding at a point");
  embed_cmd->add_option("--type", type, "I1, I2, G1, G2, P1 or P2")->required();
  embed_cmd->add_option("--k", k1, "k (k1 for G2)")->capture_default_str();
  embed_cmd->add_option("--k2", k2, "k2 for G2")->capture_default_str();
  embed_cmd->add_option("--n", n, "ambient n")->capture_default_str();
  embed_cmd->add_option("point", point, "homogeneous coordinates, entries like 1/2 or (0,1)")->required();

  std::vector<std::string> zpoint;
  auto* map_cmd = app.add_subcommand("map-iv", "evaluate the domain-IV map at z");
  map_cmd->add_option("z", zpoint, "coordinates of z, entries like 1/2 or (0,1)")->required();

  std::string report_file;
  auto* recheck_cmd = app.add_subcommand("recheck", "re-verify the certificate stored in a report");
  recheck_cmd->add_option("report", report_file, "report produced by analyze")->required();

  auto* list_cmd = app.add_subcommand("builtins", "list builtin algebras");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : InputFailure;
  }

  try {
    if (*analyze_cmd) return run_analyze(c, builtin_name, params, file, tasks);
    if (*verify_cmd) return run_verify(c, batteries, range, samples);
    if (*embed_cmd) return run_embed(c, type, k1, k2, n, point);
    if (*map_cmd) return run_map_iv(c, zpoint);
    if (*recheck_cmd) return run_recheck(c, report_file);
    if (*list_cmd) {
      json r = header();
      json list = json::array();
      for (const auto& b : builtin_catalog()) list.push_back({{"name", b.pattern}, {"help", b.help}});
      r["builtins"] = list;
      emit(c, r);
      return Ok;
    }
  } catch (const Error& e) {
    std::cerr << "so2n: " << e.what() << "\n";
    return e.code() == ErrorCode::AnalysisBudgetExceeded ? Withheld : InputFailure;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "so2n: INPUT_ERROR: " << e.what() << "\n";
    return InputFailure;
  }
  return Ok;
}
