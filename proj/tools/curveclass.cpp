#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "curveclass/curveclass.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitUnsupportedCase = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Failure {
  cc_status status;
  std::string message;
};

void check(cc_status s) {
  if (s != CC_OK) throw Failure{s, cc_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { cc_string_free(s); }
};
struct CurveDeleter {
  void operator()(cc_curve* c) const { cc_curve_free(c); }
};
struct ModuleDeleter {
  void operator()(cc_gmodule* m) const { cc_gmodule_free(m); }
};
using CurvePtr = std::unique_ptr<cc_curve, CurveDeleter>;
using ModulePtr = std::unique_ptr<cc_gmodule, ModuleDeleter>;

// *out is read after the call that filled it has returned.
Json take(cc_status s, char** out) {
  std::unique_ptr<char, StringDeleter> guard(*out);
  check(s);
  return Json::parse(guard.get());
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{CC_INVALID_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurvePtr load_curve(const std::string& path) {
  const std::string text = slurp(path);
  cc_curve* c = nullptr;
  check(cc_curve_load_json(text.c_str(), &c));
  return CurvePtr(c);
}

std::string compact(const Json& j) { return j.dump(); }

std::string yes_no(const Json& j) {
  if (j.is_null()) return "unknown";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// ---------------------------------------------------------------- commands

void cmd_validate(const std::string& file, bool json) {
  auto c = load_curve(file);
  char* out = nullptr;
  const Json s = take(cc_curve_summary_json(c.get(), &out), &out);
  if (json) {
    std::cout << compact(s) << "\n";
    return;
  }
  std::cout << "genus " << s["genus"].get<unsigned>() << ", q=" << s["q"].get<std::uint64_t>();
  if (s["kind"] == "double_cover") {
    const auto n = s["points_at_infinity"].size();
    std::cout << ", " << n << (n == 1 ? " point" : " points") << " at infinity";
  }
  std::cout << "\n";
}

void cmd_points(const std::string& file, unsigned max_degree, bool json) {
  auto c = load_curve(file);
  char* out = nullptr;
  const Json pts = take(cc_points_json(c.get(), max_degree, &out), &out);
  if (json) {
    std::cout << compact(pts) << "\n";
    return;
  }
  for (const auto& p : pts["points"]) {
    std::cout << p["id"].get<std::string>() << " " << p["degree"].get<unsigned>() << " "
              << (p["pi"].is_null() ? std::string("inf") : compact(p["pi"])) << " "
              << (p["y"].is_null() ? std::string("-") : compact(p["y"])) << "\n";
  }
}

void cmd_zeta(const std::string& file, std::uint32_t p, bool json) {
  auto c = load_curve(file);
  char* out = nullptr;
  const Json z = take(cc_zeta_json(c.get(), p, &out), &out);
  if (json) {
    std::cout << compact(z) << "\n";
    return;
  }
  std::cout << "genus " << z["genus"].get<unsigned>() << ", q=" << z["q"].get<std::uint64_t>() << "\n";
  std::cout << "L " << compact(z["L"]) << "\n";
  std::cout << "N " << compact(z["N"]) << "\n";
  std::cout << "h " << z["h"].get<std::uint64_t>() << "\n";
  if (z.contains("pic_p_nontrivial"))
    std::cout << "Pic[" << p << "] " << (z["pic_p_nontrivial"].get<bool>() ? "nontrivial" : "trivial") << "\n";
}

void cmd_oracle(const std::string& file, std::uint32_t p, bool json) {
  auto c = load_curve(file);
  char* out = nullptr;
  const Json g = take(cc_oracle_json(c.get(), p, &out), &out);
  if (json) {
    std::cout << compact(g) << "\n";
    return;
  }
  std::string name;
  for (const auto& d : g["invariant_factors"]) name += (name.empty() ? "" : " x ") + ("Z/" + d.dump());
  std::cout << "Pic0 " << (name.empty() ? std::string("0") : name) << ", order " << g["order"].get<std::uint64_t>()
            << "\n";
  if (g.contains("p_torsion_dim"))
    std::cout << "dim Pic[" << p << "] " << g["p_torsion_dim"].get<unsigned>() << "\n";
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
  }
  return out;
}

void cmd_classify(const std::string& file, std::uint32_t p, const std::vector<std::string>& S_raw,
                  const std::vector<std::string>& T_raw, bool json) {
  auto c = load_curve(file);
  const auto S = split_ids(S_raw), T = split_ids(T_raw);
  std::vector<const char*> s_ptr, t_ptr;
  for (const auto& s : S) s_ptr.push_back(s.c_str());
  for (const auto& t : T) t_ptr.push_back(t.c_str());
  char* out = nullptr;
  const Json r = take(cc_classify_json(c.get(), p, s_ptr.data(), s_ptr.size(), t_ptr.data(), t_ptr.size(), &out), &out);
  if (json) {
    std::cout << compact(r) << "\n";
    return;
  }
  const Json& inv = r["invariants"];
  std::cout << r["verdict"].get<std::string>() << "  [" << r["justification"].get<std::string>() << "]\n";
  std::cout << "case " << r["case"].get<int>() << " " << r["case_tag"].get<std::string>() << "\n";
  std::cout << "cd " << r["cd_bound"].get<std::string>() << "\n";
  std::cout << "pi1 " << r["pi1_description"].get<std::string>();
  if (!r["r"].is_null()) std::cout << " (r=" << r["r"].get<unsigned>() << ")";
  std::cout << "\n";
  std::cout << "q=" << inv["q"].get<std::uint64_t>() << " g=" << inv["g"].get<unsigned>() << " h=" << yes_no(inv["h"])
            << " pic_p_nontrivial=" << yes_no(inv["pic_p_nontrivial"]) << " s=" << yes_no(inv["s"]);
  if (!inv["mu_p"].is_null()) std::cout << " mu_p=" << yes_no(inv["mu_p"]);
  std::cout << "\n";
  if (!inv["ihara"].is_null()) {
    const Json& ih = inv["ihara"];
    std::cout << "ihara " << ih["a"].get<std::string>() << " + " << ih["b"].get<std::string>() << "*sqrt("
              << ih["q"].get<std::uint64_t>() << ") ~ " << ih["approx"].get<std::string>() << " vs "
              << ih["threshold"].get<std::int64_t>() << (ih["exceeds"].get<bool>() ? " exceeds" : " does not exceed")
              << "\n";
  }
  if (!r["euler"].is_null()) {
    const Json& e = r["euler"];
    std::cout << "euler s=" << e["s"] << " t=" << e["t"] << " h1=" << e["h1"] << " rho=" << e["rho"]
              << " h2=" << e["h2"] << " chi_ok=" << yes_no(e["chi_ok"]) << " rho_in_range=" << yes_no(e["rho_in_range"])
              << "\n";
  }
  if (!r["note"].get<std::string>().empty()) std::cout << "note " << r["note"].get<std::string>() << "\n";
}

void print_harness_line(const Json& line, bool json) {
  if (json) {
    std::cout << compact(line) << "\n";
    return;
  }
  std::cout << line["label"].get<std::string>() << " p=" << line["p"] << " lhs=" << yes_no(line["lhs"])
            << " rhs=" << yes_no(line["rhs"]) << " equal=" << yes_no(line["equal"])
            << " group_order=" << line["group_order"];
  if (line["p_divides_order"].get<bool>()) std::cout << " (p divides |G|: hypothesis violated)";
  std::cout << "\n";
}

int cmd_gmodule(const std::string& file, std::uint64_t random, std::uint64_t seed, std::uint32_t p, bool json) {
  if (!file.empty()) {
    const std::string text = slurp(file);
    cc_gmodule* m = nullptr;
    check(cc_gmodule_load_json(text.c_str(), &m));
    ModulePtr mod(m);
    char* out = nullptr;
    print_harness_line(take(cc_gmodule_check_json(mod.get(), p, &out), &out), json);
    return 0;
  }
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < random; ++i) {
    cc_gmodule* m = nullptr;
    check(cc_gmodule_random(seed, i, &m));
    ModulePtr mod(m);
    char* out = nullptr;
    const Json line = take(cc_gmodule_check_json(mod.get(), p, &out), &out);
    if (!line["p_divides_order"].get<bool>() && !line["equal"].get<bool>()) ++failures;
    print_harness_line(line, json);
  }
  if (failures) std::cerr << failures << " instance(s) with p not dividing |G| failed the equality\n";
  return failures ? kExitError : 0;
}

int exit_code(cc_status s) {
  switch (s) {
    case CC_UNSUPPORTED_CASE: return kExitUnsupportedCase;
    case CC_BUDGET_EXCEEDED: return kExitBudget;
    default: return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide the K(pi,1)-property for marked curves over finite fields"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string file;
  bool json = false;
  std::uint64_t budget = 0;
  unsigned max_degree = 1;
  std::uint32_t p = 0;
  std::vector<std::string> S, T;
  std::uint64_t random = 0, seed = 0;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("curve", file, "curve description (JSON), - for stdin")->required();
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--budget", budget, "enumeration cap (overrides CURVECLASS_BUDGET)")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "check a curve and print its genus");
  common(validate, true);
  auto* points = app.add_subcommand("points", "list closed points up to a degree");
  common(points, true);
  points->add_option("--max-degree,-D", max_degree, "largest degree")->required();
  auto* zeta = app.add_subcommand("zeta", "L-polynomial and class number");
  common(zeta, true);
  zeta->add_option("--p", p, "prime for the Pic[p] test");
  auto* classify = app.add_subcommand("classify", "decide the K(pi,1)-property");
  common(classify, true);
  classify->add_option("--p", p, "prime")->required();
  classify->add_option("--S", S, "ramification-allowed point ids");
  classify->add_option("--T", T, "marked point ids");
  auto* oracle = app.add_subcommand("oracle", "brute-force Pic0 group structure");
  common(oracle, true);
  oracle->add_option("--p", p, "prime for the p-torsion dimension");
  auto* gmod = app.add_subcommand("gmodule", "coinvariant harness on a module file or random modules");
  common(gmod, false);
  auto* spec_opt = gmod->add_option("spec", file, "module description (JSON)");
  auto* random_opt = gmod->add_option("--random", random, "number of random modules")->check(CLI::PositiveNumber);
  gmod->add_option("--seed", seed, "seed for --random")->needs(random_opt);
  gmod->add_option("--p", p, "prime")->required();
  spec_opt->excludes(random_opt);

  try {
    app.parse(argc, argv);
    if (points->parsed() && max_degree == 0) throw CLI::ValidationError("--max-degree", "must be at least 1");
    if (gmod->parsed() && file.empty() && random == 0)
      throw CLI::ValidationError("gmodule", "give a module file or --random N");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (budget != 0) setenv("CURVECLASS_BUDGET", std::to_string(budget).c_str(), 1);

  try {
    if (validate->parsed()) cmd_validate(file, json);
    if (points->parsed()) cmd_points(file, max_degree, json);
    if (zeta->parsed()) cmd_zeta(file, p, json);
    if (classify->parsed()) cmd_classify(file, p, S, T, json);
    if (oracle->parsed()) cmd_oracle(file, p, json);
    if (gmod->parsed()) return cmd_gmodule(file, random, seed, p, json);
  } catch (const Failure& f) {
    std::cerr << "error: " << cc_status_name(f.status) << ": " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
