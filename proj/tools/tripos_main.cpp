#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tripos/checks.hpp"
#include "tripos/formula.hpp"
#include "tripos/textio.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitCap = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string>& numeric_keys() {
  static const std::vector<std::string> keys = {
      "i",         "j",         "n",          "m",        "n1",        "n2",
      "sigma",     "sigma-min", "sigma-max",  "t",        "max-index", "max-aux",
      "max-map",   "max-obj",   "size",       "max-nodes", "max-extra", "max-i",
      "max-size",  "full-enum-max", "rho",    "prestack-fiber-cap"};
  return keys;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tripos finite-model workbench"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run a checker from the gallery");
  std::string check_id;
  check->add_option("id", check_id, "check id (see `tripos gallery`)")->required();
  std::string flavor = "identity";
  check->add_option("--flavor", flavor,
                    "identity | power:N | bool2 | chain3 | chain4 | bool4");
  std::string algebra_path;
  check->add_option("--algebra", algebra_path, "algebra file overriding --flavor");
  std::string format = "text";
  check->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  std::map<std::string, long long> numeric_values;
  for (const std::string& key : numeric_keys())
    check->add_option("--" + key, numeric_values[key], "");
  std::map<std::string, std::string> string_values;
  for (const std::string& key : {"from", "to", "map"})
    check->add_option("--" + std::string(key), string_values[key], "");

  // gallery
  auto* gallery = app.add_subcommand("gallery", "list the built-in checks");
  std::string gallery_format = "text";
  gallery->add_option("--format", gallery_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // validate
  auto* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  std::string validate_path;
  validate->add_option("file", validate_path, "algebra file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a closed formula");
  std::string formula_text;
  eval->add_option("--formula", formula_text, "s-expression formula")->required();
  std::string eval_flavor = "identity";
  eval->add_option("--flavor", eval_flavor, "identity | power:N | bool2 | chain3 | chain4 | bool4");
  std::string eval_algebra;
  eval->add_option("--algebra", eval_algebra, "algebra file overriding --flavor");
  std::vector<std::string> pred_specs;
  eval->add_option("--pred", pred_specs, "NAME=shape=2x2:mask=0110 or NAME=shape=2:table=0,1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) {
      tripos::CheckSpec spec;
      spec.check_id = check_id;
      spec.flavor = flavor;
      if (!algebra_path.empty()) spec.algebra_text = read_file(algebra_path);
      for (const std::string& key : numeric_keys())
        if (check->count("--" + key)) spec.params[key] = numeric_values[key];
      for (const std::string& key : {"from", "to", "map"})
        if (check->count("--" + std::string(key))) spec.strings[key] = string_values[key];
      tripos::Report report = tripos::run_check(spec);
      std::cout << (format == "json" ? tripos::emit_structured(report)
                                     : tripos::emit_text(report));
      return tripos::report_exit_code(report);
    }

    if (*gallery) {
      std::vector<tripos::CheckInfo> infos = tripos::list_gallery();
      if (gallery_format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const tripos::CheckInfo& info : infos)
          j.push_back({{"id", info.id}, {"anchor", info.anchor}, {"summary", info.summary}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const tripos::CheckInfo& info : infos)
          std::cout << info.id << "\n    " << info.summary << "\n    anchor: " << info.anchor
                    << "\n";
        std::cout << infos.size() << " checks\n";
      }
      return kExitHolds;
    }

    if (*validate) {
      std::string text = read_file(validate_path);
      tripos::Expected<tripos::ImplicativeAlgebra> alg = tripos::parse_algebra(text);
      if (!alg) {
        std::cerr << "invalid: " << alg.error() << "\n";
        return kExitFails;
      }
      std::cout << tripos::serialize_algebra(*alg);
      return kExitHolds;
    }

    if (*eval) {
      tripos::CheckSpec spec;
      spec.flavor = eval_flavor;
      if (!eval_algebra.empty()) spec.algebra_text = read_file(eval_algebra);
      tripos::TriposInstance T = tripos::instance_from_spec(spec);
      tripos::PredicateEnv env;
      for (const std::string& raw : pred_specs) {
        size_t eq = raw.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--pred expects NAME=SPEC, got '" + raw + "'");
        tripos::Expected<tripos::PredicateBinding> binding =
            tripos::parse_predicate_binding(T, raw.substr(eq + 1));
        if (!binding) throw std::invalid_argument("--pred " + raw + ": " + binding.error());
        env[raw.substr(0, eq)] = *binding;
      }
      tripos::Expected<tripos::FormulaPtr> f = tripos::parse_formula(formula_text, env);
      if (!f) throw std::invalid_argument("formula: " + f.error());
      bool holds = tripos::formula_holds(T, *f);
      std::cout << (holds ? "holds" : "does-not-hold") << "\n";
      return holds ? kExitHolds : kExitFails;
    }
  } catch (const tripos::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
