// Command line front end. Talks to the library exclusively through the
// exported C interface.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "spherespin/spherespin.h"

namespace {

using nlohmann::json;

struct Options {
  std::string case_selector;
  int n = -1;
  std::vector<std::string> params;
  double tol = -1;
  std::string format;
  std::string out;
  long long seed = -1;
  std::string config_file;
  std::string table;
};

int emit(ssp_report* rep, const std::string& format, const std::string& out) {
  const char* text = (format == "markdown") ? ssp_report_markdown(rep) : ssp_report_json(rep);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot open output file: " << out << "\n";
      ssp_report_free(rep);
      return SSP_CONFIG_ERROR;
    }
    f << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  const int code = ssp_report_passed(rep) ? SSP_OK : SSP_CHECKS_FAILED;
  ssp_report_free(rep);
  return code;
}

// Merge the config file (if any) with command line flags; flags win.
json build_config(const Options& opt, std::string& format, std::string& out) {
  json cfg = json::object();
  if (!opt.config_file.empty()) {
    std::ifstream f(opt.config_file);
    if (!f) throw std::invalid_argument("cannot read config file: " + opt.config_file);
    f >> cfg;
  }
  if (!opt.case_selector.empty()) cfg["case"] = opt.case_selector;
  if (opt.n >= 0) cfg["n"] = opt.n;
  if (!opt.params.empty()) {
    json p = cfg.value("params", json::object());
    for (const auto& kv : opt.params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--param expects name=value, got: " + kv);
      const std::string key = kv.substr(0, eq);
      size_t used = 0;
      const double value = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1)
        throw std::invalid_argument("bad numeric value in --param " + kv);
      p[key] = value;
    }
    cfg["params"] = p;
  }
  if (opt.tol > 0) cfg["tol"] = opt.tol;
  if (opt.seed >= 0) cfg["seed"] = opt.seed;

  format = !opt.format.empty() ? opt.format : cfg.value("format", "json");
  if (format != "json" && format != "markdown")
    throw std::invalid_argument("--format must be json or markdown");
  out = !opt.out.empty() ? opt.out : cfg.value("out", "");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherespin: invariant spinors and geometric structures on homogeneous spheres"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "family index of the sphere presentation");
    cmd->add_option("--param", opt.params, "metric parameter assignment name=value (repeatable)");
    cmd->add_option("--tol", opt.tol, "kernel/rank tolerance (default 1e-9)");
    cmd->add_option("--format", opt.format, "output format: json | markdown");
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    cmd->add_option("--seed", opt.seed, "seed for random parameter samples");
    cmd->add_option("--config", opt.config_file, "JSON config file with the same keys");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the verification pipeline for a case");
  verify->add_option("--case", opt.case_selector,
                     "all | round | so | u | su | sp | spsp1 | spu1 | g2 | spin7 | spin9");
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "recompute a catalogue table");
  table->add_option("--which", opt.table,
                    "table2 | s7forms | s15forms | s15squaring | spnU1forms");
  add_common(table);

  CLI11_PARSE(app, argc, argv);

  std::string format, out;
  json cfg;
  try {
    cfg = build_config(opt, format, out);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return SSP_CONFIG_ERROR;
  }

  ssp_report* rep = nullptr;
  if (app.got_subcommand(verify)) {
    rep = ssp_verify(cfg.dump().c_str());
  } else {
    std::string which = !opt.table.empty() ? opt.table : cfg.value("which", "");
    rep = ssp_table(which.c_str(), cfg.dump().c_str());
  }
  if (!rep) {
    std::cerr << "error: " << ssp_last_error() << "\n";
    return ssp_last_status();
  }
  return emit(rep, format, out);
}
