#include "spherespin/spherespin.h"

#include <json.hpp>
#include <string>

#include "catalog/catalog.hpp"

using nlohmann::json;

extern "C" struct ssp_report {
  ssp::RunReport run;
  std::string json_text;
  std::string markdown_text;
};

namespace {

thread_local std::string g_last_error;
thread_local ssp_status g_last_status = SSP_OK;

void set_error(ssp_status st, const std::string& msg) {
  g_last_status = st;
  g_last_error = msg;
}

struct Config {
  std::string selector = "all";
  int n = -1;
  std::map<std::string, double> params;
  double tol = 1e-9;
  uint64_t seed = 1;
};

Config parse_config(const char* config_json) {
  Config cfg;
  if (!config_json || !*config_json) return cfg;
  json j = json::parse(config_json);
  if (j.contains("case")) cfg.selector = j.at("case").get<std::string>();
  if (j.contains("n")) cfg.n = j.at("n").get<int>();
  if (j.contains("params")) cfg.params = j.at("params").get<std::map<std::string, double>>();
  if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
  if (cfg.tol <= 0) throw std::invalid_argument("tol must be positive");
  return cfg;
}

int default_n(ssp::CaseTag tag) {
  switch (tag) {
    case ssp::CaseTag::SO: return 3;
    case ssp::CaseTag::U:
    case ssp::CaseTag::SU: return 2;
    case ssp::CaseTag::Sp:
    case ssp::CaseTag::SpSp1:
    case ssp::CaseTag::SpU1: return 2;
    default: return 0;
  }
}

ssp::CaseReport run_selected(ssp::CaseTag tag, const Config& cfg) {
  ssp::MetricSpec metric =
      cfg.params.empty() ? ssp::default_metric(tag) : ssp::make_metric(tag, cfg.params);
  const int n = cfg.n >= 0 ? cfg.n : default_n(tag);
  return ssp::run_case(tag, n, metric, cfg.tol);
}

ssp_report* finish(ssp::RunReport&& run) {
  auto* rep = new ssp_report{std::move(run), {}, {}};
  g_last_status = rep->run.all_passed() ? SSP_OK : SSP_CHECKS_FAILED;
  g_last_error.clear();
  return rep;
}

}  // namespace

extern "C" {

ssp_report* ssp_verify(const char* config_json) {
  try {
    Config cfg = parse_config(config_json);
    ssp::RunReport run;
    if (cfg.selector == "all") {
      using ssp::CaseTag;
      for (CaseTag tag : {CaseTag::SO, CaseTag::U, CaseTag::SU, CaseTag::Sp, CaseTag::SpSp1,
                          CaseTag::SpU1, CaseTag::G2, CaseTag::Spin7, CaseTag::Spin9}) {
        Config per = cfg;
        per.n = -1;
        per.params.clear();  // per-case defaults under "all"
        run.cases.push_back(run_selected(tag, per));
      }
      run.cases.push_back(ssp::round_metric_crosscheck(cfg.tol));
    } else if (cfg.selector == "round") {
      run.cases.push_back(ssp::round_metric_crosscheck(cfg.tol));
    } else {
      run.cases.push_back(run_selected(ssp::parse_case(cfg.selector), cfg));
    }
    return finish(std::move(run));
  } catch (const std::invalid_argument& e) {
    set_error(SSP_CONFIG_ERROR, e.what());
    return nullptr;
  } catch (const json::exception& e) {
    set_error(SSP_CONFIG_ERROR, e.what());
    return nullptr;
  } catch (const std::exception& e) {
    set_error(SSP_RUNTIME_ERROR, e.what());
    return nullptr;
  }
}

ssp_report* ssp_table(const char* which, const char* config_json) {
  try {
    if (!which || !*which) throw std::invalid_argument("table name required");
    Config cfg = parse_config(config_json);
    ssp::RunReport run;
    run.cases.push_back(ssp::table_report(which, cfg.tol, cfg.seed));
    return finish(std::move(run));
  } catch (const std::invalid_argument& e) {
    set_error(SSP_CONFIG_ERROR, e.what());
    return nullptr;
  } catch (const json::exception& e) {
    set_error(SSP_CONFIG_ERROR, e.what());
    return nullptr;
  } catch (const std::exception& e) {
    set_error(SSP_RUNTIME_ERROR, e.what());
    return nullptr;
  }
}

int ssp_report_passed(const ssp_report* rep) { return rep && rep->run.all_passed() ? 1 : 0; }

ssp_status ssp_report_status(const ssp_report* rep) {
  if (!rep) return SSP_RUNTIME_ERROR;
  return rep->run.all_passed() ? SSP_OK : SSP_CHECKS_FAILED;
}

const char* ssp_report_json(ssp_report* rep) {
  if (!rep) return nullptr;
  if (rep->json_text.empty()) rep->json_text = rep->run.to_json().dump(2);
  return rep->json_text.c_str();
}

const char* ssp_report_markdown(ssp_report* rep) {
  if (!rep) return nullptr;
  if (rep->markdown_text.empty()) {
    // table reports use the compact table layout
    if (rep->run.cases.size() == 1 && rep->run.cases[0].case_id.rfind("table:", 0) == 0) {
      rep->markdown_text = ssp::render_table(rep->run.cases[0].case_id.substr(6),
                                             rep->run.cases[0]);
    } else {
      rep->markdown_text = rep->run.to_markdown();
    }
  }
  return rep->markdown_text.c_str();
}

void ssp_report_free(ssp_report* rep) { delete rep; }

const char* ssp_last_error(void) { return g_last_error.c_str(); }
ssp_status ssp_last_status(void) { return g_last_status; }

const char* ssp_version(void) { return "1.0.0"; }

}  // extern "C"
