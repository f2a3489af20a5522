// Copyright 2026 The bqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqc/harness/config.hpp"

#include <set>
#include <stdexcept>

#include "bqc/adversary/serialize.hpp"
#include "bqc/css/code.hpp"
#include "bqc/fkproto/compose.hpp"
#include "bqc/fkproto/serialize.hpp"

namespace bqc::harness {

namespace {

const std::pair<Experiment, const char*> kNames[] = {
    {Experiment::Gadget, "gadget"},   {Experiment::Css, "css"},
    {Experiment::Fk, "fk"},           {Experiment::Compose, "compose"},
    {Experiment::Verify, "verify"},   {Experiment::Blindness, "blindness"},
    {Experiment::Teleport, "teleport"}, {Experiment::Loss, "loss"}};

}  // namespace

const char* experiment_name(Experiment e) {
  for (auto [k, name] : kNames) {
    if (k == e) return name;
  }
  return "?";
}

Experiment parse_experiment(const std::string& s) {
  for (auto [k, name] : kNames) {
    if (s == name) return k;
  }
  throw std::invalid_argument("unknown experiment '" + s + "'");
}

bool uses_gadgets(Experiment e) {
  return e == Experiment::Gadget || e == Experiment::Compose || e == Experiment::Blindness ||
         e == Experiment::Loss;
}

void finalize_config(RunConfig& cfg) {
  if (cfg.trials <= 0) throw std::invalid_argument("trials must be positive");
  if (cfg.n < 1 || cfg.n > fkproto::kMaxFkVertices) {
    throw std::invalid_argument("n must lie in [1, " + std::to_string(fkproto::kMaxFkVertices) + "]");
  }
  if (cfg.n_t < 0 || cfg.n_t > cfg.n) throw std::invalid_argument("nt must lie in [0, n]");
  if (cfg.d < 1) throw std::invalid_argument("d must be at least 1");
  if (!(cfg.p_loss >= 0.0 && cfg.p_loss < 1.0)) throw std::invalid_argument("p_loss must lie in [0, 1)");
  if (cfg.route != "frame" && cfg.route != "statevector") {
    throw std::invalid_argument("route must be frame or statevector");
  }
  if (!cfg.graph.is_string() || cfg.graph.get<std::string>().find(':') != std::string::npos) {
    cfg.n = config_graph(cfg).n_vertices;
  }
  if (!cfg.n_d && (cfg.experiment == Experiment::Compose || cfg.experiment == Experiment::Verify)) {
    cfg.n_d = cfg.n / 2;
  }
  if (cfg.n_d && (*cfg.n_d < 0 || *cfg.n_d + cfg.n_t > cfg.n)) {
    throw std::invalid_argument("nd must lie in [0, n - nt]");
  }
  if (!cfg.p && uses_gadgets(cfg.experiment)) {
    cfg.p = cfg.experiment == Experiment::Compose ? 0.4 : 0.25;
  }
  if (cfg.n_d && cfg.p) {
    if (cfg.p_prime) {
      fkproto::check_parameter_relation(cfg.n, *cfg.n_d, *cfg.p, *cfg.p_prime);
    } else {
      cfg.p_prime = fkproto::solve_p_prime(cfg.n, *cfg.n_d, *cfg.p);
      cfg.p_prime_solved = true;
    }
  }
  if (!cfg.p_prime && uses_gadgets(cfg.experiment)) cfg.p_prime = 0.5;
  if (cfg.p && !(*cfg.p > 0.0 && *cfg.p < 0.5)) throw std::invalid_argument("p must lie in (0, 1/2)");
  if (cfg.p_prime && !(*cfg.p_prime > 0.0 && *cfg.p_prime < 1.0)) {
    throw std::invalid_argument("pprime must lie in (0, 1)");
  }
  config_channel(cfg);
}

RunConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> kKeys = {
      "experiment", "graph", "n",    "nt",     "nd",    "p",       "pprime",
      "code",       "route", "adversary", "trials", "seed", "d",     "phi",
      "p_loss",     "sweep", "classes",   "transcript_limit", "pprime_solved"};
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kKeys.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");
  }
  RunConfig c;
  try {
    if (j.contains("experiment")) c.experiment = parse_experiment(j["experiment"].get<std::string>());
    if (j.contains("graph")) c.graph = j["graph"];
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("nt")) c.n_t = j["nt"].get<int>();
    if (j.contains("nd") && !j["nd"].is_null()) c.n_d = j["nd"].get<int>();
    if (j.contains("p") && !j["p"].is_null()) c.p = j["p"].get<double>();
    if (j.contains("pprime") && !j["pprime"].is_null()) c.p_prime = j["pprime"].get<double>();
    if (j.contains("code")) c.code = j["code"].get<std::string>();
    if (j.contains("route")) c.route = j["route"].get<std::string>();
    if (j.contains("adversary")) c.adversary = j["adversary"];
    if (j.contains("trials")) c.trials = j["trials"].get<long>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("d")) c.d = j["d"].get<int>();
    if (j.contains("phi")) c.phi = j["phi"].get<std::vector<int>>();
    if (j.contains("p_loss")) c.p_loss = j["p_loss"].get<double>();
    if (j.contains("sweep")) c.sweep = j["sweep"].get<std::vector<double>>();
    if (j.contains("classes")) c.classes = j["classes"].get<std::vector<std::string>>();
    if (j.contains("transcript_limit")) c.transcript_limit = j["transcript_limit"].get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  finalize_config(c);
  return c;
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["experiment"] = experiment_name(c.experiment);
  j["graph"] = c.graph;
  j["n"] = c.n;
  j["nt"] = c.n_t;
  j["nd"] = c.n_d ? nlohmann::json(*c.n_d) : nlohmann::json();
  j["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json();
  j["pprime"] = c.p_prime ? nlohmann::json(*c.p_prime) : nlohmann::json();
  j["pprime_solved"] = c.p_prime_solved;
  j["code"] = c.code;
  j["route"] = c.route;
  j["adversary"] = c.adversary;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["d"] = c.d;
  j["phi"] = c.phi;
  j["p_loss"] = c.p_loss;
  j["sweep"] = c.sweep;
  j["classes"] = c.classes;
  j["transcript_limit"] = c.transcript_limit;
  return j;
}

fkproto::GraphSpec config_graph(const RunConfig& c) {
  if (c.graph.is_object()) return fkproto::graph_from_json(c.graph);
  if (!c.graph.is_string()) throw std::invalid_argument("graph must be a family name or object");
  const std::string name = c.graph.get<std::string>();
  const auto colon = name.find(':');
  if (colon == std::string::npos) return fkproto::graph_from_json({{"family", name}, {"n", c.n}});
  int k = 0;
  try {
    k = std::stoi(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad graph '" + name + "'");
  }
  return fkproto::graph_from_json({{"family", name.substr(0, colon)}, {"n", k}});
}

adversary::ChannelModel config_channel(const RunConfig& c) {
  try {
    return adversary::channel_from_json(c.adversary);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("adversary: ") + e.what());
  }
}

gadget::PrepConfig config_prep(const RunConfig& c) {
  if (c.code == "none") return gadget::PrepConfig::logical();
  css::CssCode code = c.code == "steane"    ? css::CssCode::steane()
                      : c.code == "trivial" ? css::CssCode::trivial()
                                            : css::CssCode::load(c.code);
  return c.route == "frame" ? gadget::PrepConfig::frame(std::move(code))
                            : gadget::PrepConfig::statevector(std::move(code));
}

}  // namespace bqc::harness
