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

#include "bqc/harness/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "bqc/harness/experiments.hpp"

namespace bqc::harness {

namespace {

std::unique_ptr<std::ofstream> open_out(const std::string& dir, const std::string& name) {
  if (dir.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(std::filesystem::path(dir) / name);
  if (!*f) throw std::runtime_error("cannot write " + (std::filesystem::path(dir) / name).string());
  return f;
}

}  // namespace

nlohmann::json run_experiment(const RunConfig& cfg, const std::string& out_dir, std::string* csv) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  nlohmann::json doc;
  doc["config_echo"] = config_to_json(cfg);
  TrialStats st;
  switch (cfg.experiment) {
    case Experiment::Gadget: {
      std::unique_ptr<gadget::TranscriptWriter> w;
      if (!out_dir.empty()) {
        w = std::make_unique<gadget::TranscriptWriter>(
            (std::filesystem::path(out_dir) / "alice.jsonl").string(),
            (std::filesystem::path(out_dir) / "bob.jsonl").string());
      }
      st = run_gadget_experiment(cfg, w.get());
      break;
    }
    case Experiment::Css:
      st = css_logical_sweep(cfg);
      break;
    case Experiment::Fk: {
      auto f = open_out(out_dir, "transcript.jsonl");
      st = run_fk_experiment(cfg, f.get());
      break;
    }
    case Experiment::Compose: {
      auto f = open_out(out_dir, "transcript.jsonl");
      st = estimate_acceptance(cfg, f.get());
      break;
    }
    case Experiment::Verify: {
      auto f = open_out(out_dir, "transcript.jsonl");
      st = estimate_p_incorrect(cfg, f.get()).stats;
      break;
    }
    case Experiment::Blindness: {
      std::vector<SecretClass> classes;
      for (int w = 0; w < 5; ++w) {
        for (int c = 0; c < 2; ++c) classes.push_back(wire_basis_class(w, c));
      }
      BlindnessReport rep =
          blindness_audit(*cfg.p, *cfg.p_prime, cfg.trials, classes, cfg.classes, cfg.seed);
      st.trials = cfg.trials;
      st.extra = rep.to_json();
      break;
    }
    case Experiment::Teleport: {
      const auto channel = config_channel(cfg);
      if (channel.strategies().size() > 1) {
        throw std::invalid_argument("teleport takes a single deviation");
      }
      const adversary::Strategy s =
          channel.strategies().empty() ? adversary::Strategy(adversary::Honest{}) : channel.strategies()[0];
      TeleportReport rep = teleport_equivalence(s, cfg.trials, cfg.seed);
      st.trials = cfg.trials;
      for (const auto& c : rep.cases) {
        st.metrics["p2_same_" + c.target] = c.p2_same;
        st.metrics["p2t_same_" + c.target] = c.p2t_same;
        st.metrics["p2_other_" + c.target] = c.p2_other;
        st.metrics["p2t_other_" + c.target] = c.p2t_other;
      }
      st.extra = rep.to_json();
      break;
    }
    case Experiment::Loss:
      st = loss_experiment(cfg);
      break;
  }
  const nlohmann::json body = st.to_json();
  for (const auto& [k, v] : body.items()) doc[k] = v;
  if (csv) *csv = st.to_csv();
  if (!out_dir.empty()) {
    auto f = open_out(out_dir, "stats.json");
    *f << doc.dump(2) << '\n';
  }
  return doc;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Blind and verifiable delegated quantum computation simulator"};
  app.require_subcommand(1);
  std::string config_path, out_dir, csv_path, adversary, graph, code, route;
  std::uint64_t seed = 0;
  long trials = 0;
  double p = 0, pprime = 0, p_loss = 0;
  int n = 0, nd = 0, nt = 0, d = 0;
  std::vector<int> phi;

  const char* names[] = {"gadget", "css", "fk", "compose", "verify", "blindness", "teleport", "loss"};
  const char* about[] = {"remote state preparation gadget",
                         "CSS-encoded remote preparation: logical error rates",
                         "FK protocol with directly prepared qubits",
                         "gadgets feeding FK: acceptance",
                         "p_incorrect against the trap bound",
                         "blindness audit",
                         "measure-half versus teleported preparation",
                         "loss-tolerant preparation overhead"};
  std::vector<CLI::App*> subs;
  for (int i = 0; i < 8; ++i) {
    CLI::App* s = app.add_subcommand(names[i], about[i]);
    s->add_option("--config", config_path, "JSON config file");
    s->add_option("--seed", seed, "64-bit seed");
    s->add_option("--trials", trials, "number of trials (samples per class for blindness)");
    s->add_option("--p", p, "gadget parameter p");
    s->add_option("--pprime", pprime, "gadget parameter p'");
    s->add_option("--n", n, "number of graph vertices");
    s->add_option("--nd", nd, "number of dummies");
    s->add_option("--nt", nt, "number of traps");
    s->add_option("--d", d, "repetition distance for verify");
    s->add_option("--phi", phi, "computation angles in units of pi/4");
    s->add_option("--adversary", adversary, "preset name or inline JSON");
    s->add_option("--graph", graph, "graph family or family:k");
    s->add_option("--code", code, "none, steane, trivial or a code file");
    s->add_option("--route", route, "frame or statevector");
    s->add_option("--p-loss", p_loss, "loss probability per transmission");
    s->add_option("--out", out_dir, "output directory for stats.json and transcripts");
    s->add_option("--csv", csv_path, "write a metrics table as CSV");
    subs.push_back(s);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    CLI::App* sub = nullptr;
    int which = 0;
    for (int i = 0; i < 8; ++i) {
      if (subs[i]->parsed()) {
        sub = subs[i];
        which = i;
      }
    }
    nlohmann::json j = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config " + config_path);
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
      }
    }
    j["experiment"] = names[which];
    auto given = [&](const char* flag) { return sub->count(flag) > 0; };
    if (given("--seed")) j["seed"] = seed;
    if (given("--trials")) j["trials"] = trials;
    if (given("--p")) j["p"] = p;
    if (given("--pprime")) j["pprime"] = pprime;
    if (given("--n")) j["n"] = n;
    if (given("--nd")) j["nd"] = nd;
    if (given("--nt")) j["nt"] = nt;
    if (given("--d")) j["d"] = d;
    if (given("--phi")) j["phi"] = phi;
    if (given("--graph")) j["graph"] = graph;
    if (given("--code")) j["code"] = code;
    if (given("--route")) j["route"] = route;
    if (given("--p-loss")) j["p_loss"] = p_loss;
    if (given("--adversary")) {
      const bool inline_json = !adversary.empty() && (adversary[0] == '{' || adversary[0] == '[');
      try {
        j["adversary"] = inline_json ? nlohmann::json::parse(adversary) : nlohmann::json(adversary);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("adversary: ") + e.what());
      }
    }
    const RunConfig cfg = config_from_json(j);
    std::string csv;
    const nlohmann::json doc = run_experiment(cfg, out_dir, csv_path.empty() ? nullptr : &csv);
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      if (!f) throw std::runtime_error("cannot write " + csv_path);
      f << csv;
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "bqcsim: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bqc::harness
