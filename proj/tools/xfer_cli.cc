#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "xfer/checkpoint.h"
#include "xfer/corpus.h"
#include "xfer/eval.h"
#include "xfer/service.h"
#include "xfer/tokenizer.h"
#include "xfer/trainer.h"

using namespace xfer;
namespace fs = std::filesystem;

namespace {

void write_json(const nlohmann::json& j, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stod(part));
  return out;
}

void print_epoch(const std::string& label, const EpochLog& e) {
  std::cerr << label << " epoch " << e.epoch << " train " << e.train_loss << " heldout "
            << e.heldout_loss << '\n';
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code completion with transfer learning: data, training, evaluation, serving"};
  app.require_subcommand(1);

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Build and split datasets");
  corpus->require_subcommand(1);
  auto* cbuild = corpus->add_subcommand("build", "Build a dataset from a source tree");
  std::string role_s = "autocompletion", lang_s = "A";
  fs::path in_dir, out_file;
  std::uint64_t seed = 0;
  std::optional<double> candidate_mean;
  std::optional<int> fixed_size;
  cbuild->add_option("--role", role_s, "autocompletion|ide|commit|all")
      ->check(CLI::IsMember({"autocompletion", "ide", "commit", "all"}));
  cbuild->add_option("--lang", lang_s, "A or B")->check(CLI::IsMember({"A", "B"}));
  cbuild->add_option("--in", in_dir, "Source tree (default $XFER_DATA_DIR)");
  cbuild->add_option("--out", out_file)->required();
  cbuild->add_option("--seed", seed);
  cbuild->add_option("--candidate-mean", candidate_mean);
  cbuild->add_option("--candidate-size", fixed_size, "Fixed candidate-list size");

  auto* csplit = corpus->add_subcommand("split", "Split a dataset into train and held-out parts");
  fs::path split_in, split_train, split_heldout;
  double split_fraction = 0.10;
  csplit->add_option("--in", split_in)->required();
  csplit->add_option("--fraction", split_fraction);
  csplit->add_option("--seed", seed);
  csplit->add_option("--train", split_train)->required();
  csplit->add_option("--heldout", split_heldout)->required();

  // vocab
  auto* vocab = app.add_subcommand("vocab", "Build and merge vocabularies");
  vocab->require_subcommand(1);
  auto* vbuild = vocab->add_subcommand("build", "Count subtokens of datasets");
  std::vector<fs::path> vocab_in;
  std::int64_t cutoff = 2;
  vbuild->add_option("--in", vocab_in)->required();
  vbuild->add_option("--cutoff", cutoff);
  vbuild->add_option("--out", out_file)->required();
  auto* vunion = vocab->add_subcommand("union", "Merge two vocabularies, summing counts");
  std::vector<fs::path> union_in;
  vunion->add_option("files", union_in)->required()->expected(2);
  vunion->add_option("--out", out_file)->required();

  // train
  auto* train = app.add_subcommand("train", "Run one experiment configuration");
  fs::path config_path, out_dir = "runs";
  train->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  train->add_option("--out", out_dir);
  train->add_option("--data", in_dir, "Source tree (default $XFER_DATA_DIR)");
  std::optional<std::uint64_t> seed_override;
  train->add_option("--seed", seed_override, "Overrides the config seed");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Fine-tuning-size sweep against scratch baselines");
  fs::path base_path, sweep_finetune, sweep_test;
  std::string fractions_s = "0.01,0.05,0.1,0.25,0.5,1.0";
  int n_seeds = 3;
  int max_epochs = 20;
  std::optional<double> sweep_lr;
  sweep->add_option("--base", base_path)->required()->check(CLI::ExistingFile);
  sweep->add_option("--finetune", sweep_finetune, "Fine-tuning events (jsonl)")->required();
  sweep->add_option("--test", sweep_test, "Held-out events (jsonl)")->required();
  sweep->add_option("--fractions", fractions_s);
  sweep->add_option("--seeds", n_seeds);
  sweep->add_option("--max-epochs", max_epochs);
  sweep->add_option("--lr", sweep_lr, "Fine-tuning rate");
  sweep->add_option("--out", out_dir);

  // plot
  auto* plot = app.add_subcommand("plot", "CSV and SVG of sweep points");
  fs::path plot_in, plot_out;
  std::string plot_title = "top-1 against fine-tuning fraction";
  plot->add_option("--in", plot_in, "sweep.jsonl")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", plot_out, "Output prefix; writes .csv and .svg")->required();
  plot->add_option("--title", plot_title);

  // eval
  auto* eval = app.add_subcommand("eval", "Offline metrics on held-out events");
  fs::path model_path, heldout_path, metrics_out, audit_out;
  eval->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--heldout", heldout_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--out", metrics_out);
  eval->add_option("--audit", audit_out);

  // abtest
  auto* abtest = app.add_subcommand("abtest", "Compare per-developer-day acceptance counts");
  fs::path control_path, experiment_path, ab_out;
  double level = 0.95;
  abtest->add_option("--control", control_path);
  abtest->add_option("--experiment", experiment_path);
  abtest->add_option("--out", ab_out);
  abtest->add_option("--level", level);
  auto* absim = abtest->add_subcommand("simulate", "Write synthetic control and experiment logs");
  ABSimulation sim;
  absim->add_option("--developers", sim.developers_per_group);
  absim->add_option("--days", sim.days);
  absim->add_option("--base-rate", sim.base_rate);
  absim->add_option("--rate-cv", sim.rate_cv);
  absim->add_option("--uplift", sim.uplift);
  absim->add_option("--seed", sim.seed);
  absim->add_option("--control", control_path)->required();
  absim->add_option("--experiment", experiment_path)->required();

  // serve
  auto* serve = app.add_subcommand("serve", "HTTP completion service");
  ServerOptions server_opts;
  std::optional<fs::path> log_path, static_dir;
  serve->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
  serve->add_option("--log", log_path, "Acceptance event log (jsonl)");
  serve->add_option("--host", server_opts.host);
  serve->add_option("--port", server_opts.port);
  serve->add_option("--static", static_dir, "Web UI bundle served at /");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cbuild->parsed()) {
      const Language lang = parse_language(lang_s);
      const auto docs = load_tree(in_dir.empty() ? default_data_dir() : in_dir);
      EventPolicy policy = EventPolicy::for_language(lang);
      if (candidate_mean) policy.candidate_mean = *candidate_mean;
      policy.fixed_size = fixed_size;
      const DatasetRole role = parse_role(role_s);
      auto of = [&](Origin o) {
        std::vector<SourceDocument> out;
        for (const auto& d : docs) {
          if (d.language == lang && d.origin == o) out.push_back(d);
        }
        return out;
      };
      auto ac = [&] {
        return build_dataset(of(Origin::kAcceptanceLog), DatasetRole::kAutocompletion, lang,
                             policy, seed);
      };
      auto ide = [&] { return build_dataset(of(Origin::kIdeSnapshot), DatasetRole::kIde, lang); };
      Dataset ds;
      switch (role) {
        case DatasetRole::kAutocompletion: ds = ac(); break;
        case DatasetRole::kIde: ds = ide(); break;
        case DatasetRole::kCommit:
          ds = build_dataset(of(Origin::kCommit), DatasetRole::kCommit, lang);
          break;
        case DatasetRole::kAll: ds = union_all(ac(), ide()); break;
      }
      write_jsonl(ds, out_file);
      std::cout << ds.size() << " items (" << ds.event_count() << " events) -> " << out_file.string()
                << '\n';
    } else if (csplit->parsed()) {
      const auto [tr, ho] = split_holdout(read_jsonl(split_in), split_fraction, seed);
      write_jsonl(tr, split_train);
      write_jsonl(ho, split_heldout);
      std::cout << tr.size() << " train, " << ho.size() << " held out\n";
    } else if (vbuild->parsed()) {
      std::vector<Dataset> corpora;
      for (const auto& p : vocab_in) corpora.push_back(read_jsonl(p));
      const Vocabulary v = build_vocab(corpora, cutoff);
      v.save(out_file);
      std::cout << v.size() << " entries -> " << out_file.string() << '\n';
    } else if (vunion->parsed()) {
      const Vocabulary v =
          Vocabulary::union_of(Vocabulary::load(union_in[0]), Vocabulary::load(union_in[1]));
      v.save(out_file);
      std::cout << v.size() << " entries -> " << out_file.string() << '\n';
    } else if (train->parsed()) {
      ExperimentConfig config = ExperimentConfig::load(config_path);
      if (seed_override) config.seed = *seed_override;
      DataOptions opts;
      opts.finetune_events = config.finetune_events;
      opts.seed = config.seed;
      const auto docs = load_tree(in_dir.empty() ? default_data_dir() : in_dir);
      const ExperimentData data = prepare_experiment_data(docs, config.language, opts);
      std::cerr << "vocab " << data.vocab.size() << ", " << data.autocompletion.size()
                << " fine-tuning events, " << data.test.size() << " test events\n";
      const RunResult r = run_config(config, data, out_dir, [&](const EpochLog& e) {
        print_epoch("exp" + std::to_string(config.id), e);
      });
      std::cout << r.row.dump() << '\n';
    } else if (sweep->parsed()) {
      const ModelCheckpoint base = ModelCheckpoint::load(base_path);
      SweepOptions opts;
      opts.fractions = parse_list(fractions_s);
      for (int s = 0; s < n_seeds; ++s) opts.seeds.push_back(static_cast<std::uint64_t>(s));
      opts.phase.max_epochs = max_epochs;
      opts.phase.learning_rate = sweep_lr;
      const fs::path points = out_dir / "sweep.jsonl";
      const SweepResult r = sweep_finetune_size(
          base, read_jsonl(sweep_finetune), read_jsonl(sweep_test), opts,
          [&](const SweepPoint& p) {
            append_jsonl(points, sweep_point_to_json(p));
            std::cerr << "fraction " << p.fraction << " seed " << p.seed << " pretrained "
                      << p.pretrained.top1 << " scratch " << p.scratch.top1 << '\n';
          });
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
      write_sweep_csv(r.rows, out_dir / "sweep.csv");
      std::cout << points.string() << '\n';
    } else if (plot->parsed()) {
      std::vector<SweepPoint> points;
      std::ifstream in(plot_in);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        SweepPoint p;
        p.fraction = j.at("fraction");
        p.seed = j.at("seed");
        p.examples = j.at("examples");
        p.pretrained = Metrics::from_json(j.at("pretrained"));
        p.scratch = Metrics::from_json(j.at("scratch"));
        points.push_back(p);
      }
      const auto rows = summarize_sweep(points);
      fs::path csv = plot_out, svg = plot_out;
      csv += ".csv";
      svg += ".svg";
      write_sweep_csv(rows, csv);
      write_sweep_svg(rows, plot_title, svg);
      std::cout << csv.string() << '\n' << svg.string() << '\n';
    } else if (eval->parsed()) {
      const ModelCheckpoint ck = ModelCheckpoint::load(model_path);
      const Evaluation ev = evaluate(ck.model(), ck.vocab, read_jsonl(heldout_path));
      if (!metrics_out.empty()) write_json(ev.metrics.to_json(), metrics_out);
      if (!audit_out.empty()) write_audit_csv(ev.ranks, audit_out);
      std::cout << ev.metrics.to_json().dump() << '\n';
    } else if (absim->parsed()) {
      const ABLogs logs = simulate_ab(sim);
      write_observations(logs.control, control_path);
      write_observations(logs.experiment, experiment_path);
      std::cout << logs.control.size() << " control, " << logs.experiment.size()
                << " experiment observations\n";
    } else if (abtest->parsed()) {
      if (control_path.empty() || experiment_path.empty()) {
        throw InvalidArgument("abtest needs --control and --experiment");
      }
      const ABResult r = ab_compare(read_observations(control_path), read_observations(experiment_path));
      nlohmann::json j = r.to_json();
      j["level"] = level;
      j["significant"] = significance_gate(r, level);
      if (!ab_out.empty()) write_json(j, ab_out);
      std::cout << j.dump(2) << '\n';
    } else if (serve->parsed()) {
      ServiceOptions opts;
      opts.log_path = log_path;
      Service service(opts);
      service.load(model_path);
      server_opts.static_dir = static_dir;
      HttpServer server(service, server_opts);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      const int port = server.bind();
      std::cerr << "listening on http://" << server_opts.host << ':' << port << '\n';
      server.listen_after_bind();
      g_server = nullptr;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
