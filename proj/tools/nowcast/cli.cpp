#include "nowcast/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nowcast/data/clean.hpp"
#include "nowcast/data/fetch.hpp"
#include "nowcast/data/ingest.hpp"
#include "nowcast/data/panel.hpp"
#include "nowcast/data/score.hpp"
#include "nowcast/error.hpp"
#include "nowcast/eval/metrics.hpp"
#include "nowcast/eval/report.hpp"
#include "nowcast/format.hpp"
#include "nowcast/gpr/model.hpp"
#include "nowcast/gpr/model_io.hpp"
#include "nowcast/synth.hpp"

namespace nowcast::cli {

namespace {

namespace fs = std::filesystem;

// A failure already attributed to a pipeline stage.
class StageFailure : public std::runtime_error {
 public:
  StageFailure(std::string stage, int code, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)), code_(code) {}
  const std::string& stage() const noexcept { return stage_; }
  int code() const noexcept { return code_; }

 private:
  std::string stage_;
  int code_;
};

int code_for(const Error& e, int fallback) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ConfigError*>(&e)) return kExitParse;
  if (dynamic_cast<const IntegrityError*>(&e)) return kExitIntegrity;
  if (dynamic_cast<const FitError*>(&e)) return kExitFit;
  if (dynamic_cast<const EvaluationError*>(&e)) return kExitEvaluation;
  return fallback;
}

template <class F>
auto stage(const std::string& name, int fallback, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageFailure&) {
    throw;
  } catch (const Error& e) {
    throw StageFailure(name, code_for(e, fallback), e.what());
  } catch (const std::exception& e) {
    throw StageFailure(name, kExitInternal, e.what());
  }
}

struct Flags {
  std::string direction = "score-to-rate";
  std::string basis = "const";
  std::string theta_grid = "1e-2:1e2:25";
};

void add_out(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--out", config.out, "Output directory (created if absent)")->required();
}

void add_sites(CLI::App& cmd, RunConfig& config, bool required) {
  auto* opt = cmd.add_option("--sites", config.sites, "Sites CSV: url,country,rank,trend,traffic");
  if (required) opt->required();
}

void add_indicators(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--indicators", config.indicators, "Indicators CSV: country,unemployment_rate")
      ->required();
}

void add_fetcher(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--fetcher", config.fetcher,
                 "Replay fixture (JSON url -> {rank, trend, traffic}) supplying the signals");
}

void add_threads(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--threads", config.threads, "Worker thread bound")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
      ->capture_default_str();
}

void add_model_flags(CLI::App& cmd, RunConfig& config, Flags& flags) {
  cmd.add_option("--direction", flags.direction, "score-to-rate | rate-to-score")
      ->capture_default_str();
  cmd.add_option("--basis", flags.basis, "Trend basis: const | linear")->capture_default_str();
  cmd.add_option("--theta-grid", flags.theta_grid,
                 "Log grid for theta as LO:HI:STEPS")
      ->capture_default_str();
  cmd.add_option("--jitter", config.jitter, "Initial diagonal nugget, relative to sigma^2")
      ->capture_default_str();
  add_threads(cmd, config);
}

void add_country_mean(CLI::App& cmd, RunConfig& config) {
  cmd.add_flag("--country-mean", config.country_mean,
               "Average site scores per country before modelling");
}

void add_in_sample(CLI::App& cmd, RunConfig& config) {
  cmd.add_flag("--in-sample", config.in_sample,
               "Score the full-data fit on its training rows instead of leave-one-out");
}

struct Cli {
  RunConfig config;
  Flags flags;
  std::unique_ptr<CLI::App> app;
  CLI::App* ingest = nullptr;
  CLI::App* clean = nullptr;
  CLI::App* score = nullptr;
  CLI::App* fit = nullptr;
  CLI::App* evaluate = nullptr;
  CLI::App* pipeline = nullptr;
  CLI::App* synth = nullptr;
};

std::unique_ptr<Cli> make_cli() {
  auto cli = std::make_unique<Cli>();
  RunConfig& c = cli->config;
  auto app = std::make_unique<CLI::App>(
      "Gaussian-process nowcasting of unemployment rates from job-site signals", "nowcast");
  app->require_subcommand(1);

  cli->ingest = app->add_subcommand("ingest", "Read sites (optionally refreshing signals) into OUT/sites.csv");
  add_sites(*cli->ingest, c, true);
  add_fetcher(*cli->ingest, c);
  add_threads(*cli->ingest, c);
  add_out(*cli->ingest, c);

  cli->clean = app->add_subcommand("clean", "Listwise deletion into OUT/clean_sites.csv");
  add_sites(*cli->clean, c, true);
  add_out(*cli->clean, c);

  cli->score = app->add_subcommand("score", "Normalize complete sites and join rates into OUT/panel.csv");
  add_sites(*cli->score, c, true);
  add_indicators(*cli->score, c);
  add_country_mean(*cli->score, c);
  add_out(*cli->score, c);

  cli->fit = app->add_subcommand("fit", "Select hyperparameters and fit a panel into OUT/model.json");
  cli->fit->add_option("--panel", c.panel, "Panel CSV: url,country,score,unemployment_rate")->required();
  add_model_flags(*cli->fit, c, cli->flags);
  add_out(*cli->fit, c);

  cli->evaluate = app->add_subcommand("evaluate", "Cross-validate a panel into OUT/report.json and OUT/report.txt");
  cli->evaluate->add_option("--panel", c.panel, "Panel CSV: url,country,score,unemployment_rate")->required();
  add_model_flags(*cli->evaluate, c, cli->flags);
  add_in_sample(*cli->evaluate, c);
  add_out(*cli->evaluate, c);

  cli->pipeline = app->add_subcommand("pipeline", "Run every stage, writing panel.csv, model.json, report.json, report.txt");
  add_sites(*cli->pipeline, c, true);
  add_indicators(*cli->pipeline, c);
  add_fetcher(*cli->pipeline, c);
  add_country_mean(*cli->pipeline, c);
  add_model_flags(*cli->pipeline, c, cli->flags);
  add_in_sample(*cli->pipeline, c);
  add_out(*cli->pipeline, c);

  cli->synth = app->add_subcommand("synth", "Write a synthetic panel to OUT/panel.csv");
  cli->synth->add_option("--n", c.n, "Number of rows (>= 3)")->capture_default_str();
  cli->synth->add_option("--coupling", c.coupling, "Score/rate correlation in [0, 1]")->capture_default_str();
  cli->synth->add_option("--noise", c.noise, "Rate noise standard deviation")->capture_default_str();
  cli->synth->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  add_out(*cli->synth, c);

  cli->app = std::move(app);
  return cli;
}

void resolve_flags(RunConfig& config, const Flags& flags) {
  config.direction = eval::parse_direction(flags.direction);
  config.basis = gpr::parse_basis_degree(flags.basis);
  config.grid = parse_theta_grid(flags.theta_grid);
  config.search().validate();
}

void require_file(const fs::path& path, std::string_view what) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw ConfigError(std::string(what) + " file not found: " + path.string());
  }
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw ConfigError("cannot write " + path.string());
}

template <class Writer>
std::string render(Writer&& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

std::vector<data::SiteRecord> load_sites(const RunConfig& config, std::ostream& err) {
  auto sites = stage("ingest", kExitParse, [&] { return data::ingest_sites(config.sites); });
  if (config.fetcher.empty()) return sites;
  return stage("ingest", kExitParse, [&] {
    const auto fetcher = data::ReplayFetcher::from_file(config.fetcher);
    fetcher.validate();
    std::vector<std::string> urls;
    urls.reserve(sites.size());
    for (const auto& s : sites) urls.push_back(s.url);
    const auto fetched = data::fetch_signals(urls, fetcher, {config.threads});
    err << "nowcast: ingest: fetched signals for " << fetched.size() << " sites from "
        << config.fetcher.string() << '\n';
    return data::apply_signals(std::move(sites), fetched);
  });
}

data::DeletionResult clean_sites(std::vector<data::SiteRecord> sites, std::ostream& err) {
  return stage("clean", kExitIntegrity, [&] {
    const std::size_t total = sites.size();
    auto result = data::listwise_delete(std::move(sites));
    for (const auto& d : result.dropped) err << "nowcast: clean: dropped " << data::describe(d) << '\n';
    err << "nowcast: clean: kept " << result.kept.size() << " of " << total << " sites\n";
    return result;
  });
}

data::PanelDataset make_panel(const RunConfig& config, std::span<const data::SiteRecord> complete,
                              std::span<const data::SiteRecord> raw) {
  const auto indicators =
      stage("ingest", kExitParse, [&] { return data::ingest_indicators(config.indicators); });
  const auto scored = stage("normalize", kExitIntegrity, [&] { return data::normalize_and_score(complete); });
  return stage("join", kExitIntegrity, [&] {
    auto panel = data::build_panel(scored, raw, indicators);
    return config.country_mean ? data::country_mean_panel(panel) : panel;
  });
}

struct Fitted {
  gpr::Kernel selected;
  gpr::GprModel model;
};

Fitted fit_panel(const RunConfig& config, const data::PanelDataset& panel) {
  return stage("fit", kExitFit, [&] {
    const auto training = eval::training_set(panel, config.direction);
    const gpr::BasisExpansion basis(config.basis, training.dimension());
    const auto kernel = gpr::fit_hyperparameters(training, basis, config.search());
    return Fitted{kernel, gpr::fit(training, basis, kernel)};
  });
}

std::string describe_kernel(const gpr::Kernel& k) {
  return "sigma_sq=" + shortest_repr(k.sigma_sq) + " theta=" + shortest_repr(k.theta.front()) +
         " jitter=" + shortest_repr(k.jitter);
}

void write_reports(const RunConfig& config, const eval::EvaluationReport& report,
                   const data::PanelDataset& panel, std::ostream& out) {
  stage("report", kExitInternal, [&] {
    const auto stats = data::describe_panel(panel);
    const std::string table = eval::report_to_table(report, stats);
    write_file(config.out, "report.json", eval::report_to_json(report, stats));
    write_file(config.out, "report.txt", table);
    out << table;
  });
}

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  stage("config", kExitParse, [&] {
    require_file(config.sites, "sites");
    if (!config.fetcher.empty()) require_file(config.fetcher, "fetcher");
  });
  const auto sites = load_sites(config, err);
  stage("ingest", kExitInternal, [&] {
    write_file(config.out, "sites.csv", render([&](std::ostream& os) { data::write_sites(os, sites); }));
  });
  out << "ingested " << sites.size() << " sites\n";
  return kExitOk;
}

int cmd_clean(const RunConfig& config, std::ostream& out, std::ostream& err) {
  stage("config", kExitParse, [&] { require_file(config.sites, "sites"); });
  auto result = clean_sites(load_sites(config, err), err);
  stage("clean", kExitInternal, [&] {
    write_file(config.out, "clean_sites.csv",
               render([&](std::ostream& os) { data::write_sites(os, result.kept); }));
  });
  out << "kept " << result.kept.size() << " sites, dropped " << result.dropped_count << '\n';
  return kExitOk;
}

int cmd_score(const RunConfig& config, std::ostream& out, std::ostream& err) {
  stage("config", kExitParse, [&] {
    require_file(config.sites, "sites");
    require_file(config.indicators, "indicators");
  });
  const auto sites = load_sites(config, err);
  const auto panel = make_panel(config, sites, sites);
  stage("join", kExitInternal, [&] {
    write_file(config.out, "panel.csv", render([&](std::ostream& os) { data::write_panel_csv(os, panel); }));
  });
  out << "wrote " << panel.size() << " panel rows\n";
  return kExitOk;
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream&) {
  stage("config", kExitParse, [&] { require_file(config.panel, "panel"); });
  const auto panel = stage("ingest", kExitParse, [&] { return data::load_panel(config.panel); });
  const auto fitted = fit_panel(config, panel);
  stage("fit", kExitInternal, [&] { write_file(config.out, "model.json", gpr::model_to_json(fitted.model)); });
  out << "selected " << describe_kernel(fitted.selected) << '\n';
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream&) {
  stage("config", kExitParse, [&] { require_file(config.panel, "panel"); });
  const auto panel = stage("ingest", kExitParse, [&] { return data::load_panel(config.panel); });
  const auto fitted = fit_panel(config, panel);
  const auto report = stage("evaluate", kExitEvaluation, [&] {
    return eval::evaluate(panel, config.direction, config.basis, fitted.selected,
                          {config.in_sample, config.threads});
  });
  write_reports(config, report, panel, out);
  return kExitOk;
}

int cmd_pipeline(const RunConfig& config, std::ostream& out, std::ostream& err) {
  stage("config", kExitParse, [&] {
    require_file(config.sites, "sites");
    require_file(config.indicators, "indicators");
    if (!config.fetcher.empty()) require_file(config.fetcher, "fetcher");
  });
  const auto sites = load_sites(config, err);
  const auto cleaned = clean_sites(sites, err);
  const auto panel = make_panel(config, cleaned.kept, sites);
  stage("join", kExitInternal, [&] {
    write_file(config.out, "panel.csv", render([&](std::ostream& os) { data::write_panel_csv(os, panel); }));
  });

  const auto fitted = fit_panel(config, panel);
  stage("fit", kExitInternal, [&] { write_file(config.out, "model.json", gpr::model_to_json(fitted.model)); });

  const auto report = stage("evaluate", kExitEvaluation, [&] {
    return eval::evaluate(panel, config.direction, config.basis, fitted.selected,
                          {config.in_sample, config.threads});
  });
  write_reports(config, report, panel, out);
  return kExitOk;
}

int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto panel = stage("synth", kExitParse, [&] {
    return synthesize_panel({config.n, config.coupling, config.noise, config.seed});
  });
  stage("synth", kExitInternal, [&] {
    write_file(config.out, "panel.csv", render([&](std::ostream& os) { data::write_panel_csv(os, panel); }));
  });
  std::vector<eval::PredictionPair> pairs;
  for (const auto& row : panel.rows) pairs.push_back({row.unemployment_rate, row.score});
  out << "wrote " << panel.size() << " rows; sample correlation "
      << shortest_repr(eval::correlation_rate(pairs)) << '\n';
  return kExitOk;
}

}  // namespace

ThetaGrid parse_theta_grid(std::string_view text) {
  const auto fail = [&] {
    return ConfigError("--theta-grid expects LO:HI:STEPS, got '" + std::string(text) + "'");
  };
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) throw fail();

  const auto parse_double = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw fail();
    return v;
  };
  ThetaGrid grid;
  grid.lo = parse_double(text.substr(0, first));
  grid.hi = parse_double(text.substr(first + 1, second - first - 1));
  const auto steps = text.substr(second + 1);
  const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), grid.steps);
  if (ec != std::errc{} || ptr != steps.data() + steps.size()) throw fail();
  if (!(grid.lo > 0.0) || !(grid.hi > grid.lo) || grid.steps < 2) {
    throw ConfigError("--theta-grid needs 0 < LO < HI and STEPS >= 2");
  }
  return grid;
}

gpr::SearchConfig RunConfig::search() const {
  gpr::SearchConfig s;
  s.theta_lo = grid.lo;
  s.theta_hi = grid.hi;
  s.steps = grid.steps;
  s.jitter = jitter;
  s.threads = threads;
  return s;
}

std::string help_text() {
  const auto cli = make_cli();
  std::string text = cli->app->help();
  for (const CLI::App* sub : cli->app->get_subcommands({})) {
    text += '\n';
    text += sub->help();
  }
  return text;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  auto cli = make_cli();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli->app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = cli->app->get_subcommands();
    out << (parsed.empty() ? help_text() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nowcast: " << e.what() << '\n';
    return kExitParse;
  }

  RunConfig& config = cli->config;
  try {
    stage("config", kExitParse, [&] { resolve_flags(config, cli->flags); });
    if (cli->ingest->parsed()) return cmd_ingest(config, out, err);
    if (cli->clean->parsed()) return cmd_clean(config, out, err);
    if (cli->score->parsed()) return cmd_score(config, out, err);
    if (cli->fit->parsed()) return cmd_fit(config, out, err);
    if (cli->evaluate->parsed()) return cmd_evaluate(config, out, err);
    if (cli->pipeline->parsed()) return cmd_pipeline(config, out, err);
    return cmd_synth(config, out, err);
  } catch (const StageFailure& f) {
    err << "nowcast: " << f.stage() << ": " << f.what() << '\n';
    return f.code();
  }
}

}  // namespace nowcast::cli
