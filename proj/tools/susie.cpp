// susie: command-line front end for the structured summarization pipeline.
//
// Subcommands: ingest, build, stats, run, eval, compare.
// Exit codes: 0 success, 1 usage, 2 data error, 3 backend error,
// 130 interrupted (partial outputs keep their .partial suffix).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "susie/annotate.hpp"
#include "susie/backend.hpp"
#include "susie/corpus.hpp"
#include "susie/jats.hpp"
#include "susie/parallel.hpp"
#include "susie/pipeline.hpp"
#include "susie/rouge.hpp"
#include "susie/split.hpp"
#include "susie/stats.hpp"
#include "susie/store.hpp"
#include "susie/summarize.hpp"

namespace fs = std::filesystem;
using namespace susie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_stop{false};

void on_sigint(int) { g_stop.store(true); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `<path>.partial`, renamed onto the final path by commit().
// Skipping commit (after an interrupt) leaves the partial file behind.
class AtomicFile {
 public:
  explicit AtomicFile(fs::path path)
      : final_(std::move(path)), partial_(final_.string() + ".partial") {
    out_.open(partial_, std::ios::binary | std::ios::trunc);
    if (!out_) throw DataError("cannot write: " + partial_.string());
  }

  std::ostream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) throw DataError("write failed: " + partial_.string());
    out_.close();
    fs::rename(partial_, final_);
  }

 private:
  fs::path final_;
  fs::path partial_;
  std::ofstream out_;
};

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    items.push_back(item.substr(first, last - first + 1));
  }
  return items;
}

std::vector<SectionType> parse_sections(const std::string& csv) {
  std::vector<SectionType> types;
  for (const auto& name : split_csv(csv)) {
    auto type = section_type_from_string(to_lower_ascii(name));
    if (!type || *type == SectionType::Other)
      throw UsageError("unknown section type: " + name);
    if (std::find(types.begin(), types.end(), *type) != types.end())
      throw UsageError("duplicate section type: " + name);
    types.push_back(*type);
  }
  if (types.empty()) throw UsageError("--sections selects nothing");
  return types;
}

SplitRatios parse_split(const std::string& csv) {
  const auto parts = split_csv(csv);
  if (parts.size() != 3)
    throw UsageError("--split wants three ratios, e.g. 0.8,0.1,0.1");
  SplitRatios ratios;
  try {
    ratios.train = std::stod(parts[0]);
    ratios.validation = std::stod(parts[1]);
    ratios.test = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("--split ratios must be numbers");
  }
  ratios.validate();
  return ratios;
}

std::vector<CurriculumStage> parse_curriculum(const std::string& csv) {
  std::vector<CurriculumStage> schedule;
  for (const auto& pair : split_csv(csv)) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw UsageError("--curriculum wants SOURCE:SUMMARY pairs, e.g. 50:10,100:20");
    try {
      schedule.push_back({std::stoull(pair.substr(0, colon)),
                          std::stoull(pair.substr(colon + 1))});
    } catch (const std::exception&) {
      throw UsageError("bad curriculum stage: " + pair);
    }
  }
  validate_curriculum(schedule);
  return schedule;
}

// Options shared by every subcommand that assembles sources and references.
struct BuildOptions {
  std::string sections = "introduction,methods,conclusion";
  std::size_t flat_budget = 500;
  std::size_t susie_budget = 500;
  std::size_t summary_budget = 100;
  std::size_t out_budget = 120;

  BuildConfig to_config() const {
    BuildConfig cfg;
    cfg.selected_types = parse_sections(sections);
    cfg.flat_source_budget = flat_budget;
    cfg.susie_source_budget = susie_budget;
    cfg.flat_summary_budget = summary_budget;
    cfg.susie_summary_budget = summary_budget;
    cfg.output_budget = out_budget;
    cfg.validate();
    return cfg;
  }
};

void add_build_options(CLI::App* cmd, BuildOptions& opt) {
  cmd->add_option("--sections", opt.sections,
                  "Comma-separated section types to pair")
      ->capture_default_str();
  cmd->add_option("--flat-budget", opt.flat_budget, "Flat source budget L")
      ->capture_default_str();
  cmd->add_option("--susie-budget", opt.susie_budget,
                  "Per-section source budget")
      ->capture_default_str();
  cmd->add_option("--summary-budget", opt.summary_budget,
                  "Reference summary budget")
      ->capture_default_str();
  cmd->add_option("--out-budget", opt.out_budget,
                  "Generated summary token budget")
      ->capture_default_str();
}

bool is_builtin_backend(const std::string& name) {
  return name == "lead" || name == "freq" || name == "oracle";
}

BackendSpec make_backend_spec(const std::string& spec, std::string name,
                              std::chrono::milliseconds timeout) {
  if (spec == "lead")
    return {"lead", [] { return std::make_unique<LeadSummarizer>(); }};
  if (spec == "freq")
    return {"freq", [] { return std::make_unique<FreqExtractiveSummarizer>(); }};
  if (spec == "oracle")
    return {"oracle", [] { return std::make_unique<OracleExtractiveSummarizer>(); }};
  if (name.empty()) {
    name = fs::path(spec.substr(0, spec.find(' '))).filename().string();
    if (name.empty()) name = "external";
  }
  return {std::move(name), [spec, timeout] {
            return std::make_unique<ExternalBackend>(spec, timeout);
          }};
}

std::vector<StructuredArticle> load_store(const std::string& path) {
  try {
    return read_article_store_file(path);
  } catch (const std::exception& e) {
    throw DataError(std::string("article store: ") + e.what());
  }
}

std::string describe_eval(const EvalReport& report) {
  auto line = [](const char* label, const MetricSummary& m) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s mean %.4f  (scored %zu, skipped %zu)\n",
                  label, m.mean_f1, m.scored, m.skipped);
    return std::string(buf);
  };
  return line("ROUGE-1 F1", report.rouge1) + line("ROUGE-2 F1", report.rouge2) +
         line("ROUGE-L F1", report.rougeL);
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::string xml_dir;
  std::string out;
  std::string keywords;
  std::string reject_log;
};

int cmd_ingest(const IngestArgs& args) {
  if (!fs::is_directory(args.xml_dir))
    throw DataError("not a directory: " + args.xml_dir);
  const KeywordTable table = args.keywords.empty()
                                 ? KeywordTable::defaults()
                                 : KeywordTable::load_file(args.keywords);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.xml_dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".xml" || ext == ".nxml") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
    std::cerr << "warning: no XML files in " << args.xml_dir << "\n";

  std::vector<StructuredArticle> stored;
  std::map<std::string, std::size_t> reject_counts;
  std::ostringstream reject_lines;
  for (const auto& file : files) {
    if (g_stop.load()) break;
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DataError("cannot read: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      stored.push_back(
          annotate_article(parse_article(buf.str(), file.stem().string()), table));
    } catch (const ParseError& e) {
      ++reject_counts[to_string(e.kind())];
      reject_lines << file.filename().string() << "\t" << to_string(e.kind())
                   << "\t" << e.what() << "\n";
    }
  }

  const std::string reject_path =
      args.reject_log.empty() ? args.out + ".rejects" : args.reject_log;
  AtomicFile store_file(args.out);
  write_article_store(store_file.stream(), stored);
  AtomicFile reject_file(reject_path);
  reject_file.stream() << reject_lines.str();
  if (g_stop.load()) {
    std::cerr << "interrupted; partial outputs kept as .partial\n";
    return kExitInterrupted;
  }
  store_file.commit();
  reject_file.commit();

  std::size_t rejected = 0;
  for (const auto& [kind, count] : reject_counts) rejected += count;
  std::cout << "stored " << stored.size() << " articles, rejected " << rejected;
  if (rejected) {
    std::cout << " (";
    bool first = true;
    for (const auto& [kind, count] : reject_counts) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << kind << " " << count;
    }
    std::cout << ")";
  }
  std::cout << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- build

struct BuildArgs {
  std::string store;
  std::string out_dir;
  std::string method = "both";
  BuildOptions opts;
  int stage = -1;
  std::string curriculum;
  std::string split = "0.8,0.1,0.1";
  std::uint64_t seed = 0;
};

int cmd_build(const BuildArgs& args) {
  const auto articles = load_store(args.store);
  const BuildConfig cfg = args.opts.to_config();
  const bool do_flat = args.method == "flat" || args.method == "both";
  const bool do_susie = args.method == "susie" || args.method == "both";

  std::vector<TrainingExample> flat_examples;
  std::vector<TrainingExample> susie_examples;
  for (const auto& article : articles) {
    if (g_stop.load()) return kExitInterrupted;
    if (do_flat) {
      if (auto example = build_flat_example(article, cfg))
        flat_examples.push_back(std::move(*example));
    }
    if (do_susie) {
      auto examples = build_susie_examples(article, cfg);
      susie_examples.insert(susie_examples.end(),
                            std::make_move_iterator(examples.begin()),
                            std::make_move_iterator(examples.end()));
    }
  }

  if (args.stage >= 0) {
    const auto schedule = args.curriculum.empty()
                              ? default_curriculum()
                              : parse_curriculum(args.curriculum);
    if (static_cast<std::size_t>(args.stage) >= schedule.size())
      throw UsageError("--stage out of range (schedule has " +
                       std::to_string(schedule.size()) + " stages)");
    const auto& stage = schedule[static_cast<std::size_t>(args.stage)];
    for (auto& ex : flat_examples) ex = apply_curriculum(std::move(ex), stage);
    for (auto& ex : susie_examples) ex = apply_curriculum(std::move(ex), stage);
  }

  if (flat_examples.empty() && susie_examples.empty())
    throw DataError("zero examples built");

  const SplitRatios ratios = parse_split(args.split);
  std::vector<std::string> ids;
  std::unordered_set<std::string> seen;
  for (const auto& article : articles)
    if (seen.insert(article.pmcid).second) ids.push_back(article.pmcid);
  const CorpusSplit split = split_corpus(ids, ratios, args.seed);
  std::unordered_map<std::string, const char*> assignment;
  for (const auto& id : split.train) assignment[id] = "train";
  for (const auto& id : split.validation) assignment[id] = "validation";
  for (const auto& id : split.test) assignment[id] = "test";

  fs::create_directories(args.out_dir);
  auto write_method = [&](const char* name,
                          const std::vector<TrainingExample>& examples) {
    std::map<std::string, std::size_t> counts;
    const char* kSplits[] = {"train", "validation", "test"};
    std::map<std::string, std::unique_ptr<AtomicFile>> outs;
    for (const char* s : kSplits)
      outs[s] = std::make_unique<AtomicFile>(
          fs::path(args.out_dir) / (std::string(name) + "." + s + ".jsonl"));
    for (const auto& example : examples) {
      const char* bucket = assignment.at(example.pmcid);
      outs[bucket]->stream() << corpus_record_line(example) << "\n";
      ++counts[bucket];
    }
    for (const char* s : kSplits) outs[s]->commit();
    std::cout << name << ": " << examples.size() << " examples (train "
              << counts["train"] << ", validation " << counts["validation"]
              << ", test " << counts["test"] << ")\n";
  };
  if (do_flat) write_method("flat", flat_examples);
  if (do_susie) write_method("susie", susie_examples);

  std::ostringstream report;
  std::vector<std::pair<std::string, CorpusStats>> columns;
  if (do_susie) {
    const auto stats = compute_stats(susie_examples);
    report << "SUSIE per-section\n" << render_type_table(stats) << "\n";
    columns.emplace_back("SUSIE", stats);
  }
  if (do_flat) {
    const auto stats = compute_stats(flat_examples);
    report << "Flat\n" << render_type_table(stats) << "\n";
    columns.insert(columns.begin(), {"Flat", stats});
  }
  report << render_totals_table(columns);
  std::cout << report.str();
  AtomicFile stats_file(fs::path(args.out_dir) / "stats.txt");
  stats_file.stream() << report.str();
  stats_file.commit();
  return kExitOk;
}

// ----------------------------------------------------------------- stats

struct StatsArgs {
  std::vector<std::string> corpus_files;
  std::string store;
  BuildOptions opts;
};

int cmd_stats(const StatsArgs& args) {
  std::vector<TrainingExample> examples;
  if (!args.store.empty()) {
    const auto articles = load_store(args.store);
    const BuildConfig cfg = args.opts.to_config();
    for (const auto& article : articles) {
      if (auto example = build_flat_example(article, cfg))
        examples.push_back(std::move(*example));
      auto more = build_susie_examples(article, cfg);
      examples.insert(examples.end(), std::make_move_iterator(more.begin()),
                      std::make_move_iterator(more.end()));
    }
  }
  for (const auto& path : args.corpus_files) {
    try {
      auto more = read_corpus_file(path);
      examples.insert(examples.end(), std::make_move_iterator(more.begin()),
                      std::make_move_iterator(more.end()));
    } catch (const std::exception& e) {
      throw DataError(std::string("corpus file: ") + e.what());
    }
  }
  if (examples.empty()) throw DataError("no examples to report on");

  std::vector<TrainingExample> flat_examples;
  std::vector<TrainingExample> susie_examples;
  for (auto& example : examples)
    (example.method == Method::Flat ? flat_examples : susie_examples)
        .push_back(std::move(example));

  std::vector<std::pair<std::string, CorpusStats>> columns;
  if (!flat_examples.empty())
    columns.emplace_back("Flat", compute_stats(flat_examples));
  if (!susie_examples.empty())
    columns.emplace_back("SUSIE", compute_stats(susie_examples));
  for (const auto& [label, stats] : columns) {
    std::cout << label << " per-section\n" << render_type_table(stats) << "\n";
  }
  std::cout << render_totals_table(columns);
  for (const auto& [label, stats] : columns)
    std::cout << render_stats_kv(to_lower_ascii(label), stats);
  return kExitOk;
}

// ------------------------------------------------------------------- run

struct RunArgs {
  std::string store;
  std::string out;
  std::string backend;
  std::string method = "susie";
  BuildOptions opts;
  unsigned workers = 1;
  std::int64_t timeout_ms = 120000;
};

int cmd_run(const RunArgs& args) {
  const auto articles = load_store(args.store);
  const BuildConfig cfg = args.opts.to_config();
  const Method method =
      args.method == "flat" ? Method::Flat : Method::Susie;
  const BackendSpec spec = make_backend_spec(
      args.backend, "", std::chrono::milliseconds(args.timeout_ms));

  struct Item {
    bool done = false;
    bool skipped = false;
    std::size_t failed_parts = 0;
    SummaryRecord record;
  };
  const auto items = parallel_map<Item>(
      articles.size(), args.workers, spec.make,
      [&](std::unique_ptr<Summarizer>& s, std::size_t i) {
        const auto& article = articles[i];
        Item item;
        item.done = true;
        if (method == Method::Flat) {
          auto summary = summarize_flat(article, *s, cfg);
          if (!summary) {
            item.skipped = true;
            return item;
          }
          item.record = {article.pmcid, Method::Flat, summary->parts};
        } else {
          auto summary = summarize_susie(article, *s, cfg);
          if (summary.parts.empty()) {
            item.skipped = true;
            return item;
          }
          item.failed_parts = summary.failed_parts;
          item.record = {article.pmcid, Method::Susie, summary.parts};
        }
        return item;
      },
      &g_stop);

  AtomicFile out_file(args.out);
  std::size_t written = 0, skipped = 0, failed_parts = 0;
  for (const auto& item : items) {
    if (!item.done) continue;
    if (item.skipped) {
      ++skipped;
      continue;
    }
    out_file.stream() << summary_record_line(item.record) << "\n";
    ++written;
    failed_parts += item.failed_parts;
  }
  if (g_stop.load()) {
    std::cerr << "interrupted; partial output kept as .partial\n";
    return kExitInterrupted;
  }
  out_file.commit();
  std::cout << "wrote " << written << " summaries (skipped " << skipped
            << " empty-yield";
  if (failed_parts) std::cout << ", failed parts " << failed_parts;
  std::cout << ")\n";
  return kExitOk;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
  std::string summaries;
  std::string store;
  BuildOptions opts;
};

int cmd_eval(const EvalArgs& args) {
  const auto articles = load_store(args.store);
  std::vector<SummaryRecord> records;
  try {
    records = read_summaries_file(args.summaries);
  } catch (const std::exception& e) {
    throw DataError(std::string("summaries: ") + e.what());
  }
  const BuildConfig cfg = args.opts.to_config();

  std::unordered_map<std::string, const StructuredArticle*> by_id;
  for (const auto& article : articles) by_id.emplace(article.pmcid, &article);

  std::vector<ScoredPair> pairs;
  std::size_t missing = 0;
  for (const auto& record : records) {
    const auto it = by_id.find(record.pmcid);
    if (it == by_id.end()) {
      ++missing;
      continue;
    }
    ScoredPair pair;
    for (const auto& part : record.parts)
      pair.candidate.insert(pair.candidate.end(), part.tokens.begin(),
                            part.tokens.end());
    pair.reference = evaluation_reference(*it->second, cfg);
    pairs.push_back(std::move(pair));
  }
  if (missing)
    std::cerr << "warning: " << missing << " summaries without a store article\n";

  const EvalReport report = evaluate_corpus(pairs);
  if (report.rouge1.scored == 0) throw DataError("no scorable summaries");
  std::cout << describe_eval(report);
  return kExitOk;
}

// --------------------------------------------------------------- compare

struct CompareArgs {
  std::string store;
  std::string backends = "lead,freq";
  std::vector<std::string> externals;  // NAME=COMMAND
  unsigned workers = 1;
  std::int64_t timeout_ms = 120000;
  BuildOptions opts;
  std::string out;
};

int cmd_compare(const CompareArgs& args) {
  const auto articles = load_store(args.store);
  const BuildConfig cfg = args.opts.to_config();
  const auto timeout = std::chrono::milliseconds(args.timeout_ms);

  std::vector<BackendSpec> specs;
  for (const auto& name : split_csv(args.backends)) {
    if (!is_builtin_backend(name))
      throw UsageError("unknown builtin backend '" + name +
                       "'; use --external NAME=COMMAND for external ones");
    specs.push_back(make_backend_spec(name, "", timeout));
  }
  for (const auto& pair : args.externals) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--external wants NAME=COMMAND, got: " + pair);
    specs.push_back(
        make_backend_spec(pair.substr(eq + 1), pair.substr(0, eq), timeout));
  }
  if (specs.empty()) throw UsageError("no backends selected");

  const ComparisonReport report =
      compare_methods(articles, specs, cfg, args.workers, &g_stop);
  if (g_stop.load()) {
    std::cerr << "interrupted\n";
    return kExitInterrupted;
  }

  std::ostringstream text;
  text << render_comparison(report);
  bool any_scored = false;
  for (const auto& row : report.rows) {
    text << row.backend << ": flat scored " << row.flat.rouge1.scored
         << " skipped " << row.flat.rouge1.skipped << " failed "
         << row.flat.failed_articles << "; susie scored "
         << row.susie.rouge1.scored << " skipped " << row.susie.rouge1.skipped
         << " failed " << row.susie.failed_articles << "\n";
    any_scored |= row.flat.rouge1.scored > 0 || row.susie.rouge1.scored > 0;
  }
  std::cout << text.str();
  if (!args.out.empty()) {
    AtomicFile out_file(args.out);
    out_file.stream() << text.str();
    out_file.commit();
  }
  if (!any_scored) throw DataError("no scorable articles");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);

  CLI::App app{"Structured summarization pipeline for PMC JATS articles"};
  app.set_config("--config", "", "INI config file")->envname("SUSIE_CONFIG");
  // Tolerate unrelated sections in the config file without also tolerating
  // unknown command-line flags (the bool overload would set allow_extras).
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand(
      "ingest", "Parse and annotate a directory of JATS XML files");
  ingest->add_option("--xml-dir", ingest_args.xml_dir, "Directory of .xml/.nxml")
      ->required();
  ingest->add_option("--out", ingest_args.out, "Article store to write")
      ->required();
  ingest->add_option("--keywords", ingest_args.keywords,
                     "Keyword table config (defaults built in)");
  ingest->add_option("--reject-log", ingest_args.reject_log,
                     "Rejection log path (default: OUT.rejects)");

  BuildArgs build_args;
  auto* build =
      app.add_subcommand("build", "Build training corpora from a store");
  build->add_option("--store", build_args.store, "Article store")->required();
  build->add_option("--out-dir", build_args.out_dir, "Output directory")
      ->required();
  build->add_option("--method", build_args.method, "flat, susie or both")
      ->check(CLI::IsMember({"flat", "susie", "both"}))
      ->capture_default_str();
  add_build_options(build, build_args.opts);
  build->add_option("--stage", build_args.stage,
                    "Curriculum stage index to truncate to");
  build->add_option("--curriculum", build_args.curriculum,
                    "Stage list SOURCE:SUMMARY,... (default 50:10..500:100)");
  build->add_option("--split", build_args.split, "train,validation,test ratios")
      ->capture_default_str();
  build->add_option("--seed", build_args.seed, "Split hash seed")
      ->capture_default_str();

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Report corpus statistics");
  stats->add_option("--corpus", stats_args.corpus_files,
                    "Corpus JSONL files (repeatable)");
  stats->add_option("--store", stats_args.store,
                    "Article store to build in memory");
  add_build_options(stats, stats_args.opts);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Summarize a store with one backend");
  run->add_option("--store", run_args.store, "Article store")->required();
  run->add_option("--out", run_args.out, "Summaries JSONL to write")->required();
  run->add_option("--backend", run_args.backend,
                  "lead, freq, oracle or an external command")
      ->required();
  run->add_option("--method", run_args.method, "flat or susie")
      ->check(CLI::IsMember({"flat", "susie"}))
      ->capture_default_str();
  add_build_options(run, run_args.opts);
  run->add_option("--workers", run_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--timeout", run_args.timeout_ms,
                  "Per-request backend timeout (ms)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  EvalArgs eval_args;
  auto* eval =
      app.add_subcommand("eval", "Score a summaries file against a store");
  eval->add_option("--summaries", eval_args.summaries, "Summaries JSONL")
      ->required();
  eval->add_option("--store", eval_args.store, "Article store")->required();
  add_build_options(eval, eval_args.opts);

  CompareArgs compare_args;
  auto* compare =
      app.add_subcommand("compare", "Score flat vs susie across backends");
  compare->add_option("--store", compare_args.store, "Article store")
      ->required();
  compare->add_option("--backends", compare_args.backends,
                      "Comma-separated builtin backends")
      ->capture_default_str();
  compare->add_option("--external", compare_args.externals,
                      "External backend NAME=COMMAND (repeatable)");
  compare->add_option("--workers", compare_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--timeout", compare_args.timeout_ms,
                      "Per-request backend timeout (ms)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_build_options(compare, compare_args.opts);
  compare->add_option("--out", compare_args.out, "Also save the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(ingest_args);
    if (build->parsed()) return cmd_build(build_args);
    if (stats->parsed()) return cmd_stats(stats_args);
    if (run->parsed()) return cmd_run(run_args);
    if (eval->parsed()) return cmd_eval(eval_args);
    if (compare->parsed()) return cmd_compare(compare_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BackendError& e) {
    std::cerr << "backend error (" << to_string(e.kind()) << "): " << e.what()
              << "\n";
    return kExitBackend;
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.kind()) << "): " << e.what()
              << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
