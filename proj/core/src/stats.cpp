#include "susie/stats.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_set>

namespace susie {

void LengthAccumulator::add(std::uint64_t value) {
  ++count;
  sum += value;
  sum_sq += value * value;
}

void LengthAccumulator::merge(const LengthAccumulator& other) {
  count += other.count;
  sum += other.sum;
  sum_sq += other.sum_sq;
}

double LengthAccumulator::mean() const {
  return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0;
}

double LengthAccumulator::population_std() const {
  if (count == 0) return 0.0;
  // n*sum_sq - sum^2 is exact in integers, so the variance is computed
  // without cancellation.
  const double n = static_cast<double>(count);
  const double num =
      static_cast<double>(count * sum_sq - sum * sum);
  return std::sqrt(num / (n * n));
}

CorpusStats compute_stats(const std::vector<TrainingExample>& examples) {
  struct Acc {
    LengthAccumulator source, summary;
  };
  std::map<std::string, Acc> per_type;
  LengthAccumulator total_source, total_summary;
  std::unordered_set<std::string> pmcids;

  for (const auto& ex : examples) {
    auto& acc = per_type[std::string(section_label(ex.section_type))];
    acc.source.add(ex.source_tokens.size());
    acc.summary.add(ex.reference_tokens.size());
    total_source.add(ex.source_tokens.size());
    total_summary.add(ex.reference_tokens.size());
    pmcids.insert(ex.pmcid);
  }

  CorpusStats stats;
  for (const auto& [label, acc] : per_type) {
    TypeStats ts;
    ts.count = acc.source.count;
    ts.source_mean = acc.source.mean();
    ts.source_std = acc.source.population_std();
    ts.summary_mean = acc.summary.mean();
    ts.summary_std = acc.summary.population_std();
    stats.per_type.emplace(label, ts);
  }
  stats.article_count = pmcids.size();
  stats.example_count = examples.size();
  stats.mean_source_len = total_source.mean();
  stats.mean_summary_len = total_summary.mean();
  return stats;
}

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void pad_to(std::string& line, std::size_t col) {
  if (line.size() < col) line.append(col - line.size(), ' ');
}

std::string right(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_type_table(const CorpusStats& stats) {
  std::ostringstream out;
  std::string head = "section type";
  pad_to(head, 16);
  out << head << right("count", 8) << right("source mean", 13)
      << right("source std", 12) << right("summary mean", 14)
      << right("summary std", 13) << "\n";
  for (const auto& [label, ts] : stats.per_type) {
    std::string line = label;
    pad_to(line, 16);
    out << line << right(std::to_string(ts.count), 8)
        << right(fixed2(ts.source_mean), 13) << right(fixed2(ts.source_std), 12)
        << right(fixed2(ts.summary_mean), 14) << right(fixed2(ts.summary_std), 13)
        << "\n";
  }
  return out.str();
}

std::string render_totals_table(
    const std::vector<std::pair<std::string, CorpusStats>>& columns) {
  constexpr std::size_t kLabelWidth = 26;
  constexpr std::size_t kColWidth = 12;
  std::ostringstream out;
  std::string head(kLabelWidth, ' ');
  out << head;
  for (const auto& [name, _] : columns) out << right(name, kColWidth);
  out << "\n";

  auto row = [&](const std::string& label, auto getter) {
    std::string line = label;
    pad_to(line, kLabelWidth);
    out << line;
    for (const auto& [_, stats] : columns) out << right(getter(stats), kColWidth);
    out << "\n";
  };
  row("# articles",
      [](const CorpusStats& s) { return std::to_string(s.article_count); });
  row("# examples",
      [](const CorpusStats& s) { return std::to_string(s.example_count); });
  row("avg. source length",
      [](const CorpusStats& s) { return fixed2(s.mean_source_len); });
  row("avg. summary length",
      [](const CorpusStats& s) { return fixed2(s.mean_summary_len); });
  row("examples per article",
      [](const CorpusStats& s) { return fixed2(s.examples_per_article()); });
  return out.str();
}

std::string render_stats_kv(const std::string& prefix, const CorpusStats& stats) {
  std::ostringstream out;
  out << prefix << ".articles " << stats.article_count << "\n";
  out << prefix << ".examples " << stats.example_count << "\n";
  out << prefix << ".mean_source_len " << fixed2(stats.mean_source_len) << "\n";
  out << prefix << ".mean_summary_len " << fixed2(stats.mean_summary_len) << "\n";
  out << prefix << ".examples_per_article " << fixed2(stats.examples_per_article())
      << "\n";
  for (const auto& [label, ts] : stats.per_type) {
    out << prefix << "." << label << ".count " << ts.count << "\n";
    out << prefix << "." << label << ".source_mean " << fixed2(ts.source_mean)
        << "\n";
    out << prefix << "." << label << ".source_std " << fixed2(ts.source_std)
        << "\n";
    out << prefix << "." << label << ".summary_mean " << fixed2(ts.summary_mean)
        << "\n";
    out << prefix << "." << label << ".summary_std " << fixed2(ts.summary_std)
        << "\n";
  }
  return out.str();
}

}  // namespace susie
