#pragma once

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "turaev/report.hpp"

namespace turaev {

inline constexpr const char* kCsvHeader =
    "file,crossings,components,connected,reduced,orientable,twice_genus,a_circles,b_circles,realizable,subcode_free,"
    "exceptional,verdict";

struct BatchRow {
  std::string file;
  std::optional<TuraevReport> report;
  std::string error;  // error kind when the file could not be analyzed
};

struct BatchSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
};

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string csv_line(const BatchRow& row) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::ostringstream s;
  s << row.file << ',';
  if (!row.report) {
    s << ",,,,,,,,,,,error:" << row.error;
    return s.str();
  }
  const auto& r = *row.report;
  s << r.crossings << ',' << r.components << ',' << b(r.connected) << ',' << b(r.reduced) << ',';
  if (r.surface)
    s << b(r.surface->orientable) << ',' << r.surface->twice_genus << ',';
  else
    s << ",,";
  if (r.states)
    s << r.states->a_circles << ',' << r.states->b_circles << ',';
  else
    s << ",,";
  s << (r.carrier ? b(r.carrier->realizable) : std::string()) << ',';
  s << (r.primeness ? b(r.primeness->status == PrimenessStatus::SubcodeFree) : std::string()) << ',';
  s << (r.exceptional ? std::string(to_string(*r.exceptional)) : std::string()) << ',';
  s << to_string(r.verdict.verdict);
  return s.str();
}

inline BatchRow analyze_file(const std::filesystem::path& p) {
  BatchRow row{p.filename().string(), std::nullopt, {}};
  try {
    row.report = analyze(parse(read_text_file(p)));
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind()));
  } catch (const std::exception&) {
    row.error = "IOError";
  }
  return row;
}

/// Analyzes every *.gauss file in `dir` (sorted by file name) on up to
/// `threads` workers and returns the rows in file-name order.
inline std::vector<BatchRow> batch_rows(const std::filesystem::path& dir, unsigned threads = 0) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".gauss") files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  std::vector<BatchRow> rows(files.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = analyze_file(files[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string batch_csv(const std::vector<BatchRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += csv_line(r) + "\n";
  return out;
}

inline BatchSummary run_batch(const std::filesystem::path& dir, const std::filesystem::path& out, unsigned threads = 0) {
  const auto rows = batch_rows(dir, threads);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out.string());
  f << batch_csv(rows);
  BatchSummary s;
  for (const auto& r : rows) (r.report ? s.rows : s.errors)++;
  return s;
}

}  // namespace turaev
