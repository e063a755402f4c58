#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parikh/distinguish.hpp"
#include "parikh/hamming.hpp"
#include "parikh/mclass.hpp"

namespace parikh {

enum class ScanKind { Conjecture, Hamming };

std::string to_string(ScanKind kind);
ScanKind scan_kind_from_string(const std::string& text);

/// What a scan covers. Together these fully determine the report contents.
struct ScanParams {
  ScanKind kind = ScanKind::Hamming;
  std::size_t alphabet_size = 3;
  std::size_t min_len = 1;
  std::size_t max_len = 12;
  /// When non-empty, only the classes of these words are examined instead of
  /// the whole word space.
  std::vector<std::string> candidates;

  friend bool operator==(const ScanParams&, const ScanParams&) = default;
};

/// Execution knobs. None of them changes the report contents.
struct RunConfig {
  unsigned workers = 1;
  std::uint64_t node_budget = SearchBudget::kDefaultNodes;
  std::chrono::milliseconds time_budget = SearchBudget::kDefaultTime;
};

/// One M-ambiguous class seen by a scan, keyed by its least member.
struct Finding {
  std::string repr;
  std::size_t size = 0;
  std::size_t distance = 0;
  bool distinguishable = false;
  bool trivial = false;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct Violation {
  std::string repr;
  std::string law;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Position up to which the word space has been fully processed: every shard of
/// shorter lengths, and shards [0, shard) of `length`.
struct Watermark {
  std::size_t length = 0;
  std::size_t shard = 0;

  friend auto operator<=>(const Watermark&, const Watermark&) = default;
};

struct ScanReport {
  ScanParams params;
  std::size_t classes_examined = 0;
  std::vector<Finding> findings;
  std::vector<Violation> violations;
  std::map<std::size_t, std::size_t> histogram;  // d_H -> number of classes
  Watermark watermark;
  bool complete = false;
  std::chrono::milliseconds wall_time{0};
};

/// Laws checked against every finding of a scan. Returns the names of the ones
/// that fail (empty when the class behaves).
std::vector<std::string> check_laws(ScanKind kind, std::size_t alphabet_size, const Finding& finding);

/// Number of shards a length is split into, and the prefix length that keys them.
std::size_t shard_prefix_length(std::size_t alphabet_size, std::size_t length);

/// Runs a scan. Canonical class representatives are the words that are least
/// in their own class; each ambiguous class is classified and measured once.
///
/// Shards are processed by `config.workers` threads and merged in shard order,
/// so the report is identical for any worker count. When the budget runs out
/// the report is returned with complete = false and a watermark; passing it
/// back as `resume` continues from there. `on_finding` sees findings in report
/// order as they are merged.
ScanReport run_scan(const ScanParams& params, const RunConfig& config,
                    std::optional<ScanReport> resume = std::nullopt,
                    const std::function<void(const Finding&)>& on_finding = {});

/// Classifies one class into a finding.
Finding make_finding(const MClass& cls);

}  // namespace parikh
