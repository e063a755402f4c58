#include "parikh/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

namespace parikh {

namespace {

constexpr std::size_t kTargetShards = 64;

struct ShardResult {
  bool done = false;
  bool complete = true;
  std::size_t classes = 0;
  std::vector<Finding> ambiguous;  // every ambiguous class in the shard, in order
};

struct ShardId {
  std::size_t length;
  std::size_t shard;
};

ParikhMatrix matrix_of(std::size_t s, std::span<const Letter> letters) {
  const auto dim = static_cast<Eigen::Index>(s + 1);
  ParikhMatrix m = ParikhMatrix::Identity(dim, dim);
  for (Letter q : letters) {
    for (Eigen::Index i = 0; i <= q; ++i) m(i, q + 1) = checked_add(m(i, q + 1), m(i, q));
  }
  return m;
}

// Full class of a word already known to be canonical, or nullopt when the budget
// ran out.
std::optional<MClass> full_class(const OrderedAlphabet& alphabet, std::span<const Letter> letters,
                                 const ParikhMatrix& target, SearchBudget& budget) {
  ClassSearch search(alphabet.size(), target);
  std::vector<std::vector<Letter>> raw;
  if (!search.run({}, {}, budget, raw)) return std::nullopt;
  MClass cls{Word(alphabet, {letters.begin(), letters.end()}), target, {}};
  cls.members.reserve(raw.size());
  for (auto& r : raw) cls.members.emplace_back(alphabet, std::move(r));
  return cls;
}

// Examines one word; appends a finding when it is the least member of an
// ambiguous class. Returns false on budget exhaustion.
bool examine(const OrderedAlphabet& alphabet, std::span<const Letter> letters, SearchBudget& budget,
             ShardResult& out) {
  const ParikhMatrix target = matrix_of(alphabet.size(), letters);
  ClassSearch search(alphabet.size(), target);
  std::vector<std::vector<Letter>> first;
  ClassSearch::Options opts;
  opts.max_members = 1;
  opts.upper_limit = letters;
  if (!search.run({}, opts, budget, first)) return false;
  if (!std::equal(first.front().begin(), first.front().end(), letters.begin(), letters.end())) return true;

  auto cls = full_class(alphabet, letters, target, budget);
  if (!cls) return false;
  if (cls->ambiguous()) {
    ++out.classes;
    out.ambiguous.push_back(make_finding(*cls));
  }
  return true;
}

ShardResult run_word_shard(const ScanParams& params, ShardId id, SearchBudget& budget) {
  const OrderedAlphabet alphabet(params.alphabet_size);
  const std::size_t s = params.alphabet_size;
  const std::size_t n = id.length;
  const std::size_t p = shard_prefix_length(s, n);
  ShardResult result;

  std::vector<Letter> w(n, 0);
  std::size_t code = id.shard;
  for (std::size_t k = p; k-- > 0;) {
    w[k] = static_cast<Letter>(code % s);
    code /= s;
  }
  // Odometer over the free suffix positions [p, n).
  while (true) {
    if (!examine(alphabet, w, budget, result)) {
      result.complete = false;
      break;
    }
    std::size_t k = n;
    while (k > p && w[k - 1] == s - 1) w[--k] = 0;
    if (k == p) break;
    ++w[k - 1];
  }
  result.done = true;
  return result;
}

ShardResult run_candidate_shard(const ScanParams& params, std::size_t index, SearchBudget& budget) {
  const OrderedAlphabet alphabet(params.alphabet_size);
  ShardResult result;
  const Word w = parse_word(params.candidates[index], alphabet);
  ClassSearch search(alphabet.size(), parikh_matrix(w));
  std::vector<std::vector<Letter>> raw;
  if (!search.run({}, {}, budget, raw)) {
    result.complete = false;
  } else if (raw.size() >= 2) {
    MClass cls{Word(alphabet, raw.front()), parikh_matrix(w), {}};
    for (auto& r : raw) cls.members.emplace_back(alphabet, std::move(r));
    ++result.classes;
    result.ambiguous.push_back(make_finding(cls));
  }
  result.done = true;
  return result;
}

}  // namespace

std::string to_string(ScanKind kind) { return kind == ScanKind::Conjecture ? "conjecture" : "hamming"; }

ScanKind scan_kind_from_string(const std::string& text) {
  if (text == "conjecture") return ScanKind::Conjecture;
  if (text == "hamming") return ScanKind::Hamming;
  throw DomainError("unknown scan kind '" + text + "' (expected conjecture or hamming)");
}

std::vector<std::string> check_laws(ScanKind kind, std::size_t alphabet_size, const Finding& f) {
  std::vector<std::string> broken;
  if (f.trivial && !f.distinguishable) broken.emplace_back("trivial-implies-distinguishable");
  if (kind == ScanKind::Conjecture) {
    if (f.distinguishable != f.trivial) broken.emplace_back("distinguishable-iff-trivial");
    return broken;
  }
  if (f.distance < 2) broken.emplace_back("dH>=2");
  if (f.distance == 3) broken.emplace_back("dH!=3");
  if (f.trivial != (f.distance == 2)) broken.emplace_back("trivial-iff-dH=2");
  if (alphabet_size <= 3) {
    const bool allowed = f.distance == 2 || f.distance == 4 || f.distance == 7 || f.distance == 8;
    if (!allowed) broken.emplace_back("dH-in-{2,4,7,8}");
    if (f.distinguishable != f.trivial) broken.emplace_back("distinguishable-iff-trivial");
  }
  return broken;
}

std::size_t shard_prefix_length(std::size_t alphabet_size, std::size_t length) {
  if (alphabet_size <= 1) return 0;
  std::size_t p = 0;
  std::size_t shards = 1;
  while (p < length && shards < kTargetShards) {
    shards *= alphabet_size;
    ++p;
  }
  return p;
}

Finding make_finding(const MClass& cls) {
  const DistinguishReport verdict = classify(cls);
  const HammingResult hamming = min_hamming(cls);
  return Finding{render(cls.members.front()), cls.size(), hamming.distance, verdict.distinguishable,
                 verdict.trivially_distinguishable};
}

ScanReport run_scan(const ScanParams& params, const RunConfig& config, std::optional<ScanReport> resume,
                    const std::function<void(const Finding&)>& on_finding) {
  if (params.alphabet_size < 1 || params.alphabet_size > OrderedAlphabet::kMaxSize) {
    throw DomainError("alphabet size out of range");
  }
  if (params.min_len > params.max_len) throw DomainError("min length exceeds max length");
  if (config.workers < 1) throw DomainError("worker count must be at least 1");
  if (config.node_budget == 0 || config.time_budget.count() <= 0) throw DomainError("budgets must be positive");

  const auto started = std::chrono::steady_clock::now();
  const bool candidates = !params.candidates.empty();

  // Validate candidate words up front so usage errors surface before any work.
  for (const auto& c : params.candidates) parse_word(c, OrderedAlphabet(params.alphabet_size));

  std::vector<ShardId> plan;
  if (candidates) {
    for (std::size_t i = 0; i < params.candidates.size(); ++i) plan.push_back({0, i});
  } else {
    for (std::size_t n = params.min_len; n <= params.max_len; ++n) {
      std::size_t shards = 1;
      for (std::size_t k = 0; k < shard_prefix_length(params.alphabet_size, n); ++k) shards *= params.alphabet_size;
      for (std::size_t i = 0; i < shards; ++i) plan.push_back({n, i});
    }
  }

  ScanReport report;
  if (resume) {
    if (!(resume->params == params)) throw DomainError("resume report was produced with different scan parameters");
    report = std::move(*resume);
  } else {
    report.params = params;
    report.watermark = candidates ? Watermark{0, 0} : Watermark{params.min_len, 0};
  }
  report.complete = false;
  std::set<std::string> seen;
  for (const auto& f : report.findings) seen.insert(f.repr);

  std::size_t start = 0;
  while (start < plan.size() && Watermark{plan[start].length, plan[start].shard} < report.watermark) ++start;

  SearchBudget budget(config.node_budget, config.time_budget);
  std::vector<ShardResult> slots(plan.size());
  std::atomic<std::size_t> next{start};
  std::mutex mu;
  std::condition_variable cv;

  std::size_t running = config.workers;  // guarded by mu
  auto worker = [&] {
    while (!budget.exhausted()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= plan.size()) break;
      ShardResult r = candidates ? run_candidate_shard(params, plan[i].shard, budget)
                                 : run_word_shard(params, plan[i], budget);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
      }
      cv.notify_all();
    }
    {
      std::lock_guard lock(mu);
      --running;
    }
    cv.notify_all();
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < config.workers; ++t) pool.emplace_back(worker);

  // Single writer: merge shards strictly in plan order.
  std::size_t cursor = start;
  bool stopped = false;
  while (cursor < plan.size() && !stopped) {
    ShardResult r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[cursor].done || running == 0; });
      if (!slots[cursor].done) {
        stopped = true;
        break;
      }
      r = std::move(slots[cursor]);
    }
    if (!r.complete) {
      stopped = true;
      break;
    }
    report.classes_examined += r.classes;
    for (auto& f : r.ambiguous) {
      if (candidates && !seen.insert(f.repr).second) {
        --report.classes_examined;
        continue;
      }
      ++report.histogram[f.distance];
      for (auto& law : check_laws(params.kind, params.alphabet_size, f)) report.violations.push_back({f.repr, law});
      const bool keep = params.kind == ScanKind::Hamming || f.distinguishable != f.trivial;
      if (keep) {
        if (on_finding) on_finding(f);
        report.findings.push_back(std::move(f));
      }
    }
    ++cursor;
    report.watermark = cursor < plan.size() ? Watermark{plan[cursor].length, plan[cursor].shard}
                       : candidates         ? Watermark{0, plan.size()}
                                            : Watermark{params.max_len + 1, 0};
  }
  for (auto& th : pool) th.join();

  report.complete = cursor == plan.size();
  report.wall_time += std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace parikh
