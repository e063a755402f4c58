// Command-line front end: matrix, class, distinguish, hamming, scan, verify-paper.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 budget exhausted or count overflow.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parikh/distinguish.hpp"
#include "parikh/hamming.hpp"
#include "parikh/mclass.hpp"
#include "parikh/report.hpp"
#include "parikh/scan.hpp"
#include "parikh/verify.hpp"

namespace {

using namespace parikh;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::size_t alphabet_size = 3;
  std::size_t min_len = 1;
  std::size_t max_len = 12;
  unsigned workers = 1;
  std::uint64_t node_budget = SearchBudget::kDefaultNodes;
  std::uint64_t time_budget_s = SearchBudget::kDefaultTime.count();
  std::string out;
  std::string format = "text";

  std::vector<std::string> words;
  std::string kind;
  std::vector<std::string> candidates;
  std::string resume;
  std::string only;
  std::string fixture;
  bool list = false;

  RunConfig run_config() const {
    return RunConfig{workers, node_budget, std::chrono::milliseconds(time_budget_s * 1000)};
  }
  OutputFormat output_format() const { return output_format_from_string(format); }
};

void add_alphabet(CLI::App* cmd, Options& o) {
  cmd->add_option("-s,--alphabet-size", o.alphabet_size, "Alphabet size s (letters a..)")
      ->envname("PARIKH_ALPHABET_SIZE")
      ->check(CLI::Range(1, 26));
}

void add_budgets(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "Worker threads")->envname("PARIKH_WORKERS")->check(CLI::Range(1, 1024));
  cmd->add_option("--node-budget", o.node_budget, "Maximum search nodes")
      ->envname("PARIKH_NODE_BUDGET")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-budget", o.time_budget_s, "Maximum wall-clock seconds")
      ->envname("PARIKH_TIME_BUDGET")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: text or records")
      ->envname("PARIKH_FORMAT")
      ->check(CLI::IsMember({"text", "records", "jsonl"}));
}

std::string shown(const Word& w) { return w.empty() ? "λ" : render(w); }

std::vector<Word> parse_words(const Options& o) {
  const OrderedAlphabet al(o.alphabet_size);
  std::vector<Word> out;
  for (const auto& text : o.words) out.push_back(parse_word(text, al));
  return out;
}

Json class_json(const MClass& cls) {
  Json members = Json::array();
  for (const auto& m : cls.members) members.push_back(render(m));
  Json j{{"repr", render(cls.members.front())},
         {"size", cls.size()},
         {"matrix", Json::parse(to_json_rows(cls.matrix))},
         {"members", members}};
  if (cls.ambiguous()) {
    const DistinguishReport d = classify(cls);
    const HammingResult h = min_hamming(cls);
    j["dH"] = h.distance;
    j["distinguishable"] = d.distinguishable;
    j["trivial"] = d.trivially_distinguishable;
  }
  return j;
}

void print_report(std::ostream& out, const DistinguishReport& d, const OrderedAlphabet& al) {
  out << "P-distinguishable: " << (d.distinguishable ? "yes" : "no") << '\n';
  if (d.witness_pair) {
    out << "  witness pair: " << shown(d.witness_pair->first) << " / " << shown(d.witness_pair->second) << '\n';
    out << "  witness subset: " << render(*d.witness_subset, al) << '\n';
  }
  out << "trivially distinguishable: " << (d.trivially_distinguishable ? "yes" : "no") << '\n';
  if (d.trivial_witness) {
    out << "  trivial witness: " << shown(d.trivial_witness->member) << " at position "
        << d.trivial_witness->position << '\n';
  }
}

int cmd_matrix(const Options& o) {
  const auto words = parse_words(o);
  const Word& w = words.at(0);
  if (o.output_format() == OutputFormat::Records) {
    std::cout << Json{{"word", render(w)}, {"matrix", Json::parse(to_json_rows(parikh_matrix(w)))}}.dump() << '\n';
  } else {
    std::cout << "Psi(" << shown(w) << ") over {" << w.alphabet().glyphs() << "}\n" << describe_matrix(w);
  }
  return kExitOk;
}

int cmd_class(const Options& o) {
  const auto words = parse_words(o);
  const Word& w = words.at(0);
  SearchBudget budget(o.node_budget, std::chrono::seconds(o.time_budget_s));
  const MClass cls = enumerate_class(w, budget, EnumerateOptions{o.workers});
  if (o.output_format() == OutputFormat::Records) {
    std::cout << class_json(cls).dump() << '\n';
    return kExitOk;
  }
  std::cout << "[" << shown(w) << "]: " << cls.size() << (cls.size() == 1 ? " member" : " members") << '\n';
  for (const auto& m : cls.members) std::cout << "  " << shown(m) << '\n';
  if (!cls.ambiguous()) {
    std::cout << "M-unambiguous\n";
    return kExitOk;
  }
  const HammingResult h = min_hamming(cls);
  std::cout << "M-ambiguous\n";
  std::cout << "dH = " << h.distance << "  (" << shown(h.witness_pair.first) << " / " << shown(h.witness_pair.second)
            << ")\n";
  print_report(std::cout, classify(cls), w.alphabet());
  return kExitOk;
}

int cmd_distinguish(const Options& o) {
  const auto words = parse_words(o);
  if (words.size() == 2) {
    const Word& w = words[0];
    const Word& v = words[1];
    const auto witness = p_distinct(w, v);
    if (o.output_format() == OutputFormat::Records) {
      Json j{{"w", render(w)},
             {"v", render(v)},
             {"m_equivalent", m_equivalent(w, v)},
             {"strong_m_equivalent", strong_m_equivalent(w, v)},
             {"p_equivalent", p_equivalent(w, v)},
             {"witness", witness ? Json(render(*witness, w.alphabet())) : Json(nullptr)}};
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    std::cout << "M-equivalent: " << (m_equivalent(w, v) ? "yes" : "no") << '\n';
    std::cout << "strongly M-equivalent: " << (strong_m_equivalent(w, v) ? "yes" : "no") << '\n';
    std::cout << "P-equivalent: " << (p_equivalent(w, v) ? "yes" : "no") << '\n';
    if (witness) std::cout << "P-distinct on " << render(*witness, w.alphabet()) << '\n';
    return kExitOk;
  }
  SearchBudget budget(o.node_budget, std::chrono::seconds(o.time_budget_s));
  const MClass cls = enumerate_class(words.at(0), budget, EnumerateOptions{o.workers});
  const DistinguishReport d = classify(cls);
  if (o.output_format() == OutputFormat::Records) {
    Json j{{"repr", render(cls.members.front())},
           {"size", d.class_size},
           {"distinguishable", d.distinguishable},
           {"trivial", d.trivially_distinguishable}};
    if (d.witness_subset) j["witness"] = render(*d.witness_subset, cls.representative.alphabet());
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "[" << shown(words[0]) << "]: " << d.class_size << " members\n";
    print_report(std::cout, d, cls.representative.alphabet());
  }
  return kExitOk;
}

int cmd_hamming(const Options& o) {
  const auto words = parse_words(o);
  if (words.size() == 2) {
    const std::size_t d = hamming_distance(words[0], words[1]);
    if (o.output_format() == OutputFormat::Records) {
      std::cout << Json{{"w", render(words[0])}, {"v", render(words[1])}, {"dH", d}}.dump() << '\n';
    } else {
      std::cout << "dH = " << d << '\n';
    }
    return kExitOk;
  }
  SearchBudget budget(o.node_budget, std::chrono::seconds(o.time_budget_s));
  const MClass cls = enumerate_class(words.at(0), budget, EnumerateOptions{o.workers});
  const HammingResult h = min_hamming(cls);
  if (o.output_format() == OutputFormat::Records) {
    std::cout << Json{{"repr", render(cls.members.front())},
                      {"size", cls.size()},
                      {"dH", h.distance},
                      {"pair", {render(h.witness_pair.first), render(h.witness_pair.second)}}}
                     .dump()
              << '\n';
  } else {
    std::cout << "dH([" << shown(words[0]) << "]) = " << h.distance << "  (" << shown(h.witness_pair.first) << " / "
              << shown(h.witness_pair.second) << ")\n";
  }
  return kExitOk;
}

int cmd_scan(const Options& o) {
  ScanParams params;
  params.kind = scan_kind_from_string(o.kind);
  params.alphabet_size = o.alphabet_size;
  params.min_len = o.min_len;
  params.max_len = o.max_len;
  params.candidates = o.candidates;

  std::optional<ScanReport> resume;
  if (!o.resume.empty()) {
    std::ifstream in(o.resume);
    if (!in) throw DomainError("cannot open resume report '" + o.resume + "'");
    resume = read_records(in);
    if (resume->complete) std::cerr << "note: resume report is already complete\n";
  }

  const OutputFormat format = o.output_format();
  const bool stream = format == OutputFormat::Text || !o.out.empty();
  auto on_finding = [&](const Finding& f) {
    if (!stream) return;
    std::cout << (format == OutputFormat::Records ? finding_record(f)
                                                  : "  [" + f.repr + "] size " + std::to_string(f.size) +
                                                        " dH " + std::to_string(f.distance))
              << '\n'
              << std::flush;
  };
  const ScanReport report = run_scan(params, o.run_config(), std::move(resume), on_finding);

  // Report files are always records so that --resume can read them back.
  if (o.out.empty()) {
    if (format == OutputFormat::Records) {
      write_records(std::cout, report);
    } else {
      std::cout << "---\n";
      write_text(std::cout, report);
    }
  } else {
    std::ostringstream body;
    write_records(body, report);
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot write report to '" + o.out + "'");
    file << body.str();
  }
  std::cerr << "scan " << to_string(params.kind) << ": " << report.classes_examined << " ambiguous classes, "
            << report.findings.size() << " findings, " << report.violations.size() << " violations in "
            << report.wall_time.count() << " ms" << (report.complete ? "" : " (INCOMPLETE: budget exhausted)")
            << '\n';
  if (!report.complete) return kExitBudget;
  return report.violations.empty() ? kExitOk : kExitVerify;
}

int cmd_verify(const Options& o) {
  if (o.list) {
    for (const auto& name : check_names()) std::cout << name << '\n';
    return kExitOk;
  }
  std::string fixture = builtin_fixture();
  if (!o.fixture.empty()) {
    std::ifstream in(o.fixture);
    if (!in) throw DomainError("cannot open fixture '" + o.fixture + "'");
    fixture.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::optional<std::string> only;
  if (!o.only.empty()) only = o.only;
  std::size_t failed = 0;
  verify_goldens(fixture, only, o.run_config(), [&](const CheckResult& r) {
    failed += !r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.elapsed.count() << " ms)  " << r.detail
              << '\n'
              << std::flush;
  });
  std::cout << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
  return failed ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parikh-matrix toolkit: matrices, M-classes, P-distinguishability, Hamming distances"};
  app.require_subcommand(1);
  Options o;

  auto* matrix = app.add_subcommand("matrix", "Print the Parikh matrix of a word");
  add_alphabet(matrix, o);
  add_format(matrix, o);
  matrix->add_option("word", o.words, "Word, e.g. ab^11cbabcb^5")->required()->expected(1);

  auto* cls = app.add_subcommand("class", "Enumerate the M-class of a word");
  add_alphabet(cls, o);
  add_budgets(cls, o);
  add_format(cls, o);
  cls->add_option("word", o.words, "Word")->required()->expected(1);

  auto* dist = app.add_subcommand("distinguish", "P-distinctness of two words, or classify the class of one");
  add_alphabet(dist, o);
  add_budgets(dist, o);
  add_format(dist, o);
  dist->add_option("words", o.words, "One or two words")->required()->expected(1, 2);

  auto* ham = app.add_subcommand("hamming", "Hamming distance of two words, or minimal distance of a class");
  add_alphabet(ham, o);
  add_budgets(ham, o);
  add_format(ham, o);
  ham->add_option("words", o.words, "One or two words")->required()->expected(1, 2);

  auto* scan = app.add_subcommand("scan", "Exhaustive scan over all words of a length range");
  scan->add_option("kind", o.kind, "conjecture or hamming")->required()->check(CLI::IsMember({"conjecture", "hamming"}));
  add_alphabet(scan, o);
  add_budgets(scan, o);
  add_format(scan, o);
  scan->add_option("--min-len", o.min_len, "Shortest word length")->envname("PARIKH_MIN_LEN");
  scan->add_option("--max-len", o.max_len, "Longest word length")->envname("PARIKH_MAX_LEN");
  scan->add_option("--candidates", o.candidates, "Only examine the classes of these words");
  scan->add_option("--out", o.out, "Write the final report here, as records")->envname("PARIKH_OUT");
  scan->add_option("--resume", o.resume, "Continue from a partial records report");

  auto* verify = app.add_subcommand("verify-paper", "Reproduce every published example and table");
  add_budgets(verify, o);
  verify->add_option("--only", o.only, "Run a single named check");
  verify->add_option("--fixture", o.fixture, "JSON fixture overriding the built-in expected values");
  verify->add_flag("--list", o.list, "List check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*matrix) return cmd_matrix(o);
    if (*cls) return cmd_class(o);
    if (*dist) return cmd_distinguish(o);
    if (*ham) return cmd_hamming(o);
    if (*scan) return cmd_scan(o);
    if (*verify) return cmd_verify(o);
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "; partial result has " << e.partial().size() << " members\n";
    for (const auto& m : e.partial()) std::cerr << "  " << render(m) << '\n';
    return kExitBudget;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
