#include "parikh/verify.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "parikh/distinguish.hpp"
#include "parikh/hamming.hpp"
#include "parikh/mclass.hpp"

namespace parikh {

using Json = nlohmann::json;

namespace {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", expected " << want;
    throw CheckFailure(msg.str());
  }
}

Word word_of(const Json& entry, const std::string& key) {
  return parse_word(entry.at(key).get<std::string>(), OrderedAlphabet(entry.at("alphabet_size").get<std::size_t>()));
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size()) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

ParikhMatrix matrix_from_json(const Json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  ParikhMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows.at(i).at(j).get<Count>();
  }
  return m;
}

std::string check_matrix(const Json& e, const RunConfig&) {
  const Word w = word_of(e, "word");
  const ParikhMatrix got = parikh_matrix(w);
  expect_eq(to_json_rows(got), to_json_rows(matrix_from_json(e.at("matrix"))), "Parikh matrix of " + render(w));
  expect(got == parikh_matrix_from_counts(w), "product and count routes disagree");
  return "Psi(" + render(w) + ") = " + to_json_rows(got);
}

std::string check_subword_counts(const Json& e, const RunConfig&) {
  std::string detail;
  for (const auto& c : e) {
    const OrderedAlphabet al(c.at("alphabet_size").get<std::size_t>());
    const Word w = parse_word(c.at("word").get<std::string>(), al);
    const Word v = parse_word(c.at("pattern").get<std::string>(), al);
    expect_eq(subword_count(w, v), c.at("count").get<Count>(), "|" + render(w) + "|_" + render(v));
    detail += (detail.empty() ? "" : ", ") + ("|" + render(w) + "|_" + render(v) + " = " +
                                              std::to_string(c.at("count").get<Count>()));
  }
  return detail;
}

std::string check_projection(const Json& e, const RunConfig&) {
  const Word w = word_of(e, "word");
  const LetterSet keep = LetterSet::parse(e.at("subset").get<std::string>(), w.alphabet());
  const Word image = projection(w, keep);
  expect_eq(render(image), e.at("image").get<std::string>(), "projection of " + render(w));
  return "pi" + render(keep, w.alphabet()) + "(" + render(w) + ") = " + render(image);
}

std::string check_amiable_pair(const Json& e, const RunConfig&) {
  const Word w = word_of(e, "w");
  const Word v = word_of(e, "v");
  expect(m_equivalent(w, v), render(w) + " and " + render(v) + " are not M-equivalent");
  return render(w) + " ==_M " + render(v);
}

std::string check_binary_characterization(const Json& e, const RunConfig& config) {
  const OrderedAlphabet binary(2);
  std::size_t forms = 0;
  expect(!is_m_ambiguous(Word(binary)), "lambda reported ambiguous");
  for (const auto& form : e.at("unambiguous_forms")) {
    for (const auto& alpha : e.at("exponents")) {
      for (const auto& beta : e.at("exponents")) {
        std::string text = replace_all(form.get<std::string>(), "A", std::to_string(alpha.get<int>()));
        text = replace_all(text, "B", std::to_string(beta.get<int>()));
        const Word w = parse_word(text, binary);
        expect(!is_m_ambiguous(w), text + " should be M-unambiguous");
        ++forms;
      }
    }
  }
  // Rule E2 closure against the class search, every binary word up to max_len.
  const std::size_t max_len = e.at("closure_max_len").get<std::size_t>();
  std::size_t words = 0;
  SearchBudget budget(config.node_budget, config.time_budget);
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
      std::vector<Letter> letters(n);
      for (std::size_t k = 0; k < n; ++k) letters[k] = static_cast<Letter>((code >> (n - 1 - k)) & 1);
      const Word w(binary, std::move(letters));
      const auto closure = e2_closure(w);
      const MClass cls = enumerate_class(w, budget);
      expect(std::vector<Word>(closure.begin(), closure.end()) == cls.members,
             "E2 closure differs from the class of " + render(w));
      ++words;
    }
  }
  return std::to_string(forms) + " unambiguous instances; E2 closure = class for " + std::to_string(words) +
         " binary words";
}

std::string check_indistinguishable(const Json& e, const RunConfig&) {
  const Word w = word_of(e, "word");
  const MClass cls = enumerate_class(w);
  expect(cls.ambiguous(), render(w) + " should be M-ambiguous");
  const DistinguishReport r = classify(cls);
  expect(!r.distinguishable, "[" + render(w) + "] should be P-indistinguishable");
  return "[" + render(w) + "] has " + std::to_string(cls.size()) + " members and is P-indistinguishable";
}

std::string check_example_3_10(const Json& e, const RunConfig& config) {
  const Word w = word_of(e, "w");
  const Word v = word_of(e, "v");
  expect_eq(to_json_rows(parikh_matrix(w)), to_json_rows(matrix_from_json(e.at("matrix"))), "(a) Psi(w)");
  expect(m_equivalent(w, v), "(b) w and v are not M-equivalent");
  const auto witness = p_distinct(w, v);
  expect(witness.has_value(), "(c) w and v are P-equivalent");
  expect_eq(render(*witness, w.alphabet()),
            render(LetterSet::parse(e.at("witness").get<std::string>(), w.alphabet()), w.alphabet()),
            "(c) witness subset");
  for (const auto& x : e.at("differing_patterns")) {
    const Word pattern = parse_word(x.get<std::string>(), w.alphabet());
    expect(subword_count(w, pattern) != subword_count(v, pattern), "|w|_x = |v|_x for x = " + render(pattern));
  }
  SearchBudget budget(config.node_budget, config.time_budget);
  const MClass cls = enumerate_class(w, budget);
  const std::vector<Word> expected = v < w ? std::vector<Word>{v, w} : std::vector<Word>{w, v};
  expect(cls.members == expected, "(e) [w] is not exactly {w, v}: " + std::to_string(cls.size()) + " members");
  const DistinguishReport r = classify(cls);
  expect(r.distinguishable, "(d) class not distinguishable");
  expect(!r.trivially_distinguishable, "(d) class is trivially distinguishable");
  return "[w] = {w, v}, witness " + render(*witness, w.alphabet()) + ", not trivially distinguishable";
}

std::string check_class_with_distance(const Json& e, const RunConfig& config) {
  const OrderedAlphabet al(e.at("alphabet_size").get<std::size_t>());
  std::vector<Word> expected;
  for (const auto& m : e.at("members")) expected.push_back(parse_word(m.get<std::string>(), al));
  for (std::size_t i = 1; i < expected.size(); ++i) {
    expect(m_equivalent(expected[0], expected[i]), "listed members are not M-equivalent");
  }
  SearchBudget budget(config.node_budget, config.time_budget);
  const MClass cls = enumerate_class(expected.front(), budget);
  std::sort(expected.begin(), expected.end());
  expect_eq(cls.size(), expected.size(), "class size");
  expect(cls.members == expected, "class members differ from the listed words");
  const HammingResult h = min_hamming(cls);
  expect_eq(h.distance, e.at("dH").get<std::size_t>(), "minimal Hamming distance");
  std::string detail = std::to_string(cls.size()) + " members, dH = " + std::to_string(h.distance);
  if (e.contains("counterexample") && e.at("counterexample").get<bool>()) {
    const DistinguishReport r = classify(cls);
    expect(r.distinguishable && !r.trivially_distinguishable, "class is not a conjecture counterexample");
    detail += ", distinguishable but not trivially";
  }
  return detail;
}

std::string check_conjecture_scan(const Json& e, const RunConfig& config) {
  ScanParams p;
  p.kind = ScanKind::Conjecture;
  p.alphabet_size = e.at("alphabet_size").get<std::size_t>();
  p.min_len = 1;
  p.max_len = e.at("max_len").get<std::size_t>();
  const ScanReport r = run_scan(p, config);
  expect(r.complete, "scan did not finish within budget");
  expect_eq(r.findings.size(), e.at("counterexamples").get<std::size_t>(), "counterexamples");
  expect_eq(r.violations.size(), 0u, "law violations");
  return std::to_string(r.classes_examined) + " ambiguous classes, " + std::to_string(r.findings.size()) +
         " counterexamples";
}

std::string check_hamming_scan(const Json& e, const RunConfig& config) {
  ScanParams p;
  p.kind = ScanKind::Hamming;
  p.alphabet_size = e.at("alphabet_size").get<std::size_t>();
  p.min_len = 1;
  p.max_len = e.at("max_len").get<std::size_t>();
  const ScanReport r = run_scan(p, config);
  expect(r.complete, "scan did not finish within budget");
  expect_eq(r.violations.size(), 0u, "law violations");
  const auto allowed = e.at("allowed_dH").get<std::vector<std::size_t>>();
  std::string hist;
  for (const auto& [d, count] : r.histogram) {
    expect(std::find(allowed.begin(), allowed.end(), d) != allowed.end(), "dH = " + std::to_string(d) + " occurs");
    hist += " " + std::to_string(d) + ":" + std::to_string(count);
  }
  return std::to_string(r.classes_examined) + " ambiguous classes, dH histogram" + hist;
}

using CheckFn = std::string (*)(const Json&, const RunConfig&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"example-2.3", check_matrix},
      {"subword-counts", check_subword_counts},
      {"projection", check_projection},
      {"example-2.9", check_amiable_pair},
      {"theorem-2.5", check_binary_characterization},
      {"indistinguishable-abbabc", check_indistinguishable},
      {"example-3.10", check_example_3_10},
      {"section-4-class", check_class_with_distance},
      {"table-1-row-1", check_class_with_distance},
      {"table-1-row-2", check_class_with_distance},
      {"table-1-row-3", check_class_with_distance},
      {"theorem-3.9-scan", check_conjecture_scan},
      {"theorem-4.8-scan", check_hamming_scan},
  };
  return checks;
}

}  // namespace

const std::string& builtin_fixture() {
  static const std::string fixture = R"json({
  "example-2.3": {"alphabet_size": 3, "word": "abcabbc",
                  "matrix": [[1,2,5,6],[0,1,3,4],[0,0,1,2],[0,0,0,1]]},
  "subword-counts": [
    {"alphabet_size": 2, "word": "aababb", "pattern": "ab", "count": 8},
    {"alphabet_size": 3, "word": "bcacabcba", "pattern": "abc", "count": 2}
  ],
  "projection": {"alphabet_size": 4, "word": "bacdabc", "subset": "ac", "image": "acac"},
  "example-2.9": {"alphabet_size": 3, "w": "abbcbabcbba", "v": "bacbabbbcba"},
  "theorem-2.5": {"unambiguous_forms": ["a^A", "b^A", "a^Ab^B", "b^Aa^B", "a^Aba^B", "b^Aab^B", "a^Abab^B", "b^Aaba^B"],
                  "exponents": [1, 2, 3, 5], "closure_max_len": 12},
  "indistinguishable-abbabc": {"alphabet_size": 3, "word": "abbabc"},
  "example-3.10": {"alphabet_size": 4,
                   "w": "bcbabcbcdcbcbbabcbccdccbb", "v": "cbbabbcbcdccbcbabcbcdcbcb",
                   "matrix": [[1,2,13,51,36],[0,1,11,61,51],[0,0,1,10,11],[0,0,0,1,2],[0,0,0,0,1]],
                   "witness": "ac", "differing_patterns": ["ac", "bd", "acd", "abd"]},
  "section-4-class": {"alphabet_size": 3, "dH": 7,
                      "members": ["ab^11cbabcb^5", "bab^9cbabbbcb^4", "bbab^7cbab^5cbbb",
                                  "bbbab^5cbab^7cbb", "b^4abbbcbab^9cb", "b^5abcbab^11c"]},
  "table-1-row-1": {"alphabet_size": 4, "dH": 12, "counterexample": true,
                    "members": ["bcbabccdcbbabbccdccb", "cbbabbccdccbabbcdcbc"]},
  "table-1-row-2": {"alphabet_size": 4, "dH": 14, "counterexample": true,
                    "members": ["bcbabcbcdcbbabbccdccb", "cbbabbcbcdccbabbcdcbc"]},
  "table-1-row-3": {"alphabet_size": 4, "dH": 16, "counterexample": true,
                    "members": ["bcbabcbcdcbbabcbccdccb", "cbbabbcbcdccbabcbcdcbc"]},
  "theorem-3.9-scan": {"alphabet_size": 3, "max_len": 12, "counterexamples": 0},
  "theorem-4.8-scan": {"alphabet_size": 3, "max_len": 12, "allowed_dH": [2, 4, 7, 8]}
})json";
  return fixture;
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> verify_goldens(const std::string& fixture_json, const std::optional<std::string>& only,
                                      const RunConfig& config,
                                      const std::function<void(const CheckResult&)>& on_result) {
  Json fixture;
  try {
    fixture = Json::parse(fixture_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (only) {
    const auto names = check_names();
    if (std::find(names.begin(), names.end(), *only) == names.end()) {
      throw DomainError("unknown check '" + *only + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : registry()) {
    if (only && *only != name) continue;
    CheckResult r{name, false, {}, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (!fixture.contains(name)) throw CheckFailure("fixture has no entry");
      r.detail = fn(fixture.at(name), config);
      r.passed = true;
    } catch (const CheckFailure& e) {
      r.detail = e.what();
    } catch (const nlohmann::json::exception& e) {
      r.detail = std::string("bad fixture entry: ") + e.what();
    } catch (const Error& e) {
      r.detail = e.what();
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace parikh
