#include "parikh/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace parikh {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(const Finding& f) {
  return Json{{"repr", f.repr},
              {"size", f.size},
              {"dH", f.distance},
              {"distinguishable", f.distinguishable},
              {"trivial", f.trivial}};
}

Json header_json(const ScanParams& p) {
  Json h{{"command", "scan"},
         {"kind", to_string(p.kind)},
         {"alphabet_size", p.alphabet_size},
         {"min_len", p.min_len},
         {"max_len", p.max_len}};
  if (!p.candidates.empty()) h["candidates"] = p.candidates;
  return Json{{"header", h}};
}

}  // namespace

OutputFormat output_format_from_string(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "records" || text == "jsonl") return OutputFormat::Records;
  throw DomainError("unknown format '" + text + "' (expected text or records)");
}

std::string finding_record(const Finding& f) { return to_json(f).dump(); }

void write_records(std::ostream& out, const ScanReport& r) {
  out << header_json(r.params).dump() << '\n';
  for (const auto& f : r.findings) out << finding_record(f) << '\n';
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"repr", v.repr}, {"law", v.law}});
  Json histogram = Json::object();
  for (const auto& [d, count] : r.histogram) histogram[std::to_string(d)] = count;
  Json summary{{"classes_examined", r.classes_examined},
               {"findings", r.findings.size()},
               {"histogram", histogram},
               {"violations", violations},
               {"watermark", Json{{"length", r.watermark.length}, {"shard", r.watermark.shard}}},
               {"complete", r.complete}};
  out << Json{{"summary", summary}}.dump() << '\n';
}

ScanReport read_records(std::istream& in) {
  ScanReport r;
  bool have_header = false;
  bool have_summary = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed report line: ") + e.what());
    }
    try {
      if (j.contains("header")) {
        const auto& h = j["header"];
        r.params.kind = scan_kind_from_string(h.at("kind").get<std::string>());
        r.params.alphabet_size = h.at("alphabet_size").get<std::size_t>();
        r.params.min_len = h.at("min_len").get<std::size_t>();
        r.params.max_len = h.at("max_len").get<std::size_t>();
        if (h.contains("candidates")) r.params.candidates = h["candidates"].get<std::vector<std::string>>();
        have_header = true;
      } else if (j.contains("summary")) {
        const auto& s = j["summary"];
        r.classes_examined = s.at("classes_examined").get<std::size_t>();
        for (const auto& [k, v] : s.at("histogram").items()) r.histogram[std::stoul(k)] = v.get<std::size_t>();
        for (const auto& v : s.at("violations")) r.violations.push_back({v.at("repr"), v.at("law")});
        r.watermark = {s.at("watermark").at("length").get<std::size_t>(),
                       s.at("watermark").at("shard").get<std::size_t>()};
        r.complete = s.at("complete").get<bool>();
        have_summary = true;
      } else {
        r.findings.push_back(Finding{j.at("repr").get<std::string>(), j.at("size").get<std::size_t>(),
                                     j.at("dH").get<std::size_t>(), j.at("distinguishable").get<bool>(),
                                     j.at("trivial").get<bool>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("report record missing a field: ") + e.what());
    }
  }
  if (!have_header || !have_summary) throw ParseError("report is missing its header or summary record");
  return r;
}

void write_text(std::ostream& out, const ScanReport& r) {
  out << "scan " << to_string(r.params.kind) << "  alphabet size " << r.params.alphabet_size;
  if (r.params.candidates.empty()) {
    out << "  lengths " << r.params.min_len << ".." << r.params.max_len << '\n';
  } else {
    out << "  candidates " << r.params.candidates.size() << '\n';
  }
  out << "ambiguous classes examined: " << r.classes_examined << '\n';
  out << (r.params.kind == ScanKind::Conjecture ? "counterexamples: " : "findings: ") << r.findings.size() << '\n';
  for (const auto& f : r.findings) {
    out << "  [" << (f.repr.empty() ? "λ" : f.repr) << "]  size " << f.size << "  dH " << f.distance
        << (f.distinguishable ? "  distinguishable" : "  indistinguishable") << (f.trivial ? " (trivially)" : "")
        << '\n';
  }
  out << "dH histogram:";
  if (r.histogram.empty()) out << " (none)";
  for (const auto& [d, count] : r.histogram) out << "  " << d << ":" << count;
  out << '\n';
  out << "violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "  [" << v.repr << "] breaks " << v.law << '\n';
  out << "watermark: length " << r.watermark.length << " shard " << r.watermark.shard
      << (r.complete ? "  (complete)" : "  (INCOMPLETE)") << '\n';
}

std::string describe_matrix(const Word& w) {
  const ParikhMatrix m = parikh_matrix(w);
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) width = std::max(width, std::to_string(m.data()[i]).size());
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j);
    out << "]\n";
  }
  const auto& al = w.alphabet();
  for (std::size_t i = 0; i < al.size(); ++i) {
    std::string pattern;
    for (std::size_t j = i; j < al.size(); ++j) {
      pattern += al.glyph(static_cast<Letter>(j));
      out << "|w|_" << pattern << " = " << m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) << '\n';
    }
  }
  return out.str();
}

}  // namespace parikh
