#include "parikh/mclass.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace parikh {

namespace {

std::vector<Word> to_words(const OrderedAlphabet& alphabet, std::vector<std::vector<Letter>>&& raw) {
  std::vector<Word> out;
  out.reserve(raw.size());
  for (auto& letters : raw) out.emplace_back(alphabet, std::move(letters));
  return out;
}

bool is_e2_pair(const Word& w, std::size_t pos, Letter j, bool rising) {
  Letter lo = rising ? j : static_cast<Letter>(j + 1);
  Letter hi = rising ? static_cast<Letter>(j + 1) : j;
  return pos + 1 < w.size() && w[pos] == lo && w[pos + 1] == hi;
}

bool e2_middle_ok(const Word& w, std::size_t from, std::size_t to, Letter j) {
  const std::size_t s = w.alphabet().size();
  for (std::size_t k = from; k < to; ++k) {
    Letter x = w[k];
    if (j >= 1 && x + 1 == j) return false;
    if (j + 2u < s && x == j + 2) return false;
  }
  return true;
}

}  // namespace

MClass enumerate_class(const Word& w, SearchBudget& budget, const EnumerateOptions& options) {
  const ParikhMatrix target = parikh_matrix(w);
  const std::size_t s = w.alphabet().size();
  std::vector<std::vector<Letter>> raw;
  bool complete = true;

  if (options.workers <= 1 || w.size() < 2) {
    ClassSearch search(s, target);
    complete = search.run({}, {}, budget, raw);
  } else {
    // One branch per first letter, merged back in letter order.
    std::vector<std::vector<std::vector<Letter>>> branch(s);
    std::vector<char> branch_ok(s, 1);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t q; (q = next.fetch_add(1)) < s;) {
        ClassSearch search(s, target);
        const Letter first = static_cast<Letter>(q);
        branch_ok[q] = search.run(std::span<const Letter>(&first, 1), {}, budget, branch[q]);
      }
    };
    for (unsigned t = 0; t < std::min<std::size_t>(options.workers, s); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::size_t q = 0; q < s; ++q) {
      complete = complete && branch_ok[q];
      for (auto& m : branch[q]) raw.push_back(std::move(m));
    }
  }

  if (!complete) throw BudgetExhausted(to_words(w.alphabet(), std::move(raw)), budget.nodes_used());
  MClass cls{w, target, to_words(w.alphabet(), std::move(raw))};
  return cls;
}

MClass enumerate_class(const Word& w) {
  SearchBudget budget;
  return enumerate_class(w, budget);
}

bool is_m_ambiguous(const Word& w, SearchBudget& budget) {
  ClassSearch search(w.alphabet().size(), parikh_matrix(w));
  std::vector<std::vector<Letter>> found;
  ClassSearch::Options opts;
  opts.max_members = 2;
  if (!search.run({}, opts, budget, found)) {
    throw BudgetExhausted(to_words(w.alphabet(), std::move(found)), budget.nodes_used());
  }
  return found.size() >= 2;
}

bool is_m_ambiguous(const Word& w) {
  SearchBudget budget;
  return is_m_ambiguous(w, budget);
}

Word least_member(const Word& w, SearchBudget& budget) {
  ClassSearch search(w.alphabet().size(), parikh_matrix(w));
  std::vector<std::vector<Letter>> found;
  ClassSearch::Options opts;
  opts.max_members = 1;
  opts.upper_limit = w.letters();
  if (!search.run({}, opts, budget, found)) throw BudgetExhausted({}, budget.nodes_used());
  return Word(w.alphabet(), std::move(found.front()));
}

std::vector<RuleOccurrence> find_rule_occurrences(const Word& w, Rule rule) {
  std::vector<RuleOccurrence> out;
  const std::size_t n = w.size();
  if (rule == Rule::E1) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      int gap = static_cast<int>(w[p]) - static_cast<int>(w[p + 1]);
      if (gap >= 2 || gap <= -2) out.push_back({Rule::E1, p, p + 1, 0, false});
    }
    return out;
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    int step = static_cast<int>(w[p + 1]) - static_cast<int>(w[p]);
    if (step != 1 && step != -1) continue;
    const bool rising = step == 1;
    const Letter j = std::min(w[p], w[p + 1]);
    for (std::size_t q = p + 2; q + 1 < n; ++q) {
      if (is_e2_pair(w, q, j, !rising) && e2_middle_ok(w, p + 2, q, j)) {
        out.push_back({Rule::E2, p, q, j, !rising});
      }
    }
  }
  return out;
}

Word apply_rule(const Word& w, const RuleOccurrence& occ) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  const std::size_t n = letters.size();
  if (occ.rule == Rule::E1) {
    if (occ.first + 1 >= n || occ.second != occ.first + 1) throw DomainError("E1 occurrence out of range");
    int gap = static_cast<int>(letters[occ.first]) - static_cast<int>(letters[occ.first + 1]);
    if (gap > -2 && gap < 2) throw DomainError("E1 needs letters at least two apart in the order");
    std::swap(letters[occ.first], letters[occ.first + 1]);
    return Word(w.alphabet(), std::move(letters));
  }
  if (occ.j + 1u >= w.alphabet().size() || occ.second < occ.first + 2 || occ.second + 1 >= n ||
      !is_e2_pair(w, occ.first, occ.j, !occ.mirrored) || !is_e2_pair(w, occ.second, occ.j, occ.mirrored) ||
      !e2_middle_ok(w, occ.first + 2, occ.second, occ.j)) {
    throw DomainError("invalid E2 occurrence");
  }
  std::swap(letters[occ.first], letters[occ.first + 1]);
  std::swap(letters[occ.second], letters[occ.second + 1]);
  return Word(w.alphabet(), std::move(letters));
}

std::set<Word> e2_closure(const Word& w) {
  if (w.alphabet().size() != 2) throw DomainError("e2_closure is only complete over a binary alphabet");
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& occ : find_rule_occurrences(cur, Rule::E2)) {
      Word next = apply_rule(cur, occ);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace parikh
