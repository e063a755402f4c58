#pragma once

#include <optional>
#include <set>
#include <vector>

#include "parikh/matrix.hpp"
#include "parikh/search.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// A fully enumerated M-equivalence class [w].
struct MClass {
  Word representative;
  ParikhMatrix matrix;
  std::vector<Word> members;  // sorted, distinct, contains representative

  std::size_t size() const noexcept { return members.size(); }
  bool ambiguous() const noexcept { return members.size() >= 2; }
};

struct EnumerateOptions {
  /// Threads for the top-level branches. The member list does not depend on it.
  unsigned workers = 1;
};

/// Every word with the same Parikh matrix as `w`. Throws BudgetExhausted with
/// the members found so far if the budget runs out.
MClass enumerate_class(const Word& w, SearchBudget& budget, const EnumerateOptions& options = {});
MClass enumerate_class(const Word& w);

/// True iff [w] has a second member; the search stops as soon as it finds one.
bool is_m_ambiguous(const Word& w, SearchBudget& budget);
bool is_m_ambiguous(const Word& w);

/// Least member of [w] in lexicographic order.
Word least_member(const Word& w, SearchBudget& budget);

enum class Rule { E1, E2 };

/// One place where an elementary rule rewrites a word.
///
/// E1 swaps the adjacent pair at `first`, `first + 1` (letters at least two
/// apart in the order). E2 swaps the pair a_j a_{j+1} at `first` and the pair
/// a_{j+1} a_j at `second` (or the mirrored orientation, `mirrored` = true),
/// with y = w[first+2 .. second) free of a_{j-1} and a_{j+2}.
struct RuleOccurrence {
  Rule rule;
  std::size_t first = 0;
  std::size_t second = 0;
  Letter j = 0;
  bool mirrored = false;

  friend bool operator==(const RuleOccurrence&, const RuleOccurrence&) = default;
};

/// All occurrences of `rule` in `w`, ordered by (first, second).
std::vector<RuleOccurrence> find_rule_occurrences(const Word& w, Rule rule);

/// Rewrites `w` at `occ`. Throws DomainError when the occurrence does not fit.
Word apply_rule(const Word& w, const RuleOccurrence& occ);

/// Closure of {w} under E2 rewrites. Binary alphabets only: that is where the
/// closure is known to be the whole class.
std::set<Word> e2_closure(const Word& w);

}  // namespace parikh
