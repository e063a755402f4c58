#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "parikh/matrix.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// Node and wall-clock allowance shared by one or more searches. Safe to charge
/// from several threads.
class SearchBudget {
 public:
  using Clock = std::chrono::steady_clock;

  static constexpr std::uint64_t kDefaultNodes = 1'000'000'000;
  static constexpr std::chrono::seconds kDefaultTime{30 * 60};

  SearchBudget(std::uint64_t max_nodes = kDefaultNodes,
               std::chrono::milliseconds max_time = kDefaultTime);

  SearchBudget(const SearchBudget&) = delete;
  SearchBudget& operator=(const SearchBudget&) = delete;

  /// Adds `nodes` to the tally; false once either limit has been crossed.
  bool charge(std::uint64_t nodes);
  bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes_used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t max_nodes() const noexcept { return max_nodes_; }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
  std::uint64_t max_nodes_;
  Clock::time_point deadline_;
};

/// Raised when a search runs out of budget before finishing. Carries whatever
/// was found so far; the result is explicitly partial.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::vector<Word> partial, std::uint64_t nodes)
      : Error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
        partial_(std::move(partial)),
        nodes_(nodes) {}

  const std::vector<Word>& partial() const noexcept { return partial_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::vector<Word> partial_;
  std::uint64_t nodes_;
};

/// Depth-first builder of all words sharing one Parikh matrix.
///
/// Words are grown left to right from the remaining letter multiset while the
/// corner counts |prefix|_{a_i..a_j} are kept incrementally. A branch is cut when
/// some count can no longer land on its target: the lowest reachable value puts
/// the remaining letters in descending order, the highest in ascending order.
/// Both bounds are exact extremes over completions, so no member is ever lost.
/// Letters are tried in increasing order and members come out sorted.
class ClassSearch {
 public:
  struct Options {
    /// Stop once this many members are collected.
    std::size_t max_members = std::numeric_limits<std::size_t>::max();
    /// When non-empty, only members lexicographically <= this word are explored.
    std::span<const Letter> upper_limit{};
  };

  ClassSearch(std::size_t alphabet_size, const ParikhMatrix& target);

  /// Runs the search beneath `prefix` (which must itself be a feasible start).
  /// Returns false if the budget ran out; `out` then holds a partial result.
  bool run(std::span<const Letter> prefix, const Options& options, SearchBudget& budget,
           std::vector<std::vector<Letter>>& out);

  std::size_t length() const noexcept { return length_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t at(std::size_t i, std::size_t j) const noexcept { return i * s_ + j; }
  void push(Letter q);
  void pop(Letter q);
  bool feasible() const noexcept;
  bool descend(std::size_t depth, bool tight);

  std::size_t s_;
  std::size_t length_ = 0;
  std::vector<Count> target_;  // s x s, entry (i,j) for i <= j is |w|_{a_i..a_j}
  std::vector<Count> counts_;  // same layout, for the current prefix
  std::vector<Count> remaining_;
  std::vector<Letter> word_;

  const Options* options_ = nullptr;
  SearchBudget* budget_ = nullptr;
  std::vector<std::vector<Letter>>* out_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t uncharged_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

}  // namespace parikh
