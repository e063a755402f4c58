#include "parikh/search.hpp"

#include <algorithm>

namespace parikh {

namespace {

constexpr std::uint64_t kChargeBatch = 4096;
constexpr Count kSaturated = std::numeric_limits<Count>::max();

Count saturating_mul(Count a, Count b) {
  Count out;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

Count saturating_add(Count a, Count b) {
  Count out;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

}  // namespace

SearchBudget::SearchBudget(std::uint64_t max_nodes, std::chrono::milliseconds max_time)
    : max_nodes_(max_nodes), deadline_(Clock::now() + max_time) {}

bool SearchBudget::charge(std::uint64_t nodes) {
  if (exhausted()) return false;
  std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
  if (total > max_nodes_ || Clock::now() > deadline_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

ClassSearch::ClassSearch(std::size_t alphabet_size, const ParikhMatrix& target)
    : s_(alphabet_size),
      target_(s_ * s_, 0),
      counts_(s_ * s_, 0),
      remaining_(s_, 0) {
  if (target.rows() != static_cast<Eigen::Index>(s_ + 1) || !is_unit_upper_triangular(target)) {
    throw DomainError("target is not a Parikh matrix shape for this alphabet");
  }
  for (std::size_t i = 0; i < s_; ++i) {
    for (std::size_t j = i; j < s_; ++j) {
      target_[at(i, j)] = target(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1));
    }
    remaining_[i] = target_[at(i, i)];
    length_ = checked_add<std::size_t>(length_, remaining_[i]);
  }
}

void ClassSearch::push(Letter q) {
  counts_[at(q, q)] += 1;
  for (std::size_t i = 0; i < q; ++i) counts_[at(i, q)] += counts_[at(i, q - 1)];
  --remaining_[q];
  word_.push_back(q);
}

void ClassSearch::pop(Letter q) {
  word_.pop_back();
  ++remaining_[q];
  for (std::size_t i = 0; i < q; ++i) counts_[at(i, q)] -= counts_[at(i, q - 1)];
  counts_[at(q, q)] -= 1;
}

bool ClassSearch::feasible() const noexcept {
  for (std::size_t i = 0; i < s_; ++i) {
    for (std::size_t j = i + 1; j < s_; ++j) {
      const Count target = target_[at(i, j)];
      const Count current = counts_[at(i, j)];
      if (current > target) return false;
      // Descending completion: only the single-letter suffix term survives.
      Count low = saturating_add(current, saturating_mul(counts_[at(i, j - 1)], remaining_[j]));
      if (low > target) return false;
      // Ascending completion: every suffix a_{k+1}..a_j reaches the product of
      // its remaining multiplicities.
      Count high = current;
      Count suffix = 1;
      for (std::size_t k = j; k-- > i;) {
        suffix = saturating_mul(suffix, remaining_[k + 1]);
        high = saturating_add(high, saturating_mul(counts_[at(i, k)], suffix));
      }
      // The k = i-1 term: the whole pattern drawn from the remaining letters.
      suffix = saturating_mul(suffix, remaining_[i]);
      high = saturating_add(high, suffix);
      if (high < target) return false;
    }
  }
  return true;
}

bool ClassSearch::run(std::span<const Letter> prefix, const Options& options, SearchBudget& budget,
                      std::vector<std::vector<Letter>>& out) {
  options_ = &options;
  budget_ = &budget;
  out_ = &out;
  aborted_ = false;
  done_ = out.size() >= options.max_members;
  nodes_ = 0;
  uncharged_ = 0;

  bool tight = !options.upper_limit.empty();
  std::size_t pushed = 0;
  bool ok = prefix.size() <= length_;
  for (std::size_t k = 0; ok && k < prefix.size(); ++k) {
    Letter q = prefix[k];
    if (q >= s_ || remaining_[q] == 0) {
      ok = false;
      break;
    }
    if (tight) {
      if (q > options.upper_limit[k]) ok = false;
      tight = q == options.upper_limit[k];
    }
    push(q);
    ++pushed;
    ok = ok && feasible();
  }
  if (ok && !done_) descend(prefix.size(), tight);
  while (pushed-- > 0) pop(word_.back());

  if (!aborted_ && uncharged_ > 0) aborted_ = !budget.charge(uncharged_);
  options_ = nullptr;
  budget_ = nullptr;
  out_ = nullptr;
  return !aborted_;
}

bool ClassSearch::descend(std::size_t depth, bool tight) {
  ++nodes_;
  if (++uncharged_ >= kChargeBatch) {
    if (!budget_->charge(uncharged_)) aborted_ = true;
    uncharged_ = 0;
  }
  if (aborted_) return false;
  if (depth == length_) {
    out_->push_back(word_);
    if (out_->size() >= options_->max_members) done_ = true;
    return !done_;
  }
  const Letter ceiling =
      tight ? options_->upper_limit[depth] : static_cast<Letter>(s_ - 1);
  for (Letter q = 0; q <= ceiling; ++q) {
    if (remaining_[q] == 0) continue;
    push(q);
    if (feasible() && !descend(depth + 1, tight && q == ceiling)) {
      pop(q);
      return false;
    }
    pop(q);
  }
  return true;
}

}  // namespace parikh
