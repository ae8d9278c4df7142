#include "chg/search.hpp"

#include <unordered_map>

#include "chg/error.hpp"

namespace chg {

namespace {

// Incremental translation-class counts for subsets of [0, n) grown in
// ascending order. A class is indexed by its pattern {0, l_1, ..., l_{h-1}}
// read as a base-n number.
class ClassCounter {
 public:
  ClassCounter(std::int64_t n, int h, int g) : n_(n), h_(h), g_(g) {
    std::uint64_t slots = 1;
    dense_ = true;
    for (int i = 1; i < h; ++i) {
      if (slots > (std::uint64_t{1} << 26) / static_cast<std::uint64_t>(n)) {
        dense_ = false;
        break;
      }
      slots *= static_cast<std::uint64_t>(n);
    }
    if (dense_) counts_.assign(slots, 0);
  }

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Key>& members() const noexcept { return members_; }

  // Adds a (larger than every member) unless some class would reach g.
  bool try_add(Key a) {
    touched_.push_back({});
    auto& touched = touched_.back();
    const auto need = static_cast<std::size_t>(h_ - 1);
    bool ok = true;
    if (members_.size() >= need) {
      idx_.resize(need);
      for (std::size_t i = 0; i < need; ++i) idx_[i] = i;
      while (ok) {
        const Key lo = members_[idx_[0]];
        std::uint64_t code = 0;
        for (std::size_t i = 1; i < need; ++i) {
          code = code * static_cast<std::uint64_t>(n_) +
                 static_cast<std::uint64_t>(members_[idx_[i]] - lo);
        }
        code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(a - lo);
        touched.push_back(code);
        if (++slot(code) >= g_) ok = false;
        if (!next_combination(members_.size())) break;
      }
    }
    if (!ok) {
      undo(touched);
      touched_.pop_back();
      return false;
    }
    members_.push_back(a);
    return true;
  }

  void pop() {
    undo(touched_.back());
    touched_.pop_back();
    members_.pop_back();
  }

 private:
  int& slot(std::uint64_t code) {
    return dense_ ? counts_[code] : sparse_[code];
  }

  void undo(const std::vector<std::uint64_t>& touched) {
    for (auto code : touched) --slot(code);
  }

  bool next_combination(std::size_t m) {
    const auto k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx_[i - 1];
    for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
    return true;
  }

  std::int64_t n_;
  int h_;
  int g_;
  bool dense_ = true;
  std::vector<int> counts_;
  std::unordered_map<std::uint64_t, int> sparse_;
  std::vector<Key> members_;
  std::vector<std::vector<std::uint64_t>> touched_;
  std::vector<std::size_t> idx_;
};

void require_params(std::int64_t n, int h, int g) {
  if (h < 2 || g < h) throw PreconditionError("search needs g >= h >= 2");
  if (n < 1) throw PreconditionError("search needs n >= 1");
  if (n > 4096) throw PreconditionError("n is beyond the exact-search range");
}

class BranchAndBound {
 public:
  BranchAndBound(std::int64_t n, int h, int g, std::uint64_t node_cap)
      : n_(n), counter_(n, h, g), node_cap_(node_cap) {}

  void run() {
    // Any C_h[g]-set translates down to one containing the first element,
    // and that translate is lexicographically smaller.
    counter_.try_add(0);
    record();
    descend(1);
  }

  const std::vector<Key>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool complete() const noexcept { return !aborted_; }

 private:
  void record() {
    if (counter_.size() > best_.size()) best_ = counter_.members();
  }

  void descend(Key from) {
    if (aborted_) return;
    if (nodes_ >= node_cap_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    for (Key a = from; a < n_; ++a) {
      if (counter_.size() + static_cast<std::size_t>(n_ - a) <= best_.size()) return;
      if (!counter_.try_add(a)) continue;
      record();
      descend(a + 1);
      counter_.pop();
      if (aborted_) return;
    }
  }

  std::int64_t n_;
  ClassCounter counter_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Key> best_;
};

}  // namespace

SearchResult max_chg_exact(std::int64_t n, int h, int g, std::uint64_t node_cap) {
  require_params(n, h, g);
  BranchAndBound bb(n, h, g, node_cap);
  bb.run();
  SearchResult r;
  r.n = n;
  r.h = h;
  r.g = g;
  r.best_size = bb.best().size();
  r.best_set = GSet::from_keys(GroupDescriptor::interval(n), bb.best());
  r.nodes_explored = bb.nodes();
  r.optimal = bb.complete();
  return r;
}

GSet greedy_chg(std::int64_t n, int h, int g) {
  require_params(n, h, g);
  ClassCounter counter(n, h, g);
  for (Key a = 0; a < n; ++a) counter.try_add(a);
  return GSet::from_keys(GroupDescriptor::interval(n), counter.members());
}

std::vector<TableRow> max_table(std::int64_t n_max, int h, int g,
                                std::uint64_t node_cap) {
  require_params(n_max, h, g);
  std::vector<TableRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    auto r = max_chg_exact(n, h, g, node_cap);
    if (!rows.empty() && r.optimal && rows.back().optimal) {
      const auto prev = rows.back().best_size;
      if (r.best_size < prev || r.best_size > prev + 1) {
        throw InternalError("maximum sizes must grow by 0 or 1 with n");
      }
    }
    rows.push_back({n, r.best_size, r.optimal, r.nodes_explored});
  }
  return rows;
}

}  // namespace chg
