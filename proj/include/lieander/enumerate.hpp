#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lieander/core.hpp"

namespace lieander {

/// Exact binomial coefficient; throws std::overflow_error past int64 range.
std::int64_t binomial(int n, int r);

/// Streams the compositions of n with exactly k parts in lexicographic
/// order into a caller-owned buffer. Yields nothing when k > n.
class CompositionEnumerator {
public:
  CompositionEnumerator(int n, int k);

  // Fills `parts` with the next composition; false once exhausted.
  bool next(std::vector<int>& parts);

private:
  int n_;
  int k_;
  bool started_ = false;
  bool done_;
  std::vector<int> current_;
};

/// Range over the compositions of n with exactly k parts, lexicographic.
class CompositionRange {
public:
  CompositionRange(int n, int k);

  struct sentinel {};

  class iterator {
  public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(int n, int k);
    const Composition& operator*() const { return *current_; }
    const Composition* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(sentinel) const { return !current_.has_value(); }

  private:
    void advance();
    CompositionEnumerator enum_;
    std::vector<int> buffer_;
    std::optional<Composition> current_;
  };

  iterator begin() const { return iterator(n_, k_); }
  sentinel end() const { return {}; }

private:
  int n_;
  int k_;
};

CompositionRange compositions_of(int n, int k);

/// One exact count: the number of (k_plus,k_minus)-lieanders with sum n.
struct CountRecord {
  int k_plus;
  int k_minus;
  int n;
  std::int64_t count;

  bool operator==(const CountRecord&) const = default;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingRecord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keyed set of count records with consistency checks on insert.
class CountTable {
public:
  /// Throws CacheError if a record for the same key (or the swapped key)
  /// disagrees, or if the count is outside [0, pair bound].
  void insert(const CountRecord& rec);

  std::optional<std::int64_t> lookup(int k_plus, int k_minus, int n) const;
  std::size_t size() const { return records_.size(); }
  std::vector<CountRecord> records() const;

  bool operator==(const CountTable&) const = default;

  /// CSV cache: UTF-8, header "kplus,kminus,n,count", LF line endings.
  /// load_csv throws CacheError on malformed content or disagreeing
  /// duplicates; append_csv creates the file (with header) when absent.
  static CountTable load_csv(const std::filesystem::path& file);
  static void append_csv(const std::filesystem::path& file,
                         std::span<const CountRecord> records);

private:
  std::map<std::array<int, 3>, std::int64_t> records_;
};

/// Exact count over all composition pairs with the given lengths and sum.
/// workers <= 0 picks the hardware concurrency. Deterministic.
CountRecord count_lieanders(int k_plus, int k_minus, int n, int workers = 0);

/// Records for every n in [1, n_max]. When `cache` is given, existing
/// records are reused and newly computed ones are inserted into it (and
/// appended to `fresh` when non-null).
CountTable count_range(int k_plus, int k_minus, int n_max, int workers = 0,
                       CountTable* cache = nullptr,
                       std::vector<CountRecord>* fresh = nullptr);

/// Sum of counts for all n <= x; throws MissingRecord when the table does
/// not cover [1, x] for the key.
std::int64_t cumulative_sum(const CountTable& table, int k_plus, int k_minus, int x);

}  // namespace lieander
