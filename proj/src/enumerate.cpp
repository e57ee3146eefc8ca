#include "lieander/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace lieander {

std::int64_t binomial(int n, int r) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    // Divisibility holds at every step: acc is C(n-r+i, i) after step i.
    acc = acc * static_cast<unsigned int>(n - r + i) / static_cast<unsigned int>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("binomial: value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(acc);
}

CompositionEnumerator::CompositionEnumerator(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("compositions require n >= 1 and k >= 1");
  done_ = k > n;
}

bool CompositionEnumerator::next(std::vector<int>& parts) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_.assign(k_, 1);
    current_.back() = n_ - k_ + 1;
    parts = current_;
    return true;
  }

  // Lexicographic successor: find the rightmost position whose suffix can
  // donate one unit while keeping every later part >= 1, then reset the
  // suffix to its minimal form.
  std::int64_t suffix = current_[k_ - 1];
  int i = k_ - 2;
  for (; i >= 0; --i) {
    if (suffix >= k_ - i) break;
    suffix += current_[i];
  }
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++current_[i];
  for (int j = i + 1; j < k_ - 1; ++j) current_[j] = 1;
  current_[k_ - 1] = static_cast<int>(suffix - 1 - (k_ - 2 - i));
  parts = current_;
  return true;
}

CompositionRange::CompositionRange(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("compositions require n >= 1 and k >= 1");
}

CompositionRange::iterator::iterator(int n, int k) : enum_(n, k) { advance(); }

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  advance();
  return *this;
}

void CompositionRange::iterator::advance() {
  if (enum_.next(buffer_))
    current_.emplace(buffer_);
  else
    current_.reset();
}

CompositionRange compositions_of(int n, int k) { return CompositionRange(n, k); }

namespace {

// Upper bound on the count, when representable: total number of pairs.
std::optional<std::int64_t> pair_bound(int k_plus, int k_minus, int n) {
  try {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(binomial(n - 1, k_plus - 1)) *
        static_cast<unsigned __int128>(binomial(n - 1, k_minus - 1));
    if (prod > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      return std::nullopt;
    return static_cast<std::int64_t>(prod);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

void validate_record(const CountRecord& rec) {
  if (rec.k_plus < 1 || rec.k_minus < 1 || rec.n < 1)
    throw CacheError("count record requires positive k_plus, k_minus, n");
  if (rec.count < 0) throw CacheError("count record must be non-negative");
  if (rec.n < std::max(rec.k_plus, rec.k_minus) && rec.count != 0)
    throw CacheError("count must be 0 when n < max(k_plus, k_minus)");
  if (const auto bound = pair_bound(rec.k_plus, rec.k_minus, rec.n);
      bound && rec.count > *bound)
    throw CacheError("count exceeds the total number of composition pairs");
}

}  // namespace

void CountTable::insert(const CountRecord& rec) {
  validate_record(rec);
  const std::array<int, 3> key{rec.k_plus, rec.k_minus, rec.n};
  if (const auto it = records_.find(key); it != records_.end()) {
    if (it->second != rec.count)
      throw CacheError("conflicting counts for key (" + std::to_string(rec.k_plus) +
                       "," + std::to_string(rec.k_minus) + "," + std::to_string(rec.n) +
                       "): " + std::to_string(it->second) + " vs " +
                       std::to_string(rec.count));
    return;
  }
  const std::array<int, 3> swapped{rec.k_minus, rec.k_plus, rec.n};
  if (const auto it = records_.find(swapped);
      it != records_.end() && it->second != rec.count)
    throw CacheError("count for key (" + std::to_string(rec.k_plus) + "," +
                     std::to_string(rec.k_minus) + "," + std::to_string(rec.n) +
                     ") breaks the top/bottom symmetry");
  records_.emplace(key, rec.count);
}

std::optional<std::int64_t> CountTable::lookup(int k_plus, int k_minus, int n) const {
  if (const auto it = records_.find({k_plus, k_minus, n}); it != records_.end())
    return it->second;
  if (const auto it = records_.find({k_minus, k_plus, n}); it != records_.end())
    return it->second;
  return std::nullopt;
}

std::vector<CountRecord> CountTable::records() const {
  std::vector<CountRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, count] : records_)
    out.push_back({key[0], key[1], key[2], count});
  return out;
}

namespace {

constexpr std::string_view kCsvHeader = "kplus,kminus,n,count";

std::int64_t parse_csv_field(std::string_view token, const std::string& context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw CacheError(context + ": bad integer field '" + std::string(token) + "'");
  return value;
}

int parse_csv_int(std::string_view token, const std::string& context) {
  const std::int64_t value = parse_csv_field(token, context);
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
    throw CacheError(context + ": field out of range");
  return static_cast<int>(value);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

CountTable CountTable::load_csv(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file " + file.string());

  std::string line;
  if (!std::getline(in, line)) throw CacheError("cache file " + file.string() + " is empty");
  strip_cr(line);
  if (line != kCsvHeader)
    throw CacheError("cache file " + file.string() + ": expected header '" +
                     std::string(kCsvHeader) + "'");

  CountTable table;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    const std::string context = file.string() + ":" + std::to_string(lineno);

    std::array<std::string_view, 4> fields;
    std::string_view rest = line;
    for (std::size_t f = 0; f < 4; ++f) {
      const std::size_t comma = rest.find(',');
      if ((f < 3) != (comma != std::string_view::npos))
        throw CacheError(context + ": expected 4 comma-separated fields");
      fields[f] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }

    try {
      table.insert({parse_csv_int(fields[0], context), parse_csv_int(fields[1], context),
                    parse_csv_int(fields[2], context), parse_csv_field(fields[3], context)});
    } catch (const CacheError& e) {
      throw CacheError(context + ": " + e.what());
    }
  }
  if (in.bad()) throw CacheError("I/O error reading " + file.string());
  return table;
}

void CountTable::append_csv(const std::filesystem::path& file,
                            std::span<const CountRecord> records) {
  std::error_code ec;
  const bool need_header = !std::filesystem::exists(file, ec) ||
                           std::filesystem::file_size(file, ec) == 0;
  std::ofstream out(file, std::ios::app | std::ios::binary);
  if (!out) throw CacheError("cannot open cache file " + file.string() + " for append");
  if (need_header) out << kCsvHeader << '\n';
  for (const CountRecord& rec : records)
    out << rec.k_plus << ',' << rec.k_minus << ',' << rec.n << ',' << rec.count << '\n';
  out.flush();
  if (!out) throw CacheError("I/O error writing " + file.string());
}

namespace {

// Counts connected pairs with the tops drawn from a shared enumerator.
// Work is partitioned by top composition; each worker accumulates locally
// and the total is a commutative sum, so the result is schedule-independent.
std::int64_t count_worker(CompositionEnumerator& tops, std::mutex& mtx, int k_minus, int n) {
  std::vector<int> top_parts;
  std::vector<int> bottom_parts;
  std::vector<std::int32_t> top_map;
  std::vector<std::int32_t> bottom_map;
  std::int64_t local = 0;
  for (;;) {
    {
      const std::lock_guard<std::mutex> lock(mtx);
      if (!tops.next(top_parts)) break;
    }
    detail::build_involution_into(top_parts, top_map);
    CompositionEnumerator bottoms(n, k_minus);
    while (bottoms.next(bottom_parts)) {
      detail::build_involution_into(bottom_parts, bottom_map);
      if (detail::alternating_walk_connected(top_map, bottom_map)) ++local;
    }
  }
  return local;
}

}  // namespace

CountRecord count_lieanders(int k_plus, int k_minus, int n, int workers) {
  if (k_plus < 1 || k_minus < 1 || n < 1)
    throw std::invalid_argument("count_lieanders requires k_plus, k_minus, n >= 1");
  CountRecord rec{k_plus, k_minus, n, 0};
  if (n < k_plus || n < k_minus) return rec;

  int worker_count = workers;
  if (worker_count <= 0)
    worker_count = std::max(1u, std::thread::hardware_concurrency());

  CompositionEnumerator tops(n, k_plus);
  std::mutex mtx;
  if (worker_count == 1) {
    rec.count = count_worker(tops, mtx, k_minus, n);
    return rec;
  }

  std::vector<std::int64_t> partial(worker_count, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w)
      pool.emplace_back([&, w] { partial[w] = count_worker(tops, mtx, k_minus, n); });
  }
  for (std::int64_t c : partial) rec.count += c;
  return rec;
}

CountTable count_range(int k_plus, int k_minus, int n_max, int workers,
                       CountTable* cache, std::vector<CountRecord>* fresh) {
  if (n_max < 1) throw std::invalid_argument("count_range requires n_max >= 1");
  CountTable out;
  for (int n = 1; n <= n_max; ++n) {
    CountRecord rec{k_plus, k_minus, n, 0};
    const auto cached = cache ? cache->lookup(k_plus, k_minus, n) : std::nullopt;
    if (cached) {
      rec.count = *cached;
    } else {
      rec = count_lieanders(k_plus, k_minus, n, workers);
      if (cache) cache->insert(rec);
      if (fresh) fresh->push_back(rec);
    }
    out.insert(rec);
  }
  return out;
}

std::int64_t cumulative_sum(const CountTable& table, int k_plus, int k_minus, int x) {
  std::int64_t sum = 0;
  for (int n = 1; n <= x; ++n) {
    const auto value = table.lookup(k_plus, k_minus, n);
    if (!value)
      throw MissingRecord("no count for (" + std::to_string(k_plus) + "," +
                          std::to_string(k_minus) + "," + std::to_string(n) + ")");
    sum += *value;
  }
  return sum;
}

}  // namespace lieander
