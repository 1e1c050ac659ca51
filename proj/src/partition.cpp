#include "unispec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "unispec/errors.hpp"

namespace unispec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw_invalid("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw_invalid("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw_invalid("partition must be written as [a,b,...], got '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw_invalid("malformed partition part '" + std::string(item) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw_invalid("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::conj_part(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int v : parts_) {
    if (v < j) break;
    ++count;
  }
  return count;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  cols.reserve(lambda.largest());
  for (int j = 1; j <= lambda.largest(); ++j) cols.push_back(lambda.conj_part(j));
  return Partition(std::move(cols));
}

long n_stat(const Partition& lambda) {
  long out = 0;
  for (int i = 1; i <= lambda.length(); ++i) out += static_cast<long>(i - 1) * lambda.part(i);
  return out;
}

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> out;
  for (int v : lambda.parts()) ++out[v];
  return out;
}

long conj_square_sum(const Partition& lambda) {
  long out = 0;
  for (int j = 1; j <= lambda.largest(); ++j) {
    const long c = lambda.conj_part(j);
    out += c * c;
  }
  return out;
}

long conj_prefix_sum(const Partition& lambda, long k) {
  long out = 0;
  const long stop = std::min<long>(k, lambda.largest());
  for (long j = 1; j <= stop; ++j) out += lambda.conj_part(static_cast<int>(j));
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
  if (n < 0) throw_invalid("cannot enumerate partitions of a negative integer");
  if (n > bound)
    throw_bound("partition enumeration of n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& row : rows_) {
    if (row.empty()) throw_invalid("tableau rows must be nonempty");
    lengths.push_back(static_cast<int>(row.size()));
  }
  shape_ = Partition(lengths);  // validates the shape
  const int n = shape_.size();
  positions_.assign(n, {0, 0});
  std::vector<bool> seen(n + 1, false);
  for (int r = 0; r < shape_.length(); ++r) {
    for (int c = 0; c < lengths[r]; ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[v]) throw_invalid("tableau entries must be 1..n, each exactly once");
      seen[v] = true;
      positions_[v - 1] = {r + 1, c + 1};
      if (c > 0 && rows_[r][c - 1] >= v) throw_invalid("tableau rows must strictly increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw_invalid("tableau columns must strictly increase");
    }
  }
}

std::pair<int, int> StandardTableau::position(int j) const {
  if (j < 1 || j > size()) throw_invalid("tableau entry " + std::to_string(j) + " out of range");
  return positions_[j - 1];
}

Partition StandardTableau::subshape(int j) const {
  if (j < 0 || j > size()) throw_invalid("subtableau index " + std::to_string(j) + " out of range");
  std::vector<int> lengths;
  for (const auto& row : rows_) {
    const auto len = std::count_if(row.begin(), row.end(), [j](int v) { return v <= j; });
    if (len == 0) break;
    lengths.push_back(static_cast<int>(len));
  }
  return Partition(std::move(lengths));
}

namespace {

void syt_rec(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
  if (next > shape.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    const int len = static_cast<int>(rows[r].size());
    if (len >= shape.part(r + 1)) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(next);
    syt_rec(shape, next + 1, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int bound) {
  if (shape.size() > bound)
    throw_bound("tableau enumeration of size " + std::to_string(shape.size()) + " exceeds bound " +
                std::to_string(bound));
  std::vector<StandardTableau> out;
  if (shape.empty()) return {StandardTableau({})};
  std::vector<std::vector<int>> rows(shape.length());
  syt_rec(shape, 1, rows, out);
  return out;
}

int m_star_of_step(const Partition& grown, int column) {
  const auto parts = grown.parts();
  return static_cast<int>(std::count(parts.begin(), parts.end(), column));
}

int m_star(const StandardTableau& tableau, int j) {
  const auto [row, col] = tableau.position(j);
  (void)row;
  return m_star_of_step(tableau.subshape(j), col);
}

Partition add_to_column(const Partition& lambda, int column) {
  if (column < 1) throw_invalid("column index must be >= 1");
  if (column > 1 && lambda.conj_part(column) >= lambda.conj_part(column - 1))
    throw_invalid("adding to column " + std::to_string(column) + " of " + lambda.to_string() +
                  " does not give a partition");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  const int row = lambda.conj_part(column);  // 0-based index of the receiving row
  if (row == static_cast<int>(parts.size()))
    parts.push_back(1);
  else
    ++parts[row];
  return Partition(std::move(parts));
}

}  // namespace unispec
