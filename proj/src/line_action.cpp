#include "unispec/line_action.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "unispec/errors.hpp"
#include "unispec/limits.hpp"

namespace unispec {

namespace {

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw_invariant("no inverse mod p");
}

void check_matrix_params(int n, int p) {
  require_prime(p);
  if (p > MatrixFp::kMaxPrime) throw_bound("matrix oracles support p <= 7");
  if (n < 1 || n > MatrixFp::kMaxDim) throw_bound("matrix oracles support 1 <= n <= 6");
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap) throw_bound(std::string(what) + " exceeds enumeration bound " + std::to_string(cap));
  }
  return out;
}

// Vectors of F_p^n are encoded as integers with coordinate i as base-p digit i.
std::vector<int> decode(std::uint64_t code, int n, int p) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<int>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  return v;
}

std::uint64_t encode(const std::vector<int>& v, int p) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * static_cast<std::uint64_t>(p) + *it;
  return code;
}

// Scale so that the first nonzero coordinate is 1.
std::vector<int> normalize_line(std::vector<int> v, int p) {
  const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (lead == v.end()) throw_invariant("zero vector has no line");
  const int inv = inverse_mod(*lead, p);
  for (int& x : v) x = (x * inv) % p;
  return v;
}

// Canonical line representatives and a code -> line index table.
struct LineTable {
  std::vector<std::vector<int>> reps;
  std::vector<std::int64_t> index_of_code;
};

LineTable build_lines(int n, int p) {
  const std::uint64_t lines = projective_line_count(n, p);
  if (lines > limits().max_lines) throw_bound("line enumeration exceeds " + std::to_string(limits().max_lines));
  const std::uint64_t total = checked_pow(p, n, limits().max_lines * static_cast<std::uint64_t>(p), "vectors");
  LineTable t;
  t.index_of_code.assign(total, -1);
  for (std::uint64_t code = 1; code < total; ++code) {
    auto v = decode(code, n, p);
    if (normalize_line(v, p) != v) continue;
    t.index_of_code[code] = static_cast<std::int64_t>(t.reps.size());
    t.reps.push_back(std::move(v));
  }
  return t;
}

std::vector<std::size_t> line_permutation(const MatrixFp& m, const LineTable& t) {
  std::vector<std::size_t> perm(t.reps.size());
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    const auto image = normalize_line(m.apply(t.reps[i]), m.p());
    perm[i] = static_cast<std::size_t>(t.index_of_code[encode(image, m.p())]);
  }
  return perm;
}

}  // namespace

MatrixFp::MatrixFp(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {
  check_matrix_params(n, p);
}

MatrixFp MatrixFp::identity(int n, int p) {
  MatrixFp m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFp MatrixFp::parse(std::string_view text, int p) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    std::string_view row = text.substr(start, end - start);
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      const auto comma = std::min(row.find(',', pos), row.size());
      std::string item(row.substr(pos, comma - pos));
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
        throw_invalid("malformed matrix entry '" + item + "'");
      entries.push_back(std::stoi(item));
      pos = comma + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  const int n = static_cast<int>(rows.size());
  MatrixFp m(n, p);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw_invalid("matrix must be square");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void MatrixFp::set(int i, int j, int value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw_invalid("matrix index out of range");
  a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(((value % p_) + p_) % p_);
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw_invalid("matrix shape or field mismatch");
  MatrixFp out(n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
      out.a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(s % p_);
    }
  return out;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw_invalid("matrix shape or field mismatch");
  MatrixFp out(n_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = static_cast<std::uint8_t>((a_[i] + p_ - o.a_[i]) % p_);
  return out;
}

MatrixFp MatrixFp::power(std::uint64_t k) const {
  MatrixFp result = identity(n_, p_);
  MatrixFp base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

int MatrixFp::rank() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = inverse_mod(rows[rank][col], p_);
    for (int& x : rows[rank]) x = (x * inv) % p_;
    for (int r = 0; r < n_; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int c = 0; c < n_; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p_ + p_) % p_;
    }
    ++rank;
  }
  return rank;
}

bool MatrixFp::is_unipotent() const {
  const MatrixFp nil = *this - identity(n_, p_);
  return nil.power(static_cast<std::uint64_t>(n_)) == MatrixFp(n_, p_);
}

std::vector<int> MatrixFp::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != n_) throw_invalid("vector length mismatch");
  std::vector<int> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
    out[i] = s % p_;
  }
  return out;
}

std::string MatrixFp::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ';';
    for (int j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += std::to_string(at(i, j));
    }
  }
  return out;
}

BigInt LineOrbitProfile::total_lines() const {
  BigInt sum = 0;
  for (const auto& [r, count] : lines) sum += count;
  return sum;
}

BigInt LineOrbitProfile::lines_at(int r) const {
  const auto it = lines.find(r);
  return it == lines.end() ? BigInt(0) : it->second;
}

BigInt LineOrbitProfile::orbits(int r) const {
  return exact_div(lines_at(r), ipow(p, static_cast<unsigned long>(r)), "orbit count");
}

LineOrbitProfile orbit_profile_formula(const Partition& lambda, int p) {
  require_modulus(p);
  LineOrbitProfile profile;
  profile.p = p;
  const BigInt pm1 = p - 1;
  const BigInt fixed = exact_div(ipow(p, conj_prefix_sum(lambda, 1)) - 1, pm1, "fixed lines");
  if (fixed != 0) profile.lines[0] = fixed;
  // Orbit sizes p^r with p^{r-1} < lambda_1 can occur; beyond that the prefix sums saturate.
  BigInt prev_index = 1;  // p^{r-1}
  for (int r = 1; prev_index < lambda.largest(); ++r) {
    const BigInt index = prev_index * p;
    const long hi = index.fits_slong_p() ? index.get_si() : lambda.largest();
    const long lo = prev_index.get_si();
    const BigInt count =
        exact_div(ipow(p, conj_prefix_sum(lambda, hi)) - ipow(p, conj_prefix_sum(lambda, lo)), pm1, "orbit lines");
    if (count != 0) profile.lines[r] = count;
    prev_index = index;
  }
  return profile;
}

MatrixFp jordan_matrix(const Partition& lambda, int p) {
  const int n = lambda.size();
  MatrixFp m = MatrixFp::identity(n, p);
  int offset = 0;
  for (int block : lambda.parts()) {
    for (int i = 0; i + 1 < block; ++i) m.set(offset + i, offset + i + 1, 1);
    offset += block;
  }
  return m;
}

Partition jordan_type(const MatrixFp& m) {
  if (!m.is_unipotent()) throw_invalid("jordan_type needs a unipotent matrix");
  const int n = m.n();
  const MatrixFp nil = m - MatrixFp::identity(n, m.p());
  std::vector<int> ranks(n + 2, 0);
  ranks[0] = n;
  MatrixFp acc = nil;
  for (int k = 1; k <= n; ++k) {
    ranks[k] = acc.rank();
    acc = acc * nil;
  }
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) {
    const int count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    if (count < 0) throw_invariant("negative Jordan block count");
    parts.insert(parts.end(), count, k);
  }
  return Partition(std::move(parts));
}

std::uint64_t projective_line_count(int n, int p) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  return (total - 1) / static_cast<std::uint64_t>(p - 1);
}

LineOrbitProfile brute_force_line_orbits(const MatrixFp& m) {
  const LineTable table = build_lines(m.n(), m.p());
  const auto perm = line_permutation(m, table);
  std::vector<bool> visited(perm.size(), false);
  LineOrbitProfile profile;
  profile.p = m.p();
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t size = 0;
    for (std::size_t x = start; !visited[x]; x = perm[x]) {
      visited[x] = true;
      ++size;
    }
    int r = 0;
    std::uint64_t rest = size;
    while (rest % static_cast<std::uint64_t>(m.p()) == 0) {
      rest /= static_cast<std::uint64_t>(m.p());
      ++r;
    }
    if (rest != 1) throw_invariant("orbit of size " + std::to_string(size) + " is not a power of p");
    profile.lines[r] += size;
  }
  return profile;
}

std::uint64_t count_fixed_lines(const MatrixFp& m) {
  const LineTable table = build_lines(m.n(), m.p());
  const auto perm = line_permutation(m, table);
  std::uint64_t fixed = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) fixed += (perm[i] == i);
  return fixed;
}

std::uint64_t for_each_triangular(int n, int p, const MatrixVisitor& visit) {
  check_matrix_params(n, p);
  const int free_entries = n * (n - 1) / 2;
  const std::uint64_t count = checked_pow(p, free_entries, limits().max_triangular_matrices, "T(n,p)");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  for (std::uint64_t code = 0; code < count; ++code) {
    MatrixFp m = MatrixFp::identity(n, p);
    std::uint64_t c = code;
    for (const auto& [i, j] : slots) {
      m.set(i, j, static_cast<int>(c % static_cast<std::uint64_t>(p)));
      c /= static_cast<std::uint64_t>(p);
    }
    visit(m);
  }
  return count;
}

std::uint64_t for_each_unipotent_gl(int n, int p, const MatrixVisitor& visit) {
  check_matrix_params(n, p);
  const std::uint64_t candidates = checked_pow(p, static_cast<std::uint64_t>(n * n), limits().max_gl_candidates,
                                               "GL(n,p) candidate scan");
  const MatrixFp id = MatrixFp::identity(n, p);
  const MatrixFp zero(n, p);
  std::uint64_t found = 0;
  MatrixFp nil(n, p);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        nil.set(i, j, static_cast<int>(c % static_cast<std::uint64_t>(p)));
        c /= static_cast<std::uint64_t>(p);
      }
    if (nil.power(static_cast<std::uint64_t>(n)) != zero) continue;
    MatrixFp m = id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, id.at(i, j) + nil.at(i, j));
    visit(m);
    ++found;
  }
  return found;
}

PartitionMap<std::uint64_t> type_census(Model model, int n, int p) {
  PartitionMap<std::uint64_t> census;
  auto tally = [&census](const MatrixFp& m) { ++census[jordan_type(m)]; };
  if (model == Model::GlUnipotent)
    for_each_unipotent_gl(n, p, tally);
  else
    for_each_triangular(n, p, tally);
  return census;
}

namespace {

constexpr std::size_t kFlagVectors = 128;
using VectorSet = std::bitset<kFlagVectors>;

struct FlagSpace {
  int n;
  int p;
  std::uint64_t size;
  std::vector<std::uint64_t> image;          // code -> code of M v
  std::vector<std::vector<int>> coords;      // code -> coordinates
};

std::uint64_t add_codes(const FlagSpace& s, std::uint64_t a, std::uint64_t b, int scalar) {
  std::vector<int> v(s.n);
  for (int i = 0; i < s.n; ++i) v[i] = (s.coords[a][i] + scalar * s.coords[b][i]) % s.p;
  return encode(v, s.p);
}

VectorSet extend(const FlagSpace& s, const VectorSet& sub, std::uint64_t v) {
  VectorSet out;
  for (std::uint64_t u = 0; u < s.size; ++u) {
    if (!sub.test(u)) continue;
    for (int c = 0; c < s.p; ++c) out.set(add_codes(s, u, v, c));
  }
  return out;
}

bool invariant(const FlagSpace& s, const VectorSet& sub) {
  for (std::uint64_t u = 0; u < s.size; ++u)
    if (sub.test(u) && !sub.test(s.image[u])) return false;
  return true;
}

struct BitsetLess {
  bool operator()(const VectorSet& a, const VectorSet& b) const {
    for (std::size_t i = kFlagVectors; i-- > 0;)
      if (a[i] != b[i]) return b[i];
    return false;
  }
};

// Walks every complete flag extending `chain`; counts those whose members are all invariant.
void walk_flags(const FlagSpace& s, std::vector<VectorSet>& chain, BigInt& fixed, std::uint64_t& total) {
  if (static_cast<int>(chain.size()) == s.n + 1) {
    ++total;
    if (std::all_of(chain.begin(), chain.end(), [&s](const VectorSet& v) { return invariant(s, v); })) ++fixed;
    return;
  }
  std::set<VectorSet, BitsetLess> children;
  const VectorSet& top = chain.back();
  for (std::uint64_t v = 1; v < s.size; ++v)
    if (!top.test(v)) children.insert(extend(s, top, v));
  for (const auto& child : children) {
    chain.push_back(child);
    walk_flags(s, chain, fixed, total);
    chain.pop_back();
  }
}

}  // namespace

BigInt count_fixed_flags(const MatrixFp& m) {
  if (m.n() > 4 || m.p() > 3) throw_bound("flag enumeration supports n <= 4 and p <= 3");
  FlagSpace s{m.n(), m.p(), 1, {}, {}};
  for (int i = 0; i < m.n(); ++i) s.size *= static_cast<std::uint64_t>(m.p());
  for (std::uint64_t code = 0; code < s.size; ++code) {
    s.coords.push_back(decode(code, s.n, s.p));
    s.image.push_back(encode(m.apply(s.coords.back()), s.p));
  }
  VectorSet zero;
  zero.set(0);
  std::vector<VectorSet> chain{zero};
  BigInt fixed = 0;
  std::uint64_t total = 0;
  walk_flags(s, chain, fixed, total);
  return fixed;
}

}  // namespace unispec
