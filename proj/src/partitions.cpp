#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace oti {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

void require_partition(const Partition& p) {
  require(is_partition(p), Err::BadParameters,
          "not a partition: " + partition_to_string(p));
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  require(parts.empty() || parts.back() > 0, Err::BadParameters, "negative part");
  return parts;
}

std::string partition_to_string(const Partition& p) {
  if (p.empty()) return "[]";
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

Partition parse_partition(const std::string& s) {
  if (s == "[]" || s.empty()) return {};
  Partition p;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) p.push_back(std::stoi(tok));
  require_partition(p);
  return p;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(rem - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& la) {
  require(weight(mu) == weight(la), Err::WeightMismatch,
          "dominance compares partitions of equal weight");
  int sm = 0, sl = 0;
  size_t len = std::max(mu.size(), la.size());
  for (size_t i = 0; i < len; ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sl += i < la.size() ? la[i] : 0;
    if (sm > sl) return false;
  }
  return true;
}

std::optional<Partition> subtract_row(const Partition& la, int i, int k) {
  require_partition(la);
  require(i >= 1 && i <= int(la.size()), Err::BadParameters, "row index out of range");
  if (la[i - 1] < k) return std::nullopt;
  std::vector<int> parts(la.begin(), la.end());
  parts[i - 1] -= k;
  return sorted_partition(parts);
}

int64_t power_int(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

StabilityReport stability(const Partition& la, int64_t p, int r) {
  require_partition(la);
  require(is_prime(p) && r >= 1, Err::BadParameters, "stability needs prime p and r >= 1");
  StabilityReport rep;
  rep.p = p;
  rep.r = r;
  rep.n = weight(la);
  int64_t pr = power_int(p, r);
  int64_t l1 = la.empty() ? 0 : la[0];
  int64_t l2 = la.size() > 1 ? la[1] : 0;
  rep.quasistable = l1 >= pr && l2 < pr;
  int64_t tail = rep.n - l1;
  auto stable_of = [&](int64_t first, int64_t rest, int64_t n) {
    bool ok = rest < pr;
    if (n < 3 * pr) ok = ok && 2 * first >= n + pr;
    return ok;
  };
  rep.stable = stable_of(l1, tail, rep.n);
  rep.boundary_odd = rep.n < 3 * pr && ((rep.n + pr) % 2 != 0);
  // lambda is truncated iff lambda + p^r e_1 (the only viable preimage) is
  // stable as a partition of n + p^r.
  rep.truncated = stable_of(l1 + pr, tail, rep.n + pr);
  return rep;
}

namespace {

// Backtracking SSYT count: fill the diagram cell by cell in row-major order,
// keeping rows weakly and columns strictly increasing.
int64_t kostka_rec(const Partition& mu, std::vector<std::vector<int>>& grid,
                   std::vector<int>& remaining, int row, int col) {
  if (row == int(mu.size())) return 1;
  int nrow = row, ncol = col + 1;
  if (ncol == mu[row]) {
    nrow = row + 1;
    ncol = 0;
  }
  int64_t total = 0;
  int lo = col > 0 ? grid[row][col - 1] : 1;
  int up = row > 0 && col < mu[row - 1] ? grid[row - 1][col] + 1 : 1;
  lo = std::max(lo, up);
  for (int v = lo; v <= int(remaining.size()); ++v) {
    if (!remaining[v - 1]) continue;
    grid[row][col] = v;
    --remaining[v - 1];
    total += kostka_rec(mu, grid, remaining, nrow, ncol);
    ++remaining[v - 1];
  }
  return total;
}

}  // namespace

int64_t kostka(const Partition& mu, const std::vector<int>& content) {
  require_partition(mu);
  int64_t total = 0;
  for (int c : content) {
    require(c >= 0, Err::BadParameters, "negative content");
    total += c;
  }
  require(total == weight(mu), Err::WeightMismatch, "kostka needs |mu| = |content|");
  if (mu.empty()) return 1;
  std::vector<std::vector<int>> grid(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) grid[i].assign(mu[i], 0);
  std::vector<int> remaining(content);
  return kostka_rec(mu, grid, remaining, 0, 0);
}

std::map<Partition, int64_t> specht_vector(const Partition& la) {
  require_partition(la);
  std::map<Partition, int64_t> out;
  for (const Partition& mu : all_partitions(weight(la))) {
    int64_t k = kostka(mu, la);
    if (k) out[mu] = k;
  }
  return out;
}

int64_t n_standard_tableaux(const Partition& la) {
  require_partition(la);
  int n = weight(la);
  if (n == 0) return 1;
  std::vector<int> conj(la[0], 0);
  for (int part : la)
    for (int c = 0; c < part; ++c) ++conj[c];
  __int128 num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (size_t r = 0; r < la.size(); ++r)
    for (int c = 0; c < la[r]; ++c) {
      int hook = (la[r] - c - 1) + (conj[c] - int(r) - 1) + 1;
      num /= hook;
    }
  return int64_t(num);
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la) {
  require_partition(la);
  int n = weight(la);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t(la.size());
  for (size_t i = 0; i < la.size(); ++i) t[i].assign(la[i], 0);
  std::vector<int> filled(la.size(), 0);  // boxes used per row
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(t);
      return;
    }
    for (size_t r = 0; r < la.size(); ++r) {
      int c = filled[r];
      if (c >= la[r]) continue;
      if (r > 0 && filled[r - 1] <= c) continue;  // column would not increase
      t[r][c] = v;
      ++filled[r];
      rec(v + 1);
      --filled[r];
    }
  };
  rec(1);
  return out;
}

namespace {

int64_t contingency_rec(const Partition& rows, size_t r, std::vector<int>& colrem) {
  if (r == rows.size()) {
    for (int c : colrem)
      if (c) return 0;
    return 1;
  }
  // Enumerate the r-th row: a composition of rows[r] bounded by colrem.
  std::function<int64_t(size_t, int)> place = [&](size_t j, int rem) -> int64_t {
    if (j == colrem.size()) return rem == 0 ? contingency_rec(rows, r + 1, colrem) : 0;
    int64_t total = 0;
    int hi = std::min(rem, colrem[j]);
    for (int v = 0; v <= hi; ++v) {
      colrem[j] -= v;
      total += place(j + 1, rem - v);
      colrem[j] += v;
    }
    return total;
  };
  return place(0, rows[r]);
}

}  // namespace

int64_t contingency_count(const Partition& rows, const Partition& cols) {
  require(weight(rows) == weight(cols), Err::WeightMismatch,
          "contingency_count needs equal weights");
  std::vector<int> colrem(cols.begin(), cols.end());
  return contingency_rec(rows, 0, colrem);
}

}  // namespace oti
