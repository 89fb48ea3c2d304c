#include "qvcount/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qvcount/errors.hpp"

namespace qvc {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 0; j < p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x > j) ++c;
    t.push_back(c);
  }
  return t;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

bool is_regular(const Partition& p, int e) {
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (static_cast<int>(j - i) >= e) return false;
    i = j;
  }
  return true;
}

bool is_corestricted(const Partition& p, int m) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    int next = j + 1 < p.size() ? p[j + 1] : 0;
    if (p[j] - next >= m) return false;
  }
  return true;
}

std::pair<Partition, Partition> m_adic_row_decompose(const Partition& nu, int m) {
  if (m < 2) throw DomainError("m_adic_row_decompose needs m >= 2");
  if (!is_partition(nu)) throw DomainError("not a partition: " + to_string(nu));
  const std::size_t L = nu.size();
  Partition hi(L, 0);
  Partition lo(L, 0);
  int qsum = 0;
  int rsum = 0;
  for (std::size_t j = L; j-- > 0;) {
    int diff = nu[j] - (j + 1 < L ? nu[j + 1] : 0);
    qsum += diff / m;
    rsum += diff % m;
    hi[j] = qsum;
    lo[j] = rsum;
  }
  auto strip = [](Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };
  return {strip(hi), strip(lo)};
}

// ---------------------------------------------------------------- Mullineux

std::vector<std::pair<int, int>> e_rim(const Partition& p, int e) {
  const int L = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> rim;
  std::vector<std::size_t> row_start(p.size());
  for (int r = 0; r < L; ++r) {
    row_start[r] = rim.size();
    int lo = r + 1 < L ? std::max(p[r + 1] - 1, 0) : 0;
    for (int c = p[r] - 1; c >= lo; --c) rim.emplace_back(r, c);
  }
  std::vector<std::pair<int, int>> cells;
  int r = 0;
  while (r < L) {
    auto start = row_start[r];
    auto stop = std::min(start + static_cast<std::size_t>(e), rim.size());
    cells.insert(cells.end(), rim.begin() + static_cast<long>(start), rim.begin() + static_cast<long>(stop));
    if (stop - start < static_cast<std::size_t>(e)) break;
    r = rim[stop - 1].first + 1;
  }
  return cells;
}

namespace {

Partition remove_cells(Partition p, const std::vector<std::pair<int, int>>& cells) {
  for (const auto& [r, c] : cells) --p[r];
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

std::vector<std::pair<int, int>> mullineux_symbol(const Partition& p, int e) {
  std::vector<std::pair<int, int>> cols;
  Partition cur = p;
  while (!cur.empty()) {
    auto cells = e_rim(cur, e);
    cols.emplace_back(static_cast<int>(cells.size()), static_cast<int>(cur.size()));
    cur = remove_cells(cur, cells);
  }
  return cols;
}

Partition from_mullineux_symbol(const std::vector<std::pair<int, int>>& symbol, int e) {
  Partition lam;
  for (auto it = symbol.rbegin(); it != symbol.rend(); ++it) {
    const auto [A, R] = *it;
    if (A <= 0 || R <= 0) throw DomainError("invalid Mullineux symbol column");
    std::vector<Partition> found;
    Partition mu(static_cast<std::size_t>(R), 0);
    const int target = size(lam) + A;
    auto lam_at = [&](int i) { return i < static_cast<int>(lam.size()) ? lam[i] : 0; };
    // Rows of mu dominate lam; row i+1 exceeds row i of lam by at most one.
    std::function<void(int, int)> rec = [&](int i, int rest) {
      if (i == R) {
        if (rest != 0) return;
        if (!is_regular(mu, e)) return;
        auto cells = e_rim(mu, e);
        if (static_cast<int>(cells.size()) == A && remove_cells(mu, cells) == lam) found.push_back(mu);
        return;
      }
      int lo = std::max(lam_at(i), 1);
      int hi = i == 0 ? rest : std::min(mu[i - 1], lam_at(i - 1) + 1);
      hi = std::min(hi, rest - (R - i - 1));
      for (int x = hi; x >= lo; --x) {
        mu[i] = x;
        rec(i + 1, rest - x);
      }
    };
    rec(0, target);
    if (found.empty()) throw DomainError("no e-regular partition has this Mullineux symbol");
    if (found.size() > 1) throw std::logic_error("Mullineux symbol reconstruction is not unique");
    lam = found.front();
  }
  return lam;
}

Partition mullineux(const Partition& p, int e) {
  if (e < 2) throw DomainError("mullineux needs e >= 2");
  if (!is_partition(p)) throw DomainError("not a partition: " + to_string(p));
  if (!is_regular(p, e)) throw DomainError(to_string(p) + " is not " + std::to_string(e) + "-regular");
  auto sym = mullineux_symbol(p, e);
  for (auto& [A, R] : sym) R = A - R + (A % e == 0 ? 0 : 1);
  return from_mullineux_symbol(sym, e);
}

Partition mullineux_corestricted(const Partition& p, int e) { return transpose(mullineux(transpose(p), e)); }

Partition wallcross_map(const Partition& nu, int m) {
  auto [hi, lo] = m_adic_row_decompose(nu, m);
  Partition a = transpose(hi);
  Partition b = mullineux_corestricted(lo, m);
  Partition sum(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] += m * a[i];
  for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
  return transpose(sum);
}

}  // namespace qvc
