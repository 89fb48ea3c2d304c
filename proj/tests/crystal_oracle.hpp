#pragma once

// Crystal oracle for the Mullineux map on e-regular partitions, written without the library's
// Fock code: walk down to the empty partition by good removable nodes, then climb back up
// along the negated residues.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qvcount/partitions.hpp"

namespace qvc::testing {

struct CNode {
  bool addable;
  int content;
  int row;
};

inline std::vector<CNode> signature(const Partition& p, int i, int e) {
  std::vector<CNode> ns;
  const int len = static_cast<int>(p.size());
  for (int r = 0; r <= len; ++r) {
    int row = r < len ? p[r] : 0;
    if (r == 0 || p[r - 1] > row) {
      if (((row - r) % e + e) % e == i) ns.push_back({true, row - r, r});
    }
    if (r < len && (r == len - 1 || p[r + 1] < row)) {
      int c = row - 1;
      if (((c - r) % e + e) % e == i) ns.push_back({false, c - r, r});
    }
  }
  std::sort(ns.begin(), ns.end(), [](const CNode& a, const CNode& b) { return a.content > b.content; });
  std::vector<CNode> st;
  for (const auto& n : ns) {
    if (!n.addable && !st.empty() && st.back().addable) {
      st.pop_back();
      continue;
    }
    st.push_back(n);
  }
  return st;
}

inline std::optional<Partition> f_tilde(Partition p, int i, int e) {
  for (const auto& n : signature(p, i, e)) {
    if (!n.addable) continue;
    if (n.row == static_cast<int>(p.size())) {
      p.push_back(1);
    } else {
      ++p[n.row];
    }
    return p;
  }
  return std::nullopt;
}

inline Partition crystal_mullineux(Partition p, int e) {
  std::vector<int> word;
  while (!p.empty()) {
    bool found = false;
    for (int i = 0; i < e && !found; ++i) {
      auto st = signature(p, i, e);
      for (auto it = st.rbegin(); it != st.rend(); ++it) {
        if (it->addable) continue;
        --p[it->row];
        if (p[it->row] == 0) p.pop_back();
        word.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("crystal oracle: no good removable node");
  }
  Partition q;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = f_tilde(q, ((-*it) % e + e) % e, e);
    if (!next) throw std::logic_error("crystal oracle: f cannot act");
    q = *next;
  }
  return q;
}

inline Partition oracle_wallcross(const Partition& nu, int m) {
  auto [hi, lo] = m_adic_row_decompose(nu, m);
  Partition a = transpose(hi);
  Partition b = lo.empty() ? Partition{} : transpose(crystal_mullineux(transpose(lo), m));
  std::size_t len = std::max(a.size(), b.size());
  Partition sum(len, 0);
  for (std::size_t k = 0; k < a.size(); ++k) sum[k] += m * a[k];
  for (std::size_t k = 0; k < b.size(); ++k) sum[k] += b[k];
  return transpose(sum);
}

}  // namespace qvc::testing
