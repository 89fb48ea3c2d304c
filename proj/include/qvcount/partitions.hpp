#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qvc {

/// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

int size(const Partition& p);
bool is_partition(const Partition& p);
Partition transpose(const Partition& p);
std::string to_string(const Partition& p);

/// All partitions of n, largest first part first (reverse lexicographic).
std::vector<Partition> partitions_of(int n);
/// Partitions of n with every part at most max_part.
std::vector<Partition> partitions_of(int n, int max_part);

/// No part repeated e or more times.
bool is_regular(const Partition& p, int e);
/// Every row difference (including the last row against 0) is below m.
bool is_corestricted(const Partition& p, int m);

/// nu = m nu' + nu'' rowwise with nu'' m-corestricted, by dividing the row differences by m.
std::pair<Partition, Partition> m_adic_row_decompose(const Partition& nu, int m);

/// Cells of the e-rim as (row, column) pairs, 0-indexed, in rim order from the top right.
std::vector<std::pair<int, int>> e_rim(const Partition& p, int e);

/// Columns (|e-rim|, number of rows) of the Mullineux symbol, outermost first.
std::vector<std::pair<int, int>> mullineux_symbol(const Partition& p, int e);
/// Inverse of mullineux_symbol. Throws DomainError if no e-regular partition has this symbol.
Partition from_mullineux_symbol(const std::vector<std::pair<int, int>>& symbol, int e);

/// Mullineux involution on e-regular partitions. Throws DomainError on non-regular input.
Partition mullineux(const Partition& p, int e);
/// The conjugated involution on e-corestricted partitions: (M(p^t))^t.
Partition mullineux_corestricted(const Partition& p, int e);

/// (m nu'^t + M(nu''))^t where M acts on the corestricted part through its transpose.
Partition wallcross_map(const Partition& nu, int m);

}  // namespace qvc
