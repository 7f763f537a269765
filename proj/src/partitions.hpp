#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace oti {

// Weakly decreasing positive parts; the empty partition is legal.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
void require_partition(const Partition& p);
int weight(const Partition& p);

// Sorts a composition (nonnegative entries) into a partition, dropping zeros.
Partition sorted_partition(std::vector<int> parts);

std::string partition_to_string(const Partition& p);  // "6,1,1"; empty is "[]"
Partition parse_partition(const std::string& s);

std::vector<Partition> all_partitions(int n);

// True iff partial sums of la dominate those of mu (mu <= la). Both must
// have the same weight.
bool dominance_leq(const Partition& mu, const Partition& la);

// Removes k boxes from row i (1-based); nullopt when the row is too short.
std::optional<Partition> subtract_row(const Partition& la, int i, int k);

struct StabilityReport {
  bool quasistable = false;
  bool stable = false;
  bool truncated = false;
  int64_t p = 0;
  int r = 0;
  int n = 0;
  // n < 3p^r and n + p^r odd: the half-bound clause was decided over the
  // rationals; flagged so certificates can note the boundary case.
  bool boundary_odd = false;
};

StabilityReport stability(const Partition& la, int64_t p, int r);

int64_t power_int(int64_t base, int exp);

// Number of semistandard Young tableaux of shape mu and the given content
// (content may be any composition of |mu|).
int64_t kostka(const Partition& mu, const std::vector<int>& content);

// [M^la] = sum_mu K_{mu,la} [S^mu]; the map mu -> K_{mu,la}, zeros dropped.
std::map<Partition, int64_t> specht_vector(const Partition& la);

// Number of standard Young tableaux of shape la (hook length formula).
int64_t n_standard_tableaux(const Partition& la);

// All standard Young tableaux of shape la; tableau[r][c] holds entries 1..n.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la);

// Number of nonnegative integer matrices with the given row and column sums.
// This is the combinatorial oracle for dim Hom(M^row, M^col).
int64_t contingency_count(const Partition& rows, const Partition& cols);

}  // namespace oti
