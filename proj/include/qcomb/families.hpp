#pragma once

#include "qcomb/permutation.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace qcomb {

/// Enumerated permutation families. I-families are involutions avoiding the
/// pattern, S-families are all avoiders, Inv is all involutions, All is S_n.
enum class Family { I321, I123, S321, S123, Inv, All };

Family parse_family(std::string_view text);
std::string_view family_name(Family f);

enum class Stat { Inv, Des, Maj, Ldes, Lead };

Stat parse_stat(std::string_view text);
std::string_view stat_name(Stat s);

/// Statistic value as used in generating functions; lead of the empty
/// permutation counts as 0.
long long stat_value(const StatRecord& r, Stat s);

/// Visits every member of the family exactly once in lexicographic order of
/// one-line notation. Involution families are built from the fixed-point /
/// 2-cycle recursion with partial-pattern pruning; S-families walk S_n with
/// prefix pruning and are capped at n <= 10.
void for_each_member(Family f, int n, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_family(Family f, int n);

std::vector<Permutation> enumerate_filtered(Family f, int n, Stat s, long long value);

}  // namespace qcomb
