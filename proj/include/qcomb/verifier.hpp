#pragma once

#include "qcomb/families.hpp"
#include "qcomb/laurent.hpp"
#include "qcomb/qseries.hpp"
#include "qcomb/sign_involutions.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcomb {

/// Weighted generating function Sigma (-1)^{sign} q^{scale * weight} over a
/// family. The sum is order-independent; signless when sign is absent.
struct GenFunSpec {
    Family family = Family::I321;
    int n = 0;
    std::optional<Stat> sign;
    Stat weight = Stat::Maj;
    int scale = 1;
};

LaurentPoly genfun(const GenFunSpec& spec);

/// Sigma q^{maj} over the family, grouped by the given statistic.
std::map<long long, LaurentPoly> maj_table(Family f, int n, Stat group);

struct VerificationReport {
    std::string id;
    int n = 0;
    std::optional<int> param;
    int length = 0;
    LaurentPoly lhs;
    LaurentPoly rhs;
    bool equal = false;
    long long elapsed_ms = 0;
    std::vector<std::pair<std::string, long long>> counts;
};

/// Object size (permutation length / path length) enumerated by the identity
/// at index n, the smallest admissible n, and the desk-scale length bound.
int identity_length(FormulaId id, int n);
int identity_min_n(FormulaId id);
int identity_default_cap(FormulaId id);

int case_length(InvolutionCase c, int n);
constexpr int kCaseDefaultCap = 19;

/// Checks one identity at index n. For JD-des, JD-lead and Cor123 a given
/// param selects a single k/ell; otherwise every admissible value is checked
/// and the report aggregates the per-parameter sums. Refuses n beyond the
/// desk-scale bound unless length_cap raises it.
VerificationReport check(FormulaId id, int n, std::optional<int> param = std::nullopt,
                         std::optional<int> length_cap = std::nullopt);

/// Sweeps the whole domain of one sign-reversing involution case:
/// involutivity, subset preservation, sump-parity reversal, fixed-set
/// equality with the builder constructions, the cardinality laws, and the
/// signed cancellation identity.
VerificationReport check_involution_contracts(InvolutionCase c, int n,
                                              std::optional<int> length_cap = std::nullopt);

/// Independent recomputation path: plain enumeration, naive pattern filter
/// and per-definition statistic scan, no bijections and no pruning. Bounded
/// at n <= 12 for involution families and n <= 10 for S_n-based ones.
std::map<std::pair<long long, long long>, long long> brute_force_oracle(Family f, int n, Stat a, Stat b);

/// Every identity id (and every Phi case) over its full range, lengths capped
/// at length_cap when given. Reports are ordered by (id, n).
std::vector<VerificationReport> verify_all(std::optional<int> length_cap = std::nullopt);

const std::vector<FormulaId>& all_formula_ids();
const std::vector<InvolutionCase>& all_involution_cases();

}  // namespace qcomb
