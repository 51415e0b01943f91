#pragma once

#include "qcomb/families.hpp"
#include "qcomb/laurent.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace qcomb {

/// [n]_q = 1 + q + ... + q^{n-1}; the zero polynomial for n <= 0.
LaurentPoly q_int(int n);

/// [n]!_q = [1]_q [2]_q ... [n]_q.
LaurentPoly q_factorial(int n);

/// Gaussian binomial [n choose k]_q computed by exact division of factorial
/// products; the zero polynomial outside 0 <= k <= n.
LaurentPoly q_binomial(int n, int k);

/// Same coefficient built from the Pascal-type recurrence
/// [n k] = q^k [n-1 k] + [n-1 k-1]; kept as an independent route.
LaurentPoly q_binomial_recurrence(int n, int k);

/// Elementary symmetric polynomial e_k evaluated on the geometric alphabet
/// q^low, q^{low+1}, ..., q^high. Requires low <= high + 1.
LaurentPoly e_spec(int k, int low, int high);

/// Closed form of [n choose k]_q at q = -1: zero when n is even and k odd,
/// otherwise binomial(floor(n/2), floor(k/2)).
BigInt q_binomial_at_minus_one(int n, int k);

BigInt binomial(int n, int k);
BigInt catalan(int n);

/// The named right-hand sides of the verified identities.
enum class FormulaId {
    JDdes,
    JDlead,
    LeadI,
    LeadII,
    LeadIII,
    LeadIV,
    Des321I,
    Des321II,
    Des321III,
    Des123I,
    Des123II,
    Des123III,
    Cor123,
    AROdd,
    AREven,
    SS,
};

FormulaId parse_formula_id(std::string_view text);
std::string_view formula_name(FormulaId id);

/// Enumeration hook for right-hand sides built as a weighted sum
/// q^{scale * stat} over a smaller family.
using WeightedSumFn = std::function<LaurentPoly(Family family, int length, Stat weight, int scale)>;

/// Builds the exact right-hand side for the identity at index n. JD-des,
/// JD-lead and Cor123 take the extra parameter (k resp. ell); all others
/// reject one.
LaurentPoly closed_form(FormulaId id, int n, std::optional<int> param, const WeightedSumFn& half_sum);

}  // namespace qcomb
