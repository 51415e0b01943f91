#include "qcomb/qseries.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qcomb {

LaurentPoly q_int(int n) {
    LaurentPoly p;
    for (int e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

LaurentPoly q_factorial(int n) {
    if (n <= 0) return LaurentPoly::one();
    static std::mutex mutex;
    static std::vector<LaurentPoly> cache{LaurentPoly::one()};
    std::scoped_lock lock(mutex);
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * q_int(static_cast<int>(cache.size())));
    return cache[static_cast<size_t>(n)];
}

LaurentPoly q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return LaurentPoly::zero();
    return LaurentPoly::divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

LaurentPoly q_binomial_recurrence(int n, int k) {
    if (k < 0 || n < 0 || k > n) return LaurentPoly::zero();
    std::vector<LaurentPoly> row{LaurentPoly::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<LaurentPoly> next(static_cast<size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            LaurentPoly t;
            if (j <= m - 1) t += row[static_cast<size_t>(j)].shifted(j);
            if (j >= 1) t += row[static_cast<size_t>(j) - 1];
            next[static_cast<size_t>(j)] = std::move(t);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

LaurentPoly e_spec(int k, int low, int high) {
    if (low > high + 1) throw std::invalid_argument("e_spec: empty alphabet requires low = high + 1");
    if (k < 0) return LaurentPoly::zero();
    std::vector<LaurentPoly> e(static_cast<size_t>(k) + 1);
    e[0] = LaurentPoly::one();
    for (int x = low; x <= high; ++x)
        for (int j = k; j >= 1; --j) e[static_cast<size_t>(j)] += e[static_cast<size_t>(j) - 1].shifted(x);
    return e[static_cast<size_t>(k)];
}

BigInt q_binomial_at_minus_one(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n % 2 == 0 && k % 2 == 1) return 0;
    return binomial(n / 2, k / 2);
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

FormulaId parse_formula_id(std::string_view text) {
    if (text == "JD-des") return FormulaId::JDdes;
    if (text == "JD-lead") return FormulaId::JDlead;
    if (text == "Lead-I") return FormulaId::LeadI;
    if (text == "Lead-II") return FormulaId::LeadII;
    if (text == "Lead-III") return FormulaId::LeadIII;
    if (text == "Lead-IV") return FormulaId::LeadIV;
    if (text == "Des321-I") return FormulaId::Des321I;
    if (text == "Des321-II") return FormulaId::Des321II;
    if (text == "Des321-III") return FormulaId::Des321III;
    if (text == "Des123-I") return FormulaId::Des123I;
    if (text == "Des123-II") return FormulaId::Des123II;
    if (text == "Des123-III") return FormulaId::Des123III;
    if (text == "Cor123") return FormulaId::Cor123;
    if (text == "AR-odd") return FormulaId::AROdd;
    if (text == "AR-even") return FormulaId::AREven;
    if (text == "SS") return FormulaId::SS;
    throw std::invalid_argument("unknown identity id: " + std::string(text));
}

std::string_view formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::JDdes: return "JD-des";
        case FormulaId::JDlead: return "JD-lead";
        case FormulaId::LeadI: return "Lead-I";
        case FormulaId::LeadII: return "Lead-II";
        case FormulaId::LeadIII: return "Lead-III";
        case FormulaId::LeadIV: return "Lead-IV";
        case FormulaId::Des321I: return "Des321-I";
        case FormulaId::Des321II: return "Des321-II";
        case FormulaId::Des321III: return "Des321-III";
        case FormulaId::Des123I: return "Des123-I";
        case FormulaId::Des123II: return "Des123-II";
        case FormulaId::Des123III: return "Des123-III";
        case FormulaId::Cor123: return "Cor123";
        case FormulaId::AROdd: return "AR-odd";
        case FormulaId::AREven: return "AR-even";
        case FormulaId::SS: return "SS";
    }
    return "?";
}

namespace {

int require_param(FormulaId id, const std::optional<int>& param) {
    if (!param)
        throw std::invalid_argument(std::string(formula_name(id)) + " requires a k/ell parameter");
    return *param;
}

void reject_param(FormulaId id, const std::optional<int>& param) {
    if (param)
        throw std::invalid_argument(std::string(formula_name(id)) + " takes no k/ell parameter");
}

LaurentPoly one_minus_q() {
    LaurentPoly p = LaurentPoly::one();
    p.add_term(1, -1);
    return p;
}

// 1/q - 1 and 2/q - 1 as Laurent polynomials.
LaurentPoly inv_q_minus_one() {
    LaurentPoly p = LaurentPoly::monomial(-1);
    p.add_term(0, -1);
    return p;
}

LaurentPoly two_inv_q_minus_one() {
    LaurentPoly p = LaurentPoly::monomial(-1, 2);
    p.add_term(0, -1);
    return p;
}

}  // namespace

LaurentPoly closed_form(FormulaId id, int n, std::optional<int> param, const WeightedSumFn& half_sum) {
    const int half_up = (n + 1) / 2;
    const int half_down = n / 2;
    switch (id) {
        case FormulaId::JDdes: {
            const int k = require_param(id, param);
            return (q_binomial(half_up, k) * q_binomial(half_down, k)).shifted(k * k);
        }
        case FormulaId::JDlead: {
            const int ell = require_param(id, param);
            LaurentPoly total;
            for (int k = 0;; ++k) {
                LaurentPoly t = q_binomial(half_up - 1, k) * q_binomial(half_down - ell + 1, k);
                if (t.is_zero()) break;
                total += t.shifted(k * k + k * ell + ell - 1);
            }
            return total;
        }
        case FormulaId::Cor123: {
            const int k = require_param(id, param);
            const int shift = n * (n - 1) / 2 + k * k - n * k;
            return (q_binomial(half_up, k) * q_binomial(half_down, k)).shifted(shift);
        }
        case FormulaId::LeadI:
            reject_param(id, param);
            return half_sum(Family::I321, 2 * n, Stat::Lead, 2).shifted(-1);
        case FormulaId::LeadII:
            reject_param(id, param);
            return inv_q_minus_one() * half_sum(Family::I321, 2 * n + 1, Stat::Lead, 2);
        case FormulaId::LeadIII:
            reject_param(id, param);
            return two_inv_q_minus_one() * half_sum(Family::I321, 2 * n + 1, Stat::Lead, 2);
        case FormulaId::LeadIV:
            reject_param(id, param);
            return inv_q_minus_one() * half_sum(Family::I321, 2 * n + 1, Stat::Lead, 2) +
                   half_sum(Family::I321, 2 * n, Stat::Lead, 2);
        case FormulaId::Des321I:
            reject_param(id, param);
            return half_sum(Family::I321, 2 * n, Stat::Des, 2);
        case FormulaId::Des321II:
            reject_param(id, param);
            return one_minus_q() * half_sum(Family::I321, 2 * n, Stat::Des, 2);
        case FormulaId::Des321III:
            reject_param(id, param);
            return half_sum(Family::I321, n, Stat::Des, 2);
        case FormulaId::Des123I:
            reject_param(id, param);
            return half_sum(Family::I123, 2 * n, Stat::Des, 2).shifted(1);
        case FormulaId::Des123II:
            reject_param(id, param);
            return (one_minus_q() * half_sum(Family::I123, 2 * n, Stat::Des, 2)).shifted(2);
        case FormulaId::Des123III: {
            reject_param(id, param);
            LaurentPoly base = half_sum(Family::I123, n, Stat::Des, 2).shifted(2);
            return n % 2 == 0 ? base : -base;
        }
        case FormulaId::AROdd:
            reject_param(id, param);
            return half_sum(Family::S321, n, Stat::Ldes, 2);
        case FormulaId::AREven:
            reject_param(id, param);
            return one_minus_q() * half_sum(Family::S321, n, Stat::Ldes, 2);
        case FormulaId::SS:
            reject_param(id, param);
            return n % 2 == 1 ? LaurentPoly::constant(catalan((n - 1) / 2)) : LaurentPoly::zero();
    }
    throw std::invalid_argument("bad identity id");
}

}  // namespace qcomb
