#pragma once

#include "qcomb/permutation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcomb {

/// Standard Young tableau: rows and columns strictly increasing, entries
/// exactly 1..n, row lengths weakly decreasing. Construction validates.
class StandardTableau {
public:
    StandardTableau() = default;
    static StandardTableau from_rows(std::vector<std::vector<int>> rows);

    int cells() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<int> shape() const;

    StandardTableau transpose() const;

    /// JSON-array-of-rows text, e.g. "[[1,2],[3]]".
    std::string str() const;

    bool operator==(const StandardTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Schensted row insertion; returns (insertion tableau P, recording tableau Q).
/// P == Q exactly when the permutation is an involution.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma);

/// Reverse of rsk; P and Q must have the same shape.
Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q);

/// The tableau-transpose bijection between 321-avoiding and 123-avoiding
/// involutions: sigma -> preimage of (Q^T, Q^T). Complements the descent set.
Permutation transpose_involution(const Permutation& sigma);

}  // namespace qcomb
