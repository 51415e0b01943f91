#include "qcomb/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcomb {

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
    int n = 0;
    for (const auto& row : rows) {
        if (row.empty()) throw std::invalid_argument("tableau row may not be empty");
        n += static_cast<int>(row.size());
    }
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r > 0 && rows[r].size() > rows[r - 1].size())
            throw std::invalid_argument("tableau shape is not weakly decreasing");
        for (size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("tableau entries are not exactly 1..n");
            seen[static_cast<size_t>(v)] = 1;
            if (c > 0 && rows[r][c - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (r > 0 && rows[r - 1][c] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
    StandardTableau t;
    t.rows_ = std::move(rows);
    return t;
}

int StandardTableau::cells() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

std::vector<int> StandardTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
    return s;
}

StandardTableau StandardTableau::transpose() const {
    std::vector<std::vector<int>> cols;
    for (const auto& row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (cols.size() <= c) cols.emplace_back();
            cols[c].push_back(row[c]);
        }
    }
    StandardTableau t;
    t.rows_ = std::move(cols);
    return t;
}

std::string StandardTableau::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ',';
            os << rows_[r][c];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (int i = 1; i <= sigma.size(); ++i) {
        int v = sigma.at(i);
        size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                q[r].push_back(i);
                break;
            }
            std::swap(*it, v);
            ++r;
        }
    }
    StandardTableau tp;
    StandardTableau tq;
    tp = StandardTableau::from_rows(std::move(p));
    tq = StandardTableau::from_rows(std::move(q));
    return {std::move(tp), std::move(tq)};
}

Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape()) throw std::domain_error("inverse_rsk: tableaux have different shapes");
    std::vector<std::vector<int>> rows = p.rows();
    std::vector<std::vector<int>> rec = q.rows();
    const int n = p.cells();
    std::vector<int> entries(static_cast<size_t>(n));
    for (int label = n; label >= 1; --label) {
        size_t r = rec.size();
        bool found = false;
        while (r-- > 0) {
            if (!rec[r].empty() && rec[r].back() == label) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("inverse_rsk: recording tableau is inconsistent");
        rec[r].pop_back();
        int v = rows[r].back();
        rows[r].pop_back();
        while (r-- > 0) {
            auto& row = rows[r];
            // rightmost entry smaller than the bumped value
            auto it = std::lower_bound(row.begin(), row.end(), v);
            if (it == row.begin()) throw std::logic_error("inverse_rsk: no smaller entry to bump");
            --it;
            std::swap(*it, v);
        }
        entries[static_cast<size_t>(label) - 1] = v;
        while (!rows.empty() && rows.back().empty()) {
            rows.pop_back();
            rec.pop_back();
        }
    }
    return Permutation(std::move(entries));
}

Permutation transpose_involution(const Permutation& sigma) {
    if (!is_involution(sigma)) throw std::domain_error("transpose_involution expects an involution");
    if (contains_pattern(sigma, Pattern::P321) && contains_pattern(sigma, Pattern::P123))
        throw std::domain_error("transpose_involution expects a 321- or 123-avoiding involution");
    auto [p, q] = rsk(sigma);
    StandardTableau qt = q.transpose();
    return inverse_rsk(qt, qt);
}

}  // namespace qcomb
