#include "qcomb/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcomb {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("entries are not a bijection of {1..n}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<int> e;
    int v = 0;
    while (is >> v) e.push_back(v);
    if (!is.eof()) throw std::invalid_argument("permutation text contains a non-integer token");
    return Permutation(std::move(e));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ' ';
        os << entries_[i];
    }
    return os.str();
}

Pattern parse_pattern(std::string_view text) {
    if (text == "321") return Pattern::P321;
    if (text == "123") return Pattern::P123;
    throw std::invalid_argument("unknown pattern (expected 321 or 123)");
}

bool is_involution(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        if (p.at(p.at(i)) != i) return false;
    return true;
}

bool contains_pattern(const Permutation& p, Pattern pattern) {
    const int n = p.size();
    if (n < 3) return false;
    // v at position j is the middle of a 321 iff max(left) > v and min(right) < v.
    std::vector<int> suffix(static_cast<size_t>(n) + 1);
    if (pattern == Pattern::P321) {
        suffix[static_cast<size_t>(n)] = n + 1;  // running min from the right
        for (int j = n - 1; j >= 1; --j)
            suffix[static_cast<size_t>(j)] = std::min(suffix[static_cast<size_t>(j) + 1], p.at(j + 1));
        int prefix_max = 0;
        for (int j = 2; j < n; ++j) {
            prefix_max = std::max(prefix_max, p.at(j - 1));
            if (prefix_max > p.at(j) && suffix[static_cast<size_t>(j)] < p.at(j)) return true;
        }
        return false;
    }
    suffix[static_cast<size_t>(n)] = 0;  // running max from the right
    for (int j = n - 1; j >= 1; --j)
        suffix[static_cast<size_t>(j)] = std::max(suffix[static_cast<size_t>(j) + 1], p.at(j + 1));
    int prefix_min = n + 1;
    for (int j = 2; j < n; ++j) {
        prefix_min = std::min(prefix_min, p.at(j - 1));
        if (prefix_min < p.at(j) && suffix[static_cast<size_t>(j)] > p.at(j)) return true;
    }
    return false;
}

StatRecord stats(const Permutation& p) {
    StatRecord r;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.at(i) > p.at(j)) ++r.inv;
    for (int i = 1; i < n; ++i)
        if (p.at(i) > p.at(i + 1)) r.des_set.push_back(i);
    r.des = static_cast<int>(r.des_set.size());
    for (int i : r.des_set) r.maj += i;
    r.ldes = r.des_set.empty() ? 0 : r.des_set.back();
    if (n > 0) r.lead = p.at(1);
    return r;
}

std::string cycle_string(const Permutation& p) {
    const int n = p.size();
    if (n == 0) return "()";
    std::vector<char> done(static_cast<size_t>(n) + 1, 0);
    std::ostringstream os;
    for (int start = 1; start <= n; ++start) {
        if (done[static_cast<size_t>(start)]) continue;
        os << '(' << start;
        done[static_cast<size_t>(start)] = 1;
        for (int v = p.at(start); v != start; v = p.at(v)) {
            os << ' ' << v;
            done[static_cast<size_t>(v)] = 1;
        }
        os << ')';
    }
    return os.str();
}

}  // namespace qcomb
