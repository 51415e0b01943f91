#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcomb {

/// A permutation of {1..n} in one-line notation. Construction validates that
/// the entries are a bijection of {1..n}; the empty permutation is allowed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);
    /// Parses space-separated 1-based values, e.g. "2 1 3 6 7 4 5 8 10 9 11".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    /// Value at 1-based position.
    int at(int position) const { return entries_[static_cast<size_t>(position) - 1]; }
    const std::vector<int>& entries() const { return entries_; }

    std::string str() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& other) const { return entries_ < other.entries_; }

private:
    std::vector<int> entries_;
};

enum class Pattern { P321, P123 };

Pattern parse_pattern(std::string_view text);

bool is_involution(const Permutation& p);

/// True iff p has a decreasing (321) or increasing (123) subsequence of
/// length three. Linear scan with prefix/suffix extrema.
bool contains_pattern(const Permutation& p, Pattern pattern);

/// The six statistics of one permutation. A descent-free permutation has
/// ldes == 0; lead is absent only for the empty permutation.
struct StatRecord {
    long long inv = 0;
    std::vector<int> des_set;
    int des = 0;
    long long maj = 0;
    int ldes = 0;
    std::optional<int> lead;
};

StatRecord stats(const Permutation& p);

/// Cycle notation with cycles ordered by smallest element, e.g.
/// "(1 2)(3)(4 6)(5 7)(8)(9 10)(11)". Empty permutation renders as "()".
std::string cycle_string(const Permutation& p);

}  // namespace qcomb
