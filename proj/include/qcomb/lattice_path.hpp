#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcomb {

enum class Step : std::uint8_t { N, E };

/// Immutable word over {N, E} read as a lattice path from the origin with
/// north step (0,1) and east step (1,0).
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    /// Parses a contiguous word of 'N'/'E' characters (case-insensitive).
    /// A foreign character raises an error naming its 1-based position.
    static LatticePath parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }
    const std::vector<Step>& steps() const { return steps_; }
    Step at(int position) const { return steps_[static_cast<size_t>(position) - 1]; }

    int norths() const;
    int easts() const;
    /// Endpoint (x, y) = (#E, #N).
    std::pair<int, int> endpoint() const;

    std::string str() const;

    bool operator==(const LatticePath&) const = default;
    bool operator<(const LatticePath& other) const { return steps_ < other.steps_; }

private:
    std::vector<Step> steps_;
};

/// A lattice point; odd/even refers to the parity of x + y. Peaks and valleys
/// at point (x, y) sit between steps i and i+1 of the path with x + y = i.
struct LatticePoint {
    int x = 0;
    int y = 0;
    int position() const { return x + y; }
    bool odd() const { return (x + y) % 2 != 0; }
    bool operator==(const LatticePoint&) const = default;
};

/// Points between adjacent NE pairs, in path order.
std::vector<LatticePoint> peaks(const LatticePath& path);
/// Points between adjacent EN pairs, in path order.
std::vector<LatticePoint> valleys(const LatticePath& path);

/// Sum of x + y over all peaks.
long long sump(const LatticePath& path);

/// True iff the path has exactly n steps and every prefix has #N >= #E.
bool is_partial_dyck(const LatticePath& path, int n);

/// Maximal-run decomposition mu_0 mu_1 ... mu_d with N-runs at even indices;
/// mu_0 is the (possibly empty) leading N-run. The empty path has no runs.
struct RunFactorization {
    std::vector<int> lengths;

    int run_count() const { return static_cast<int>(lengths.size()); }
    /// d in mu_0..mu_d; -1 for the empty path.
    int last_index() const { return run_count() - 1; }
    static Step letter(int index) { return index % 2 == 0 ? Step::N : Step::E; }
};

RunFactorization primal_factorization(const LatticePath& path);
LatticePath path_from_runs(const RunFactorization& runs);

/// Length j of the initial maximal N-run, so the path passes through (0,j)
/// and (1,j). Undefined (throws) for a path without east steps.
int b_subset_index(const LatticePath& path);

/// Visits every path with the given step counts (the rectangle B(norths, easts)
/// read as endpoint (easts, norths)) exactly once.
void for_each_path(int norths, int easts, const std::function<void(const LatticePath&)>& visit);

long long rectangle_size(int norths, int easts);

}  // namespace qcomb
