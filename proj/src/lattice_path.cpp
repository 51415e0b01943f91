#include "qcomb/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcomb {

LatticePath LatticePath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'N' || c == 'n') {
            steps.push_back(Step::N);
        } else if (c == 'E' || c == 'e') {
            steps.push_back(Step::E);
        } else {
            throw std::invalid_argument("invalid path character '" + std::string(1, c) +
                                        "' at position " + std::to_string(i + 1));
        }
    }
    return LatticePath(std::move(steps));
}

int LatticePath::norths() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::N));
}

int LatticePath::easts() const { return size() - norths(); }

std::pair<int, int> LatticePath::endpoint() const {
    const int n = norths();
    return {size() - n, n};
}

std::string LatticePath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::N ? 'N' : 'E');
    return out;
}

namespace {

std::vector<LatticePoint> corner_points(const LatticePath& path, Step first, Step second) {
    std::vector<LatticePoint> out;
    int x = 0;
    int y = 0;
    const auto& steps = path.steps();
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::N) ++y;
        else ++x;
        if (i + 1 < steps.size() && steps[i] == first && steps[i + 1] == second)
            out.push_back({x, y});
    }
    return out;
}

}  // namespace

std::vector<LatticePoint> peaks(const LatticePath& path) { return corner_points(path, Step::N, Step::E); }

std::vector<LatticePoint> valleys(const LatticePath& path) { return corner_points(path, Step::E, Step::N); }

long long sump(const LatticePath& path) {
    long long total = 0;
    for (const LatticePoint& p : peaks(path)) total += p.position();
    return total;
}

bool is_partial_dyck(const LatticePath& path, int n) {
    if (path.size() != n) return false;
    int height = 0;
    for (Step s : path.steps()) {
        height += s == Step::N ? 1 : -1;
        if (height < 0) return false;
    }
    return true;
}

RunFactorization primal_factorization(const LatticePath& path) {
    RunFactorization out;
    if (path.empty()) return out;
    if (path.at(1) == Step::E) out.lengths.push_back(0);
    int i = 1;
    while (i <= path.size()) {
        int j = i;
        while (j <= path.size() && path.at(j) == path.at(i)) ++j;
        out.lengths.push_back(j - i);
        i = j;
    }
    return out;
}

LatticePath path_from_runs(const RunFactorization& runs) {
    std::vector<Step> steps;
    for (int idx = 0; idx < runs.run_count(); ++idx)
        steps.insert(steps.end(), static_cast<size_t>(runs.lengths[static_cast<size_t>(idx)]),
                     RunFactorization::letter(idx));
    return LatticePath(std::move(steps));
}

int b_subset_index(const LatticePath& path) {
    for (int i = 1; i <= path.size(); ++i)
        if (path.at(i) == Step::E) return i - 1;
    throw std::domain_error("subset index is undefined for a path without east steps");
}

void for_each_path(int norths, int easts, const std::function<void(const LatticePath&)>& visit) {
    if (norths < 0 || easts < 0) throw std::invalid_argument("negative step count");
    std::vector<Step> word(static_cast<size_t>(norths + easts), Step::E);
    // iterate over placements of the N steps as ascending position combinations
    std::vector<int> pos(static_cast<size_t>(norths));
    for (int i = 0; i < norths; ++i) pos[static_cast<size_t>(i)] = i;
    const int total = norths + easts;
    while (true) {
        std::fill(word.begin(), word.end(), Step::E);
        for (int p : pos) word[static_cast<size_t>(p)] = Step::N;
        visit(LatticePath(word));
        if (norths == 0) return;
        int i = norths - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == total - norths + i) --i;
        if (i < 0) return;
        ++pos[static_cast<size_t>(i)];
        for (int j = i + 1; j < norths; ++j) pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j) - 1] + 1;
    }
}

long long rectangle_size(int norths, int easts) {
    long long result = 1;
    const int k = std::min(norths, easts);
    for (int i = 1; i <= k; ++i) result = result * (norths + easts - k + i) / i;
    return result;
}

}  // namespace qcomb
