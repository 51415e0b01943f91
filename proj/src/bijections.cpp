#include "qcomb/bijections.hpp"

#include <set>
#include <stdexcept>

namespace qcomb {

LatticePath delta(const Permutation& sigma) {
    if (!is_involution(sigma)) throw std::domain_error("delta expects an involution");
    if (contains_pattern(sigma, Pattern::P321)) throw std::domain_error("delta expects a 321-avoiding involution");
    std::vector<Step> steps(static_cast<size_t>(sigma.size()));
    for (int i = 1; i <= sigma.size(); ++i)
        steps[static_cast<size_t>(i) - 1] = sigma.at(i) >= i ? Step::N : Step::E;
    return LatticePath(std::move(steps));
}

Permutation delta_inv(const LatticePath& tau) {
    const int n = tau.size();
    if (!is_partial_dyck(tau, n)) throw std::domain_error("delta_inv expects a partial Dyck path");
    std::set<int> uncoupled;
    std::vector<int> east_labels;
    for (int i = 1; i <= n; ++i) {
        if (tau.at(i) == Step::N) uncoupled.insert(i);
        else east_labels.push_back(i);
    }
    std::vector<int> entries(static_cast<size_t>(n), 0);
    for (auto it = east_labels.rbegin(); it != east_labels.rend(); ++it) {
        const int e = *it;
        auto pos = uncoupled.lower_bound(e);
        // a partial Dyck prefix guarantees an uncoupled N to the left
        if (pos == uncoupled.begin()) throw std::logic_error("delta_inv: no uncoupled N available");
        --pos;
        const int i = *pos;
        uncoupled.erase(pos);
        entries[static_cast<size_t>(i) - 1] = e;
        entries[static_cast<size_t>(e) - 1] = i;
    }
    for (int i : uncoupled) entries[static_cast<size_t>(i) - 1] = i;
    return Permutation(std::move(entries));
}

StepMatching face_matching(const LatticePath& path) {
    StepMatching m;
    std::vector<int> stack;
    for (int i = 1; i <= path.size(); ++i) {
        if (path.at(i) == Step::N) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            m.couples.emplace_back(stack.back(), i);
            stack.pop_back();
        } else {
            m.unmatched_e.push_back(i);
        }
    }
    m.unmatched_n = std::move(stack);
    return m;
}

XiTrace xi_with_trace(const LatticePath& tau) {
    if (!is_partial_dyck(tau, tau.size())) throw std::domain_error("xi expects a partial Dyck path");
    StepMatching m = face_matching(tau);
    const int k = static_cast<int>(m.unmatched_n.size());
    const int flips = (k + 1) / 2;
    XiTrace trace;
    trace.unmatched_n = m.unmatched_n;
    trace.flipped.assign(m.unmatched_n.begin(), m.unmatched_n.begin() + flips);
    std::vector<Step> steps = tau.steps();
    for (int label : trace.flipped) steps[static_cast<size_t>(label) - 1] = Step::E;
    trace.image = LatticePath(std::move(steps));
    return trace;
}

LatticePath xi(const LatticePath& tau) { return xi_with_trace(tau).image; }

LatticePath xi_inv(const LatticePath& pi) {
    const int n = pi.size();
    const auto [x, y] = pi.endpoint();
    if (x != (n + 1) / 2 || y != n / 2)
        throw std::domain_error("xi_inv expects endpoint (ceil(n/2), floor(n/2))");
    StepMatching m = face_matching(pi);
    std::vector<Step> steps = pi.steps();
    for (int label : m.unmatched_e) steps[static_cast<size_t>(label) - 1] = Step::N;
    return LatticePath(std::move(steps));
}

LatticePath to_grand(const Permutation& sigma) { return xi(delta(sigma)); }

Permutation from_grand(const LatticePath& pi, int n) {
    if (pi.size() != n) throw std::domain_error("from_grand: path length differs from n");
    return delta_inv(xi_inv(pi));
}

}  // namespace qcomb
