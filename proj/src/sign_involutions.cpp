#include "qcomb/sign_involutions.hpp"

#include <stdexcept>

namespace qcomb {

namespace {

// Exchanges the letters across the boundary between mu_{k-1} and mu_k, moving
// the last odd peak or valley of the path to the neighbouring odd point.
LatticePath swap_at_run(const LatticePath& pi, const RunFactorization& runs, int k) {
    int boundary = 0;
    for (int t = 0; t < k; ++t) boundary += runs.lengths[static_cast<size_t>(t)];
    std::vector<Step> steps = pi.steps();
    std::swap(steps[static_cast<size_t>(boundary) - 1], steps[static_cast<size_t>(boundary)]);
    return LatticePath(std::move(steps));
}

int greatest_odd_run(const RunFactorization& runs, int from) {
    for (int k = runs.last_index(); k >= from; --k)
        if (runs.lengths[static_cast<size_t>(k)] % 2 != 0) return k;
    return -1;
}

// Algorithm for the all-even rectangles: fixed iff every run has even length,
// otherwise toggle at the greatest odd-length run. Parity of the step counts
// keeps that run index >= 2, so the leading run survives.
LatticePath toggle_last_odd_run(const LatticePath& pi) {
    const RunFactorization runs = primal_factorization(pi);
    const int k = greatest_odd_run(runs, 0);
    if (k < 0) return pi;
    if (k < 2) throw std::logic_error("odd run at the leading boundary; domain has odd step counts");
    return swap_at_run(pi, runs, k);
}

// Algorithm for the odd-by-odd rectangles, split on the parity of mu_0. The
// guard keeps the leading N-run intact; with mu_0 even the greatest odd run
// index may be 2, and the swap is safe there because mu_1 is then odd of
// length >= 3.
LatticePath toggle_last_odd_run_guarded(const LatticePath& pi) {
    const RunFactorization runs = primal_factorization(pi);
    if (runs.run_count() == 0) return pi;
    if (runs.lengths[0] % 2 != 0) {
        const int k = greatest_odd_run(runs, 1);
        if (k <= 1) return pi;
        return swap_at_run(pi, runs, k);
    }
    const bool single_e_prefix = runs.run_count() >= 2 && runs.lengths[1] == 1;
    bool tail_even = true;
    for (int t = 3; t <= runs.last_index(); ++t)
        if (runs.lengths[static_cast<size_t>(t)] % 2 != 0) tail_even = false;
    if (single_e_prefix && tail_even) return pi;
    const int k = greatest_odd_run(runs, 2);
    if (k < 0) return pi;
    if (k == 2 && runs.lengths[1] == 1)
        throw std::logic_error("guarded swap would grow the leading run");
    return swap_at_run(pi, runs, k);
}

void require_endpoint(const LatticePath& pi, InvolutionCase c) {
    const int n = pi.norths();
    const int e = pi.easts();
    bool ok = false;
    switch (c) {
        case InvolutionCase::Phi1: ok = n == e && n % 2 == 0; break;
        case InvolutionCase::Phi2: ok = n == e && n % 2 == 1; break;
        case InvolutionCase::Phi3: ok = e == n + 1 && n % 2 == 1; break;
        case InvolutionCase::Phi4: ok = e == n + 1 && n % 2 == 0; break;
    }
    if (!ok)
        throw std::domain_error(std::string(involution_case_name(c)) + ": path endpoint (" +
                                std::to_string(e) + "," + std::to_string(n) + ") is outside the domain");
}

LatticePath strip_last(const LatticePath& pi, Step& last) {
    std::vector<Step> steps = pi.steps();
    last = steps.back();
    steps.pop_back();
    return LatticePath(std::move(steps));
}

LatticePath append(LatticePath pi, Step s) {
    std::vector<Step> steps = pi.steps();
    steps.push_back(s);
    return LatticePath(std::move(steps));
}

// gamma(omega) factored as N^{2j} E E beta; returns the step indices (0-based)
// of the first and second east step.
std::pair<size_t, size_t> first_two_easts(const LatticePath& g) {
    size_t first = g.steps().size();
    for (size_t i = 0; i < g.steps().size(); ++i) {
        if (g.steps()[i] == Step::E) {
            if (first == g.steps().size()) first = i;
            else return {first, i};
        }
    }
    throw std::domain_error("builder source must contain at least one east step");
}

LatticePath flip_second_east(const LatticePath& g) {
    auto [first, second] = first_two_easts(g);
    std::vector<Step> steps = g.steps();
    steps[second] = Step::N;
    return LatticePath(std::move(steps));
}

LatticePath flip_first_east(const LatticePath& g) {
    auto [first, second] = first_two_easts(g);
    std::vector<Step> steps = g.steps();
    steps[first] = Step::N;
    return LatticePath(std::move(steps));
}

LatticePath drop_last(const LatticePath& g) {
    std::vector<Step> steps = g.steps();
    steps.pop_back();
    return LatticePath(std::move(steps));
}

void require_source(Builder b, const LatticePath& omega) {
    const int n = omega.norths();
    const int e = omega.easts();
    if (b == Builder::Gamma) {
        if (n != e) throw std::domain_error("gamma source must have endpoint (n,n)");
        return;
    }
    if (e != n + 1) throw std::domain_error(std::string(builder_name(b)) + " source must have endpoint (n+1,n)");
    if (b == Builder::Varphi0 && omega.steps().back() != Step::E)
        throw std::domain_error("varphi0 source must end with an east step");
    if ((b == Builder::Varphi1 || b == Builder::Varphi2) && omega.steps().back() != Step::N)
        throw std::domain_error(std::string(builder_name(b)) + " source must end with a north step");
}

}  // namespace

InvolutionCase parse_involution_case(std::string_view text) {
    if (text == "Phi1") return InvolutionCase::Phi1;
    if (text == "Phi2") return InvolutionCase::Phi2;
    if (text == "Phi3") return InvolutionCase::Phi3;
    if (text == "Phi4") return InvolutionCase::Phi4;
    throw std::invalid_argument("unknown involution case (expected Phi1..Phi4)");
}

std::string_view involution_case_name(InvolutionCase c) {
    switch (c) {
        case InvolutionCase::Phi1: return "Phi1";
        case InvolutionCase::Phi2: return "Phi2";
        case InvolutionCase::Phi3: return "Phi3";
        case InvolutionCase::Phi4: return "Phi4";
    }
    return "?";
}

std::pair<int, int> case_domain(InvolutionCase c, int n) {
    switch (c) {
        case InvolutionCase::Phi1: return {2 * n, 2 * n};
        case InvolutionCase::Phi2: return {2 * n + 1, 2 * n + 1};
        case InvolutionCase::Phi3: return {2 * n + 1, 2 * n + 2};
        case InvolutionCase::Phi4: return {2 * n, 2 * n + 1};
    }
    return {0, 0};
}

LatticePath duplicate(const LatticePath& omega) {
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(omega.size()) * 2);
    for (Step s : omega.steps()) {
        steps.push_back(s);
        steps.push_back(s);
    }
    return LatticePath(std::move(steps));
}

LatticePath phi1(const LatticePath& pi) {
    require_endpoint(pi, InvolutionCase::Phi1);
    return toggle_last_odd_run(pi);
}

LatticePath phi2(const LatticePath& pi) {
    require_endpoint(pi, InvolutionCase::Phi2);
    return toggle_last_odd_run_guarded(pi);
}

LatticePath phi3(const LatticePath& pi) {
    require_endpoint(pi, InvolutionCase::Phi3);
    Step last = Step::N;
    LatticePath inner = strip_last(pi, last);
    LatticePath image = last == Step::N ? toggle_last_odd_run(inner) : toggle_last_odd_run_guarded(inner);
    return append(std::move(image), last);
}

LatticePath phi4(const LatticePath& pi) {
    require_endpoint(pi, InvolutionCase::Phi4);
    Step last = Step::N;
    LatticePath inner = strip_last(pi, last);
    LatticePath image = last == Step::E ? toggle_last_odd_run(inner) : toggle_last_odd_run_guarded(inner);
    return append(std::move(image), last);
}

LatticePath apply_case(InvolutionCase c, const LatticePath& pi) {
    switch (c) {
        case InvolutionCase::Phi1: return phi1(pi);
        case InvolutionCase::Phi2: return phi2(pi);
        case InvolutionCase::Phi3: return phi3(pi);
        case InvolutionCase::Phi4: return phi4(pi);
    }
    throw std::invalid_argument("bad involution case");
}

bool is_fixed(InvolutionCase c, const LatticePath& pi) { return apply_case(c, pi) == pi; }

Builder parse_builder(std::string_view text) {
    if (text == "gamma") return Builder::Gamma;
    if (text == "phi1") return Builder::Phi1;
    if (text == "phi2") return Builder::Phi2;
    if (text == "psi0") return Builder::Psi0;
    if (text == "psi1") return Builder::Psi1;
    if (text == "psi2") return Builder::Psi2;
    if (text == "varphi0") return Builder::Varphi0;
    if (text == "varphi1") return Builder::Varphi1;
    if (text == "varphi2") return Builder::Varphi2;
    throw std::invalid_argument("unknown builder");
}

std::string_view builder_name(Builder b) {
    switch (b) {
        case Builder::Gamma: return "gamma";
        case Builder::Phi1: return "phi1";
        case Builder::Phi2: return "phi2";
        case Builder::Psi0: return "psi0";
        case Builder::Psi1: return "psi1";
        case Builder::Psi2: return "psi2";
        case Builder::Varphi0: return "varphi0";
        case Builder::Varphi1: return "varphi1";
        case Builder::Varphi2: return "varphi2";
    }
    return "?";
}

LatticePath build_fixed(Builder b, const LatticePath& omega) {
    require_source(b, omega);
    const LatticePath g = duplicate(omega);
    switch (b) {
        case Builder::Gamma: return g;
        case Builder::Phi1: return flip_second_east(g);
        case Builder::Phi2: return flip_first_east(g);
        case Builder::Psi0: return append(g, Step::N);
        case Builder::Psi1: return append(flip_second_east(g), Step::E);
        case Builder::Psi2: return append(flip_first_east(g), Step::E);
        case Builder::Varphi0: return drop_last(g);
        case Builder::Varphi1: return drop_last(flip_second_east(g));
        case Builder::Varphi2: return drop_last(flip_first_east(g));
    }
    throw std::invalid_argument("bad builder");
}

bool builder_sump_odd(Builder b) {
    return b == Builder::Phi2 || b == Builder::Psi2 || b == Builder::Varphi2;
}

}  // namespace qcomb
