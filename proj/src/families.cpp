#include "qcomb/families.hpp"

#include <stdexcept>

namespace qcomb {

namespace {

constexpr int kSFamilyCap = 10;

// Incremental pattern test over a partial assignment: val[i] is the value at
// 1-based position i, 0 when undecided. Returns true iff placing v at pos
// completes an occurrence of the pattern with already-decided entries.
// Containment is monotone under extension, so pruning on it is exact.
class PartialPattern {
public:
    PartialPattern(int n, Pattern pattern) : n_(n), pattern_(pattern), val_(static_cast<size_t>(n) + 1, 0) {}

    int value(int pos) const { return val_[static_cast<size_t>(pos)]; }
    void place(int pos, int v) { val_[static_cast<size_t>(pos)] = v; }
    void clear(int pos) { val_[static_cast<size_t>(pos)] = 0; }

    bool completes(int pos, int v) const {
        return pattern_ == Pattern::P321 ? completes321(pos, v) : completes123(pos, v);
    }

private:
    bool completes321(int pos, int v) const {
        int max_left = 0;
        for (int i = 1; i < pos; ++i) {
            const int w = val_[static_cast<size_t>(i)];
            if (!w) continue;
            if (w > v && max_left > w) return true;  // v is the 1 of an existing 32
            if (w > max_left) max_left = w;
        }
        int max_below = 0;  // largest value < v seen while scanning right
        for (int k = pos + 1; k <= n_; ++k) {
            const int w = val_[static_cast<size_t>(k)];
            if (!w) continue;
            if (max_left > v && w < v) return true;  // v is the 2
            if (w < v) {
                if (w < max_below) return true;  // v is the 3 of a later 21
                max_below = w;
            }
        }
        return false;
    }

    bool completes123(int pos, int v) const {
        int min_left = n_ + 1;
        for (int i = 1; i < pos; ++i) {
            const int w = val_[static_cast<size_t>(i)];
            if (!w) continue;
            if (w < v && min_left < w) return true;
            if (w < min_left) min_left = w;
        }
        int min_above = n_ + 1;
        for (int k = pos + 1; k <= n_; ++k) {
            const int w = val_[static_cast<size_t>(k)];
            if (!w) continue;
            if (min_left < v && w > v) return true;
            if (w > v) {
                if (w > min_above) return true;
                min_above = w;
            }
        }
        return false;
    }

    int n_;
    Pattern pattern_;
    std::vector<int> val_;
};

// Fixed-point / 2-cycle recursion over involutions. Branching at the smallest
// unassigned position, fixed point first and partners ascending, emits
// one-line notation in lexicographic order.
class InvolutionWalk {
public:
    InvolutionWalk(int n, std::optional<Pattern> avoid, const std::function<void(const Permutation&)>& visit)
        : n_(n), visit_(visit) {
        if (avoid) partial_.emplace(n, *avoid);
        else plain_.assign(static_cast<size_t>(n) + 1, 0);
    }

    void run() { descend(1); }

private:
    int value(int pos) const { return partial_ ? partial_->value(pos) : plain_[static_cast<size_t>(pos)]; }
    void place(int pos, int v) {
        if (partial_) partial_->place(pos, v);
        else plain_[static_cast<size_t>(pos)] = v;
    }
    void clear(int pos) {
        if (partial_) partial_->clear(pos);
        else plain_[static_cast<size_t>(pos)] = 0;
    }

    void emit() {
        std::vector<int> e(static_cast<size_t>(n_));
        for (int i = 1; i <= n_; ++i) e[static_cast<size_t>(i) - 1] = value(i);
        visit_(Permutation(std::move(e)));
    }

    void descend(int pos) {
        while (pos <= n_ && value(pos) != 0) ++pos;
        if (pos > n_) {
            emit();
            return;
        }
        place(pos, pos);
        if (!partial_ || !partial_->completes(pos, pos)) descend(pos + 1);
        clear(pos);
        for (int q = pos + 1; q <= n_; ++q) {
            if (value(q) != 0) continue;
            place(pos, q);
            place(q, pos);
            if (!partial_ || (!partial_->completes(pos, q) && !partial_->completes(q, pos))) descend(pos + 1);
            clear(pos);
            clear(q);
        }
    }

    int n_;
    const std::function<void(const Permutation&)>& visit_;
    std::optional<PartialPattern> partial_;
    std::vector<int> plain_;
};

// Plain lexicographic walk over S_n, pruning as soon as the prefix contains
// the pattern.
class PermutationWalk {
public:
    PermutationWalk(int n, std::optional<Pattern> avoid, const std::function<void(const Permutation&)>& visit)
        : n_(n), visit_(visit), used_(static_cast<size_t>(n) + 1, 0) {
        if (avoid) partial_.emplace(n, *avoid);
        prefix_.reserve(static_cast<size_t>(n));
    }

    void run() { descend(1); }

private:
    void descend(int pos) {
        if (pos > n_) {
            visit_(Permutation(prefix_));
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<size_t>(v)]) continue;
            if (partial_) {
                partial_->place(pos, v);
                if (partial_->completes(pos, v)) {
                    partial_->clear(pos);
                    continue;
                }
            }
            used_[static_cast<size_t>(v)] = 1;
            prefix_.push_back(v);
            descend(pos + 1);
            prefix_.pop_back();
            used_[static_cast<size_t>(v)] = 0;
            if (partial_) partial_->clear(pos);
        }
    }

    int n_;
    const std::function<void(const Permutation&)>& visit_;
    std::vector<char> used_;
    std::vector<int> prefix_;
    std::optional<PartialPattern> partial_;
};

}  // namespace

Family parse_family(std::string_view text) {
    if (text == "I321") return Family::I321;
    if (text == "I123") return Family::I123;
    if (text == "S321") return Family::S321;
    if (text == "S123") return Family::S123;
    if (text == "Inv") return Family::Inv;
    if (text == "All") return Family::All;
    throw std::invalid_argument("unknown family (expected I321, I123, S321, S123, Inv or All)");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::I321: return "I321";
        case Family::I123: return "I123";
        case Family::S321: return "S321";
        case Family::S123: return "S123";
        case Family::Inv: return "Inv";
        case Family::All: return "All";
    }
    return "?";
}

Stat parse_stat(std::string_view text) {
    if (text == "inv") return Stat::Inv;
    if (text == "des") return Stat::Des;
    if (text == "maj") return Stat::Maj;
    if (text == "ldes") return Stat::Ldes;
    if (text == "lead") return Stat::Lead;
    throw std::invalid_argument("unknown statistic (expected inv, des, maj, ldes or lead)");
}

std::string_view stat_name(Stat s) {
    switch (s) {
        case Stat::Inv: return "inv";
        case Stat::Des: return "des";
        case Stat::Maj: return "maj";
        case Stat::Ldes: return "ldes";
        case Stat::Lead: return "lead";
    }
    return "?";
}

long long stat_value(const StatRecord& r, Stat s) {
    switch (s) {
        case Stat::Inv: return r.inv;
        case Stat::Des: return r.des;
        case Stat::Maj: return r.maj;
        case Stat::Ldes: return r.ldes;
        case Stat::Lead: return r.lead.value_or(0);
    }
    return 0;
}

void for_each_member(Family f, int n, const std::function<void(const Permutation&)>& visit) {
    if (n < 0) throw std::invalid_argument("family size must be non-negative");
    switch (f) {
        case Family::I321:
            InvolutionWalk(n, Pattern::P321, visit).run();
            return;
        case Family::I123:
            InvolutionWalk(n, Pattern::P123, visit).run();
            return;
        case Family::Inv:
            InvolutionWalk(n, std::nullopt, visit).run();
            return;
        case Family::S321:
        case Family::S123:
            if (n > kSFamilyCap)
                throw std::domain_error("S-family enumeration is capped at n <= 10");
            PermutationWalk(n, f == Family::S321 ? Pattern::P321 : Pattern::P123, visit).run();
            return;
        case Family::All:
            PermutationWalk(n, std::nullopt, visit).run();
            return;
    }
}

std::vector<Permutation> enumerate_family(Family f, int n) {
    std::vector<Permutation> out;
    for_each_member(f, n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> enumerate_filtered(Family f, int n, Stat s, long long value) {
    std::vector<Permutation> out;
    for_each_member(f, n, [&](const Permutation& p) {
        if (stat_value(stats(p), s) == value) out.push_back(p);
    });
    return out;
}

}  // namespace qcomb
