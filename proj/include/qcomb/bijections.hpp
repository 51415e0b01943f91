#pragma once

#include "qcomb/lattice_path.hpp"
#include "qcomb/permutation.hpp"

#include <vector>

namespace qcomb {

/// Maps a 321-avoiding involution to its n-step partial Dyck path: step i is
/// N when sigma_i >= i and E when sigma_i < i. Throws std::domain_error if
/// the input is not a 321-avoiding involution.
LatticePath delta(const Permutation& sigma);

/// Inverse of delta. Labelling steps 1..n and walking right to left, each E
/// step is coupled with the nearest uncoupled N step to its left; couples are
/// transpositions, leftover N steps fixed points.
Permutation delta_inv(const LatticePath& tau);

/// N/E steps coupled by the facing rule (slope-1 segment below the path),
/// realized as stack matching. Step labels are 1-based.
struct StepMatching {
    std::vector<std::pair<int, int>> couples;
    std::vector<int> unmatched_n;
    std::vector<int> unmatched_e;
};

StepMatching face_matching(const LatticePath& path);

/// Maps an n-step partial Dyck path with k surplus N steps into the grand
/// Dyck rectangle with endpoint (ceil(n/2), floor(n/2)) by flipping the first
/// ceil(k/2) unmatched N steps to E. Preserves sump and peak positions.
LatticePath xi(const LatticePath& tau);

/// Inverse of xi: flips every unmatched E step back to N.
LatticePath xi_inv(const LatticePath& pi);

struct XiTrace {
    LatticePath image;
    std::vector<int> unmatched_n;
    std::vector<int> flipped;
};

XiTrace xi_with_trace(const LatticePath& tau);

/// The two-stage bijection xi . delta and its inverse. from_grand checks the
/// explicit length n against the path before unwinding.
LatticePath to_grand(const Permutation& sigma);
Permutation from_grand(const LatticePath& pi, int n);

}  // namespace qcomb
