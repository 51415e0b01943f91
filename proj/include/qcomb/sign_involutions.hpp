#pragma once

#include "qcomb/lattice_path.hpp"

#include <string_view>

namespace qcomb {

/// The four sump-parity-reversing involutions on grand Dyck rectangles.
/// Domains, with endpoint written (#E, #N):
///   Phi1: (2n, 2n)    Phi2: (2n+1, 2n+1)    Phi3: (2n+2, 2n+1)    Phi4: (2n+1, 2n)
enum class InvolutionCase { Phi1, Phi2, Phi3, Phi4 };

InvolutionCase parse_involution_case(std::string_view text);
std::string_view involution_case_name(InvolutionCase c);

/// Domain of the case at scale n as (norths, easts).
std::pair<int, int> case_domain(InvolutionCase c, int n);

/// Every step repeated twice in place; doubles sump.
LatticePath duplicate(const LatticePath& omega);

LatticePath phi1(const LatticePath& pi);
LatticePath phi2(const LatticePath& pi);
LatticePath phi3(const LatticePath& pi);
LatticePath phi4(const LatticePath& pi);

LatticePath apply_case(InvolutionCase c, const LatticePath& pi);

bool is_fixed(InvolutionCase c, const LatticePath& pi);

/// Constructive fixed-point families. Sources, with B(n,m) meaning endpoint
/// (m,n): Gamma takes B(n,n); Phi1/Phi2/Psi0..Psi2 take B(n,n+1); Varphi0
/// takes B(n,n+1) ending with E, Varphi1/Varphi2 ending with N.
enum class Builder { Gamma, Phi1, Phi2, Psi0, Psi1, Psi2, Varphi0, Varphi1, Varphi2 };

Builder parse_builder(std::string_view text);
std::string_view builder_name(Builder b);

LatticePath build_fixed(Builder b, const LatticePath& omega);

/// Parity of sump over the builder's image: false = even, true = odd.
bool builder_sump_odd(Builder b);

}  // namespace qcomb
