#pragma once

// Numerology of the rank-r Ulrich bundles E_r built as iterated extensions
//   0 -> E_r -> E_{r+1} -> L_{eps(r+1)} -> 0,   E_1 = L_1,
// of the two seed line bundles L_0, L_1.  Nothing here constructs bundles;
// only Euler characteristics and dimensions are computed.
//
// Index conventions (h is the dimension of Ext^1 between the seeds):
//   chi_E_L(r)     = chi(E_r (x) L*_{eps(r+1)})
//   chi_L_E(r)     = chi(L_{eps(r)} (x) E_r*)
//   chi_End(r)     = chi(E_r (x) E_r*)
//   h1_E_L(r)      = h1(E_r (x) L*_{eps(r+1)})
//   h1_E_matched(r) = h1(E_r (x) L*_{eps(r)}) = h1_E_L(r-1) - 1 for r >= 2

#include "ulrich/picard_lattice.hpp"

#include <optional>
#include <vector>

namespace ulrich {

struct SeedPair {
    DivisorClass L0;
    DivisorClass L1;
    Integer h;
    Integer mu;  // L_0.xi = L_1.xi
};

/// Seed line bundles for (n, m).  Requires n >= 2, m = 3 when n = 2, and for
/// n >= 3 both m^2 < 4n and xi_{n,m} very ample, and n >= m(m+2)/4 for even m.  Both seeds are checked to be
/// Ulrich and h is computed both in closed form and as -chi(L_1 - L_0); any
/// disagreement throws std::logic_error.  Invalid input throws
/// std::invalid_argument.
SeedPair seed_pair(std::size_t n, const Integer& m, bool allow_conjectural = false);

/// (m^2-3)/2 for odd m, (m^2-m-2)/2 for even m.
Integer seed_h(const Integer& m);

int epsilon(const Integer& r);

Integer chi_E_L(const Integer& r, const Integer& h);
Integer chi_L_E(const Integer& r, const Integer& h);
Integer chi_End(const Integer& r, const Integer& h);
Integer h1_E_L(const Integer& r, const Integer& h);
Integer h1_E_matched(const Integer& r, const Integer& h);

/// Dimension (r^2 - eps_r)(h-1)/2 + eps_{r+1} of the component of the moduli
/// space containing the general deformation of E_r.
Integer moduli_dim(const Integer& r, const Integer& h);

/// Upper bound on the dimension of the locus of non-split extensions of
/// L_{eps(r)} by a rank r-1 member.  Requires r >= 2.
Integer ext_stratum_bound(const Integer& r, const Integer& h);

struct RankProfile {
    Integer r;
    int epsilon = 0;
    Integer slope;
    Integer chi_E_L;
    Integer chi_L_E;
    Integer chi_End;
    Integer h1_E_L;
    Integer moduli_dim;
    std::optional<Integer> ext_dim_bound;  // absent for r = 1
};

RankProfile rank_profile(const Integer& r, const SeedPair& seeds);

/// Profiles for r = 1..r_max.
std::vector<RankProfile> wildness_table(std::size_t n, const Integer& m, std::size_t r_max,
                                        bool allow_conjectural = false);

}  // namespace ulrich
