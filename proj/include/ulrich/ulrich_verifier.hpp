#pragma once

// Ulrich test for line bundles O(C) on X_n with respect to xi_{n,m}.
//
// O(C) is Ulrich iff C is effective and
//   (i)   C.H = H.(3H + K)/2
//   (ii)  (C^2 - C.K)/2 + 1 - H^2 = 0
//   (iii) h1(O_C(K + H)) = 0
//   (iv)  H0(K + 2H) -> H0(O_C(K + 2H)) is injective.
// Since h1(K + H) = h0(-H) = 0 here, (iii) is equivalent to h0(C - H) = 0 and
// the kernel in (iv) is H0(K + 2H - C).

#include "ulrich/cohomology.hpp"
#include "ulrich/picard_lattice.hpp"

#include <optional>
#include <string>

namespace ulrich {

enum class Check { pass, fail, unknown, skipped };

std::string to_string(Check c);

struct ConditionResult {
    Check outcome = Check::skipped;
    std::string rule;
};

enum class Overall { ulrich, not_ulrich, undecided };

std::string to_string(Overall o);

struct UlrichVerdict {
    DivisorClass cls;
    Integer n;
    Integer m;
    ConditionResult degree;       // (i)
    ConditionResult chi;          // (ii)
    ConditionResult speciality;   // (iii)
    ConditionResult restriction;  // (iv)
    SmoothnessCertificate smoothness;
    Overall overall = Overall::undecided;
    /// "i", "ii", "iii" or "iv" when overall is not_ulrich.
    std::string failing;
    /// Why the verdict is undecided ("iii", "iv", "smoothness").
    std::string reason;
    /// Set when a known geometric certification replaced the smoothness rule.
    std::optional<std::string> known_certification;
};

bool check_degree(const DivisorClass& c, const Polarization& pol);
bool check_chi(const DivisorClass& c, const Polarization& pol);
ConditionResult check_speciality(const DivisorClass& c, const Polarization& pol);
ConditionResult check_restriction(const DivisorClass& c, const Polarization& pol);

/// Rule-based verdict.  Throws std::invalid_argument for the zero class, a
/// polarization that is not very ample, or mismatched n.
UlrichVerdict verify(const DivisorClass& c, const Polarization& pol);

/// Classes whose general member is known to be smooth although no
/// implemented rule certifies it: (7;2^10) on X_10 for m = 4 (canonical genus
/// 5 curves in P^4) and (3;2,0) on X_2 for m = 3 (nodal cubics).
std::optional<std::string> known_smooth_certification(const DivisorClass& c, const Polarization& pol);

/// verify() followed by promotion of Undecided(smoothness) to Ulrich for the
/// classes listed by known_smooth_certification().
UlrichVerdict verify_with_known_certifications(const DivisorClass& c, const Polarization& pol);

}  // namespace ulrich
