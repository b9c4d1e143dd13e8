#pragma once

// Cohomology of line bundles on X_n decided by a short ladder of sound rules.
// Anything the rules cannot settle is reported as unknown rather than guessed.

#include "ulrich/picard_lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ulrich {

enum class Rule {
    negative_degree,              // residual degree < 0
    multiplicity_exceeds_degree,  // a point of multiplicity > d on a degree-d curve
    plane_curves,                 // no assigned points: (d+1)(d+2)/2 sections
    simple_points,                // general simple points impose independent conditions
    double_points_regular,        // (d; 2^a, 1^b, 0^c) with b >= 1 and vdim >= 0
    riemann_roch,                 // h1 = h0 - chi when h2 = 0
    serre_duality,                // h2(L) = h0(K - L), h1(L) = h1(K - L)
    unknown,
};

std::string to_string(Rule r);

/// One cohomology group: a dimension or unknown, plus the rule that decided it.
struct Entry {
    std::optional<Integer> value;
    Rule rule = Rule::unknown;
    /// Negative exceptional multiplicities were stripped before deciding.
    bool stripped = false;

    bool known() const { return value.has_value(); }
};

struct CohomologyReport {
    Entry h0;
    Entry h1;
    Entry h2;
};

struct FixedPartSplit {
    DivisorClass residual;  // negative multiplicities replaced by 0
    DivisorClass fixed;     // c - residual, supported on exceptional curves
};

/// Splits off exceptional curves E_i with m_i < 0, which lie in the base locus.
FixedPartSplit strip_fixed_exceptional(const DivisorClass& c);

Entry h0(const DivisorClass& c);
Entry h1(const DivisorClass& c);
Entry h2(const DivisorClass& c);
CohomologyReport cohomology(const DivisorClass& c);

/// std::nullopt when h0 is unknown.
std::optional<bool> is_empty(const DivisorClass& c);

// ---------------------------------------------------------------------------

enum class SmoothnessStatus { certified_smooth_irreducible, certified_by_bertini, uncertified };

std::string to_string(SmoothnessStatus s);

struct SmoothnessCertificate {
    SmoothnessStatus status = SmoothnessStatus::uncertified;
    std::string rule;
};

/// Certifies that the general member of |c| is smooth and irreducible when c
/// is, up to permutation, (d; 2^a, 1^b, 0^c) with b >= 1 and vdim >= 0, or a
/// point-free system of degree >= 1.  Classes meeting a (-1)-curve of degree
/// <= 6 negatively are never certified (that curve splits off).
SmoothnessCertificate smooth_irreducible_member(const DivisorClass& c);

// ---------------------------------------------------------------------------
// Monte Carlo interpolation oracle (never used by the ladder above)

class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InterpolationOptions {
    std::uint64_t prime = 2147483647;  // 2^31 - 1
    unsigned trials = 3;
    std::uint64_t seed = 0;
};

/// h0 of c at random points over GF(prime): the number of monomials of degree
/// <= d minus the rank of the fat-point vanishing conditions, minimized over
/// trials (special points can only lower the rank).  Negative multiplicities
/// are stripped first.  Requires prime >= 2^20, prime < 2^32, residual d >= 0.
Integer h0_interpolation(const DivisorClass& c, const InterpolationOptions& opts);

/// Primality by trial division; used to validate oracle parameters.
bool is_prime(std::uint64_t p);

}  // namespace ulrich
