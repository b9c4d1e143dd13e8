#pragma once

// Exhaustive search for Ulrich line bundles with respect to xi_{n,m}.
//
// Conditions (i) and (ii) pin down, for each degree d, the sum S1 and the sum
// of squares S2 of the multiplicities.  Candidates are the weakly decreasing
// integer vectors with those two sums; each is then run through verify().

#include "ulrich/picard_lattice.hpp"
#include "ulrich/ulrich_verifier.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ulrich {

/// Castelnuovo's bound on the arithmetic genus of a nondegenerate irreducible
/// curve of the given degree in P^ambient_dim.  Requires ambient_dim >= 2 and
/// degree >= ambient_dim (std::invalid_argument otherwise).
Integer castelnuovo_bound(const Integer& degree, const Integer& ambient_dim);

struct SearchCaps {
    /// Largest multiplicity; default max(2, d) per degree.
    std::optional<Integer> mult_max;
    /// Entries are >= -mult_min; default d per degree.
    std::optional<Integer> mult_min;
    /// Overrides the derived degree bound.
    std::optional<Integer> d_max;
    /// Stop after this many candidates per degree and report truncation.
    std::size_t max_candidates_per_degree = 1'000'000;
};

/// Bookkeeping for one degree of the search.
struct DegreeSearch {
    Integer d;
    Integer sum;             // S1 = sum m_i
    Integer sum_of_squares;  // S2 = sum m_i^2
    Integer mult_max;
    Integer mult_min;
    std::size_t candidates = 0;
    /// The caps contain the box |m_i| <= sqrt(S2), so nothing was cut off.
    bool exhaustive = false;
    bool truncated = false;
};

struct DegreeBound {
    Integer d_max;
    /// Embedding dimension h0(xi) - 1 used by the Castelnuovo bound.
    Integer ambient_dim;
    /// Largest admissible degree of a degenerate curve (d <= m).
    Integer degenerate_d_max;
    /// The argument behind d_max is only proved for m = 4.
    bool heuristic = false;
    std::string note;
};

/// Arithmetic genus forced by (i) and (ii): (m-3)(2d-m)/2.
Integer forced_genus(const Integer& m, const Integer& d);

/// Degree bound combining Castelnuovo (nondegenerate curves) and d <= m
/// (curves in a hyperplane section).
DegreeBound degree_bound(const Polarization& pol, const SearchCaps& caps = {});

/// S1 and S2 forced by (i) and (ii) for degree d.
std::pair<Integer, Integer> forced_sums(const Polarization& pol, const Integer& d);

struct CandidateSet {
    std::vector<DivisorClass> classes;  // canonical, ordered by (d, mults)
    std::vector<DegreeSearch> degrees;
    DegreeBound bound;
};

CandidateSet enumerate_candidates(const Polarization& pol, const SearchCaps& caps = {});

/// All weakly decreasing vectors of the given length with entries in [lo, hi],
/// sum `sum` and sum of squares `sum_sq`.  Stops after `limit` results.
std::vector<std::vector<Integer>> enumerate_fixed_sums(std::size_t length, const Integer& lo, const Integer& hi,
                                                       const Integer& sum, const Integer& sum_sq,
                                                       std::size_t limit, bool* truncated = nullptr);

struct ClassificationReport {
    Integer n;
    Integer m;
    std::vector<DivisorClass> ulrich;
    /// Subset of `ulrich` promoted by known_smooth_certification().
    std::vector<DivisorClass> known_certified;
    std::vector<std::pair<DivisorClass, std::string>> near_misses;  // failing condition
    std::vector<std::pair<DivisorClass, std::string>> undecided;    // reason
    std::vector<DegreeSearch> degrees;
    DegreeBound bound;
    SearchCaps caps;
};

ClassificationReport classify(const Polarization& pol, const SearchCaps& caps = {});

}  // namespace ulrich
