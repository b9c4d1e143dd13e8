#pragma once

// Families L_{d,n,delta,k} = (d; 2^delta, 1^k, 0^{n-delta-k}) of Ulrich line
// bundles with respect to xi_{n,m}, for d in the admissible window
//   (2d - (2m-3))^2 <= 8n + 1   and   (2d - 3(m-1))^2 < 4n - m^2 + 1,
// with delta = (d-m)(d-m+3)/2 + 1 and k = n + 3m(d+1) - m(5m-3)/2 - (d^2+3d+2).

#include "ulrich/picard_lattice.hpp"

#include <cstddef>
#include <vector>

namespace ulrich {

class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct FamilyRecord {
    Integer n;
    Integer m;
    Integer d;
    Integer delta;
    Integer k;
    DivisorClass cls;  // canonical (d; 2^delta, 1^k, 0^{n-delta-k})
    bool boundary = false;  // k = 0
    /// Number of distinct permutations n! / (delta! k! (n-delta-k)!).
    Integer orbit_size;
};

/// delta and k as integers (no bound checks).
std::pair<Integer, Integer> delta_k_raw(std::size_t n, const Integer& m, const Integer& d);

/// (delta, k) after checking 0 <= delta <= n, 0 <= k <= n and delta + k <= n.
/// Throws ContractError otherwise.
std::pair<Integer, Integer> delta_k(std::size_t n, const Integer& m, const Integer& d);

/// Admissible degrees, ascending.  Requires n >= 3, m^2 <= 4n and xi_{n,m}
/// very ample, by the conjectural criterion only when allow_conjectural is set
/// (std::invalid_argument otherwise).
std::vector<Integer> d_range(std::size_t n, const Integer& m, bool allow_conjectural = false);

/// One record per admissible degree.  (n, m) = (2, 3) is handled separately and
/// yields the single boundary record (3;2,0).
std::vector<FamilyRecord> theorem_family(std::size_t n, const Integer& m, bool allow_conjectural = false);

/// Records with k = 0 where the second window becomes an equality; degrees
/// whose delta does not fit on n points are skipped.
std::vector<FamilyRecord> boundary_candidates(std::size_t n, const Integer& m, bool allow_conjectural = false);

struct FamilyCount {
    Integer m;
    std::size_t count;
};

/// Number of family shapes for the minimal very ample m.  Requires n >= 3.
FamilyCount family_count(std::size_t n);

/// Builds the record for (n, m, d) without checking the degree window.
FamilyRecord make_record(std::size_t n, const Integer& m, const Integer& d);

}  // namespace ulrich
