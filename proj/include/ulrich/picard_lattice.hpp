#pragma once

// Picard lattice of the plane blown up at n very general points.
//
// A class (d; m_1, ..., m_n) stands for dL - sum m_i E_i, where L is the
// pull-back of a line and E_i the exceptional curves.  The intersection form
// is diag(1, -1, ..., -1) in this basis.

#include "ulrich/integer.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulrich {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisorClass {
public:
    /// Throws std::invalid_argument when mults is empty (n >= 1 required).
    DivisorClass(Integer degree, std::vector<Integer> mults);

    /// (d; 0^n)
    static DivisorClass zero(std::size_t n);
    /// (d; m^n)
    static DivisorClass uniform(std::size_t n, Integer d, Integer m);

    std::size_t n() const { return mults_.size(); }
    const Integer& degree() const { return degree_; }
    std::span<const Integer> mults() const { return mults_; }
    const Integer& mult(std::size_t i) const { return mults_.at(i); }

    bool is_zero() const;

    DivisorClass operator-() const;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Integer& k, const DivisorClass& a);

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    /// Lexicographic on (n, d, mults); used only for deterministic ordering.
    friend bool operator<(const DivisorClass& a, const DivisorClass& b);

private:
    Integer degree_;
    std::vector<Integer> mults_;
};

/// Multiplicities sorted weakly decreasing.  Idempotent.
DivisorClass canonical_form(const DivisorClass& c);

/// True when the two classes agree up to a permutation of the points.
bool same_up_to_permutation(const DivisorClass& a, const DivisorClass& b);

/// Parses "(d;t1,t2,...)" where each term is an integer, optionally followed
/// by "^k" (k >= 1) for k repeated entries.  "(-1)^3" and "0^{10}" are accepted.
DivisorClass parse_class(std::string_view text);

/// Exponential notation in the stored order, e.g. "(6;2^6,1)" or "(7;2^{10})".
std::string to_string(const DivisorClass& c);

/// to_string(canonical_form(c)).
std::string canonical_text(const DivisorClass& c);

/// a.d * b.d - sum a.m_i b.m_i.  Throws DimensionError when a.n != b.n.
Integer intersect(const DivisorClass& a, const DivisorClass& b);

/// K_n = (-3; (-1)^n).  Throws std::invalid_argument for n == 0.
DivisorClass canonical_class(std::size_t n);

/// Euler characteristic by Riemann-Roch: (d(d+3) - sum m_i(m_i+1))/2 + 1.
Integer chi(const DivisorClass& c);

/// Virtual dimension chi(c) - 1.
Integer vdim(const DivisorClass& c);

/// Adjunction: (c.c + c.K)/2 + 1.
Integer arithmetic_genus(const DivisorClass& c);

/// K_n - c.
DivisorClass serre_dual(const DivisorClass& c);

// ---------------------------------------------------------------------------
// Polarizations xi_{n,m} = (m; 1^n)

enum class AmplenessCriterion { proved_bound, small_n_table, conjectural_flag };

std::string to_string(AmplenessCriterion c);

struct Polarization {
    DivisorClass base;
    Integer m;
    bool ample = false;
    bool very_ample = false;
    AmplenessCriterion criterion_used = AmplenessCriterion::proved_bound;

    std::size_t n() const { return base.n(); }
};

/// Builds xi_{n,m} and decides (very) ampleness in exact arithmetic.
///
/// Ample: n >= 3 and m^2 > n, or n in {1,2} and m >= 2 resp. 3.
/// Very ample (proved): n >= 3 and m >= 2 sqrt(n+4) - 3, or the table
/// (n = 1, m >= 2; n = 2, m >= 3; m = 4 with n <= 10).
/// With allow_conjectural, n >= 3 is also accepted when m(m+3)/2 - n >= 5.
Polarization polarization(std::size_t n, const Integer& m, bool allow_conjectural = false);

/// Smallest m for which xi_{n,m} is very ample under the proved criterion.
Integer minimal_very_ample_m(std::size_t n);

/// Dimension of the complete system |xi_{n,m}| plus one, i.e. the number of
/// sections (m+1)(m+2)/2 - n; valid whenever that number is nonnegative.
Integer sections_of_polarization(const Polarization& pol);

}  // namespace ulrich
