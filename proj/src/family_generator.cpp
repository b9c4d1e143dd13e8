#include "ulrich/family_generator.hpp"

#include <stdexcept>

namespace ulrich {

namespace {

Integer factorial(const Integer& v) {
    Integer r = 1;
    for (Integer i = 2; i <= v; ++i) r *= i;
    return r;
}

void require_window_preconditions(std::size_t n, const Integer& m, bool allow_conjectural) {
    if (n < 3) throw std::invalid_argument("family degrees need n >= 3");
    if (m * m > 4 * Integer(n)) throw std::invalid_argument("family degrees need m^2 <= 4n");
    if (!polarization(n, m, allow_conjectural).very_ample) {
        throw std::invalid_argument("xi_{" + std::to_string(n) + "," + m.str() + "} is not very ample");
    }
}

// (2d - (2m-3))^2 <= 8n + 1
bool first_window(std::size_t n, const Integer& m, const Integer& d) {
    Integer t = 2 * d - (2 * m - 3);
    return t * t <= 8 * Integer(n) + 1;
}

// (2d - 3(m-1))^2 compared with 4n - m^2 + 1
int second_window_cmp(std::size_t n, const Integer& m, const Integer& d) {
    Integer t = 2 * d - 3 * (m - 1);
    Integer lhs = t * t;
    Integer rhs = 4 * Integer(n) - m * m + 1;
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

// every admissible d satisfies |2d - (2m-3)| <= sqrt(8n+1)
Integer degree_scan_limit(std::size_t n, const Integer& m) {
    return (2 * m - 3 + isqrt(8 * Integer(n) + 1)) / 2 + 1;
}

}  // namespace

std::pair<Integer, Integer> delta_k_raw(std::size_t n, const Integer& m, const Integer& d) {
    Integer delta = (d - m) * (d - m + 3) / 2 + 1;
    Integer k = Integer(n) + 3 * m * (d + 1) - m * (5 * m - 3) / 2 - (d * d + 3 * d + 2);
    return {delta, k};
}

std::pair<Integer, Integer> delta_k(std::size_t n, const Integer& m, const Integer& d) {
    auto [delta, k] = delta_k_raw(n, m, d);
    const Integer nn = n;
    if (delta < 0 || delta > nn || k < 0 || k > nn || delta + k > nn) {
        throw ContractError("degree " + d.str() + " is outside the family window for (n,m)=(" +
                            std::to_string(n) + "," + m.str() + "): delta=" + delta.str() + ", k=" + k.str());
    }
    return {delta, k};
}

FamilyRecord make_record(std::size_t n, const Integer& m, const Integer& d) {
    auto [delta, k] = delta_k(n, m, d);
    const Integer rest = Integer(n) - delta - k;
    std::vector<Integer> mults;
    mults.reserve(n);
    for (Integer i = 0; i < delta; ++i) mults.emplace_back(2);
    for (Integer i = 0; i < k; ++i) mults.emplace_back(1);
    for (Integer i = 0; i < rest; ++i) mults.emplace_back(0);
    FamilyRecord r{Integer(n), m, d, delta, k, DivisorClass(d, std::move(mults)), k == 0};
    r.orbit_size = factorial(Integer(n)) / (factorial(delta) * factorial(k) * factorial(rest));
    return r;
}

std::vector<Integer> d_range(std::size_t n, const Integer& m, bool allow_conjectural) {
    require_window_preconditions(n, m, allow_conjectural);
    std::vector<Integer> out;
    const Integer limit = degree_scan_limit(n, m);
    for (Integer d = 1; d <= limit; ++d) {
        if (first_window(n, m, d) && second_window_cmp(n, m, d) < 0) out.push_back(d);
    }
    return out;
}

std::vector<FamilyRecord> theorem_family(std::size_t n, const Integer& m, bool allow_conjectural) {
    if (n == 2 && m == 3) return {make_record(2, 3, 3)};
    std::vector<FamilyRecord> out;
    for (const auto& d : d_range(n, m, allow_conjectural)) out.push_back(make_record(n, m, d));
    return out;
}

std::vector<FamilyRecord> boundary_candidates(std::size_t n, const Integer& m, bool allow_conjectural) {
    if (n == 2 && m == 3) return {make_record(2, 3, 3)};
    require_window_preconditions(n, m, allow_conjectural);
    std::vector<FamilyRecord> out;
    const Integer limit = degree_scan_limit(n, m);
    for (Integer d = 1; d <= limit; ++d) {
        if (!first_window(n, m, d) || second_window_cmp(n, m, d) != 0) continue;
        auto [delta, k] = delta_k_raw(n, m, d);
        if (delta >= 0 && k >= 0 && delta + k <= Integer(n)) out.push_back(make_record(n, m, d));
    }
    return out;
}

FamilyCount family_count(std::size_t n) {
    if (n < 3) throw std::invalid_argument("family_count needs n >= 3");
    Integer m = minimal_very_ample_m(n);
    return {m, d_range(n, m).size()};
}

}  // namespace ulrich
