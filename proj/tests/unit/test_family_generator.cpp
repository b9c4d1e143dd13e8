#include "ulrich/family_generator.hpp"

#include "ulrich/ulrich_verifier.hpp"

#include <doctest.h>

using namespace ulrich;

namespace {

// floor(sqrt(v)) by stepping, independent of the library's isqrt
long long step_sqrt(long long v) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Degrees d in [1, 4m] with |2d - 2m + 3| <= sqrt(8n+1) and |2d - 3m + 3| < sqrt(4n - m^2 + 1),
// the second written as: strictly inside unless 4n - m^2 + 1 is a square and equality holds.
std::vector<long long> oracle_d_range(long long n, long long m) {
    const long long s1 = step_sqrt(8 * n + 1);
    const long long v2 = 4 * n - m * m + 1;
    const long long s2 = step_sqrt(v2);
    const bool square = s2 * s2 == v2;
    std::vector<long long> out;
    for (long long d = 1; d <= 4 * m; ++d) {
        const long long a = std::llabs(2 * d - 2 * m + 3);
        const long long b = std::llabs(2 * d - 3 * m + 3);
        const bool in1 = a <= s1;
        const bool in2 = square ? b < s2 : b <= s2;
        if (in1 && in2) out.push_back(d);
    }
    return out;
}

std::vector<long long> as_ll(const std::vector<Integer>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.convert_to<long long>());
    return out;
}

std::vector<std::pair<std::size_t, long long>> admissible_pairs(std::size_t n_max) {
    std::vector<std::pair<std::size_t, long long>> out;
    for (std::size_t n = 3; n <= n_max; ++n) {
        for (long long m = 1; m * m <= 4 * static_cast<long long>(n); ++m) {
            if (polarization(n, m).very_ample) out.emplace_back(n, m);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("family_generator") {

TEST_CASE("d_range examples") {
    CHECK(as_ll(d_range(7, 4)) == std::vector<long long>{3, 4, 5, 6});
    CHECK(as_ll(d_range(10, 4)) == std::vector<long long>{3, 4, 5, 6});
    CHECK(as_ll(d_range(100, 19)) == std::vector<long long>{24, 25, 26, 27, 28, 29, 30});
}

TEST_CASE("d_range matches an independent scan") {
    for (auto [n, m] : admissible_pairs(200)) {
        CHECK_MESSAGE(as_ll(d_range(n, m)) == oracle_d_range(n, m), "n=" << n << " m=" << m);
    }
}

TEST_CASE("d_range preconditions") {
    CHECK_THROWS_AS(d_range(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(d_range(7, 6), std::invalid_argument);  // 36 > 28
    CHECK_THROWS_AS(d_range(20, 5), std::invalid_argument);  // not very ample
}

TEST_CASE("delta and k examples") {
    CHECK(delta_k(7, 4, 6) == std::pair<Integer, Integer>{6, 1});
    CHECK(make_record(7, 4, 6).cls == parse_class("(6;2^6,1)"));
    CHECK(delta_k(7, 4, 3) == std::pair<Integer, Integer>{0, 1});
    CHECK(make_record(7, 4, 3).cls == parse_class("(3;1,0^6)"));
    CHECK(delta_k(10, 4, 2) == std::pair<Integer, Integer>{0, 0});
    auto r = make_record(10, 4, 2);
    CHECK(r.boundary);
    CHECK(r.cls == DivisorClass::zero(10) + DivisorClass::uniform(10, 2, 0));
    CHECK_THROWS_AS(delta_k(7, 4, 8), ContractError);
    CHECK_THROWS_AS(delta_k(7, 4, 1), ContractError);
}

TEST_CASE("k has the completed-square form") {
    for (std::size_t n = 1; n <= 40; ++n) {
        for (int m = 1; m <= 14; ++m) {
            for (int d = -5; d <= 40; ++d) {
                auto [delta, k] = delta_k_raw(n, m, d);
                const Integer t = 2 * d - 3 * (m - 1);
                CHECK(4 * k == 4 * Integer(n) - m * m + 1 - t * t);
                CHECK(2 * delta == (d - m) * (d - m + 3) + 2);
            }
        }
    }
}

TEST_CASE("family examples") {
    auto fam = theorem_family(7, 4);
    REQUIRE(fam.size() == 4);
    std::vector<std::string> got;
    for (const auto& r : fam) got.push_back(to_string(r.cls));
    CHECK(got == std::vector<std::string>{"(3;1,0^6)", "(4;2,1^3,0^3)", "(5;2^3,1^3,0)", "(6;2^6,1)"});
    CHECK(fam[1].orbit_size == 140);
    CHECK(fam[0].orbit_size == 7);

    auto special = theorem_family(2, 3);
    REQUIRE(special.size() == 1);
    CHECK(special[0].cls == parse_class("(3;2,0)"));
    CHECK(special[0].boundary);

    auto big = theorem_family(100, 19);
    CHECK(big.size() == 7);
    auto pol = polarization(100, 19);
    for (const auto& r : big) CHECK(verify(r.cls, pol).overall == Overall::ulrich);
}

TEST_CASE("records satisfy the family invariants") {
    for (auto [n, m] : admissible_pairs(60)) {
        const Integer nn = n;
        for (const auto& r : theorem_family(n, m)) {
            CHECK(r.delta >= 0);
            CHECK(r.delta <= nn);
            CHECK(r.k >= 1);
            CHECK(r.k <= nn);
            CHECK(r.delta + r.k <= nn);
            CHECK(vdim(r.cls) == m * m - nn - 1);
            CHECK(nn - r.delta - r.k == r.delta + 3 * m * (m - 1) / 2 - m * r.d);
            CHECK_FALSE(r.boundary);
        }
    }
}

TEST_CASE("boundary candidates") {
    auto b = boundary_candidates(10, 4);
    REQUIRE(b.size() == 2);
    CHECK(b[0].cls == DivisorClass::uniform(10, 2, 0));
    CHECK(b[1].cls == DivisorClass::uniform(10, 7, 2));
    CHECK(b[0].boundary);
    CHECK(b[1].boundary);
    CHECK(b[0].k == 0);
    CHECK(b[1].k == 0);

    CHECK(boundary_candidates(7, 4).empty());

    auto s = boundary_candidates(2, 3);
    REQUIRE(s.size() == 1);
    CHECK(s[0].cls == parse_class("(3;2,0)"));

    for (auto [n, m] : admissible_pairs(60)) {
        for (const auto& r : boundary_candidates(n, m)) {
            CHECK(r.k == 0);
            CHECK(vdim(r.cls) == m * m - Integer(n) - 1);
        }
    }
}

TEST_CASE("family count examples") {
    auto a = family_count(7);
    CHECK(a.m == 4);
    CHECK(a.count == 4);
    auto b = family_count(100);
    CHECK(b.m == 18);
    CHECK(b.count == 8);
    auto c = family_count(10);
    CHECK(c.m == 4);
    CHECK(c.count == 4);
    CHECK_THROWS(family_count(2));
}

}
