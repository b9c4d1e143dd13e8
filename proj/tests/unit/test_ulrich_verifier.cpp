#include "ulrich/ulrich_verifier.hpp"

#include "ulrich/family_generator.hpp"

#include <doctest.h>

using namespace ulrich;

namespace {

DivisorClass cls(const char* text) { return parse_class(text); }

}  // namespace

TEST_SUITE("ulrich_verifier") {

TEST_CASE("condition (i)") {
    auto p = polarization(7, 4);
    CHECK(check_degree(cls("(6;2^6,1)"), p));
    CHECK_FALSE(check_degree(cls("(1;0^7)"), p));
    CHECK(check_degree(cls("(3;0,2)"), polarization(2, 3)));
    // the closed form C.xi = 3m(m-1)/2 - n
    for (std::size_t n = 3; n <= 12; ++n) {
        auto q = polarization(n, 5);
        for (int d = 0; d <= 9; ++d) {
            for (int s = -3; s <= 30; ++s) {
                std::vector<Integer> m(n, Integer(0));
                m[0] = s;
                DivisorClass c(d, m);
                CHECK(check_degree(c, q) == (intersect(c, q.base) == 30 - Integer(n)));
            }
        }
    }
}

TEST_CASE("condition (ii)") {
    auto p = polarization(7, 4);
    CHECK(check_chi(cls("(5;2^3,1^3,0)"), p));
    CHECK(arithmetic_genus(cls("(5;2^3,1^3,0)")) == 3);
    CHECK(check_chi(cls("(6;2^6,1)"), p));
    CHECK(arithmetic_genus(cls("(6;2^6,1)")) == 4);
    CHECK_FALSE(check_chi(cls("(1;0^7)"), p));
    CHECK(arithmetic_genus(cls("(1;0^7)")) == 0);
}

TEST_CASE("condition (iii)") {
    auto p7 = polarization(7, 4);
    for (const auto& r : theorem_family(7, 4)) CHECK(check_speciality(r.cls, p7).outcome == Check::pass);
    for (std::size_t n = 7; n <= 10; ++n) {
        std::vector<Integer> m(6, Integer(2));
        m.insert(m.end(), n - 6, Integer(1));
        CHECK(check_speciality(DivisorClass(6, m), polarization(n, 4)).outcome == Check::pass);
    }
    auto r = check_speciality(DivisorClass::uniform(10, 7, 2), polarization(10, 4));
    CHECK(r.outcome == Check::pass);
    CHECK(r.rule.find("(3;1^{10})") != std::string::npos);
    CHECK(check_speciality(cls("(4;1^6,-1)"), p7).outcome == Check::fail);
}

TEST_CASE("condition (iv)") {
    auto p7 = polarization(7, 4);
    for (const auto& r : theorem_family(7, 4)) CHECK(check_restriction(r.cls, p7).outcome == Check::pass);
    auto f = check_restriction(cls("(5;3,1^6)"), p7);
    CHECK(f.outcome == Check::fail);
    CHECK(f.rule.find("(0;0^6,-2)") != std::string::npos);
    auto e = check_restriction(DivisorClass::zero(10) + DivisorClass::uniform(10, 2, 0), polarization(10, 4));
    CHECK(e.outcome == Check::pass);
    CHECK(e.rule.find("(3;1^{10})") != std::string::npos);
    CHECK(check_restriction(cls("(6;2^6,1)"), p7).rule == "2m-3 < d");
}

TEST_CASE("verify examples") {
    auto v = verify(cls("(6;2^6,1)"), polarization(7, 4));
    CHECK(v.overall == Overall::ulrich);
    CHECK(v.failing.empty());

    auto w = verify(cls("(5;3,1^6)"), polarization(7, 4));
    CHECK(w.overall == Overall::not_ulrich);
    CHECK(w.failing == "iv");

    auto u = verify(DivisorClass::uniform(10, 7, 2), polarization(10, 4));
    CHECK(u.overall == Overall::undecided);
    CHECK(u.reason == "smoothness");
    CHECK(u.degree.outcome == Check::pass);
    CHECK(u.chi.outcome == Check::pass);
    CHECK(u.speciality.outcome == Check::pass);
    CHECK(u.restriction.outcome == Check::pass);
    CHECK(u.smoothness.status == SmoothnessStatus::uncertified);

    auto k = verify_with_known_certifications(DivisorClass::uniform(10, 7, 2), polarization(10, 4));
    CHECK(k.overall == Overall::ulrich);
    REQUIRE(k.known_certification.has_value());
    CHECK(k.known_certification->find("genus 5") != std::string::npos);
}

TEST_CASE("verify short-circuits on the first failing condition") {
    auto v = verify(cls("(1;0^7)"), polarization(7, 4));
    CHECK(v.overall == Overall::not_ulrich);
    CHECK(v.failing == "i");
    CHECK(v.chi.outcome == Check::skipped);
    CHECK(v.speciality.outcome == Check::skipped);

    auto w = verify(cls("(4;1^6,-1)"), polarization(7, 4));
    CHECK(w.failing == "iii");
    CHECK(w.restriction.outcome == Check::skipped);
}

TEST_CASE("del Pezzo range seeds") {
    auto p = polarization(2, 3);
    for (const char* text : {"(3;2,0)", "(3;0,2)"}) {
        auto v = verify(cls(text), p);
        CHECK(v.overall == Overall::undecided);
        CHECK(v.reason == "smoothness");
        CHECK(verify_with_known_certifications(cls(text), p).overall == Overall::ulrich);
    }
}

TEST_CASE("whitelist is narrow") {
    CHECK_FALSE(known_smooth_certification(DivisorClass::uniform(10, 7, 2), polarization(10, 5)).has_value());
    CHECK_FALSE(known_smooth_certification(cls("(3;2,0)"), polarization(2, 4)).has_value());
    CHECK_FALSE(known_smooth_certification(cls("(6;2^6,1)"), polarization(7, 4)).has_value());
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(verify(DivisorClass::zero(7), polarization(7, 4)), std::invalid_argument);
    CHECK_THROWS_AS(verify(cls("(6;2^6,1)"), polarization(7, 2)), std::invalid_argument);
    CHECK_THROWS_AS(verify(cls("(6;2^6)"), polarization(7, 4)), DimensionError);
}

TEST_CASE("permuted multiplicities give the same verdict") {
    auto p = polarization(7, 4);
    for (const char* text : {"(5;0,1^3,2^3)", "(5;1,3,1^5)", "(4;0^3,1^3,2)", "(4;-1,1^6)", "(3;0^6,1)"}) {
        auto a = verify(cls(text), p);
        auto b = verify(canonical_form(cls(text)), p);
        CHECK(a.overall == b.overall);
        CHECK(a.failing == b.failing);
        CHECK(a.reason == b.reason);
    }
}

}
