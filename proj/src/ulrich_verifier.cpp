#include "ulrich/ulrich_verifier.hpp"

#include <stdexcept>

namespace ulrich {

std::string to_string(Check c) {
    switch (c) {
        case Check::pass: return "pass";
        case Check::fail: return "fail";
        case Check::unknown: return "unknown";
        case Check::skipped: return "skipped";
    }
    return "?";
}

std::string to_string(Overall o) {
    switch (o) {
        case Overall::ulrich: return "Ulrich";
        case Overall::not_ulrich: return "NotUlrich";
        case Overall::undecided: return "Undecided";
    }
    return "?";
}

namespace {

void require_compatible(const DivisorClass& c, const Polarization& pol) {
    if (c.n() != pol.n()) throw DimensionError("class and polarization have different n");
    if (!pol.very_ample) {
        throw std::invalid_argument("polarization xi_{" + std::to_string(pol.n()) + "," + pol.m.str() +
                                    "} is not certified very ample");
    }
}

ConditionResult emptiness(const DivisorClass& cls) {
    Entry e = h0(cls);
    if (!e.known()) return {Check::unknown, "h0(" + canonical_text(cls) + ") unknown"};
    std::string rule = "h0(" + canonical_text(cls) + ")=" + e.value->str() + " by " + to_string(e.rule);
    return {*e.value == 0 ? Check::pass : Check::fail, rule};
}

}  // namespace

bool check_degree(const DivisorClass& c, const Polarization& pol) {
    require_compatible(c, pol);
    const auto& xi = pol.base;
    const auto k = canonical_class(c.n());
    return 2 * intersect(c, xi) == intersect(xi, 3 * xi + k);
}

bool check_chi(const DivisorClass& c, const Polarization& pol) {
    require_compatible(c, pol);
    const auto& xi = pol.base;
    const auto k = canonical_class(c.n());
    return intersect(c, c) - intersect(c, k) + 2 - 2 * intersect(xi, xi) == 0;
}

ConditionResult check_speciality(const DivisorClass& c, const Polarization& pol) {
    require_compatible(c, pol);
    return emptiness(c - pol.base);
}

ConditionResult check_restriction(const DivisorClass& c, const Polarization& pol) {
    require_compatible(c, pol);
    if (2 * pol.m - 3 < c.degree()) return {Check::pass, "2m-3 < d"};
    return emptiness(canonical_class(c.n()) + 2 * pol.base - c);
}

UlrichVerdict verify(const DivisorClass& c, const Polarization& pol) {
    require_compatible(c, pol);
    if (c.is_zero()) throw std::invalid_argument("the trivial bundle is excluded from the Ulrich test");

    UlrichVerdict v{c, Integer(pol.n()), pol.m};
    v.smoothness = smooth_irreducible_member(c);

    auto fail_at = [&v](const char* which) {
        v.overall = Overall::not_ulrich;
        v.failing = which;
        return v;
    };

    v.degree = {check_degree(c, pol) ? Check::pass : Check::fail, "C.H = H.(3H+K)/2"};
    if (v.degree.outcome == Check::fail) return fail_at("i");

    v.chi = {check_chi(c, pol) ? Check::pass : Check::fail, "(C^2 - C.K)/2 + 1 - H^2 = 0"};
    if (v.chi.outcome == Check::fail) return fail_at("ii");

    v.speciality = check_speciality(c, pol);
    if (v.speciality.outcome == Check::fail) return fail_at("iii");

    v.restriction = check_restriction(c, pol);
    if (v.restriction.outcome == Check::fail) return fail_at("iv");

    if (v.speciality.outcome == Check::unknown) {
        v.overall = Overall::undecided;
        v.reason = "iii";
    } else if (v.restriction.outcome == Check::unknown) {
        v.overall = Overall::undecided;
        v.reason = "iv";
    } else if (v.smoothness.status == SmoothnessStatus::uncertified) {
        v.overall = Overall::undecided;
        v.reason = "smoothness";
    } else {
        v.overall = Overall::ulrich;
    }
    return v;
}

std::optional<std::string> known_smooth_certification(const DivisorClass& c, const Polarization& pol) {
    const DivisorClass canon = canonical_form(c);
    if (pol.n() == 10 && pol.m == 4 && canon == DivisorClass::uniform(10, 7, 2)) {
        return "canonical curve of genus 5 in P^4 cut out by xi_{10,4}";
    }
    if (pol.n() == 2 && pol.m == 3 && canon == DivisorClass(Integer(3), {Integer(2), Integer(0)})) {
        return "strict transform of a general nodal plane cubic";
    }
    return std::nullopt;
}

UlrichVerdict verify_with_known_certifications(const DivisorClass& c, const Polarization& pol) {
    UlrichVerdict v = verify(c, pol);
    if (v.overall == Overall::undecided && v.reason == "smoothness") {
        if (auto cert = known_smooth_certification(c, pol)) {
            v.known_certification = *cert;
            v.overall = Overall::ulrich;
            v.reason.clear();
        }
    }
    return v;
}

}  // namespace ulrich
