#include "ulrich/cohomology.hpp"

#include <algorithm>
#include <vector>

namespace ulrich {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::negative_degree: return "negative_degree";
        case Rule::multiplicity_exceeds_degree: return "multiplicity_exceeds_degree";
        case Rule::plane_curves: return "plane_curves";
        case Rule::simple_points: return "simple_points";
        case Rule::double_points_regular: return "double_points_regular";
        case Rule::riemann_roch: return "riemann_roch";
        case Rule::serre_duality: return "serre_duality";
        case Rule::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(SmoothnessStatus s) {
    switch (s) {
        case SmoothnessStatus::certified_smooth_irreducible: return "certified_smooth_irreducible";
        case SmoothnessStatus::certified_by_bertini: return "certified_by_bertini";
        case SmoothnessStatus::uncertified: return "uncertified";
    }
    return "?";
}

FixedPartSplit strip_fixed_exceptional(const DivisorClass& c) {
    std::vector<Integer> res(c.mults().begin(), c.mults().end());
    for (auto& m : res) {
        if (m < 0) m = 0;
    }
    DivisorClass residual(c.degree(), std::move(res));
    DivisorClass fixed = c - residual;
    return {std::move(residual), std::move(fixed)};
}

namespace {

struct MultCounts {
    Integer zeros, ones, twos, other;
    Integer max_mult;
};

MultCounts count_mults(const DivisorClass& c) {
    MultCounts k;
    for (const auto& m : c.mults()) {
        if (m == 0) ++k.zeros;
        else if (m == 1) ++k.ones;
        else if (m == 2) ++k.twos;
        else ++k.other;
        if (m > k.max_mult) k.max_mult = m;
    }
    return k;
}

// (-1)-curves of degree <= 6 as (d; sorted multiplicities).
struct MinusOneCurve {
    int d;
    std::vector<int> mults;
};

const std::vector<MinusOneCurve>& low_degree_minus_one_curves() {
    static const std::vector<MinusOneCurve> curves = {
        {1, {1, 1}},
        {2, {1, 1, 1, 1, 1}},
        {3, {2, 1, 1, 1, 1, 1, 1}},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
    };
    return curves;
}

// A (-1)-curve E with c.E < 0 is a fixed component of |c|, so the general
// member is reducible unless c is E itself.  Pairing the largest
// multiplicities minimizes c.E over all placements of E.
bool meets_minus_one_curve_negatively(const DivisorClass& c) {
    const DivisorClass sorted = canonical_form(c);
    for (const auto& e : low_degree_minus_one_curves()) {
        if (e.mults.size() > sorted.n()) continue;
        Integer dot = sorted.degree() * e.d;
        bool equal = sorted.degree() == e.d;
        for (std::size_t i = 0; i < sorted.n(); ++i) {
            const int em = i < e.mults.size() ? e.mults[i] : 0;
            dot -= sorted.mult(i) * em;
            equal = equal && sorted.mult(i) == em;
        }
        if (dot < 0 && !equal) return true;
    }
    return false;
}

Integer plane_sections(const Integer& d) { return d < 0 ? Integer(0) : (d + 1) * (d + 2) / 2; }

}  // namespace

Entry h0(const DivisorClass& c) {
    const auto split = strip_fixed_exceptional(c);
    const DivisorClass& r = split.residual;
    Entry e;
    e.stripped = !split.fixed.is_zero();
    const Integer& d = r.degree();
    const auto k = count_mults(r);

    if (d < 0) {
        e.value = 0;
        e.rule = Rule::negative_degree;
    } else if (k.max_mult > d) {
        e.value = 0;
        e.rule = Rule::multiplicity_exceeds_degree;
    } else if (k.ones == 0 && k.twos == 0 && k.other == 0) {
        e.value = plane_sections(d);
        e.rule = Rule::plane_curves;
    } else if (k.twos == 0 && k.other == 0) {
        // once the conditions exceed the sections the system stays empty
        Integer s = plane_sections(d) - k.ones;
        e.value = s > 0 ? s : Integer(0);
        e.rule = Rule::simple_points;
    } else if (k.other == 0 && k.ones >= 1 && vdim(r) >= 0) {
        e.value = vdim(r) + 1;
        e.rule = Rule::double_points_regular;
    } else {
        e.rule = Rule::unknown;
    }
    return e;
}

Entry h2(const DivisorClass& c) {
    Entry e;
    if (c.degree() > -3) {
        e.value = 0;
        e.rule = Rule::serre_duality;
        return e;
    }
    Entry dual = h0(serre_dual(c));
    if (dual.known()) {
        e.value = dual.value;
        e.rule = Rule::serre_duality;
        e.stripped = dual.stripped;
    }
    return e;
}

Entry h1(const DivisorClass& c) {
    Entry e;
    if (c.degree() > -3) {
        Entry zero = h0(c);
        if (zero.known()) {
            e.value = *zero.value - chi(c);
            e.rule = zero.rule == Rule::double_points_regular ? Rule::double_points_regular : Rule::riemann_roch;
            e.stripped = zero.stripped;
        }
        return e;
    }
    // h1(c) = h1(K - c) and K - c has degree > -3.
    Entry dual = h1(serre_dual(c));
    if (dual.known()) {
        e.value = dual.value;
        e.rule = Rule::serre_duality;
        e.stripped = dual.stripped;
    }
    return e;
}

CohomologyReport cohomology(const DivisorClass& c) { return {h0(c), h1(c), h2(c)}; }

std::optional<bool> is_empty(const DivisorClass& c) {
    Entry e = h0(c);
    if (!e.known()) return std::nullopt;
    return *e.value == 0;
}

SmoothnessCertificate smooth_irreducible_member(const DivisorClass& c) {
    const auto k = count_mults(c);  // negative entries land in `other`
    if (k.other == 0 && k.ones == 0 && k.twos == 0 && c.degree() >= 1) {
        return {SmoothnessStatus::certified_by_bertini, "general plane curve of degree >= 1"};
    }
    if (k.other == 0 && k.ones >= 1 && vdim(c) >= 0) {
        if (meets_minus_one_curve_negatively(c)) {
            return {SmoothnessStatus::uncertified, "a (-1)-curve of degree <= 6 is a fixed component"};
        }
        return {SmoothnessStatus::certified_smooth_irreducible,
                "double and simple general points, at least one simple point, vdim >= 0"};
    }
    return {SmoothnessStatus::uncertified, "outside the implemented criteria"};
}

}  // namespace ulrich
