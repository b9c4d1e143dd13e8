#include "ulrich/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulrich {

Integer castelnuovo_bound(const Integer& degree, const Integer& ambient_dim) {
    if (ambient_dim < 2) throw std::invalid_argument("castelnuovo_bound: ambient dimension must be >= 2");
    if (degree < ambient_dim) {
        throw std::invalid_argument("castelnuovo_bound: a nondegenerate curve in P^" + ambient_dim.str() +
                                    " has degree >= " + ambient_dim.str());
    }
    const Integer r1 = ambient_dim - 1;
    const Integer q = (degree - 1) / r1;
    const Integer eps = degree - 1 - q * r1;
    return q * (q - 1) / 2 * r1 + q * eps;
}

Integer forced_genus(const Integer& m, const Integer& d) { return (m - 3) * (2 * d - m) / 2; }

std::pair<Integer, Integer> forced_sums(const Polarization& pol, const Integer& d) {
    const Integer n = pol.n();
    const Integer& m = pol.m;
    // (i):  d m - S1 = 3m(m-1)/2 - n
    Integer s1 = d * m - 3 * m * (m - 1) / 2 + n;
    // (ii): d^2 - S2 + 3d - S1 + 2 - 2(m^2 - n) = 0
    Integer s2 = d * d + 3 * d - s1 + 2 - 2 * (m * m - n);
    return {s1, s2};
}

DegreeBound degree_bound(const Polarization& pol, const SearchCaps& caps) {
    const Integer& m = pol.m;
    DegreeBound b;
    b.ambient_dim = sections_of_polarization(pol) - 1;
    b.degenerate_d_max = m;
    b.heuristic = m != 4;

    const Integer curve_degree = 3 * m * (m - 1) / 2 - Integer(pol.n());
    Integer nondegenerate = 0;
    if (b.ambient_dim < 2 || curve_degree < b.ambient_dim) {
        b.note = "no nondegenerate curve of degree " + curve_degree.str() + " in P^" + b.ambient_dim.str();
    } else if (m <= 3) {
        // the forced genus does not grow with d, so Castelnuovo gives no bound
        nondegenerate = 3 * m;
        b.note = "genus independent of d; fallback d <= 3m";
        b.heuristic = true;
    } else {
        const Integer pi = castelnuovo_bound(curve_degree, b.ambient_dim);
        // (m-3)(2d-m)/2 <= pi
        nondegenerate = floor_div(2 * pi + m * (m - 3), 2 * (m - 3));
        b.note = "Castelnuovo: degree " + curve_degree.str() + " in P^" + b.ambient_dim.str() + " has genus <= " +
                 pi.str();
    }
    b.d_max = std::max(nondegenerate, b.degenerate_d_max);
    if (caps.d_max) {
        b.d_max = *caps.d_max;
        b.note += "; overridden by caps";
        b.heuristic = true;
    }
    return b;
}

namespace {

struct FixedSumSearch {
    std::size_t length;
    Integer lo;
    std::size_t limit;
    std::vector<std::vector<Integer>>* out;
    bool truncated = false;
    std::vector<Integer> current;

    bool feasible(std::size_t slots, const Integer& top, const Integer& s1, const Integer& s2) const {
        if (slots == 0) return s1 == 0 && s2 == 0;
        const Integer r = slots;
        if (s1 < r * lo || s1 > r * top || s2 < 0) return false;
        if (r * s2 < s1 * s1) return false;
        const Integer big = std::max(lo * lo, top * top);
        return s2 <= r * big;
    }

    void run(const Integer& top, const Integer& s1, const Integer& s2) {
        if (truncated) return;
        const std::size_t slots = length - current.size();
        if (slots == 0) {
            if (s1 == 0 && s2 == 0) {
                if (out->size() >= limit) {
                    truncated = true;
                    return;
                }
                out->push_back(current);
            }
            return;
        }
        for (Integer v = top; v >= lo; --v) {
            if (!feasible(slots, v, s1, s2)) {
                // lowering the top only shrinks the reachable sums
                if (s1 > Integer(slots) * v) break;
                continue;
            }
            current.push_back(v);
            run(v, s1 - v, s2 - v * v);
            current.pop_back();
            if (truncated) return;
        }
    }
};

}  // namespace

std::vector<std::vector<Integer>> enumerate_fixed_sums(std::size_t length, const Integer& lo, const Integer& hi,
                                                       const Integer& sum, const Integer& sum_sq,
                                                       std::size_t limit, bool* truncated) {
    std::vector<std::vector<Integer>> out;
    if (length == 0 || hi < lo) {
        if (truncated) *truncated = false;
        return out;
    }
    FixedSumSearch s{length, lo, limit, &out};
    s.current.reserve(length);
    s.run(hi, sum, sum_sq);
    if (truncated) *truncated = s.truncated;
    return out;
}

CandidateSet enumerate_candidates(const Polarization& pol, const SearchCaps& caps) {
    if (!pol.very_ample) throw std::invalid_argument("enumerate_candidates needs a very ample polarization");
    CandidateSet set;
    set.bound = degree_bound(pol, caps);
    for (Integer d = 1; d <= set.bound.d_max; ++d) {
        auto [s1, s2] = forced_sums(pol, d);
        DegreeSearch ds{d, s1, s2};
        ds.mult_max = caps.mult_max ? *caps.mult_max : std::max(Integer(2), d);
        ds.mult_min = caps.mult_min ? *caps.mult_min : d;
        if (s2 >= 0) {
            const Integer box = isqrt(s2);
            ds.exhaustive = ds.mult_max >= box && ds.mult_min >= box;
            auto rows = enumerate_fixed_sums(pol.n(), -ds.mult_min, ds.mult_max, s1, s2,
                                             caps.max_candidates_per_degree, &ds.truncated);
            ds.candidates = rows.size();
            for (auto& r : rows) set.classes.emplace_back(d, std::move(r));
        } else {
            ds.exhaustive = true;
        }
        set.degrees.push_back(ds);
    }
    return set;
}

ClassificationReport classify(const Polarization& pol, const SearchCaps& caps) {
    CandidateSet set = enumerate_candidates(pol, caps);
    ClassificationReport rep{Integer(pol.n()), pol.m};
    rep.degrees = std::move(set.degrees);
    rep.bound = std::move(set.bound);
    rep.caps = caps;

    for (const auto& c : set.classes) {
        if (c.is_zero()) continue;
        UlrichVerdict v = verify_with_known_certifications(c, pol);
        switch (v.overall) {
            case Overall::ulrich:
                rep.ulrich.push_back(c);
                if (v.known_certification) rep.known_certified.push_back(c);
                break;
            case Overall::not_ulrich: rep.near_misses.emplace_back(c, v.failing); break;
            case Overall::undecided: rep.undecided.emplace_back(c, v.reason); break;
        }
    }
    auto by_class = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(rep.ulrich.begin(), rep.ulrich.end());
    rep.ulrich.erase(std::unique(rep.ulrich.begin(), rep.ulrich.end()), rep.ulrich.end());
    std::sort(rep.known_certified.begin(), rep.known_certified.end());
    std::sort(rep.near_misses.begin(), rep.near_misses.end(), by_class);
    std::sort(rep.undecided.begin(), rep.undecided.end(), by_class);
    return rep;
}

}  // namespace ulrich
