#include "ulrich/higher_rank.hpp"

#include "ulrich/ulrich_verifier.hpp"

#include <stdexcept>

namespace ulrich {

namespace {

void require_rank(const Integer& r, const Integer& h) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (h < 3) throw std::invalid_argument("h must be >= 3");
}

Integer half_floor(const Integer& v) { return floor_div(v, 2); }

std::vector<Integer> blocks(const Integer& first, const Integer& a, const Integer& b, const Integer& c,
                            const Integer& second, const Integer& third) {
    std::vector<Integer> out;
    for (Integer i = 0; i < a; ++i) out.push_back(first);
    for (Integer i = 0; i < b; ++i) out.push_back(second);
    for (Integer i = 0; i < c; ++i) out.push_back(third);
    return out;
}

}  // namespace

Integer seed_h(const Integer& m) {
    if (m % 2 != 0) return (m * m - 3) / 2;
    return (m * m - m - 2) / 2;
}

SeedPair seed_pair(std::size_t n, const Integer& m, bool allow_conjectural) {
    const Integer nn = n;
    if (n < 2) throw std::invalid_argument("seed pairs need n >= 2");
    if (n == 2 && m != 3) throw std::invalid_argument("for n = 2 the seeds exist for m = 3 only");
    if (n >= 3 && !(m * m < 4 * nn)) throw std::invalid_argument("seed pairs need m^2 < 4n");
    const Polarization pol = polarization(n, m, allow_conjectural);
    if (!pol.very_ample) {
        throw std::invalid_argument("xi_{" + std::to_string(n) + "," + m.str() + "} is not very ample");
    }

    // block lengths: L1 = (d; 2^twos, 1^ones, 0^zeros)
    Integer d, twos, ones, zeros;
    if (m % 2 != 0) {
        d = 3 * (m - 1) / 2;
        twos = (m * m - 1) / 8;
        ones = nn - (m * m - 1) / 4;
        zeros = twos;
    } else {
        d = 3 * m / 2 - 1;
        twos = m * (m + 2) / 8;
        ones = nn - m * m / 4;
        zeros = m * (m - 2) / 8;
    }
    if (twos < 0 || ones < 0 || zeros < 0 || twos + ones + zeros != nn) {
        throw std::invalid_argument("seed multiplicity blocks do not fit on n = " + std::to_string(n) + " points");
    }
    // for even m the 1-blocks of L_0 and L_1 must overlap in m/2 places, i.e. n >= m(m+2)/4;
    // below that L_1 - L_0 loses its zero block and h drops
    if (m % 2 == 0 && 4 * nn < m * (m + 2)) {
        throw std::invalid_argument("seed pairs for even m need n >= m(m+2)/4");
    }

    SeedPair s{DivisorClass(d, blocks(0, zeros, ones, twos, 1, 2)),
               DivisorClass(d, blocks(2, twos, ones, zeros, 1, 0)), seed_h(m), 0};

    for (const auto* seed : {&s.L0, &s.L1}) {
        UlrichVerdict v = verify_with_known_certifications(*seed, pol);
        if (v.overall != Overall::ulrich) {
            throw std::logic_error("seed " + to_string(*seed) + " failed the Ulrich test (" + to_string(v.overall) +
                                   " " + v.failing + v.reason + ")");
        }
    }

    const Integer via_rr_10 = -chi(s.L1 - s.L0);
    const Integer via_rr_01 = -chi(s.L0 - s.L1);
    if (via_rr_10 != s.h || via_rr_01 != s.h) {
        throw std::logic_error("h mismatch for (n,m)=(" + std::to_string(n) + "," + m.str() + "): closed form " +
                               s.h.str() + ", Riemann-Roch " + via_rr_10.str() + "/" + via_rr_01.str());
    }

    const Integer mu0 = intersect(s.L0, pol.base);
    const Integer mu1 = intersect(s.L1, pol.base);
    if (mu0 != mu1) throw std::logic_error("seed slopes differ");
    s.mu = mu0;
    return s;
}

int epsilon(const Integer& r) {
    if (r < 0) throw std::invalid_argument("epsilon: r must be >= 0");
    return r % 2 == 0 ? 0 : 1;
}

Integer chi_E_L(const Integer& r, const Integer& h) {
    require_rank(r, h);
    return -half_floor(r + 1) * (h - 1) - epsilon(r);
}

Integer chi_L_E(const Integer& r, const Integer& h) {
    require_rank(r, h);
    return -half_floor(r + 1) * (h - 1) + epsilon(r) * h;
}

Integer chi_End(const Integer& r, const Integer& h) {
    require_rank(r, h);
    const int e = epsilon(r);
    return -(r * r - e) * (h - 1) / 2 + e;
}

Integer h1_E_L(const Integer& r, const Integer& h) {
    require_rank(r, h);
    return half_floor(r + 1) * (h - 1) + 1;
}

Integer h1_E_matched(const Integer& r, const Integer& h) {
    require_rank(r, h);
    return half_floor(r) * (h - 1);
}

Integer moduli_dim(const Integer& r, const Integer& h) {
    require_rank(r, h);
    return (r * r - epsilon(r)) * (h - 1) / 2 + epsilon(r + 1);
}

Integer ext_stratum_bound(const Integer& r, const Integer& h) {
    require_rank(r, h);
    if (r < 2) throw std::invalid_argument("ext_stratum_bound: rank 1 has no extension stratum");
    // dim U(r-1) + dim P(Ext^1), with dim Ext^1 <= floor(r/2)(h-1) + 1
    return moduli_dim(r - 1, h) + half_floor(r) * (h - 1);
}

RankProfile rank_profile(const Integer& r, const SeedPair& seeds) {
    const Integer& h = seeds.h;
    RankProfile p;
    p.r = r;
    p.epsilon = epsilon(r);
    p.slope = seeds.mu;
    p.chi_E_L = chi_E_L(r, h);
    p.chi_L_E = chi_L_E(r, h);
    p.chi_End = chi_End(r, h);
    p.h1_E_L = h1_E_L(r, h);
    p.moduli_dim = moduli_dim(r, h);
    if (r >= 2) p.ext_dim_bound = ext_stratum_bound(r, h);
    return p;
}

std::vector<RankProfile> wildness_table(std::size_t n, const Integer& m, std::size_t r_max, bool allow_conjectural) {
    const SeedPair seeds = seed_pair(n, m, allow_conjectural);
    std::vector<RankProfile> out;
    out.reserve(r_max);
    for (std::size_t r = 1; r <= r_max; ++r) out.push_back(rank_profile(Integer(r), seeds));
    return out;
}

}  // namespace ulrich
