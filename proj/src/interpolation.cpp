#include "ulrich/cohomology.hpp"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace ulrich {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

namespace {

using u64 = std::uint64_t;

class Field {
public:
    explicit Field(u64 p) : p_(p) {}

    u64 add(u64 a, u64 b) const { return (a + b) % p_; }
    u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
    u64 mul(u64 a, u64 b) const { return a * b % p_; }

    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    u64 inv(u64 a) const { return pow(a, p_ - 2); }
    u64 prime() const { return p_; }

private:
    u64 p_;
};

std::size_t rank_mod_p(std::vector<std::vector<u64>>& rows, std::size_t cols, const Field& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const u64 inv = f.inv(rows[rank][col]);
        for (std::size_t c = col; c < cols; ++c) rows[rank][c] = f.mul(rows[rank][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const u64 factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Integer h0_interpolation(const DivisorClass& c, const InterpolationOptions& opts) {
    if (opts.prime < (u64{1} << 20) || opts.prime >= (u64{1} << 32)) {
        throw OracleFailure("interpolation prime must lie in [2^20, 2^32)");
    }
    if (!is_prime(opts.prime)) throw OracleFailure("interpolation modulus is not prime");
    if (opts.trials == 0) throw OracleFailure("interpolation needs at least one trial");

    const DivisorClass r = strip_fixed_exceptional(c).residual;
    if (r.degree() < 0) throw OracleFailure("interpolation needs residual degree >= 0");
    if (r.degree() > 120) throw OracleFailure("interpolation degree too large");
    const int d = static_cast<int>(to_int64(r.degree()));

    std::vector<int> mults;
    for (const auto& m : r.mults()) {
        if (m > 120) throw OracleFailure("interpolation multiplicity too large");
        if (m > 0) mults.push_back(static_cast<int>(to_int64(m)));
    }

    // monomials x^a y^b with a + b <= d
    std::vector<std::pair<int, int>> monomials;
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) monomials.emplace_back(a, b);
    }
    const std::size_t cols = monomials.size();

    const Field f(opts.prime);
    // binomials mod p, Pascal triangle up to d
    std::vector<std::vector<u64>> binom(d + 1, std::vector<u64>(d + 1, 0));
    for (int a = 0; a <= d; ++a) {
        binom[a][0] = 1;
        for (int i = 1; i <= a; ++i) binom[a][i] = f.add(binom[a - 1][i - 1], i <= a - 1 ? binom[a - 1][i] : 0);
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<u64> coord(0, opts.prime - 1);

    std::size_t best_rank = 0;
    for (unsigned t = 0; t < opts.trials; ++t) {
        std::set<std::pair<u64, u64>> used;
        std::vector<std::pair<u64, u64>> points;
        unsigned retries = 0;
        while (points.size() < mults.size()) {
            std::pair<u64, u64> p{coord(rng), coord(rng)};
            if (used.insert(p).second) {
                points.push_back(p);
            } else if (++retries > 64) {
                throw OracleFailure("interpolation points kept colliding");
            }
        }

        std::vector<std::vector<u64>> rows;
        for (std::size_t k = 0; k < points.size(); ++k) {
            const auto [px, py] = points[k];
            std::vector<u64> xp(d + 1, 1), yp(d + 1, 1);
            for (int e = 1; e <= d; ++e) {
                xp[e] = f.mul(xp[e - 1], px);
                yp[e] = f.mul(yp[e - 1], py);
            }
            // Hasse derivatives D^(i,j) with i + j < multiplicity
            for (int i = 0; i < mults[k]; ++i) {
                for (int j = 0; i + j < mults[k]; ++j) {
                    std::vector<u64> row(cols, 0);
                    for (std::size_t col = 0; col < cols; ++col) {
                        const auto [a, b] = monomials[col];
                        if (a < i || b < j) continue;
                        row[col] = f.mul(f.mul(binom[a][i], binom[b][j]), f.mul(xp[a - i], yp[b - j]));
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
        best_rank = std::max(best_rank, rank_mod_p(rows, cols, f));
        if (best_rank == std::min(cols, rows.size())) break;
    }
    return Integer(cols - best_rank);
}

}  // namespace ulrich
