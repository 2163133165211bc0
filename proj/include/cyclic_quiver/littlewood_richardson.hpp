#pragma once

// Littlewood-Richardson coefficients c^lambda_{alpha,nu}, counted two ways:
//  - crystal: T in SST(nu) with alpha >= eps(T) (omega order) and alpha + wt(T) = lambda;
//  - classical: LR skew tableaux of shape lambda/alpha and content nu.

#include <cstdint>
#include <vector>

#include "crystal.hpp"
#include "partition.hpp"
#include "tableau.hpp"

namespace cyclic_quiver {

struct ClrQuery {
    Partition lambda;
    Partition alpha;
    Partition nu;
};

inline bool clr_contains(const Tableau& t, const Partition& alpha, const Partition& lambda)
{
    if (!leq_omega(epsilon_vector(t), alpha.omega_coords())) return false;
    return partition_shift(alpha, weight(t)) == lambda.epsilon_coords();
}

// Entries above length(lambda) would force a positive coordinate of lambda past
// its last row, so SST(nu) is enumerated with entries bounded by length(lambda).
inline std::int64_t lr_coefficient_crystal(const ClrQuery& q)
{
    if (q.alpha.size() + q.nu.size() != q.lambda.size()) return 0;
    if (q.nu.empty()) return q.alpha == q.lambda ? 1 : 0;
    std::int64_t count = 0;
    for (const auto& t : enumerate_sst(q.nu, q.lambda.length()))
        if (clr_contains(t, q.alpha, q.lambda)) ++count;
    return count;
}

namespace detail {

struct SkewFiller {
    const Partition& lambda;
    const Partition& alpha;
    const Partition& nu;
    std::vector<std::vector<int>> grid; // grid[r][c] for c in [alpha_r, lambda_r)
    std::vector<int> used;              // used[x] = copies of letter x placed so far
    std::int64_t count = 0;

    // Boxes are visited in reverse reading order: rows top to bottom, right to left.
    void fill(int r, int c)
    {
        if (r == lambda.length()) {
            ++count;
            return;
        }
        if (c < alpha.row(r)) {
            fill(r + 1, lambda.row(r + 1) - 1);
            return;
        }
        int high = nu.length();
        if (c + 1 < lambda.row(r)) high = std::min(high, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        int low = 1;
        if (r > 0 && c >= alpha.row(r - 1) && c < lambda.row(r - 1))
            low = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
        for (int x = low; x <= high; ++x) {
            auto xi = static_cast<std::size_t>(x);
            if (used[xi] >= nu.row(x - 1)) continue;
            if (x > 1 && used[xi] + 1 > used[xi - 1]) continue;
            ++used[xi];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            fill(r, c - 1);
            --used[xi];
        }
    }
};

} // namespace detail

inline std::int64_t lr_coefficient_classical(const ClrQuery& q)
{
    if (!q.lambda.contains(q.alpha)) return 0;
    if (q.alpha.size() + q.nu.size() != q.lambda.size()) return 0;
    if (q.lambda.empty()) return 1;
    detail::SkewFiller filler{q.lambda, q.alpha, q.nu, {}, std::vector<int>(static_cast<std::size_t>(q.nu.length()) + 1, 0)};
    for (int r = 0; r < q.lambda.length(); ++r) filler.grid.emplace_back(static_cast<std::size_t>(q.lambda.row(r)), 0);
    filler.fill(0, q.lambda.row(0) - 1);
    return filler.count;
}

} // namespace cyclic_quiver
