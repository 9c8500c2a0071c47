#ifndef YSYS_TEST_PERTURB_HPP
#define YSYS_TEST_PERTURB_HPP

// Independent symplectic oracle and single-coefficient perturbations of a datum.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ysys/polymat.hpp"

namespace perturb {

using ysys::YDatum;

// Oracle: both sides of the symplectic identity evaluated at a rational point,
// straight from the datum, without any polynomial multiplication.
inline bool symplectic_at_point(const YDatum& d, const mpq_class& z)
{
    const std::size_t n = d.rank();
    auto entry = [&](bool plus, std::size_t i, std::size_t j, const mpq_class& x) {
        mpq_class v = 0;
        if (i == j) {
            mpq_class pw = 1;
            for (int k = 0; k < d.r[i]; ++k) pw *= x;
            v = 1 + pw;
        }
        for (int p = 1; p < d.r[i]; ++p) {
            const auto c = plus ? d.plus(i, j, p) : d.minus(i, j, p);
            if (!c) continue;
            mpq_class pw = 1;
            for (int k = 0; k < p; ++k) pw *= x;
            v -= c * pw;
        }
        return v;
    };
    const mpq_class zi = 1 / z;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class lhs = 0, rhs = 0;
            for (std::size_t k = 0; k < n; ++k) {
                lhs += entry(true, i, k, z) * entry(false, j, k, zi);
                rhs += entry(false, i, k, z) * entry(true, j, k, zi);
            }
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool oracle_symplectic(const YDatum& d)
{
    // A nonzero Laurent polynomial of bounded degree has few roots; these points suffice.
    for (int k = 2; k < 60; ++k)
        if (!symplectic_at_point(d, mpq_class(k, 1) / 7 + mpq_class(1, k * k))) return false;
    return true;
}


struct Perturbation {
    YDatum datum;
    int i, j, p;
    std::int64_t delta;
    /// Diagonal entry at the middle phase 2p = r_i, the only kind that can stay symplectic here.
    bool middle_diagonal() const { return i == j && 2 * p == datum.r[i]; }
};

/// `count` random changes of one n_{ij;p} by +-1, with 0 < p < r_i.
inline std::vector<Perturbation> sample(const YDatum& base, int count, std::mt19937_64& rng)
{
    std::vector<Perturbation> out;
    const int n = static_cast<int>(base.rank());
    while (static_cast<int>(out.size()) < count) {
        const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (base.r[i] < 2) continue;
        const int p = 1 + static_cast<int>(rng() % (base.r[i] - 1));
        const std::int64_t delta = (rng() % 2) ? 1 : -1;
        YDatum d = base;
        const std::int64_t v = d.coeff(i, j, p) + delta;
        if (v == 0)
            d.n.erase({i, j, p});
        else
            d.n[{i, j, p}] = v;
        out.push_back({d, i, j, p, delta});
    }
    return out;
}

} // namespace perturb

#endif
