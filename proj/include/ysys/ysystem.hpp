#ifndef YSYS_YSYSTEM_HPP
#define YSYS_YSYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "ysys/polymat.hpp"
#include "ysys/seed.hpp"

namespace ysys {

struct Vertex {
    int i; ///< dense index position
    int p; ///< phase, 0 <= p < r_i
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The cluster data attached to a symplectic pair: vertices (i,p), the
/// exchange matrix B, the shift nu and the mutation front {(i,0)}.
struct QuiverData {
    MatrixPair pair;
    YDatum datum;
    std::vector<Vertex> vertices;
    std::vector<int> offset; ///< dense number of (i,0)
    BMat b;
    std::vector<int> nu;     ///< nu[v] is the image of v
    std::vector<int> nu_inv;
    std::vector<int> front;
    VertexNames names;

    std::size_t size() const { return vertices.size(); }
    int index(int i, int p) const { return offset.at(i) + p; }
};

/// Builds the quiver. Throws PropertyError for a non-symplectic pair and
/// InternalError if nu(mu_front(B)) != B.
QuiverData build_quiver(const MatrixPair& p);

template <class V>
YSeed<V> step(const QuiverData& q, const YSeed<V>& s)
{
    if (!(s.b == q.b)) throw ValidationError("seed exchange matrix does not match the quiver");
    YSeed<V> t = apply_permutation(mutate_set(s, q.front), q.nu);
    if (!(t.b == q.b)) throw InternalError("exchange matrix changed under one evolution step");
    return t;
}

template <class V>
YSeed<V> step_back(const QuiverData& q, const YSeed<V>& s)
{
    if (!(s.b == q.b)) throw ValidationError("seed exchange matrix does not match the quiver");
    YSeed<V> t = mutate_set(apply_permutation(s, q.nu_inv), q.front);
    if (!(t.b == q.b)) throw InternalError("exchange matrix changed under one backward step");
    return t;
}

/// Seeds y(u) for u_min <= u <= u_max, with y(0) given.
template <class V>
struct EvolutionTrace {
    int u_min = 0;
    std::vector<YSeed<V>> seeds;

    int u_max() const { return u_min + static_cast<int>(seeds.size()) - 1; }
    const YSeed<V>& at(int u) const { return seeds.at(u - u_min); }
};

template <class V>
EvolutionTrace<V> evolve(const QuiverData& q, const YSeed<V>& initial, int u_min, int u_max)
{
    if (u_min > 0 || u_max < 0) throw ValidationError("evolution window must contain u = 0");
    std::vector<YSeed<V>> back{initial};
    for (int u = 0; u > u_min; --u) back.push_back(step_back(q, back.back()));
    EvolutionTrace<V> tr;
    tr.u_min = u_min;
    tr.seeds.assign(back.rbegin(), back.rend());
    for (int u = 0; u < u_max; ++u) tr.seeds.push_back(step(q, tr.seeds.back()));
    return tr;
}

/// Y_i(u) for every index i and u in a window.
template <class V>
struct YFamily {
    int u_min = 0;
    int u_max = -1;
    std::vector<std::vector<V>> values; ///< values[i][u - u_min]

    const V& operator()(int i, int u) const { return values.at(i).at(u - u_min); }
};

template <class V>
YFamily<V> extract_Y(const QuiverData& q, const EvolutionTrace<V>& tr)
{
    if (tr.seeds.empty()) throw ValidationError("empty evolution trace");
    YFamily<V> f;
    f.u_min = tr.u_min;
    f.u_max = tr.u_max();
    f.values.resize(q.offset.size());
    for (std::size_t i = 0; i < q.offset.size(); ++i)
        for (const auto& s : tr.seeds) f.values[i].push_back(s.y[q.offset[i]]);
    return f;
}

/// Checks Y_i(u) Y_i(u - r_i) = prod Y_j(u-p)^{[n]+} (1 + Y_j(u-p))^{-n}
/// at every u of the window whose references stay inside it.
template <class V>
bool check_y_system(const YDatum& d, const YFamily<V>& f)
{
    int rmax = 0;
    for (int r : d.r) rmax = std::max(rmax, r);
    if (f.u_max - f.u_min < rmax) throw ValidationError("window too small for the Y-system check");
    for (std::size_t i = 0; i < d.rank(); ++i) {
        for (int u = f.u_min + d.r[i]; u <= f.u_max; ++u) {
            const V lhs = f(i, u) * f(i, u - d.r[i]);
            V rhs = one_like(lhs);
            for (const auto& [key, n] : d.n) {
                const auto [a, j, p] = key;
                if (a != static_cast<int>(i)) continue;
                const V& y = f(j, u - p);
                if (n > 0) rhs = rhs * pow(y, n);
                rhs = rhs * pow(one_like(y) + y, -n);
            }
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

template <class V>
struct Multiplicative {
    YFamily<V> plus;
    YFamily<V> minus;
};

template <class V>
Multiplicative<V> normalize_multiplicative(const YFamily<V>& y)
{
    Multiplicative<V> m{y, y};
    for (std::size_t i = 0; i < y.values.size(); ++i)
        for (std::size_t u = 0; u < y.values[i].size(); ++u) {
            const V& v = y.values[i][u];
            const V one_plus = one_like(v) + v;
            m.plus.values[i][u] = v / one_plus;
            m.minus.values[i][u] = inv(one_plus);
        }
    return m;
}

template <class V>
YFamily<V> denormalize(const Multiplicative<V>& m)
{
    YFamily<V> y = m.plus;
    for (std::size_t i = 0; i < y.values.size(); ++i)
        for (std::size_t u = 0; u < y.values[i].size(); ++u) y.values[i][u] = m.plus.values[i][u] / m.minus.values[i][u];
    return y;
}

/// prod P_j^+(u-p)^{a+_{ij;p}} = prod P_j^-(u-p)^{a-_{ij;p}} over the window.
template <class V>
bool check_multiplicative(const MatrixPair& pair, const Multiplicative<V>& m)
{
    const YFamily<V>& P = m.plus;
    int span = 0;
    for (const auto* mat : {&pair.plus, &pair.minus})
        for (const auto& e : mat->data())
            if (!e.is_zero()) span = std::max(span, e.max_exponent());
    if (P.u_max - P.u_min < span) throw ValidationError("window too small for the multiplicative check");
    const std::size_t n = pair.rank();
    for (std::size_t i = 0; i < n; ++i) {
        for (int u = P.u_min + span; u <= P.u_max; ++u) {
            V lhs = one_like(P(0, u)), rhs = lhs;
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& [p, c] : pair.plus(i, j).terms()) lhs = lhs * pow(m.plus(j, u - p), c);
                for (const auto& [p, c] : pair.minus(i, j).terms()) rhs = rhs * pow(m.minus(j, u - p), c);
            }
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

struct Reddening {
    std::optional<int> h_plus;
    std::optional<int> h_minus;
};

/// Least u in 1..u_max with every tropical exponent of y(+u) (resp. y(-u))
/// nonpositive.
Reddening find_reddening(const MatrixPair& p, int u_max);

struct PeriodResult {
    int bound = 0;
    std::optional<int> tropical_period; ///< least Omega with C(Omega) = I
    std::optional<int> period;          ///< confirmed by exact equality in the universal semifield
};

/// Default bound 4(h+ + h-) when both are found within `reddening_bound`,
/// otherwise `fallback_bound`.
PeriodResult find_period(const MatrixPair& p, std::optional<int> u_max, int fallback_bound = 200,
                         std::size_t monomial_cap = 10000);

struct ReddeningPermutations {
    int h_plus = 0;
    int h_minus = 0;
    std::vector<int> sigma;       ///< y_v(h+) = y_{sigma(v)}^{-1}
    std::vector<int> sigma_prime; ///< y_v(-h-) = y_{sigma'(v)}^{-1}
};

/// Throws PropertyError if reddening is not found within u_max or the
/// C-matrix there is not minus a permutation matrix.
ReddeningPermutations permutation_at_reddening(const MatrixPair& p, int u_max = 200);

/// Column index of the -1 in every row, or nullopt when c is not minus a permutation matrix.
std::optional<std::vector<int>> minus_permutation(const IntMatrix& c);

std::string quiver_dot(const QuiverData& q);

} // namespace ysys

#endif
