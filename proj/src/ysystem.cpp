#include "ysys/ysystem.hpp"

#include <sstream>

namespace ysys {

QuiverData build_quiver(const MatrixPair& pair)
{
    QuiverData q;
    q.datum = matrices_to_ydatum(pair);
    if (!check_symplectic(pair)) throw PropertyError("pair is not symplectic");
    q.pair = pair;
    const YDatum& d = q.datum;
    const int rank = static_cast<int>(d.rank());
    for (int i = 0; i < rank; ++i) {
        q.offset.push_back(static_cast<int>(q.vertices.size()));
        for (int p = 0; p < d.r[i]; ++p) {
            q.vertices.push_back({i, p});
            q.names.names.push_back("(" + d.labels[i] + "," + std::to_string(p) + ")");
        }
    }
    const std::size_t n = q.vertices.size();
    q.b = BMat(n, n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        const auto [i, p] = q.vertices[a];
        for (std::size_t c = 0; c < n; ++c) {
            const auto [j, qq] = q.vertices[c];
            std::int64_t v = sub_ck(d.coeff(j, i, qq - p), d.coeff(i, j, p - qq));
            for (int k = 0; k < rank; ++k)
                for (int s = 0; s <= std::min(p, qq); ++s) {
                    v = add_ck(v, mul_ck(d.plus(i, k, p - s), d.minus(j, k, qq - s)));
                    v = sub_ck(v, mul_ck(d.minus(i, k, p - s), d.plus(j, k, qq - s)));
                }
            q.b(a, c) = v;
        }
    }
    check_skew(q.b);
    // nu(i,p) = (i,p-1), taken modulo r_i.
    q.nu.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto [i, p] = q.vertices[a];
        q.nu[a] = q.index(i, p == 0 ? d.r[i] - 1 : p - 1);
    }
    q.nu_inv = invert_permutation(q.nu);
    for (int i = 0; i < rank; ++i) q.front.push_back(q.offset[i]);
    for (std::size_t a = 0; a < q.front.size(); ++a)
        for (std::size_t c = a + 1; c < q.front.size(); ++c)
            if (q.b(q.front[a], q.front[c]) != 0)
                throw InternalError("mutation front contains adjacent vertices " + q.names[q.front[a]] + " and " +
                                    q.names[q.front[c]]);
    BMat m = q.b;
    for (int k : q.front) m = mutate_b(m, k);
    if (!(permute_b(m, q.nu) == q.b)) throw InternalError("nu(mu_front(B)) != B for a symplectic pair");
    return q;
}

namespace {

bool all_nonpositive(const YSeed<TropicalElem>& s)
{
    for (const auto& y : s.y)
        for (auto e : y.exponents)
            if (e > 0) return false;
    return true;
}

} // namespace

Reddening find_reddening(const MatrixPair& p, int u_max)
{
    const QuiverData q = build_quiver(p);
    Reddening r;
    auto fwd = initial_tropical(q.b), bwd = fwd;
    for (int u = 1; u <= u_max && (!r.h_plus || !r.h_minus); ++u) {
        if (!r.h_plus) {
            fwd = step(q, fwd);
            if (all_nonpositive(fwd)) r.h_plus = u;
        }
        if (!r.h_minus) {
            bwd = step_back(q, bwd);
            if (all_nonpositive(bwd)) r.h_minus = u;
        }
    }
    return r;
}

PeriodResult find_period(const MatrixPair& p, std::optional<int> u_max, int fallback_bound, std::size_t monomial_cap)
{
    const QuiverData q = build_quiver(p);
    PeriodResult res;
    if (u_max) {
        res.bound = *u_max;
    } else {
        Reddening red = find_reddening(p, fallback_bound);
        res.bound = red.h_plus && red.h_minus ? 4 * (*red.h_plus + *red.h_minus) : fallback_bound;
    }
    const auto trop0 = initial_tropical(q.b);
    auto table = std::make_shared<FactorTable>(static_cast<int>(q.size()), monomial_cap);
    const auto uni0 = initial_universal(q.b, table);
    auto trop = trop0;
    auto uni = uni0;
    int uni_u = 0;
    for (int u = 1; u <= res.bound; ++u) {
        trop = step(q, trop);
        if (!(trop.y == trop0.y)) continue;
        if (!res.tropical_period) res.tropical_period = u;
        for (; uni_u < u; ++uni_u) uni = step(q, uni);
        bool equal = true;
        for (std::size_t v = 0; v < q.size() && equal; ++v) equal = uni.y[v] == uni0.y[v];
        if (equal) {
            res.period = u;
            break;
        }
    }
    return res;
}

std::optional<std::vector<int>> minus_permutation(const IntMatrix& c)
{
    const std::size_t n = c.rows();
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (c(v, w) == 0) continue;
            if (c(v, w) != -1 || sigma[v] != -1 || used[w]) return std::nullopt;
            sigma[v] = static_cast<int>(w);
            used[w] = 1;
        }
        if (sigma[v] == -1) return std::nullopt;
    }
    return sigma;
}

ReddeningPermutations permutation_at_reddening(const MatrixPair& p, int u_max)
{
    const QuiverData q = build_quiver(p);
    const Reddening red = find_reddening(p, u_max);
    if (!red.h_plus || !red.h_minus)
        throw PropertyError("no reddening found within " + std::to_string(u_max) + " steps");
    ReddeningPermutations out;
    out.h_plus = *red.h_plus;
    out.h_minus = *red.h_minus;
    auto s = initial_tropical(q.b);
    for (int u = 0; u < out.h_plus; ++u) s = step(q, s);
    auto sigma = minus_permutation(c_matrix(s));
    s = initial_tropical(q.b);
    for (int u = 0; u < out.h_minus; ++u) s = step_back(q, s);
    auto sigma_prime = minus_permutation(c_matrix(s));
    if (!sigma || !sigma_prime)
        throw PropertyError("C-matrix at the reddening step is not minus a permutation matrix");
    out.sigma = *sigma;
    out.sigma_prime = *sigma_prime;
    return out;
}

std::string quiver_dot(const QuiverData& q)
{
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t v = 0; v < q.size(); ++v) {
        os << "  v" << v << " [label=\"" << q.names[v] << "\"";
        if (q.vertices[v].p == 0) os << ", shape=box";
        os << "];\n";
    }
    for (std::size_t v = 0; v < q.size(); ++v)
        for (std::size_t w = 0; w < q.size(); ++w)
            if (q.b(v, w) > 0) {
                os << "  v" << v << " -> v" << w;
                if (q.b(v, w) > 1) os << " [label=\"" << q.b(v, w) << "\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

} // namespace ysys
