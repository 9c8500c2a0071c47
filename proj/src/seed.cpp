#include "ysys/seed.hpp"

#include <sstream>

namespace ysys {

void check_skew(const BMat& b)
{
    if (b.rows() != b.cols()) throw InternalError("exchange matrix is not square");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i; j < b.cols(); ++j)
            if (b(i, j) != -b(j, i))
                throw InternalError("exchange matrix is not skew-symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

BMat mutate_b(const BMat& b, int k)
{
    const std::size_t n = b.rows();
    BMat r = b;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(i) == k || static_cast<int>(j) == k) {
                r(i, j) = -b(i, j);
                continue;
            }
            const std::int64_t bik = b(i, k), bkj = b(k, j);
            // B'_ij = B_ij + [B_ik]_+ [B_kj]_+ - [-B_ik]_+ [-B_kj]_+
            r(i, j) = add_ck(b(i, j), sub_ck(mul_ck(pos_part(bik), pos_part(bkj)), mul_ck(neg_part(bik), neg_part(bkj))));
        }
    }
    check_skew(r);
    return r;
}

void check_bijection(const std::vector<int>& nu, std::size_t n)
{
    if (nu.size() != n) throw ValidationError("permutation has the wrong size");
    std::vector<char> seen(n, 0);
    for (int v : nu) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw ValidationError("vertex map is not a bijection");
        seen[v] = 1;
    }
}

std::vector<int> invert_permutation(const std::vector<int>& nu)
{
    check_bijection(nu, nu.size());
    std::vector<int> inv(nu.size());
    for (std::size_t v = 0; v < nu.size(); ++v) inv[nu[v]] = static_cast<int>(v);
    return inv;
}

BMat permute_b(const BMat& b, const std::vector<int>& nu)
{
    check_bijection(nu, b.rows());
    BMat r(b.rows(), b.cols(), 0);
    for (std::size_t v = 0; v < b.rows(); ++v)
        for (std::size_t w = 0; w < b.cols(); ++w) r(nu[v], nu[w]) = b(v, w);
    return r;
}

YSeed<TropicalElem> initial_tropical(const BMat& b)
{
    YSeed<TropicalElem> s{b, {}};
    for (std::size_t v = 0; v < b.rows(); ++v) s.y.push_back(TropicalElem::generator(b.rows(), v));
    return s;
}

YSeed<RatFun> initial_universal(const BMat& b, std::shared_ptr<FactorTable> table)
{
    if (table->nvars() != static_cast<int>(b.rows()))
        throw ValidationError("factor table has the wrong number of generators");
    YSeed<RatFun> s{b, {}};
    for (std::size_t v = 0; v < b.rows(); ++v) s.y.push_back(RatFun::generator(table, static_cast<int>(v)));
    return s;
}

IntMatrix c_matrix(const YSeed<TropicalElem>& s)
{
    const std::size_t n = s.size();
    IntMatrix c(n, n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (s.y[v].exponents.size() != n) throw ValidationError("c_matrix needs generators indexed by the vertex set");
        for (std::size_t w = 0; w < n; ++w) c(v, w) = s.y[v].exponents[w];
    }
    return c;
}

bool rows_sign_coherent(const IntMatrix& c)
{
    for (std::size_t v = 0; v < c.rows(); ++v) {
        bool pos = false, neg = false;
        for (std::size_t w = 0; w < c.cols(); ++w) {
            pos = pos || c(v, w) > 0;
            neg = neg || c(v, w) < 0;
        }
        if (pos && neg) return false;
    }
    return true;
}

nlohmann::json b_to_json(const BMat& b, const VertexNames& names)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
        rows.push_back(row);
    }
    return {{"vertices", names.names}, {"B", rows}};
}

std::string arrow_list(const BMat& b, const VertexNames& names)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) > 0) os << names[i] << " -> " << names[j] << " x" << b(i, j) << "\n";
    return os.str();
}

} // namespace ysys
