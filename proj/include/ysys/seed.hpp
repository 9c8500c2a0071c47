#ifndef YSYS_SEED_HPP
#define YSYS_SEED_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ysys/checked.hpp"
#include "ysys/errors.hpp"
#include "ysys/matrix.hpp"
#include "ysys/semifield.hpp"

namespace ysys {

/// Skew-symmetric exchange matrix over densely numbered vertices.
using BMat = IntMatrix;

void check_skew(const BMat& b);

/// Y-seed over any of the semifield backends.
template <class V>
struct YSeed {
    BMat b;
    std::vector<V> y;

    std::size_t size() const { return y.size(); }
};

/// Matrix mutation at k.
BMat mutate_b(const BMat& b, int k);

/// Relabelling: the result has entry (nu[v], nu[w]) equal to b(v, w).
BMat permute_b(const BMat& b, const std::vector<int>& nu);

/// Throws unless nu is a bijection of {0..n-1}.
void check_bijection(const std::vector<int>& nu, std::size_t n);
std::vector<int> invert_permutation(const std::vector<int>& nu);

template <class V>
YSeed<V> mutate(const YSeed<V>& s, int k)
{
    const int n = static_cast<int>(s.size());
    if (k < 0 || k >= n) throw ValidationError("mutation at unknown vertex " + std::to_string(k));
    YSeed<V> t{mutate_b(s.b, k), s.y};
    const V& yk = s.y[k];
    t.y[k] = inv(yk);
    const V one_plus = one_like(yk) + yk;
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        const std::int64_t bki = s.b(k, i);
        if (bki == 0) continue;
        V v = s.y[i];
        if (bki > 0) v = v * pow(yk, bki);
        t.y[i] = v * pow(one_plus, -bki);
    }
    return t;
}

/// Mutation at a set of pairwise non-adjacent vertices.
template <class V>
YSeed<V> mutate_set(const YSeed<V>& s, const std::vector<int>& set)
{
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t c = a + 1; c < set.size(); ++c)
            if (s.b(set[a], set[c]) != 0)
                throw ValidationError("mutation set contains adjacent vertices " + std::to_string(set[a]) + " and " +
                                      std::to_string(set[c]));
    YSeed<V> t = s;
    for (int k : set) t = mutate(t, k);
    return t;
}

template <class V>
YSeed<V> apply_permutation(const YSeed<V>& s, const std::vector<int>& nu)
{
    check_bijection(nu, s.size());
    YSeed<V> t{permute_b(s.b, nu), s.y};
    for (std::size_t v = 0; v < nu.size(); ++v) t.y[nu[v]] = s.y[v];
    return t;
}

/// Initial seeds: y_v = generator v.
YSeed<TropicalElem> initial_tropical(const BMat& b);
YSeed<RatFun> initial_universal(const BMat& b, std::shared_ptr<FactorTable> table);

/// Rows are the exponent vectors of the tropical y_v.
IntMatrix c_matrix(const YSeed<TropicalElem>& s);

/// Each row all nonnegative or all nonpositive.
bool rows_sign_coherent(const IntMatrix& c);

/// Vertex names used in dumps: "(label,p)".
struct VertexNames {
    std::vector<std::string> names;
    const std::string& operator[](std::size_t v) const { return names.at(v); }
};

nlohmann::json b_to_json(const BMat& b, const VertexNames& names);
/// One line per arrow "(i,p) -> (j,q) x<mult>", in vertex order.
std::string arrow_list(const BMat& b, const VertexNames& names);

} // namespace ysys

#endif
