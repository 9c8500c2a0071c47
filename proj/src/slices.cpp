#include "ysys/slices.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ysys {

namespace {

std::vector<int> component_of(const BMat& b)
{
    const std::size_t n = b.rows();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w)
                if (b(v, w) != 0 && comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

BMat restrict(const BMat& b, const std::vector<int>& verts)
{
    BMat r(verts.size(), verts.size(), 0);
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t c = 0; c < verts.size(); ++c) r(a, c) = b(verts[a], verts[c]);
    return r;
}

} // namespace

SliceDecomposition decompose_slices(const MatrixPair& p)
{
    if (is_decomposable(p)) throw ValidationError("pair is decomposable; split it into indecomposable summands first");
    const QuiverData q = build_quiver(p);
    const std::vector<int> comp = component_of(q.b);
    const int t = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> members(t);
    for (std::size_t v = 0; v < q.size(); ++v) members[comp[v]].push_back(static_cast<int>(v));

    // nu permutes the components; follow the cycle through component 0.
    std::vector<int> next(t, -1);
    for (int c = 0; c < t; ++c) {
        const int image = comp[q.nu[members[c].front()]];
        for (int v : members[c])
            if (comp[q.nu[v]] != image) throw InternalError("nu does not map components onto components");
        next[c] = image;
    }
    SliceDecomposition d;
    int c = 0;
    for (int k = 0; k < t; ++k) {
        if (k > 0 && c == 0) throw PropertyError("quiver components split into several mutation cycles");
        d.components.push_back(members[c]);
        c = next[c];
    }
    if (c != 0) throw PropertyError("quiver components split into several mutation cycles");
    for (const auto& verts : d.components) {
        d.blocks.push_back(restrict(q.b, verts));
        std::vector<int> m;
        for (int v : verts)
            if (q.vertices[v].p == 0) m.push_back(v);
        d.mutated.push_back(m);
    }
    return d;
}

SliceSequence slice_sequence(const QuiverData& q, const SliceDecomposition& d, std::size_t start)
{
    const std::size_t t = d.components.size();
    const std::vector<int>& base = d.components.at(start);
    const std::size_t m = base.size();
    // label[v] for v in the current component.
    std::vector<int> label(q.size(), -1);
    for (std::size_t a = 0; a < m; ++a) label[base[a]] = static_cast<int>(a);
    SliceSequence s;
    s.start = d.blocks[start];
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t c = (start + k) % t;
        std::vector<int> set;
        for (int v : d.mutated[c]) set.push_back(label[v]);
        std::sort(set.begin(), set.end());
        if (!set.empty()) s.steps.push_back(set);
        std::vector<int> moved(q.size(), -1);
        for (int v : d.components[c]) moved[q.nu[v]] = label[v];
        label = moved;
    }
    s.closing.assign(m, -1);
    for (std::size_t a = 0; a < m; ++a) s.closing[label[base[a]]] = static_cast<int>(a);
    return s;
}

namespace {

std::vector<std::int64_t> serialize(const SliceSequence& s, const std::vector<int>& sigma)
{
    const std::size_t m = sigma.size();
    std::vector<std::int64_t> out;
    out.push_back(static_cast<std::int64_t>(m));
    BMat b(m, m, 0);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) b(sigma[v], sigma[w]) = s.start(v, w);
    out.insert(out.end(), b.data().begin(), b.data().end());
    out.push_back(static_cast<std::int64_t>(s.steps.size()));
    for (const auto& set : s.steps) {
        std::vector<int> mapped;
        for (int v : set) mapped.push_back(sigma[v]);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(static_cast<std::int64_t>(mapped.size()));
        out.insert(out.end(), mapped.begin(), mapped.end());
    }
    std::vector<int> pi(m);
    for (std::size_t v = 0; v < m; ++v) pi[sigma[v]] = sigma[s.closing[v]];
    out.insert(out.end(), pi.begin(), pi.end());
    return out;
}

/// Colour refinement on the starting quiver, seeded with step membership
/// and cycle length under the closing permutation.
std::vector<std::int64_t> vertex_classes(const SliceSequence& s)
{
    const std::size_t m = s.closing.size();
    std::vector<std::vector<std::int64_t>> sig(m);
    for (std::size_t v = 0; v < m; ++v) {
        for (const auto& set : s.steps) sig[v].push_back(std::count(set.begin(), set.end(), static_cast<int>(v)));
        std::int64_t len = 1;
        for (int w = s.closing[v]; w != static_cast<int>(v); w = s.closing[w]) ++len;
        sig[v].push_back(len);
    }
    std::vector<std::int64_t> colour(m, 0);
    for (std::size_t round = 0; round <= m; ++round) {
        std::vector<std::vector<std::int64_t>> full(m);
        for (std::size_t v = 0; v < m; ++v) {
            full[v] = sig[v];
            full[v].push_back(colour[v]);
            std::vector<std::pair<std::int64_t, std::int64_t>> nb;
            for (std::size_t w = 0; w < m; ++w)
                if (s.start(v, w) != 0) nb.emplace_back(colour[w], s.start(v, w));
            nb.emplace_back(-1, colour[s.closing[v]]);
            std::sort(nb.begin(), nb.end());
            for (const auto& [a, b] : nb) {
                full[v].push_back(a);
                full[v].push_back(b);
            }
        }
        std::vector<std::vector<std::int64_t>> keys = full;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<std::int64_t> refined(m);
        for (std::size_t v = 0; v < m; ++v)
            refined[v] = std::lower_bound(keys.begin(), keys.end(), full[v]) - keys.begin();
        if (refined == colour) break;
        colour = refined;
    }
    return colour;
}

std::vector<std::int64_t> canonical_for(const SliceSequence& s, std::size_t& budget)
{
    const std::size_t m = s.closing.size();
    const std::vector<std::int64_t> colour = vertex_classes(s);
    // Vertices grouped by colour; labels are handed out class by class so
    // that only permutations inside a class need to be tried.
    std::map<std::int64_t, std::vector<int>> groups;
    for (std::size_t v = 0; v < m; ++v) groups[colour[v]].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> classes;
    for (auto& [c, g] : groups) classes.push_back(g);

    std::vector<std::int64_t> best;
    std::vector<int> sigma(m);
    // Odometer over the per-class permutations.
    std::vector<std::vector<int>> perms = classes;
    while (true) {
        if (budget == 0) throw ResourceError("slice canonical labelling exceeded its search budget");
        --budget;
        int next_label = 0;
        for (const auto& cls : perms)
            for (int v : cls) sigma[v] = next_label++;
        auto form = serialize(s, sigma);
        if (best.empty() || form < best) best = std::move(form);
        std::size_t k = 0;
        while (k < perms.size() && !std::next_permutation(perms[k].begin(), perms[k].end())) ++k;
        if (k == perms.size()) break;
    }
    // Colours themselves are part of the form so that different class
    // structures never compare equal by accident.
    std::vector<std::int64_t> sorted_colours = colour;
    std::sort(sorted_colours.begin(), sorted_colours.end());
    best.insert(best.begin(), sorted_colours.begin(), sorted_colours.end());
    return best;
}

} // namespace

namespace {

/// Groups a mutation word into maximal steps of pairwise commuting
/// mutations: each letter joins the step right after the last one holding a
/// vertex adjacent to it (adjacency read off the quiver in force there).
std::vector<std::vector<int>> group_commuting(const BMat& start, const std::vector<int>& word)
{
    std::vector<std::vector<int>> steps;
    for (int v : word) {
        std::vector<BMat> before{start};
        for (const auto& st : steps) {
            BMat b = before.back();
            for (int x : st) b = mutate_b(b, x);
            before.push_back(b);
        }
        int last = -1;
        for (int k = static_cast<int>(steps.size()) - 1; k >= 0 && last < 0; --k)
            for (int x : steps[k])
                if (x == v || before[k](v, x) != 0) {
                    last = k;
                    break;
                }
        if (last + 1 == static_cast<int>(steps.size()))
            steps.push_back({v});
        else
            steps[last + 1].push_back(v);
    }
    for (auto& st : steps) std::sort(st.begin(), st.end());
    return steps;
}

} // namespace

std::vector<std::int64_t> slice_canonical_form(const MatrixPair& p, std::size_t max_labelings)
{
    const QuiverData q = build_quiver(p);
    const SliceDecomposition d = decompose_slices(p);
    const SliceSequence base = slice_sequence(q, d, 0);
    std::vector<int> word;
    for (const auto& st : base.steps) word.insert(word.end(), st.begin(), st.end());
    const std::vector<int> closing_inv = invert_permutation(base.closing);

    // Rotating the cyclic word: the first mutation v moves to the end as
    // closing^{-1}(v), and the start quiver becomes mu_v of the old one.
    // Only the rotations with the fewest grouped steps compete, so that a
    // rotation splitting a commuting group never decides the form.
    std::size_t budget = max_labelings;
    std::size_t best_steps = SIZE_MAX;
    std::vector<std::int64_t> best;
    BMat start = base.start;
    for (std::size_t s = 0; s < std::max<std::size_t>(word.size(), 1); ++s) {
        SliceSequence rot{start, group_commuting(start, word), base.closing};
        if (rot.steps.size() <= best_steps) {
            auto form = canonical_for(rot, budget);
            if (rot.steps.size() < best_steps || form < best) best = std::move(form);
            best_steps = rot.steps.size();
        }
        if (word.empty()) break;
        const int v = word.front();
        start = mutate_b(start, v);
        word.erase(word.begin());
        word.push_back(closing_inv[v]);
    }
    return best;
}

bool slices_equivalent(const MatrixPair& a, const MatrixPair& b)
{
    return slice_canonical_form(a) == slice_canonical_form(b);
}

} // namespace ysys
