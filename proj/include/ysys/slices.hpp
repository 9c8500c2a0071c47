#ifndef YSYS_SLICES_HPP
#define YSYS_SLICES_HPP

#include <cstdint>
#include <vector>

#include "ysys/ysystem.hpp"

namespace ysys {

/// Connected components of the quiver, listed in the cyclic order in which
/// nu o mu_front carries them into each other.
struct SliceDecomposition {
    std::vector<std::vector<int>> components; ///< vertex numbers of R(u), sorted
    std::vector<BMat> blocks;                 ///< B restricted to R(u)
    std::vector<std::vector<int>> mutated;    ///< front vertices inside R(u)
};

/// Throws ValidationError for decomposable input and PropertyError if the
/// components do not form a single cycle.
SliceDecomposition decompose_slices(const MatrixPair& p);

/// The cyclic mutation sequence carried onto the labels of one component:
/// starting quiver, nonempty mutation sets, closing permutation.
struct SliceSequence {
    BMat start;
    std::vector<std::vector<int>> steps;
    std::vector<int> closing; ///< closing[v] = label reached by v after one cycle
};

SliceSequence slice_sequence(const QuiverData& q, const SliceDecomposition& d, std::size_t start_component);

/// Invariant under rotation of the cycle and relabelling of vertices.
/// Throws ResourceError if the relabelling search exceeds `max_labelings`.
std::vector<std::int64_t> slice_canonical_form(const MatrixPair& p, std::size_t max_labelings = 2000000);

bool slices_equivalent(const MatrixPair& a, const MatrixPair& b);

} // namespace ysys

#endif
