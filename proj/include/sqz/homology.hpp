#pragma once

#include <gmpxx.h>
#include <vector>

#include "sqz/betti.hpp"
#include "sqz/complex.hpp"

namespace sqz {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Chain complex over the rationals with the empty face in dimension -1.
struct ChainComplex {
    /// faces_by_dim[k+1] lists the k-faces (k = -1 .. dim), canonically sorted.
    std::vector<std::vector<Face>> faces_by_dim;
    /// boundaries[k+1] maps k-chains to (k-1)-chains, signs from sorted vertices;
    /// boundaries[0] is the empty 0 x 1 map out of dimension -1.
    std::vector<IntMatrix> boundaries;
};

ChainComplex chain_complex(const SimplicialComplex& complex);

/// Rank via fraction-free elimination, first-nonzero pivoting in row-major order.
int rank_fraction_free(IntMatrix matrix);

/// Reduced rational homology ranks in dimensions -1 .. dim.
std::vector<long long> reduced_betti(const SimplicialComplex& complex);

struct HochsterOptions {
    int max_vertices = 18; // BudgetExceeded beyond 2^max_vertices subsets
};

/// Graded Betti table of the Stanley-Reisner ideal from induced-subcomplex
/// homology: beta_{i,j} sums ranks in dimension j-i-2 over j-vertex subsets.
BettiTable hochster_betti(const SimplicialComplex& complex, const HochsterOptions& options = {});

} // namespace sqz
