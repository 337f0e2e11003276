#include "sqz/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace sqz {

ChainComplex chain_complex(const SimplicialComplex& complex) {
    int dim = complex.dimension();
    ChainComplex chain;
    chain.faces_by_dim.assign(dim + 2, {});
    chain.faces_by_dim[0] = {Face{}};

    std::map<Face, int> index_of; // face -> position within its dimension
    index_of[Face{}] = 0;
    {
        std::vector<std::vector<Face>> collected(dim + 2);
        std::function<void(const Face&, std::size_t, Face&)> rec =
            [&](const Face& facet, std::size_t from, Face& cur) {
                if (!cur.empty() && index_of.emplace(cur, 0).second)
                    collected[cur.size()].push_back(cur);
                for (std::size_t i = from; i < facet.size(); ++i) {
                    cur.push_back(facet[i]);
                    rec(facet, i + 1, cur);
                    cur.pop_back();
                }
            };
        for (const Face& facet : complex.facets()) {
            Face cur;
            rec(facet, 0, cur);
        }
        for (int k = 1; k <= dim + 1; ++k) {
            std::sort(collected[k].begin(), collected[k].end());
            chain.faces_by_dim[k] = std::move(collected[k]);
            for (std::size_t p = 0; p < chain.faces_by_dim[k].size(); ++p)
                index_of[chain.faces_by_dim[k][p]] = static_cast<int>(p);
        }
    }

    chain.boundaries.assign(dim + 2, {});
    chain.boundaries[0] = IntMatrix{}; // nothing below dimension -1
    for (int k = 0; k <= dim; ++k) {
        const auto& sources = chain.faces_by_dim[k + 1];
        const auto& targets = chain.faces_by_dim[k];
        IntMatrix matrix(targets.size(), std::vector<mpz_class>(sources.size(), 0));
        for (std::size_t col = 0; col < sources.size(); ++col) {
            const Face& face = sources[col];
            for (std::size_t drop = 0; drop < face.size(); ++drop) {
                Face sub;
                sub.reserve(face.size() - 1);
                for (std::size_t i = 0; i < face.size(); ++i) {
                    if (i != drop) sub.push_back(face[i]);
                }
                int row = index_of.at(sub);
                matrix[row][col] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        chain.boundaries[k + 1] = std::move(matrix);
    }
    return chain;
}

int rank_fraction_free(IntMatrix matrix) {
    if (matrix.empty() || matrix.front().empty()) return 0;
    std::size_t rows = matrix.size();
    std::size_t cols = matrix.front().size();
    std::size_t pivot_row = 0;
    mpz_class previous_pivot = 1;
    int rank = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && matrix[found][col] == 0) ++found;
        if (found == rows) continue;
        std::swap(matrix[pivot_row], matrix[found]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                matrix[r][c] = (matrix[pivot_row][col] * matrix[r][c] -
                                matrix[r][col] * matrix[pivot_row][c]) /
                               previous_pivot;
            }
            matrix[r][col] = 0;
        }
        previous_pivot = matrix[pivot_row][col];
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<long long> reduced_betti(const SimplicialComplex& complex) {
    ChainComplex chain = chain_complex(complex);
    int dim = complex.dimension();
    std::vector<int> ranks(dim + 3, 0); // ranks[k+1] = rank of boundary out of dim k
    for (int k = 0; k <= dim; ++k) ranks[k + 1] = rank_fraction_free(chain.boundaries[k + 1]);
    std::vector<long long> betti(dim + 2, 0);
    for (int k = -1; k <= dim; ++k) {
        long long faces = static_cast<long long>(chain.faces_by_dim[k + 1].size());
        betti[k + 1] = faces - ranks[k + 1] - ranks[k + 2];
    }
    return betti;
}

BettiTable hochster_betti(const SimplicialComplex& complex, const HochsterOptions& options) {
    int n = complex.vertex_count();
    if (n > options.max_vertices)
        fail(ErrorKind::BudgetExceeded,
             "induced-subcomplex sweep over 2^" + std::to_string(n) + " subsets");
    BettiTable table;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Face subset;
        for (int v = 1; v <= n; ++v) {
            if (mask & (1ull << (v - 1))) subset.push_back(v);
        }
        std::vector<Face> induced;
        for (const Face& facet : complex.facets()) {
            Face cut;
            for (int v : facet) {
                if (std::binary_search(subset.begin(), subset.end(), v)) cut.push_back(v);
            }
            induced.push_back(std::move(cut));
        }
        SimplicialComplex sub = normalize_complex(n, std::move(induced));
        std::vector<long long> betti = reduced_betti(sub);
        int j = static_cast<int>(subset.size());
        for (int k = -1; k < static_cast<int>(betti.size()) - 1; ++k) {
            long long rank = betti[k + 1];
            int i = j - k - 2;
            if (rank > 0 && i >= 0) table.add(i, j, rank);
        }
    }
    return table;
}

} // namespace sqz
