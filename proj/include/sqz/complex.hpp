#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sqz/error.hpp"
#include "sqz/rational.hpp"

namespace sqz {

/// A face: sorted ascending vertex labels, 1-based. The empty face is {}.
using Face = std::vector<int>;

/// Pure or non-pure simplicial complex on the vertex set [n], stored by its
/// facets. Canonical form: every face sorted, facet list sorted
/// lexicographically, no facet contained in another.
class SimplicialComplex {
public:
    int vertex_count() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    /// -1 for the complex {∅}.
    int dimension() const;
    bool is_pure() const;
    bool contains_face(const Face& face) const;
    /// Vertices that actually occur in some facet, ascending.
    std::vector<int> vertices() const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

    friend SimplicialComplex normalize_complex(int n, std::vector<Face> faces);

private:
    SimplicialComplex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {}
    int n_ = 0;
    std::vector<Face> facets_;
};

/// Canonical facet-only form of an arbitrary face collection.
/// Errors: VertexOutOfRange, BadInput (empty collection).
SimplicialComplex normalize_complex(int n, std::vector<Face> faces);

/// (f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1.
std::vector<long long> f_vector(const SimplicialComplex& complex);

/// (h_0, ..., h_{dim+1}) via the defining polynomial identity. Errors: NotPure.
std::vector<long long> h_vector(const SimplicialComplex& complex);

std::vector<long long> h_from_f(const std::vector<long long>& f);
std::vector<long long> f_from_h(const std::vector<long long>& h);

/// Link of a face, on the same ambient vertex set. Errors: NotAFace.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// Deletion of a vertex, on the same ambient vertex set.
SimplicialComplex delete_vertex(const SimplicialComplex& complex, int v);

struct RidgeReport {
    /// Codimension-one face -> number of facets containing it; canonical order.
    std::map<Face, long long> degrees;
    long long total_excess = 0; // sum of max{0, degree - 2}
    long long ridge_count() const { return static_cast<long long>(degrees.size()); }
    long long max_degree() const;
};

/// Tallies facet containment over all codimension-one faces. For a pure
/// 0-dimensional complex the single ridge is the empty face.
/// Errors: NotPure, BadInput (dimension < 0).
RidgeReport ridge_degree_map(const SimplicialComplex& complex);

/// Total ridge excess over the number of ridges, reduced.
/// Errors: NotPure, NoRidges (dimension < 1).
Rational singularity_index(const SimplicialComplex& complex);

/// Facet-adjacency connectivity, adjacency = sharing a codimension-one face.
/// Errors: NotPure.
bool is_strongly_connected(const SimplicialComplex& complex);

/// Strongly connected and every ridge in at most two facets. Errors: NotPure.
bool is_pseudomanifold(const SimplicialComplex& complex);

enum class SheddingMode {
    AsDefined, // recursion on link and deletion, base case {∅}
    Strict,    // deletion must stay pure of the same dimension; simplices are base cases
};

struct VDOptions {
    std::optional<int> hint;                 // vertex tried first at the top level
    SheddingMode mode = SheddingMode::AsDefined;
    long long budget = 4'000'000;            // search nodes before BudgetExceeded
};

struct VDResult {
    bool decomposable = false;
    /// Preorder trace of shedding vertices (vertex, then link's trace, then
    /// deletion's trace); empty for base cases.
    std::vector<int> shedding_preorder;
    long long nodes = 0;
};

/// Errors: NotPure (input), BudgetExceeded.
VDResult is_vertex_decomposable(const SimplicialComplex& complex, const VDOptions& options = {});

enum class BallSphere { Sphere, Ball, Neither, Unknown };
const char* to_string(BallSphere verdict);

/// Shellability via vertex decomposability, then boundary ridges decide,
/// cross-checked against rational reduced homology. Errors: NotPure.
BallSphere classify_ball_sphere(const SimplicialComplex& complex, const VDOptions& options = {});

} // namespace sqz
