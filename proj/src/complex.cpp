#include "sqz/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "sqz/homology.hpp"

namespace sqz {

namespace {

Face sorted_face(Face face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

bool subface(const Face& inner, const Face& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::size_t intersection_size(const Face& a, const Face& b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_) {
        if (f.size() != facets_.front().size()) return false;
    }
    return true;
}

bool SimplicialComplex::contains_face(const Face& face) const {
    Face f = sorted_face(face);
    for (const Face& facet : facets_) {
        if (subface(f, facet)) return true;
    }
    return false;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const Face& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

SimplicialComplex normalize_complex(int n, std::vector<Face> faces) {
    if (n < 0) fail(ErrorKind::BadInput, "negative vertex count");
    if (faces.empty()) fail(ErrorKind::BadInput, "a complex needs at least one face");
    for (Face& f : faces) {
        f = sorted_face(std::move(f));
        for (int v : f) {
            if (v < 1 || v > n)
                fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1," +
                                                      std::to_string(n) + "]");
        }
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> facets;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& kept : facets) {
            if (subface(f, kept)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex(n, std::move(facets));
}

namespace {

// Face counts per dimension via downward closure; bitmask walk when the
// ambient fits one word, generic subset recursion otherwise.
std::vector<long long> face_counts(const SimplicialComplex& complex) {
    int dim = complex.dimension();
    std::vector<long long> counts(dim + 2, 0); // index k+1 holds f_k, k from -1
    counts[0] = 1;
    if (complex.vertex_count() <= 64) {
        std::unordered_set<std::uint64_t> seen;
        for (const Face& facet : complex.facets()) {
            std::uint64_t mask = 0;
            for (int v : facet) mask |= 1ull << (v - 1);
            for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
                if (seen.insert(sub).second) counts[std::popcount(sub)] += 1;
            }
        }
    } else {
        std::set<Face> seen;
        std::function<void(const Face&, std::size_t, Face&)> rec = [&](const Face& facet,
                                                                       std::size_t from, Face& cur) {
            if (!cur.empty() && seen.insert(cur).second) counts[cur.size()] += 1;
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
    }
    return counts;
}

} // namespace

std::vector<long long> f_vector(const SimplicialComplex& complex) { return face_counts(complex); }

std::vector<long long> h_from_f(const std::vector<long long>& f) {
    int d = static_cast<int>(f.size()) - 1; // f = (f_{-1}, ..., f_{d-1})
    std::vector<long long> coeff(d + 1, 0); // of t^0..t^d
    for (int i = 0; i <= d; ++i) {
        int p = d - i;
        for (int j = 0; j <= p; ++j) {
            long long sign = ((p - j) % 2 == 0) ? 1 : -1;
            coeff[j] += f[i] * binomial(p, j) * sign;
        }
    }
    std::vector<long long> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) h[i] = coeff[d - i];
    return h;
}

std::vector<long long> f_from_h(const std::vector<long long>& h) {
    int d = static_cast<int>(h.size()) - 1;
    std::vector<long long> coeff(d + 1, 0); // of t^0..t^d in H(t+1)
    for (int i = 0; i <= d; ++i) {
        int p = d - i;
        for (int j = 0; j <= p; ++j) coeff[j] += h[i] * binomial(p, j);
    }
    std::vector<long long> f(d + 1, 0);
    for (int i = 0; i <= d; ++i) f[i] = coeff[d - i];
    return f;
}

std::vector<long long> h_vector(const SimplicialComplex& complex) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "h-vector needs a pure complex");
    return h_from_f(f_vector(complex));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    Face f = sorted_face(face);
    if (!complex.contains_face(f)) fail(ErrorKind::NotAFace, "link of a non-face");
    std::vector<Face> facets;
    for (const Face& facet : complex.facets()) {
        if (!subface(f, facet)) continue;
        Face rest;
        std::set_difference(facet.begin(), facet.end(), f.begin(), f.end(),
                            std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return normalize_complex(complex.vertex_count(), std::move(facets));
}

SimplicialComplex delete_vertex(const SimplicialComplex& complex, int v) {
    if (v < 1 || v > complex.vertex_count())
        fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    std::vector<Face> faces;
    for (const Face& facet : complex.facets()) {
        Face f = facet;
        f.erase(std::remove(f.begin(), f.end(), v), f.end());
        faces.push_back(std::move(f));
    }
    return normalize_complex(complex.vertex_count(), std::move(faces));
}

long long RidgeReport::max_degree() const {
    long long best = 0;
    for (const auto& [ridge, degree] : degrees) best = std::max(best, degree);
    return best;
}

RidgeReport ridge_degree_map(const SimplicialComplex& complex) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "ridge map needs a pure complex");
    int dim = complex.dimension();
    if (dim < 0) fail(ErrorKind::BadInput, "ridge map needs dimension >= 0");
    RidgeReport report;
    for (const Face& facet : complex.facets()) {
        if (dim == 0) {
            report.degrees[Face{}] += 1;
            continue;
        }
        for (std::size_t drop = 0; drop < facet.size(); ++drop) {
            Face ridge;
            ridge.reserve(facet.size() - 1);
            for (std::size_t i = 0; i < facet.size(); ++i) {
                if (i != drop) ridge.push_back(facet[i]);
            }
            report.degrees[std::move(ridge)] += 1;
        }
    }
    for (const auto& [ridge, degree] : report.degrees) {
        report.total_excess += std::max(0ll, degree - 2);
    }
    return report;
}

Rational singularity_index(const SimplicialComplex& complex) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "singularity index needs a pure complex");
    if (complex.dimension() < 1) fail(ErrorKind::NoRidges, "singularity index needs dimension >= 1");
    RidgeReport report = ridge_degree_map(complex);
    return make_rational(report.total_excess, report.ridge_count());
}

bool is_strongly_connected(const SimplicialComplex& complex) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "strong connectivity needs a pure complex");
    const auto& facets = complex.facets();
    std::size_t k = facets.size();
    if (k <= 1) return true;
    std::size_t ridge_size = facets.front().size() - 1;
    std::vector<std::size_t> component(k);
    for (std::size_t i = 0; i < k; ++i) component[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
        while (component[i] != i) i = component[i] = component[component[i]];
        return i;
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (intersection_size(facets[i], facets[j]) == ridge_size)
                component[root(i)] = root(j);
        }
    }
    for (std::size_t i = 1; i < k; ++i) {
        if (root(i) != root(0)) return false;
    }
    return true;
}

bool is_pseudomanifold(const SimplicialComplex& complex) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "pseudomanifold test needs a pure complex");
    if (!is_strongly_connected(complex)) return false;
    if (complex.dimension() < 0) return true;
    return ridge_degree_map(complex).max_degree() <= 2;
}

namespace {

bool is_single_simplex(const SimplicialComplex& complex) { return complex.facets().size() == 1; }

bool is_empty_complex(const SimplicialComplex& complex) {
    return complex.facets().size() == 1 && complex.facets().front().empty();
}

struct VDContext {
    SheddingMode mode;
    long long budget;
    long long nodes = 0;
    std::map<std::vector<Face>, std::pair<bool, std::vector<int>>> memo;
};

// When the shapes line up, every accepted shedding step must satisfy
// h_i(Δ) = h_i(Δ∖v) + h_{i-1}(lk(v)).
void check_shedding_h_recursion(const SimplicialComplex& complex, const SimplicialComplex& lk,
                                const SimplicialComplex& del) {
    if (!complex.is_pure() || !del.is_pure() || !lk.is_pure()) return;
    if (del.dimension() != complex.dimension()) return;
    if (lk.dimension() != complex.dimension() - 1) return;
    std::vector<long long> h = h_vector(complex);
    std::vector<long long> h_del = h_vector(del);
    std::vector<long long> h_lk = h_vector(lk);
    for (std::size_t i = 0; i < h.size(); ++i) {
        long long from_del = i < h_del.size() ? h_del[i] : 0;
        long long from_lk = (i >= 1 && i - 1 < h_lk.size()) ? h_lk[i - 1] : 0;
        if (h[i] != from_del + from_lk)
            throw std::logic_error("shedding step violates the h-vector recursion");
    }
}

std::pair<bool, std::vector<int>> vd_search(const SimplicialComplex& complex, VDContext& ctx,
                                            std::optional<int> hint) {
    if (++ctx.nodes > ctx.budget) fail(ErrorKind::BudgetExceeded, "shedding search budget");
    if (is_empty_complex(complex)) return {true, {}};
    if (ctx.mode == SheddingMode::Strict && is_single_simplex(complex)) return {true, {}};

    auto found = ctx.memo.find(complex.facets());
    if (found != ctx.memo.end()) return found->second;

    std::vector<int> candidates = complex.vertices();
    if (hint && std::find(candidates.begin(), candidates.end(), *hint) != candidates.end()) {
        candidates.erase(std::find(candidates.begin(), candidates.end(), *hint));
        candidates.insert(candidates.begin(), *hint);
    }

    std::pair<bool, std::vector<int>> result{false, {}};
    for (int v : candidates) {
        SimplicialComplex lk = link(complex, Face{v});
        SimplicialComplex del = delete_vertex(complex, v);
        if (ctx.mode == SheddingMode::Strict) {
            if (!del.is_pure() || del.dimension() != complex.dimension()) continue;
        }
        auto [lk_ok, lk_trace] = vd_search(lk, ctx, std::nullopt);
        if (!lk_ok) continue;
        auto [del_ok, del_trace] = vd_search(del, ctx, std::nullopt);
        if (!del_ok) continue;
        check_shedding_h_recursion(complex, lk, del);
        result.first = true;
        result.second.push_back(v);
        result.second.insert(result.second.end(), lk_trace.begin(), lk_trace.end());
        result.second.insert(result.second.end(), del_trace.begin(), del_trace.end());
        break;
    }
    ctx.memo.emplace(complex.facets(), result);
    return result;
}

} // namespace

VDResult is_vertex_decomposable(const SimplicialComplex& complex, const VDOptions& options) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "vertex decomposability needs a pure complex");
    VDContext ctx{options.mode, options.budget};
    auto [ok, trace] = vd_search(complex, ctx, options.hint);
    return VDResult{ok, std::move(trace), ctx.nodes};
}

const char* to_string(BallSphere verdict) {
    switch (verdict) {
    case BallSphere::Sphere: return "sphere";
    case BallSphere::Ball: return "ball";
    case BallSphere::Neither: return "neither";
    case BallSphere::Unknown: return "unknown";
    }
    return "unknown";
}

BallSphere classify_ball_sphere(const SimplicialComplex& complex, const VDOptions& options) {
    if (!complex.is_pure()) fail(ErrorKind::NotPure, "classification needs a pure complex");
    if (!is_pseudomanifold(complex)) return BallSphere::Neither;

    VDResult vd;
    try {
        vd = is_vertex_decomposable(complex, options);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BudgetExceeded) return BallSphere::Unknown;
        throw;
    }
    if (!vd.decomposable) return BallSphere::Unknown;

    bool has_boundary = false;
    if (complex.dimension() >= 0) {
        for (const auto& [ridge, degree] : ridge_degree_map(complex).degrees) {
            if (degree == 1) has_boundary = true;
        }
    }
    BallSphere verdict = has_boundary ? BallSphere::Ball : BallSphere::Sphere;

    std::vector<long long> betti = reduced_betti(complex);
    bool homology_ball = std::all_of(betti.begin(), betti.end(), [](long long b) { return b == 0; });
    bool homology_sphere = betti.back() == 1 &&
                           std::all_of(betti.begin(), betti.end() - 1,
                                       [](long long b) { return b == 0; });
    if ((verdict == BallSphere::Ball && !homology_ball) ||
        (verdict == BallSphere::Sphere && !homology_sphere))
        throw std::logic_error("ridge classification disagrees with reduced homology");
    return verdict;
}

} // namespace sqz
