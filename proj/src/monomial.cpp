#include "sqz/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace sqz {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MissingDivisor: return "MissingDivisor";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::MissingOne: return "MissingOne";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::ConventionViolation: return "ConventionViolation";
    case ErrorKind::NotShifted: return "NotShifted";
    case ErrorKind::NotStronglyStable: return "NotStronglyStable";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NoRidges: return "NoRidges";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeExceedsD: return "DegreeExceedsD";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::NotShiftedComplex: return "NotShiftedComplex";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ModeDisagreement: return "ModeDisagreement";
    case ErrorKind::BadInput: return "BadInput";
    }
    return "Error";
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) fail(ErrorKind::BadInput, "negative exponent");
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

Monomial Monomial::variable(int vars, int index) {
    std::vector<int> e(vars, 0);
    e.at(index - 1) = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_indices(int vars, const std::vector<int>& indices) {
    std::vector<int> e(vars, 0);
    for (int i : indices) e.at(i - 1) += 1;
    return Monomial(std::move(e));
}

int Monomial::max_index() const {
    for (int i = vars(); i >= 1; --i) {
        if (exponents_[i - 1] > 0) return i;
    }
    return 0;
}

std::vector<int> Monomial::sorted_indices() const {
    std::vector<int> idx;
    idx.reserve(degree_);
    for (int i = 1; i <= vars(); ++i) {
        idx.insert(idx.end(), exponents_[i - 1], i);
    }
    return idx;
}

bool Monomial::divides(const Monomial& other) const {
    if (vars() != other.vars()) fail(ErrorKind::BadArity, "divisibility across different rings");
    for (int i = 0; i < vars(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

Monomial Monomial::times_var(int index) const {
    std::vector<int> e = exponents_;
    e.at(index - 1) += 1;
    return Monomial(std::move(e));
}

Monomial Monomial::div_var(int index) const {
    std::vector<int> e = exponents_;
    if (e.at(index - 1) == 0) fail(ErrorKind::BadInput, "not divisible by that variable");
    e[index - 1] -= 1;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& other) const {
    if (vars() != other.vars()) fail(ErrorKind::BadArity, "product across different rings");
    std::vector<int> e = exponents_;
    for (int i = 0; i < vars(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::widened(int vars) const {
    if (vars < this->vars()) fail(ErrorKind::BadArity, "cannot shrink a monomial's ring");
    std::vector<int> e = exponents_;
    e.resize(vars, 0);
    return Monomial(std::move(e));
}

bool canonical_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = n; i-- > 0;) {
        int xa = i < ea.size() ? ea[i] : 0;
        int xb = i < eb.size() ? eb[i] : 0;
        if (xa != xb) return xa < xb; // revlex-larger first
    }
    return false;
}

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> e(vars, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == vars - 1) {
            e[pos] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (vars <= 0) {
        if (degree == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    rec(0, degree);
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> generators)
    : vars_(vars), generators_(std::move(generators)) {}

MonomialIdeal MonomialIdeal::from_generators(int vars, std::vector<Monomial> generators) {
    for (const Monomial& g : generators) {
        if (g.vars() != vars) fail(ErrorKind::BadArity, "generator arity mismatch");
    }
    std::sort(generators.begin(), generators.end(), canonical_before);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Monomial> minimal;
    for (const Monomial& g : generators) {
        bool redundant = false;
        for (const Monomial& h : minimal) {
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal(vars, std::move(minimal));
}

bool MonomialIdeal::contains(const Monomial& u) const {
    for (const Monomial& g : generators_) {
        if (g.degree() > u.degree()) break;
        if (g.divides(u)) return true;
    }
    return false;
}

int MonomialIdeal::d_max() const {
    int d = 0;
    for (const Monomial& g : generators_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::widened(int vars) const {
    std::vector<Monomial> gens;
    gens.reserve(generators_.size());
    for (const Monomial& g : generators_) gens.push_back(g.widened(vars));
    return MonomialIdeal(vars, std::move(gens));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return vars_ == other.vars_ && generators_ == other.generators_;
}

OrderIdeal::OrderIdeal(int vars, std::vector<Monomial> monomials)
    : vars_(vars), monomials_(std::move(monomials)) {}

bool OrderIdeal::contains(const Monomial& u) const {
    if (u.vars() != vars_) return false;
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), u, canonical_before);
    return it != monomials_.end() && *it == u;
}

int OrderIdeal::d_max() const { return monomials_.back().degree(); }

std::vector<long long> OrderIdeal::degree_histogram() const {
    std::vector<long long> h(d_max() + 1, 0);
    for (const Monomial& u : monomials_) h[u.degree()] += 1;
    return h;
}

std::vector<Monomial> OrderIdeal::layer(int degree) const {
    std::vector<Monomial> out;
    for (const Monomial& u : monomials_) {
        if (u.degree() == degree) out.push_back(u);
    }
    return out;
}

OrderIdeal validate_order_ideal(int vars, std::vector<Monomial> monomials) {
    if (vars < 1) fail(ErrorKind::BadInput, "need at least one variable");
    for (const Monomial& u : monomials) {
        if (u.vars() != vars) fail(ErrorKind::BadArity, "exponent vector of wrong length");
    }
    std::sort(monomials.begin(), monomials.end(), canonical_before);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

    OrderIdeal U(vars, std::move(monomials));
    if (!U.contains(Monomial::one(vars))) fail(ErrorKind::MissingOne, "the monomial 1 is absent");
    for (int i = 1; i <= vars; ++i) {
        if (!U.contains(Monomial::variable(vars, i)))
            fail(ErrorKind::MissingVariable, "variable x" + std::to_string(i) + " is absent");
    }
    for (const Monomial& u : U.monomials()) {
        for (int i = 1; i <= vars; ++i) {
            if (u.exponent(i) > 0 && !U.contains(u.div_var(i)))
                fail(ErrorKind::MissingDivisor, "a divisor of a member is absent");
        }
    }
    return U;
}

bool is_shifted(const OrderIdeal& U) {
    int m = U.vars();
    for (const Monomial& u : U.monomials()) {
        for (int i = 1; i < m; ++i) {
            if (u.exponent(i) == 0) continue;
            Monomial base = u.div_var(i);
            for (int j = i + 1; j <= m; ++j) {
                if (!U.contains(base.times_var(j))) return false;
            }
        }
    }
    return true;
}

MonomialIdeal ideal_of(const OrderIdeal& U) {
    int m = U.vars();
    int top = U.d_max() + 1;
    std::vector<Monomial> gens;
    for (int k = 1; k <= top; ++k) {
        for (const Monomial& u : monomials_of_degree(m, k)) {
            if (U.contains(u)) continue;
            bool minimal = true;
            for (int i = 1; i <= m && minimal; ++i) {
                if (u.exponent(i) > 0 && !U.contains(u.div_var(i))) minimal = false;
            }
            if (minimal) gens.push_back(u);
        }
    }
    return MonomialIdeal::from_generators(m, std::move(gens));
}

OrderIdeal complement_of(const MonomialIdeal& I, int vars) {
    if (I.vars() != vars) fail(ErrorKind::BadArity, "ideal arity mismatch");
    for (int i = 1; i <= vars; ++i) {
        // x_i^k lies in the ideal iff some generator involves no other variable.
        bool pure_power = false;
        for (const Monomial& g : I.generators()) {
            if (g.exponent(i) == g.degree()) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power)
            fail(ErrorKind::NotArtinian, "no power of x" + std::to_string(i) + " in the ideal");
    }
    std::vector<Monomial> members;
    for (int k = 0;; ++k) {
        bool layer_nonempty = false;
        for (const Monomial& u : monomials_of_degree(vars, k)) {
            if (!I.contains(u)) {
                members.push_back(u);
                layer_nonempty = true;
            }
        }
        if (!layer_nonempty) break;
    }
    if (members.empty() || !members.front().is_one())
        fail(ErrorKind::ConventionViolation, "complement does not contain 1");
    for (int i = 1; i <= vars; ++i) {
        if (I.contains(Monomial::variable(vars, i)))
            fail(ErrorKind::ConventionViolation,
                 "complement does not contain x" + std::to_string(i));
    }
    return validate_order_ideal(vars, std::move(members));
}

bool is_strongly_stable(const MonomialIdeal& I) {
    for (const Monomial& g : I.generators()) {
        for (int i = 2; i <= I.vars(); ++i) {
            if (g.exponent(i) == 0) continue;
            Monomial base = g.div_var(i);
            for (int j = 1; j < i; ++j) {
                if (!I.contains(base.times_var(j))) return false;
            }
        }
    }
    return true;
}

namespace {

// Componentwise dominance of sorted index vectors; both of the same degree.
bool dominates(const Monomial& high, const Monomial& low) {
    std::vector<int> a = high.sorted_indices();
    std::vector<int> b = low.sorted_indices();
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) return false;
    }
    return true;
}

} // namespace

bool shift_generates(const Monomial& source, const Monomial& target) {
    return dominates(target, source);
}

std::vector<Monomial> shift_generators(const OrderIdeal& U) {
    if (!is_shifted(U)) fail(ErrorKind::NotShifted, "shift generators need a shifted order ideal");
    std::vector<Monomial> gens;
    for (int k = 0; k <= U.d_max(); ++k) {
        for (const Monomial& u : U.layer(k)) {
            bool minimal = true;
            for (const Monomial& v : U.layer(k)) {
                if (!(v == u) && dominates(u, v)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) gens.push_back(u);
        }
    }
    return gens;
}

OrderIdeal maximal_order_ideal(int vars, int degree) {
    if (vars < 1 || degree < 1) fail(ErrorKind::BadInput, "need vars >= 1 and degree >= 1");
    std::vector<Monomial> members;
    for (int k = 0; k <= degree; ++k) {
        for (const Monomial& u : monomials_of_degree(vars, k)) members.push_back(u);
    }
    return validate_order_ideal(vars, std::move(members));
}

namespace {

// Monomials of the next degree all of whose one-step divisors lie in `layer`.
std::vector<Monomial> eligible_next_layer(int vars, const std::vector<Monomial>& layer) {
    std::set<std::vector<int>> members;
    for (const Monomial& u : layer) members.insert(u.exponents());
    std::vector<Monomial> eligible;
    if (layer.empty()) return eligible;
    int k = layer.front().degree() + 1;
    for (const Monomial& v : monomials_of_degree(vars, k)) {
        bool ok = true;
        for (int i = 1; i <= vars && ok; ++i) {
            if (v.exponent(i) > 0 && !members.count(v.div_var(i).exponents())) ok = false;
        }
        if (ok) eligible.push_back(v);
    }
    return eligible;
}

// Subsets of `elems` closed under single index-increasing moves, as bitmasks
// in ascending numeric order over the canonical element order.
std::vector<std::uint32_t> shifted_upsets(int vars, const std::vector<Monomial>& elems) {
    int n = static_cast<int>(elems.size());
    if (n > 25) fail(ErrorKind::CapExceeded, "layer too large to enumerate");
    std::vector<std::vector<int>> succ(n); // positions reachable by one raise
    auto position = [&](const Monomial& u) -> int {
        for (int p = 0; p < n; ++p) {
            if (elems[p] == u) return p;
        }
        return -1;
    };
    for (int p = 0; p < n; ++p) {
        const Monomial& u = elems[p];
        for (int i = 1; i < vars; ++i) {
            if (u.exponent(i) == 0) continue;
            Monomial base = u.div_var(i);
            for (int j = i + 1; j <= vars; ++j) {
                int q = position(base.times_var(j));
                if (q >= 0) succ[p].push_back(q);
            }
        }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool closed = true;
        for (int p = 0; p < n && closed; ++p) {
            if (!(mask & (1u << p))) continue;
            for (int q : succ[p]) {
                if (!(mask & (1u << q))) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.push_back(mask);
    }
    return out;
}

} // namespace

void enumerate_shifted_order_ideals(int vars, int degree_cap,
                                    const std::function<void(const OrderIdeal&)>& visit,
                                    const EnumerationOptions& options) {
    if (vars < 1 || degree_cap < 1) fail(ErrorKind::BadInput, "need vars >= 1 and degree_cap >= 1");
    long long produced = 0;

    std::vector<std::vector<Monomial>> layers;
    layers.push_back({Monomial::one(vars)});
    {
        std::vector<Monomial> vars_layer;
        for (int i = 1; i <= vars; ++i) vars_layer.push_back(Monomial::variable(vars, i));
        layers.push_back(vars_layer);
    }

    auto emit = [&]() {
        if (++produced > options.cap)
            fail(ErrorKind::CapExceeded, "enumeration budget exhausted");
        std::vector<Monomial> members;
        for (const auto& layer : layers) {
            members.insert(members.end(), layer.begin(), layer.end());
        }
        OrderIdeal U = validate_order_ideal(vars, std::move(members));
        if (options.histogram && U.degree_histogram() != *options.histogram) return;
        visit(U);
    };

    std::function<void(int)> extend = [&](int degree) {
        if (degree > degree_cap) {
            emit();
            return;
        }
        emit(); // the ideal that stops below this degree
        std::vector<Monomial> eligible = eligible_next_layer(vars, layers.back());
        if (eligible.empty()) return;
        for (std::uint32_t mask : shifted_upsets(vars, eligible)) {
            if (mask == 0) continue;
            std::vector<Monomial> layer;
            for (int p = 0; p < static_cast<int>(eligible.size()); ++p) {
                if (mask & (1u << p)) layer.push_back(eligible[p]);
            }
            layers.push_back(std::move(layer));
            extend(degree + 1);
            layers.pop_back();
        }
    };
    extend(2);
}

std::vector<OrderIdeal> all_shifted_order_ideals(int vars, int degree_cap,
                                                 const EnumerationOptions& options) {
    std::vector<OrderIdeal> out;
    enumerate_shifted_order_ideals(
        vars, degree_cap, [&](const OrderIdeal& U) { out.push_back(U); }, options);
    return out;
}

} // namespace sqz
