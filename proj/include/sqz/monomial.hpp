#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sqz/error.hpp"

namespace sqz {

/// Monomial in a fixed polynomial ring K[x_1..x_m], stored as its exponent
/// vector. The sorted index multiset (i_1 <= ... <= i_s, one entry per
/// variable occurrence) is derived on demand.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int vars);
    static Monomial variable(int vars, int index);
    static Monomial from_indices(int vars, const std::vector<int>& indices);

    int vars() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    int exponent(int index) const { return exponents_[index - 1]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool is_one() const { return degree_ == 0; }
    /// Largest index of a variable dividing the monomial; 0 for the monomial 1.
    int max_index() const;
    std::vector<int> sorted_indices() const;

    bool divides(const Monomial& other) const;
    Monomial times_var(int index) const;
    Monomial div_var(int index) const;
    Monomial times(const Monomial& other) const;
    /// Same exponents viewed in a ring with at least as many variables.
    Monomial widened(int vars) const;

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

private:
    std::vector<int> exponents_;
    int degree_;
};

/// Canonical order: by degree, then reverse-lexicographically within a
/// degree (the revlex-larger monomial first, so x1^2, x1x2, x2^2, x1x3, ...).
bool canonical_before(const Monomial& a, const Monomial& b);

/// All monomials of the given degree over `vars` variables, canonically ordered.
std::vector<Monomial> monomials_of_degree(int vars, int degree);

/// Monomial ideal given by its minimal generators (an antichain under
/// divisibility, canonically ordered).
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(int vars, std::vector<Monomial> generators);
    static MonomialIdeal zero(int vars) { return from_generators(vars, {}); }

    int vars() const { return vars_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }
    bool contains(const Monomial& u) const;
    /// Maximal degree of a minimal generator; 0 for the zero ideal.
    int d_max() const;
    /// Same generators viewed in a larger ring.
    MonomialIdeal widened(int vars) const;

    bool operator==(const MonomialIdeal& other) const;

private:
    MonomialIdeal(int vars, std::vector<Monomial> generators);
    int vars_;
    std::vector<Monomial> generators_;
};

/// Finite divisor-closed monomial set containing 1 and every variable.
class OrderIdeal {
public:
    int vars() const { return vars_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool contains(const Monomial& u) const;
    int d_max() const;
    std::vector<long long> degree_histogram() const;
    std::vector<Monomial> layer(int degree) const;
    std::size_t size() const { return monomials_.size(); }

    bool operator==(const OrderIdeal& other) const {
        return vars_ == other.vars_ && monomials_ == other.monomials_;
    }

    friend OrderIdeal validate_order_ideal(int vars, std::vector<Monomial> monomials);

private:
    OrderIdeal(int vars, std::vector<Monomial> monomials);
    int vars_;
    std::vector<Monomial> monomials_; // canonical order
};

/// Errors: BadArity, MissingOne, MissingVariable, MissingDivisor.
OrderIdeal validate_order_ideal(int vars, std::vector<Monomial> monomials);

bool is_shifted(const OrderIdeal& U);

/// Minimal generators of the ideal spanned by all monomials outside U.
MonomialIdeal ideal_of(const OrderIdeal& U);

/// Complement order ideal of an Artinian monomial ideal.
/// Errors: NotArtinian, ConventionViolation.
OrderIdeal complement_of(const MonomialIdeal& I, int vars);

bool is_strongly_stable(const MonomialIdeal& I);

/// Smallest set generating U under moves that replace a variable index by a
/// larger one: the per-degree minima under componentwise dominance of sorted
/// index vectors. Errors: NotShifted.
std::vector<Monomial> shift_generators(const OrderIdeal& U);

/// Whether `target` can be reached from `source` by index-increasing moves.
bool shift_generates(const Monomial& source, const Monomial& target);

/// All monomials of degree at most `degree`.
OrderIdeal maximal_order_ideal(int vars, int degree);

struct EnumerationOptions {
    std::optional<std::vector<long long>> histogram; // exact degree-histogram filter
    long long cap = 1'000'000;                       // CapExceeded beyond this many ideals
};

/// Visits every shifted order ideal over `vars` variables with d_max <= degree_cap,
/// each exactly once, in a deterministic layer-by-layer order.
void enumerate_shifted_order_ideals(int vars, int degree_cap,
                                    const std::function<void(const OrderIdeal&)>& visit,
                                    const EnumerationOptions& options = {});

std::vector<OrderIdeal> all_shifted_order_ideals(int vars, int degree_cap,
                                                 const EnumerationOptions& options = {});

} // namespace sqz
