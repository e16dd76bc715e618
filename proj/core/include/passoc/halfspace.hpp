#pragma once

#include "passoc/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace passoc {

/// Exact coordinates, one per variable of the ambient space.
struct RationalPoint {
    std::vector<Rational> coords;

    std::size_t dimension() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational sum() const;

    bool operator==(const RationalPoint&) const = default;
    bool operator<(const RationalPoint& o) const { return coords < o.coords; }
};

/// sum_i coefficients[i] * p_i + constant.
struct LinearFunctional {
    std::vector<Rational> coefficients;
    Rational constant = 0;

    static LinearFunctional zero(std::size_t dimension);

    std::size_t dimension() const { return coefficients.size(); }
    bool is_zero() const;
    Rational operator()(const RationalPoint& p) const;

    LinearFunctional& operator+=(const LinearFunctional& o);
    LinearFunctional operator-() const;
    bool operator==(const LinearFunctional&) const = default;
};

Rational evaluate(const LinearFunctional& f, const RationalPoint& p);

/// functional(p) == rhs, or functional(p) >= rhs for inequalities. Stored
/// functionals are homogeneous: a constant term is moved into rhs on insertion.
struct Constraint {
    LinearFunctional functional;
    Rational rhs;
    std::string label;

    bool operator==(const Constraint&) const = default;
};

class HalfSpaceSystem {
public:
    HalfSpaceSystem() = default;
    explicit HalfSpaceSystem(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t dimension() const { return variables_.size(); }
    const std::vector<Constraint>& equalities() const { return equalities_; }
    const std::vector<Constraint>& inequalities() const { return inequalities_; }

    /// Labels must be unique across both lists. Throws InvalidInputError.
    void add_equality(LinearFunctional f, Rational rhs, std::string label);
    void add_inequality(LinearFunctional f, Rational rhs, std::string label);

    std::optional<std::size_t> find_inequality(std::string_view label) const;
    std::optional<std::size_t> find_equality(std::string_view label) const;

    /// Turns the named inequalities into equalities (order preserved).
    HalfSpaceSystem with_equalities(const std::vector<std::string>& labels) const;

    bool satisfies_equalities(const RationalPoint& p) const;
    bool contains(const RationalPoint& p) const;
    /// Labels of inequalities attaining equality at p, in declaration order.
    std::vector<std::string> tight_labels(const RationalPoint& p) const;

    bool operator==(const HalfSpaceSystem&) const = default;

private:
    void check(const LinearFunctional& f, const std::string& label) const;

    std::vector<std::string> variables_;
    std::vector<Constraint> equalities_;
    std::vector<Constraint> inequalities_;
};

} // namespace passoc
