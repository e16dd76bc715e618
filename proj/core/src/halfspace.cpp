#include "passoc/halfspace.hpp"

#include "passoc/errors.hpp"

#include <algorithm>

namespace passoc {

Rational RationalPoint::sum() const
{
    Rational s = 0;
    for (const auto& c : coords)
        s += c;
    return s;
}

LinearFunctional LinearFunctional::zero(std::size_t dimension)
{
    LinearFunctional f;
    f.coefficients.assign(dimension, Rational(0));
    return f;
}

bool LinearFunctional::is_zero() const
{
    return constant == 0 &&
           std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q == 0; });
}

Rational LinearFunctional::operator()(const RationalPoint& p) const
{
    if (p.dimension() != dimension())
        throw InvalidInputError("functional and point live in different dimensions");
    Rational value = constant;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (coefficients[i] != 0)
            value += coefficients[i] * p.coords[i];
    return value;
}

LinearFunctional& LinearFunctional::operator+=(const LinearFunctional& o)
{
    if (o.dimension() != dimension())
        throw InvalidInputError("functional dimensions differ");
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        coefficients[i] += o.coefficients[i];
    constant += o.constant;
    return *this;
}

LinearFunctional LinearFunctional::operator-() const
{
    LinearFunctional out = *this;
    for (auto& c : out.coefficients)
        c = -c;
    out.constant = -out.constant;
    return out;
}

Rational evaluate(const LinearFunctional& f, const RationalPoint& p)
{
    return f(p);
}

HalfSpaceSystem::HalfSpaceSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {}

void HalfSpaceSystem::check(const LinearFunctional& f, const std::string& label) const
{
    if (f.dimension() != dimension())
        throw InvalidInputError("constraint '" + label + "' has the wrong dimension");
    if (label.empty() || find_equality(label) || find_inequality(label))
        throw InvalidInputError("constraint label '" + label + "' is empty or already used");
}

void HalfSpaceSystem::add_equality(LinearFunctional f, Rational rhs, std::string label)
{
    check(f, label);
    rhs -= f.constant;
    f.constant = 0;
    equalities_.push_back({std::move(f), std::move(rhs), std::move(label)});
}

void HalfSpaceSystem::add_inequality(LinearFunctional f, Rational rhs, std::string label)
{
    check(f, label);
    rhs -= f.constant;
    f.constant = 0;
    inequalities_.push_back({std::move(f), std::move(rhs), std::move(label)});
}

std::optional<std::size_t> HalfSpaceSystem::find_inequality(std::string_view label) const
{
    for (std::size_t i = 0; i < inequalities_.size(); ++i)
        if (inequalities_[i].label == label)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> HalfSpaceSystem::find_equality(std::string_view label) const
{
    for (std::size_t i = 0; i < equalities_.size(); ++i)
        if (equalities_[i].label == label)
            return i;
    return std::nullopt;
}

HalfSpaceSystem HalfSpaceSystem::with_equalities(const std::vector<std::string>& labels) const
{
    for (const auto& l : labels)
        if (!find_inequality(l))
            throw InvalidInputError("no inequality labelled '" + l + "'");
    HalfSpaceSystem out(variables_);
    out.equalities_ = equalities_;
    for (const auto& c : inequalities_) {
        if (std::find(labels.begin(), labels.end(), c.label) != labels.end())
            out.equalities_.push_back(c);
        else
            out.inequalities_.push_back(c);
    }
    return out;
}

bool HalfSpaceSystem::satisfies_equalities(const RationalPoint& p) const
{
    return std::all_of(equalities_.begin(), equalities_.end(),
                       [&](const Constraint& c) { return c.functional(p) == c.rhs; });
}

bool HalfSpaceSystem::contains(const RationalPoint& p) const
{
    return satisfies_equalities(p) && std::all_of(inequalities_.begin(), inequalities_.end(), [&](const Constraint& c) {
               return c.functional(p) >= c.rhs;
           });
}

std::vector<std::string> HalfSpaceSystem::tight_labels(const RationalPoint& p) const
{
    std::vector<std::string> out;
    for (const auto& c : inequalities_)
        if (c.functional(p) == c.rhs)
            out.push_back(c.label);
    return out;
}

} // namespace passoc
