#pragma once

#include "conjal/rational.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conjal {

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

/// Thrown when the unit axiom C^k_{0j} = C^k_{j0} = delta^k_j fails.
/// Carries the first violating (i, j, k) in scan order.
class UnitAxiomError : public std::invalid_argument {
public:
    UnitAxiomError(std::size_t i, std::size_t j, std::size_t k, Rational value);
    std::size_t i, j, k;
    Rational value;
};

/// A finite-dimensional unital algebra given by its structure constants:
/// e_i e_j = sum_k C^k_{ij} e_k, with the unit pinned to basis index 0.
/// Instances are immutable, validated on construction, and shared by the
/// elements and maps defined over them.
class AlgebraSpec {
public:
    /// Dense tensor layout: constants[(i*n + j)*n + k] = C^k_{ij}.
    static std::size_t constants_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
        return (i * n + j) * n + k;
    }

    /// Validates and freezes a spec. Checks dimension >= 1, distinct
    /// nonempty basis names, tensor size n^3, and the unit axiom; throws
    /// std::invalid_argument (UnitAxiomError for the latter).
    static SpecPtr create(std::string name, std::vector<std::string> basis_names,
                          std::vector<Rational> constants);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::vector<Rational>& constants() const { return constants_; }

    /// C^k_{ij}: coefficient of e_k in e_i e_j.
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[constants_index(dim_, i, j, k)];
    }

    std::optional<std::size_t> basis_index(std::string_view name) const;

    bool operator==(const AlgebraSpec& o) const {
        return dim_ == o.dim_ && basis_names_ == o.basis_names_ && constants_ == o.constants_;
    }

private:
    AlgebraSpec(std::string name, std::vector<std::string> basis_names,
                std::vector<Rational> constants)
        : name_(std::move(name)), basis_names_(std::move(basis_names)),
          constants_(std::move(constants)), dim_(basis_names_.size()) {}

    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<Rational> constants_;
    std::size_t dim_;
};

/// True when two handles denote the same algebra (pointer equality first,
/// structural comparison as fallback).
bool same_spec(const SpecPtr& a, const SpecPtr& b);

/// An algebra element as its coordinate vector relative to the owning
/// spec's basis. Immutable value type.
class Element {
public:
    Element(SpecPtr spec, std::vector<Rational> coords);

    const SpecPtr& spec() const { return spec_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::size_t dim() const { return coords_.size(); }

    bool is_zero() const;

    Element operator-() const;
    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    /// Algebra product through the structure constants.
    friend Element operator*(const Element& x, const Element& y);
    friend Element operator*(const Rational& c, const Element& x);

    friend bool operator==(const Element& x, const Element& y);
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

private:
    SpecPtr spec_;
    std::vector<Rational> coords_;
};

Element zero_element(const SpecPtr& spec);
Element basis_element(const SpecPtr& spec, std::size_t i);

/// c |-> c*e_0, the canonical copy of the scalar ring inside the algebra.
Element embed_scalar(const SpecPtr& spec, const Rational& c);

inline Element add(const Element& x, const Element& y) { return x + y; }
inline Element sub(const Element& x, const Element& y) { return x - y; }
inline Element mul(const Element& x, const Element& y) { return x * y; }
inline Element scale(const Rational& c, const Element& x) { return c * x; }

/// [x, y] = xy - yx
Element commutator(const Element& x, const Element& y);
/// (x, y, z) = (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);

struct CommutativityResult {
    bool commutative;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // first failing basis pair
};

struct AssociativityResult {
    bool associative;
    std::optional<std::array<std::size_t, 3>> witness; // first failing basis triple
};

/// Exhaustive check over basis pairs, lexicographic witness order.
CommutativityResult is_commutative(const SpecPtr& spec);
/// Exhaustive check over basis triples, lexicographic witness order.
AssociativityResult is_associative(const SpecPtr& spec);

/// Basis of {x : [x, e_i] = 0 and every associator slot against basis pairs
/// vanishes}, via a stacked linear system and its exact nullspace.
std::vector<Element> center_basis(const SpecPtr& spec);

/// Basis of {x : (x,e_i,e_j) = (e_i,x,e_j) = (e_i,e_j,x) = 0 for all i, j}.
std::vector<Element> nucleus_basis(const SpecPtr& spec);

} // namespace conjal
