#pragma once

#include "conjal/algebra.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace conjal {

/// A p-linear self-map of an algebra, stored extensionally as the tensor of
/// its values on basis tuples: coeff(i_1..i_p, k) is the e_k-coordinate of
/// F(e_{i_1}, ..., e_{i_p}). Layout is row-major over the input indices with
/// the output index last.
class MultilinearMap {
public:
    /// Throws std::invalid_argument unless tensor.size() == n^arity * n.
    MultilinearMap(SpecPtr spec, std::size_t arity, std::vector<Rational> tensor);

    static MultilinearMap zero(SpecPtr spec, std::size_t arity);
    /// Arity-2 map whose tensor is the structure constants; eval agrees
    /// with the algebra product everywhere.
    static MultilinearMap product_map(const SpecPtr& spec);
    /// Arity-1 identity.
    static MultilinearMap identity_map(const SpecPtr& spec);

    const SpecPtr& spec() const { return spec_; }
    std::size_t arity() const { return arity_; }
    const std::vector<Rational>& tensor() const { return tensor_; }

    const Rational& coeff(std::span<const std::size_t> inputs, std::size_t k) const;
    Rational& coeff(std::span<const std::size_t> inputs, std::size_t k);

    /// Tensor contraction against the argument coordinates.
    /// Throws std::invalid_argument on arity or spec mismatch.
    Element eval(std::span<const Element> args) const;
    Element eval(std::initializer_list<Element> args) const;

    /// Arity-2 map with the arguments exchanged.
    MultilinearMap swapped() const;

    friend bool operator==(const MultilinearMap& a, const MultilinearMap& b);

private:
    SpecPtr spec_;
    std::size_t arity_;
    std::vector<Rational> tensor_;
};

/// Pointwise difference; arities and specs must match.
MultilinearMap map_sub(const MultilinearMap& f, const MultilinearMap& g);

/// Plugs g into input slot `slot` of f (1-based), yielding a map of arity
/// arity(f) + arity(g) - 1 whose evaluation equals the nested evaluation,
/// with g's arguments occupying positions slot..slot+arity(g)-1.
MultilinearMap substitute(const MultilinearMap& f, const MultilinearMap& g, std::size_t slot);

struct MultilinearityReport {
    struct Violation {
        std::size_t slot;        // 1-based argument position
        std::string law;         // "additivity" or "homogeneity"
        std::vector<Element> args;
    };
    std::vector<Violation> violations;
    int trials = 0;
    bool ok() const { return violations.empty(); }
};

using MapEvaluator = std::function<Element(std::span<const Element>)>;

/// Randomized slot-wise additivity and homogeneity check with exact
/// comparisons. The evaluator overload exists to vet externally supplied
/// (possibly non-tensor) evaluation rules.
MultilinearityReport check_multilinearity(const MultilinearMap& f, int trials, std::uint64_t seed);
MultilinearityReport check_multilinearity(const MapEvaluator& eval, std::size_t arity,
                                          const SpecPtr& spec, int trials, std::uint64_t seed);

} // namespace conjal
