#include "conjal/algebra.hpp"

#include "conjal/matrix.hpp"

#include <unordered_set>

namespace conjal {

namespace {

std::string triple_message(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
    return "unit axiom violated at (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
           ",k=" + std::to_string(k) + "): constant is " + value.str();
}

} // namespace

UnitAxiomError::UnitAxiomError(std::size_t i_, std::size_t j_, std::size_t k_, Rational value_)
    : std::invalid_argument(triple_message(i_, j_, k_, value_)),
      i(i_), j(j_), k(k_), value(std::move(value_)) {}

SpecPtr AlgebraSpec::create(std::string name, std::vector<std::string> basis_names,
                            std::vector<Rational> constants) {
    const std::size_t n = basis_names.size();
    if (n == 0) {
        throw std::invalid_argument("algebra: dimension must be at least 1");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& bn : basis_names) {
        if (bn.empty()) {
            throw std::invalid_argument("algebra: empty basis name");
        }
        if (!seen.insert(bn).second) {
            throw std::invalid_argument("algebra: duplicate basis name '" + bn + "'");
        }
    }
    if (constants.size() != n * n * n) {
        throw std::invalid_argument("algebra: constants tensor must have dim^3 entries");
    }
    // Unit axiom at index 0, scanned in lexicographic (i, j, k) order.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != 0 && j != 0) continue;
            const std::size_t other = (i == 0) ? j : i;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = constants[constants_index(n, i, j, k)];
                const Rational expected(k == other ? 1 : 0);
                if (c != expected) {
                    throw UnitAxiomError(i, j, k, c);
                }
            }
        }
    }
    return SpecPtr(new AlgebraSpec(std::move(name), std::move(basis_names), std::move(constants)));
}

std::optional<std::size_t> AlgebraSpec::basis_index(std::string_view name) const {
    for (std::size_t i = 0; i < basis_names_.size(); ++i) {
        if (basis_names_[i] == name) return i;
    }
    return std::nullopt;
}

bool same_spec(const SpecPtr& a, const SpecPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

void require_same_spec(const Element& x, const Element& y, const char* op) {
    if (!same_spec(x.spec(), y.spec())) {
        throw std::invalid_argument(std::string("element: ") + op + " across different algebras");
    }
}

} // namespace

Element::Element(SpecPtr spec, std::vector<Rational> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
    if (!spec_) {
        throw std::invalid_argument("element: null spec");
    }
    if (coords_.size() != spec_->dim()) {
        throw std::invalid_argument("element: coordinate count does not match algebra dimension");
    }
}

bool Element::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

Element Element::operator-() const {
    std::vector<Rational> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
    return Element(spec_, std::move(out));
}

Element operator+(const Element& x, const Element& y) {
    require_same_spec(x, y, "addition");
    std::vector<Rational> out(x.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coords_[i] + y.coords_[i];
    return Element(x.spec_, std::move(out));
}

Element operator-(const Element& x, const Element& y) {
    require_same_spec(x, y, "subtraction");
    std::vector<Rational> out(x.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coords_[i] - y.coords_[i];
    return Element(x.spec_, std::move(out));
}

Element operator*(const Element& x, const Element& y) {
    require_same_spec(x, y, "multiplication");
    const AlgebraSpec& spec = *x.spec_;
    const std::size_t n = spec.dim();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords_[j].is_zero()) continue;
            const Rational xy = x.coords_[i] * y.coords_[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = spec.constant(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return Element(x.spec_, std::move(out));
}

Element operator*(const Rational& c, const Element& x) {
    std::vector<Rational> out(x.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * x.coords_[i];
    return Element(x.spec_, std::move(out));
}

bool operator==(const Element& x, const Element& y) {
    return same_spec(x.spec_, y.spec_) && x.coords_ == y.coords_;
}

Element zero_element(const SpecPtr& spec) {
    return Element(spec, std::vector<Rational>(spec->dim()));
}

Element basis_element(const SpecPtr& spec, std::size_t i) {
    if (i >= spec->dim()) {
        throw std::out_of_range("element: basis index out of range");
    }
    std::vector<Rational> coords(spec->dim());
    coords[i] = Rational(1);
    return Element(spec, std::move(coords));
}

Element embed_scalar(const SpecPtr& spec, const Rational& c) {
    std::vector<Rational> coords(spec->dim());
    coords[0] = c;
    return Element(spec, std::move(coords));
}

Element commutator(const Element& x, const Element& y) {
    return x * y - y * x;
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return (x * y) * z - x * (y * z);
}

CommutativityResult is_commutative(const SpecPtr& spec) {
    const std::size_t n = spec->dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (spec->constant(i, j, k) != spec->constant(j, i, k)) {
                    return {false, std::make_pair(i, j)};
                }
            }
        }
    }
    return {true, std::nullopt};
}

AssociativityResult is_associative(const SpecPtr& spec) {
    const std::size_t n = spec->dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Element ei = basis_element(spec, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Element ej = basis_element(spec, j);
            const Element eij = ei * ej;
            for (std::size_t k = 0; k < n; ++k) {
                const Element ek = basis_element(spec, k);
                if (eij * ek != ei * (ej * ek)) {
                    return {false, std::array<std::size_t, 3>{i, j, k}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

// Stacks rows expressing "coordinate k of L(x) is zero" for a linear
// condition L on x, where column p holds the coefficient of x^p.
void stack_condition(std::vector<Rational>& rows, std::size_t n,
                     const std::vector<Element>& per_basis_value) {
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < n; ++p) {
            rows.push_back(per_basis_value[p][k]);
        }
    }
}

std::vector<Element> annihilator_basis(const SpecPtr& spec, bool include_commutator) {
    const std::size_t n = spec->dim();
    std::vector<Element> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_element(spec, i));

    std::vector<Rational> rows;
    if (include_commutator) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Element> vals;
            vals.reserve(n);
            for (std::size_t p = 0; p < n; ++p) vals.push_back(commutator(basis[p], basis[i]));
            stack_condition(rows, n, vals);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (int slot = 0; slot < 3; ++slot) {
                std::vector<Element> vals;
                vals.reserve(n);
                for (std::size_t p = 0; p < n; ++p) {
                    switch (slot) {
                        case 0: vals.push_back(associator(basis[p], basis[i], basis[j])); break;
                        case 1: vals.push_back(associator(basis[i], basis[p], basis[j])); break;
                        default: vals.push_back(associator(basis[i], basis[j], basis[p])); break;
                    }
                }
                stack_condition(rows, n, vals);
            }
        }
    }

    RationalMatrix m(rows.size() / n, n, std::move(rows));
    std::vector<Element> out;
    for (auto& v : nullspace(m)) {
        out.emplace_back(spec, std::move(v));
    }
    return out;
}

} // namespace

std::vector<Element> center_basis(const SpecPtr& spec) {
    return annihilator_basis(spec, true);
}

std::vector<Element> nucleus_basis(const SpecPtr& spec) {
    return annihilator_basis(spec, false);
}

} // namespace conjal
