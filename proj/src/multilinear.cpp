#include "conjal/multilinear.hpp"

#include "conjal/random.hpp"

#include <cmath>
#include <stdexcept>

namespace conjal {

namespace {

std::size_t pow_size(std::size_t n, std::size_t p) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < p; ++i) s *= n;
    return s;
}

} // namespace

MultilinearMap::MultilinearMap(SpecPtr spec, std::size_t arity, std::vector<Rational> tensor)
    : spec_(std::move(spec)), arity_(arity), tensor_(std::move(tensor)) {
    if (!spec_) throw std::invalid_argument("multilinear: null spec");
    if (arity_ < 1) throw std::invalid_argument("multilinear: arity must be at least 1");
    const std::size_t expected = pow_size(spec_->dim(), arity_) * spec_->dim();
    if (tensor_.size() != expected) {
        throw std::invalid_argument("multilinear: tensor must have dim^arity * dim entries");
    }
}

MultilinearMap MultilinearMap::zero(SpecPtr spec, std::size_t arity) {
    const std::size_t n = spec->dim();
    return MultilinearMap(std::move(spec), arity, std::vector<Rational>(pow_size(n, arity) * n));
}

MultilinearMap MultilinearMap::product_map(const SpecPtr& spec) {
    return MultilinearMap(spec, 2, spec->constants());
}

MultilinearMap MultilinearMap::identity_map(const SpecPtr& spec) {
    MultilinearMap f = zero(spec, 1);
    for (std::size_t i = 0; i < spec->dim(); ++i) {
        std::size_t idx[1] = {i};
        f.coeff(idx, i) = Rational(1);
    }
    return f;
}

const Rational& MultilinearMap::coeff(std::span<const std::size_t> inputs, std::size_t k) const {
    const std::size_t n = spec_->dim();
    std::size_t idx = 0;
    for (std::size_t v : inputs) idx = idx * n + v;
    return tensor_[idx * n + k];
}

Rational& MultilinearMap::coeff(std::span<const std::size_t> inputs, std::size_t k) {
    const std::size_t n = spec_->dim();
    std::size_t idx = 0;
    for (std::size_t v : inputs) idx = idx * n + v;
    return tensor_[idx * n + k];
}

Element MultilinearMap::eval(std::span<const Element> args) const {
    if (args.size() != arity_) {
        throw std::invalid_argument("multilinear: argument count does not match arity");
    }
    for (const Element& a : args) {
        if (!same_spec(a.spec(), spec_)) {
            throw std::invalid_argument("multilinear: argument from a different algebra");
        }
    }
    const std::size_t n = spec_->dim();
    std::vector<Rational> out(n);
    // Walk the full input-index grid; the coordinate product prunes zeros.
    std::vector<std::size_t> idx(arity_, 0);
    const std::size_t total = pow_size(n, arity_);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        bool zero = false;
        Rational prod(1);
        for (std::size_t a = arity_; a-- > 0;) {
            idx[a] = rest % n;
            rest /= n;
            const Rational& c = args[a][idx[a]];
            if (c.is_zero()) { zero = true; break; }
        }
        if (zero) continue;
        for (std::size_t a = 0; a < arity_; ++a) prod *= args[a][idx[a]];
        const std::size_t base = flat * n;
        for (std::size_t k = 0; k < n; ++k) {
            if (!tensor_[base + k].is_zero()) out[k] += prod * tensor_[base + k];
        }
    }
    return Element(spec_, std::move(out));
}

Element MultilinearMap::eval(std::initializer_list<Element> args) const {
    return eval(std::span<const Element>(args.begin(), args.size()));
}

MultilinearMap MultilinearMap::swapped() const {
    if (arity_ != 2) throw std::invalid_argument("multilinear: swapped requires arity 2");
    const std::size_t n = spec_->dim();
    MultilinearMap out = zero(spec_, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t src[2] = {j, i};
                std::size_t dst[2] = {i, j};
                out.coeff(dst, k) = coeff(src, k);
            }
        }
    }
    return out;
}

bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    return a.arity_ == b.arity_ && same_spec(a.spec_, b.spec_) && a.tensor_ == b.tensor_;
}

MultilinearMap map_sub(const MultilinearMap& f, const MultilinearMap& g) {
    if (f.arity() != g.arity()) {
        throw std::invalid_argument("multilinear: arity mismatch in map_sub");
    }
    if (!same_spec(f.spec(), g.spec())) {
        throw std::invalid_argument("multilinear: spec mismatch in map_sub");
    }
    std::vector<Rational> tensor(f.tensor().size());
    for (std::size_t i = 0; i < tensor.size(); ++i) {
        tensor[i] = f.tensor()[i] - g.tensor()[i];
    }
    return MultilinearMap(f.spec(), f.arity(), std::move(tensor));
}

MultilinearMap substitute(const MultilinearMap& f, const MultilinearMap& g, std::size_t slot) {
    if (!same_spec(f.spec(), g.spec())) {
        throw std::invalid_argument("multilinear: spec mismatch in substitute");
    }
    if (slot < 1 || slot > f.arity()) {
        throw std::out_of_range("multilinear: substitution slot out of range");
    }
    const std::size_t n = f.spec()->dim();
    const std::size_t nf = f.arity();
    const std::size_t mg = g.arity();
    MultilinearMap h = MultilinearMap::zero(f.spec(), nf + mg - 1);

    // h(x_1..x_{slot-1}, y_1..y_m, x_{slot+1}..x_n) = f(..., g(y), ...):
    // contract g's output index into f's slot input index.
    std::vector<std::size_t> hidx(nf + mg - 1, 0);
    std::vector<std::size_t> fidx(nf, 0);
    std::vector<std::size_t> gidx(mg, 0);
    const std::size_t total = pow_size(n, nf + mg - 1);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t a = hidx.size(); a-- > 0;) {
            hidx[a] = rest % n;
            rest /= n;
        }
        for (std::size_t a = 0; a < slot - 1; ++a) fidx[a] = hidx[a];
        for (std::size_t a = 0; a < mg; ++a) gidx[a] = hidx[slot - 1 + a];
        for (std::size_t a = slot; a < nf; ++a) fidx[a] = hidx[mg + a - 1];
        for (std::size_t k = 0; k < n; ++k) {
            Rational acc;
            for (std::size_t s = 0; s < n; ++s) {
                const Rational& gc = g.coeff(gidx, s);
                if (gc.is_zero()) continue;
                fidx[slot - 1] = s;
                const Rational& fc = f.coeff(fidx, k);
                if (!fc.is_zero()) acc += gc * fc;
            }
            if (!acc.is_zero()) h.coeff(hidx, k) = acc;
        }
    }
    return h;
}

MultilinearityReport check_multilinearity(const MultilinearMap& f, int trials, std::uint64_t seed) {
    return check_multilinearity(
        [&f](std::span<const Element> args) { return f.eval(args); },
        f.arity(), f.spec(), trials, seed);
}

MultilinearityReport check_multilinearity(const MapEvaluator& eval, std::size_t arity,
                                          const SpecPtr& spec, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("multilinear: trials must be at least 1");
    std::mt19937_64 rng(seed);
    MultilinearityReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        for (std::size_t slot = 0; slot < arity; ++slot) {
            std::vector<Element> args;
            args.reserve(arity);
            for (std::size_t a = 0; a < arity; ++a) args.push_back(random_element(rng, spec));
            const Element x = random_element(rng, spec);
            const Element y = random_element(rng, spec);
            const Rational a = random_rational(rng);

            auto with_slot = [&](const Element& v) {
                std::vector<Element> copy = args;
                copy[slot] = v;
                return eval(copy);
            };

            if (with_slot(x + y) != with_slot(x) + with_slot(y)) {
                report.violations.push_back({slot + 1, "additivity", args});
                continue;
            }
            if (with_slot(a * x) != a * with_slot(x)) {
                report.violations.push_back({slot + 1, "homogeneity", args});
            }
        }
    }
    return report;
}

} // namespace conjal
