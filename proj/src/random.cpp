#include "conjal/random.hpp"

namespace conjal {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Element random_element(std::mt19937_64& rng, const SpecPtr& spec) {
    std::vector<Rational> coords(spec->dim());
    for (auto& c : coords) c = random_rational(rng);
    return Element(spec, std::move(coords));
}

} // namespace conjal
