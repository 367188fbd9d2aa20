#include "dlin/random.hpp"

namespace dlin {

namespace {

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Rational small_nonzero_rational(std::mt19937_64& rng) {
    Rational r;
    do {
        r = small_rational(rng);
    } while (r == 0);
    return r;
}

} // namespace

FieldElem random_elem(Field field, std::mt19937_64& rng) {
    if (field == Field::Q) {
        return FieldElem(Field::Q, small_rational(rng));
    }
    std::uniform_int_distribution<int> deg(0, 2);
    std::vector<Rational> num(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : num) {
        c = small_rational(rng);
    }
    std::uniform_int_distribution<int> ddeg(0, 1);
    std::vector<Rational> den(static_cast<std::size_t>(ddeg(rng)) + 1);
    for (auto& c : den) {
        c = small_rational(rng);
    }
    den.back() = small_nonzero_rational(rng);
    return FieldElem(RatFunc(Poly(std::move(num)), Poly(std::move(den))));
}

FieldElem random_nonzero_elem(Field field, std::mt19937_64& rng) {
    FieldElem x = random_elem(field, rng);
    while (x.is_zero()) {
        x = random_elem(field, rng);
    }
    return x;
}

OrePoly random_monic(Field field, std::size_t degree, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    c.reserve(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        c.push_back(random_elem(field, rng));
    }
    c.push_back(FieldElem::one(field));
    return OrePoly(field, std::move(c));
}

} // namespace dlin
