#include "specpol/somos.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace specpol {

namespace {

void validate(const SomosSpec& spec) {
    if (spec.k < 4) throw std::invalid_argument("somos needs k >= 4");
    if (spec.horizon < 0) throw std::invalid_argument("somos horizon must be >= 0");
    if (spec.seeds.size() != static_cast<std::size_t>(spec.k))
        throw std::invalid_argument("somos needs exactly k seeds");
    for (const Rational& s : spec.seeds)
        if (s.is_zero()) throw std::invalid_argument("somos seeds must be nonzero");
}

}  // namespace

SomosSpec::SomosSpec(int k_, int horizon_)
    : k(k_), seeds(k_ > 0 ? static_cast<std::size_t>(k_) : 0, Rational(1)),
      horizon(horizon_) {
    validate(*this);
}

SomosSpec::SomosSpec(int k_, std::vector<Rational> seeds_, int horizon_)
    : k(k_), seeds(std::move(seeds_)), horizon(horizon_) {
    validate(*this);
}

SomosZeroTerm::SomosZeroTerm(int index)
    : std::runtime_error("somos term a_" + std::to_string(index) +
                         " is zero; cannot divide"),
      index_(index) {}

std::vector<Rational> somos_generate(const SomosSpec& spec) {
    std::vector<Rational> a(spec.seeds.begin(), spec.seeds.end());
    if (spec.horizon < spec.k) {
        a.resize(static_cast<std::size_t>(spec.horizon) + 1);
        return a;
    }
    a.reserve(static_cast<std::size_t>(spec.horizon) + 1);
    for (int n = spec.k; n <= spec.horizon; ++n) {
        Rational sum(0);
        for (int j = 1; j <= spec.k / 2; ++j)
            sum += a[static_cast<std::size_t>(n - j)] *
                   a[static_cast<std::size_t>(n - spec.k + j)];
        const Rational& div = a[static_cast<std::size_t>(n - spec.k)];
        if (div.is_zero()) throw SomosZeroTerm(n - spec.k);
        a.push_back(sum / div);
    }
    return a;
}

std::optional<NonIntegerTerm> somos_first_noninteger(const SomosSpec& spec) {
    const std::vector<Rational> a = somos_generate(spec);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_integer())
            return NonIntegerTerm{static_cast<int>(i), a[i]};
    return std::nullopt;
}

}  // namespace specpol
