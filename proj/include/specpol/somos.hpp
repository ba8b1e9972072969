#pragma once

#include "specpol/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace specpol {

/// Somos-k data: a_n a_{n-k} = sum_{j=1..floor(k/2)} a_{n-j} a_{n-k+j},
/// iterated over exact rationals. Terms are indexed from 0; seeds are
/// a_0 .. a_{k-1}.
struct SomosSpec {
    int k;
    std::vector<Rational> seeds;
    int horizon;

    /// Unit seeds.
    SomosSpec(int k, int horizon);
    /// Custom seeds; every seed must be nonzero and seeds.size() == k.
    SomosSpec(int k, std::vector<Rational> seeds, int horizon);
};

/// Thrown when the recurrence would divide by a zero term; carries the index
/// of that term.
class SomosZeroTerm : public std::runtime_error {
public:
    explicit SomosZeroTerm(int index);
    int index() const { return index_; }

private:
    int index_;
};

/// a_0 .. a_horizon as exact rationals.
std::vector<Rational> somos_generate(const SomosSpec& spec);

struct NonIntegerTerm {
    int index;
    Rational value;
};

/// First term with a nontrivial denominator within the horizon, if any.
std::optional<NonIntegerTerm> somos_first_noninteger(const SomosSpec& spec);

}  // namespace specpol
