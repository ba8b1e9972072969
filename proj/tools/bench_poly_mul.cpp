// Crossover benchmark between the two multiplication kernels. The first table
// pits pure schoolbook against fully recursive Karatsuba; the second times the
// blended pipeline (Karatsuba on top, schoolbook below the floor) at several
// candidate floors. The threshold constant in src/poly.cpp was chosen from the
// second table; rerun after changing the kernels or moving to different
// hardware:
//
//   cmake --build build --target bench_poly_mul && ./build/bench_poly_mul

#include "specpol/poly.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

using specpol::Integer;
using specpol::Poly;
using specpol::Rational;

namespace {

Poly random_poly(gmp_randstate_t state, std::mt19937_64& rng, int degree, int bits) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) {
        Integer value;
        mpz_urandomb(value.get_mpz_t(), state, static_cast<mp_bitcnt_t>(bits));
        if (rng() & 1) value = -value;
        if (k == degree && sgn(value) == 0) value = 1;
        coeffs.emplace_back(value);
    }
    return Poly(std::move(coeffs));
}

template <typename Fn>
double time_us(Fn&& fn, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::micro>(stop - start).count() / repeats;
}

}  // namespace

int main() {
    std::mt19937_64 rng(0x5eedULL);
    gmp_randstate_t state;
    gmp_randinit_mt(state);
    gmp_randseed_ui(state, 0x5eedULL);

    const int sizes[] = {8, 16, 24, 32, 40, 48, 64, 96, 128, 192, 256, 384, 512};
    const int bit_widths[] = {64, 256, 1024};

    for (int bits : bit_widths) {
        std::printf("coefficient width %d bits\n", bits);
        std::printf("%8s %14s %14s %8s\n", "size", "school (us)", "karatsuba (us)",
                    "ratio");
        for (int size : sizes) {
            const Poly a = random_poly(state, rng, size - 1, bits);
            const Poly b = random_poly(state, rng, size - 1, bits);
            const int repeats = size <= 48 ? 200 : 40;
            const double school =
                time_us([&] { (void)specpol::detail::mul_schoolbook(a, b); }, repeats);
            const double kara =
                time_us([&] { (void)specpol::detail::mul_karatsuba(a, b); }, repeats);
            std::printf("%8d %14.1f %14.1f %8.2f\n", size, school, kara,
                        school / kara);
        }
        std::printf("\n");
    }

    const int floor_sizes[] = {128, 192, 256, 384, 512};
    const std::size_t floors[] = {64, 96, 128, 192, 256};

    for (int bits : bit_widths) {
        std::printf("blended pipeline, coefficient width %d bits (us)\n", bits);
        std::printf("%8s %10s", "size", "school");
        for (std::size_t floor : floors) std::printf("  floor %4zu", floor);
        std::printf("\n");
        for (int size : floor_sizes) {
            const Poly a = random_poly(state, rng, size - 1, bits);
            const Poly b = random_poly(state, rng, size - 1, bits);
            const int repeats = bits >= 1024 ? 10 : 40;
            std::printf("%8d %10.1f", size,
                        time_us([&] { (void)specpol::detail::mul_schoolbook(a, b); },
                                repeats));
            for (std::size_t floor : floors)
                std::printf("  %10.1f",
                            time_us(
                                [&] {
                                    (void)specpol::detail::mul_blended(a, b, floor);
                                },
                                repeats));
            std::printf("\n");
        }
        std::printf("\n");
    }
    gmp_randclear(state);
    return 0;
}
