// Tour of the library on small worked examples: a zonal polynomial, the same
// object from the orthogonality construction, characters through three
// routes, free cumulants and the Kerov polynomial tying them together.

#include <iostream>

#include "zonalkit/zonalkit.hpp"

using namespace zonalkit;

int main() {
    Partition lambda({2, 1});
    Partition mu({2});

    std::cout << "Z_(2,1)            = " << zonal_polynomial(lambda).to_string() << "\n";
    std::cout << "same, via oracle   = " << jack_alpha2_oracle(lambda).to_string() << "\n\n";

    std::cout << "Sigma^(2)_(2)(2,1) = " << zonal_character(mu, lambda) << " (pairing sum)\n";
    std::cout << "                   = " << zonal_character_oracle(mu, lambda)
              << " (coefficient extraction)\n";
    std::cout << "                   = " << zonal_character_orbit_formula(mu, lambda)
              << " (orbit formula)\n\n";

    std::cout << "Sigma^(2)_(2) as a polynomial in p, q (2 rectangles):\n  "
              << stanley_polynomial(mu, 2).to_string() << "\n\n";

    auto r = anisotropic_cumulants(MultiRect::of_partition(lambda), 2, 3);
    std::cout << "R_2^(2)(2,1) = " << r[2] << ",  R_3^(2)(2,1) = " << r[3] << "\n";
    KerovPolynomial k2 = kerov_polynomial_combinatorial(mu);
    std::cout << "K_(2) = " << k2.to_string() << ",  evaluated: " << k2.evaluate(r) << "\n";
    return 0;
}
