#pragma once

#include <vector>

#include "grc/chartab.hpp"
#include "grc/groupring.hpp"

namespace grc::oracle {

using Poly = std::vector<Cyclo>;  // lowest degree first

/// Characteristic polynomial of a square matrix over Q(z) by reduction to
/// Hessenberg form.
Poly char_poly(std::vector<std::vector<Cyclo>> m);

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& f, long k);

/// Characteristic polynomial of left multiplication by H on e_chi K[G]^n,
/// computed in an explicit basis of the Wedderburn component.
Poly regular_char_poly(const CharacterTable& t, std::size_t chi, const QMatrix& h);

/// Matrix of left multiplication by H on Q[G]^n in the basis of group elements.
std::vector<std::vector<Rational>> regular_matrix(const QMatrix& h);

Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace grc::oracle
