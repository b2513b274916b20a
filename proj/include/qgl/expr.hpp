#pragma once
// Text syntax for scalars and algebra elements.
//
//   scalars:   integers, a/b, al, be, q (= al^-1 be), z (root mode only),
//              + - * / ^, parentheses; juxtaposition multiplies.
//   O side:    x[i,j], xinv[i] (Borel variants), g (quantum determinant),
//              gi (its inverse); g^-k, x[i,i]^-k where an inverse exists.
//   U side:    e[j], f[j], a[i], b[i], h[i], w[j] (= a_j b_{j+1}),
//              wp[j] (= a_{j+1} b_j), E[k,l], F[k,l]; torus letters accept
//              negative exponents.
// The printed forms produced by to_string() re-parse to equal values.

#include <string>

#include "qgl/oab.hpp"
#include "qgl/uab.hpp"

namespace qgl {

Scalar parse_scalar(const std::string& text, const Field& f);
NCPoly parse_u(const std::string& text, const USession& s);
GLElement parse_o(const std::string& text, const OSession& s);

}  // namespace qgl
