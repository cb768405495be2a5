#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "kmq/brylinski.hpp"
#include "kmq/qpoly.hpp"
#include "kmq/root_system.hpp"

namespace kmq {

using Json = nlohmann::ordered_json;

// {"level": l, "finite": [f1, ...], "energy": e}
Json to_json(const AffineWeight& w);
AffineWeight weight_from_json(const Json& j);

// Ascending coefficient array; arbitrary-precision coefficients that do not
// fit in 64 bits are written as decimal strings.
Json to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

Json to_json(const Rational& q);  // "p/q" or "p"
Json to_json(const RationalMatrix& m);

// Cartan matrix as an array of rows, plus marks, comarks, symmetrizer, h^vee
// and the imaginary multiplicities over one twisting period.
Json to_json(const CartanData& data);

// Weight spaces with their dimensions, basis words and the matrices of e_i and
// f_i keyed by node.
Json to_json(const ModuleSlice& slice);

// Compact "a;b;c" rendering used in CSV cells.
std::string join(const std::vector<Int>& v);
std::string join(const QPolynomial& p);
std::string compact(const AffineWeight& w);  // "level;f1;...;fr;energy"

// Parses a weight such as "L0+2d-a1" or "2*L1 - d" over the symbols L<i>
// (fundamental weights), a<i> (simple roots) and d (delta, affine only), or
// the explicit form "(level; f1,...,fr; energy)".  Throws InvalidInput.
AffineWeight parse_weight(const CartanData& data, const std::string& text);

}  // namespace kmq
