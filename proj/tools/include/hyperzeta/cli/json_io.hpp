#pragma once

#include "hyperzeta/cartan.hpp"
#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/matrix.hpp"
#include "hyperzeta/pbw.hpp"
#include "hyperzeta/repn.hpp"
#include "hyperzeta/weight.hpp"

#include <json.hpp>

#include <string>

namespace hyperzeta::cli {

using json = nlohmann::ordered_json;

/// Exact rational as a JSON integer when it fits, otherwise "p/q".
json rat_json(const Rat& r);
/// {"ell": l, "coeffs": ["c0", "c1", ...]} on the powers of z.
json cyc_json(const CycScalar& x);
/// {"lam0": [...], "lam1": [...]}
json weight_json(const Weight& w);
/// [{"b":..,"c":..,"d":..,"a":..,"coeff":{...}}, ...]
json pbw_terms_json(const PBWElem& x);
json matrix_json(const ExactMatrix& m);
json module_json(const WeightModule& m);

/// Parses "((2,4),(0,-1))" or "2,4;0,-1" (lam0 then lam1) over a datum.
Weight parse_weight(const std::string& text, CartanPtr cartan);

}  // namespace hyperzeta::cli
