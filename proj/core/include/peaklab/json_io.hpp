#pragma once

#include "peaklab/group_algebra.hpp"
#include "peaklab/poset.hpp"
#include "peaklab/qsym.hpp"
#include "peaklab/rational_gf.hpp"
#include "peaklab/span.hpp"
#include "peaklab/verify.hpp"

#include <nlohmann/json.hpp>

namespace peaklab {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);  // "p/q", integers without a denominator
json to_json(const UniPoly& p);   // coefficient strings, constant term first
json to_json(const RationalGF& g);
json to_json(const StatResult& s);
json to_json(const GAElem& x);
json to_json(const QsymExpansion& e);
json to_json(const MultiPoly& p);
json to_json(const StructureConstants& sc);
json to_json(const VerifyResult& r);

Rational rational_from_json(const json& j);
GAElem gaelem_from_json(const json& j);

// Cover relations [[a, b], ...] meaning a < b.
Poset poset_from_json(int n, const json& covers);
BPoset bposet_from_json(int n, const json& covers);

}  // namespace peaklab
