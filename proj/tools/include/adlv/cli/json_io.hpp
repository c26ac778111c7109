#pragma once

#include "adlv/latoracle.hpp"
#include "adlv/pi0.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace adlv::cli {

// Insertion-ordered so that reports are byte-identical for identical inputs.
using Json = nlohmann::ordered_json;

struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Documents index simple roots and simple reflections from 1; the library counts from 0.

// {"preset": name, "params": {...} | [...]}, {"product": [datum, datum]}, or the explicit form
// {"cochar_rank", "simple_roots", "simple_coroots", "pairing"?, "sigma"?, "name"?}.
RootDatum datum_from_json(const Json& j);
Json datum_to_json(const RootDatum& d);

IVec ints_from_json(const Json& j, const std::string& what);
Cochar cochar_from_json(const RootDatum& d, const Json& j, const std::string& what);
LeviSubset levi_from_json(const RootDatum& d, const Json& j);
// {"lambda": [...], "w_word" | "w": [...], "levi": [...]?}
BRep brep_from_json(const RootDatum& d, const Json& j);

// A reduced word for w, 0-based.
std::vector<std::size_t> word_of(const RootDatum& d, const WeylElement& w);

Json levi_to_json(const LeviSubset& l);
Json rationals_to_json(const RVec& v);
Json brep_to_json(const RootDatum& d, const BRep& b);
Json coset_to_json(const CosetDescriptor& c);
Json verdict_to_json(const BGMuVerdict& v);
Json hn_report_to_json(const RootDatum& d, const HNReport& r);
Json descriptor_to_json(const Pi0Descriptor& p);
Json iset_to_json(const RootDatum& d, const ISet& s);
Json chain_to_json(const RootDatum& d, const ChainWitness& c);

// Entries of the Hermite matrix as {"low": e, "coeffs": [...]}, field elements in base-q digits.
Json point_to_json(const LatticePoint& p);
Json oracle_verdict_to_json(const OracleVerdict& v);
// One line per point: index, field_degree, w_G, rel_pos, hermite (entries "low:c0 c1 ...", row-major).
std::string points_csv(const PointSet& ps);

}  // namespace adlv::cli
