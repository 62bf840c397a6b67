#pragma once

#include <json.hpp>

#include <string>

#include "jetzeta/flatness.hpp"
#include "jetzeta/invariants.hpp"
#include "jetzeta/jet_strata.hpp"
#include "jetzeta/motivic.hpp"
#include "jetzeta/motrat.hpp"
#include "jetzeta/topo.hpp"

namespace jetzeta {

/* Key order is fixed so that equal inputs emit byte-identical documents. */
using Json = nlohmann::ordered_json;

Json int_json(const Int& v); // JSON number when it fits in 64 bits, else string
Int int_from_json(const Json& j);

/* {"generators":[...]} */
std::vector<Int> generators_from_json(const Json& j);
std::vector<Int> parse_generators_csv(const std::string& csv);

Json semigroup_json(const SemigroupData& S);

/* {"pairs":[{"i","N","nu"}...], "lct":"p/q", "poles":[{"value","residue","order"}...]} */
Json invariants_json(const SemigroupData& S);

Json pole_json(const PoleCandidate& c);

/* numerator as [{"tdeg", "terms":[{"ldeg","coef"}...]}...], denominator as
 * [{"a","b"}...]; exact round-trip */
Json motrat_json(const MotRat& x);
MotRat motrat_from_json(const Json& j);

Json zeta_top_json(const RatQs& z);

Json components_json(const std::vector<ComponentDescriptor>& comps);

Json flatness_json(const FlatnessReport& rep);

std::string lpoly_latex(const LPoly& p);
std::string motivic_latex(const MotRat& x);
std::string zeta_top_latex(const RatQs& z);

std::string motivic_text(const MotRat& x);
std::string zeta_top_text(const RatQs& z);

} // namespace jetzeta
