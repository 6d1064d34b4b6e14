#ifndef KRING_JSON_IO_HPP
#define KRING_JSON_IO_HPP

#include "kring/charpair.hpp"
#include "kring/corpus.hpp"
#include "kring/fan.hpp"
#include "kring/presentations.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace kring {

// Keys are emitted sorted, values are canonical, so dumps are deterministic
// byte-for-byte for a fixed input.
using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
Json int_to_json(const Int& v);

// Input schemas.  Unknown fields, wrong types, out-of-range indices and
// dimension mismatches raise SchemaError naming the offending field.
Fan fan_from_json(const Json& j);
CharPair char_pair_from_json(const Json& j);

// kind_hint: "fan", "charpair", or "" to infer from the fields present.
std::variant<Fan, CharPair> parse_input(const Json& j, const std::string& kind_hint = "");

Json to_json(const Fan& fan);
Json to_json(const CharPair& cp);
Json to_json(const SnfResult& snf);
Json to_json(const IntMatrix& m);
Json to_json(const Monomial& m);
Json to_json(const FanReport& rep);
Json to_json(const ValidationReport& rep);
Json to_json(const ZModulePresentation& pres);
Json to_json(const CohomologySummary& css);
Json to_json(const GradedRanks& gr);
Json to_json(const MonomialBasisResult& mb);
Json to_json(const VerificationReport& rep);

std::string to_text(const FanReport& rep);
std::string to_text(const ValidationReport& rep);
std::string to_text(const ZModulePresentation& pres);
std::string to_text(const CohomologySummary& css);
std::string to_text(const MonomialBasisResult& mb);
std::string to_text(const VerificationReport& rep);

}  // namespace kring

#endif
