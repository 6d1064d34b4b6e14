#include "kring/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace kring {

namespace {

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
}

void reject_unknown_fields(const Json& j, std::initializer_list<const char*> allowed,
                           const char* what) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }))
      throw SchemaError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

int get_positive_int(const Json& j, const char* field, const char* what) {
  if (!j.contains(field))
    throw SchemaError(std::string(what) + ": missing field \"" + field + "\"");
  const Json& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw SchemaError(std::string(what) + ": field \"" + field +
                      "\" must be a positive integer");
  return int(v.get<long long>());
}

std::vector<LatticeVector> get_vector_list(const Json& j, const char* field, int dim,
                                           const char* what) {
  if (!j.contains(field))
    throw SchemaError(std::string(what) + ": missing field \"" + field + "\"");
  const Json& arr = j.at(field);
  if (!arr.is_array())
    throw SchemaError(std::string(what) + ": field \"" + field + "\" must be an array");
  std::vector<LatticeVector> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const Json& row = arr[i];
    if (!row.is_array())
      throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) +
                        "] must be an array of integers");
    if (int(row.size()) != dim)
      throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) +
                        "] has length " + std::to_string(row.size()) + ", expected dim = " +
                        std::to_string(dim));
    LatticeVector v;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) + "][" +
                          std::to_string(k) + "] must be an integer");
      v.push_back(Int(row[k].get<long>()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> get_index_sets(const Json& j, const char* field, int limit,
                                             const char* limit_name, const char* what) {
  if (!j.contains(field))
    throw SchemaError(std::string(what) + ": missing field \"" + field + "\"");
  const Json& arr = j.at(field);
  if (!arr.is_array())
    throw SchemaError(std::string(what) + ": field \"" + field + "\" must be an array");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const Json& row = arr[i];
    if (!row.is_array())
      throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) +
                        "] must be an array of indices");
    std::vector<int> set;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer())
        throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) + "][" +
                          std::to_string(k) + "] must be an integer index");
      long long v = row[k].get<long long>();
      if (v < 0 || v >= limit)
        throw SchemaError(std::string(what) + ": \"" + field + "\"[" + std::to_string(i) + "][" +
                          std::to_string(k) + "] = " + std::to_string(v) +
                          " is out of range for " + limit_name + " = " + std::to_string(limit));
      set.push_back(int(v));
    }
    out.push_back(std::move(set));
  }
  return out;
}

Json sets_to_json(const std::vector<std::vector<int>>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

Json ints_to_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& c : v) arr.push_back(int_to_json(c));
  return arr;
}

std::string ranks_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Fan fan_from_json(const Json& j) {
  require_object(j, "fan");
  reject_unknown_fields(j, {"dim", "rays", "max_cones"}, "fan");
  Fan fan;
  fan.dim = get_positive_int(j, "dim", "fan");
  fan.rays = get_vector_list(j, "rays", fan.dim, "fan");
  fan.max_cones =
      get_index_sets(j, "max_cones", int(fan.rays.size()), "number of rays", "fan");
  return fan;
}

CharPair char_pair_from_json(const Json& j) {
  require_object(j, "charpair");
  reject_unknown_fields(j, {"dim", "facets", "maximal_faces", "lambda"}, "charpair");
  CharPair cp;
  cp.dim = get_positive_int(j, "dim", "charpair");
  cp.facets = get_positive_int(j, "facets", "charpair");
  cp.maximal_faces = get_index_sets(j, "maximal_faces", cp.facets, "facets", "charpair");
  cp.lambda = get_vector_list(j, "lambda", cp.dim, "charpair");
  if (int(cp.lambda.size()) != cp.facets)
    throw SchemaError("charpair: \"lambda\" has " + std::to_string(cp.lambda.size()) +
                      " entries, expected facets = " + std::to_string(cp.facets));
  return cp;
}

std::variant<Fan, CharPair> parse_input(const Json& j, const std::string& kind_hint) {
  require_object(j, "input");
  std::string kind = kind_hint;
  if (kind.empty()) {
    bool fanlike = j.contains("rays") || j.contains("max_cones");
    bool cplike = j.contains("lambda") || j.contains("maximal_faces");
    if (fanlike == cplike)
      throw SchemaError(
          "input: cannot infer kind; expected fan fields (rays, max_cones) or "
          "characteristic-pair fields (facets, maximal_faces, lambda)");
    kind = fanlike ? "fan" : "charpair";
  }
  if (kind == "fan") return fan_from_json(j);
  if (kind == "charpair") return char_pair_from_json(j);
  throw SchemaError("input: unknown kind \"" + kind + "\"");
}

Json to_json(const Fan& fan) {
  Json j;
  j["dim"] = fan.dim;
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(ints_to_json(r));
  j["rays"] = rays;
  j["max_cones"] = sets_to_json(fan.max_cones);
  return j;
}

Json to_json(const CharPair& cp) {
  Json j;
  j["dim"] = cp.dim;
  j["facets"] = cp.facets;
  j["maximal_faces"] = sets_to_json(cp.maximal_faces);
  Json lambda = Json::array();
  for (const auto& v : cp.lambda) lambda.push_back(ints_to_json(v));
  j["lambda"] = lambda;
  return j;
}

Json to_json(const SnfResult& snf) {
  Json j;
  j["rank"] = snf.rank;
  j["invariant_factors"] = ints_to_json(snf.invariant_factors);
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m.at(i, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Monomial& m) { return Json(m.exp); }

Json to_json(const FanReport& rep) {
  Json j;
  j["is_fan"] = rep.is_fan;
  if (rep.is_smooth.has_value()) j["is_smooth"] = *rep.is_smooth;
  if (rep.is_complete.has_value()) j["is_complete"] = *rep.is_complete;
  j["witnesses"] = rep.witnesses;
  j["ok"] = rep.ok();
  return j;
}

Json to_json(const ValidationReport& rep) {
  Json j;
  j["is_pure"] = rep.is_pure;
  j["is_locally_standard"] = rep.is_locally_standard;
  j["witnesses"] = rep.witnesses;
  j["ok"] = rep.ok();
  return j;
}

Json to_json(const ZModulePresentation& pres) {
  Json j;
  Json basis = Json::array();
  for (const auto& m : pres.basis) basis.push_back(to_json(m));
  j["basis_monomials"] = basis;
  j["degree_bound"] = pres.degree_bound;
  j["relation_matrix"] = to_json(pres.relations);
  j["echelon_matrix"] = to_json(pres.echelon);
  j["snf"] = to_json(pres.snf);
  j["quotient_rank"] = pres.quotient_rank();
  j["torsion_free"] = pres.torsion_free();
  return j;
}

Json to_json(const CohomologySummary& css) {
  Json j;
  j["ranks"] = css.ranks;
  Json t = Json::array();
  for (const auto& d : css.torsion_factors) t.push_back(ints_to_json(d));
  j["torsion_factors"] = t;
  j["torsion_free"] = css.torsion_free();
  return j;
}

Json to_json(const GradedRanks& gr) { return Json(gr.per_degree); }

Json to_json(const MonomialBasisResult& mb) {
  Json j;
  j["faces"] = sets_to_json(mb.gamma);
  j["complete"] = mb.complete;
  j["kring_basis_verified"] = mb.kring_basis_verified;
  j["used_exhaustive"] = mb.used_exhaustive;
  j["witnesses"] = mb.witnesses;
  return j;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["chi"] = rep.chi;
  j["kring_rank"] = rep.kring_rank;
  j["kring_torsion"] = ints_to_json(rep.kring_torsion);
  j["u_radius_used"] = rep.u_radius_used;
  j["gr_ranks"] = rep.gr_ranks.per_degree;
  j["cohomology"] = to_json(rep.cohomology);
  j["monomial_basis"] = sets_to_json(rep.gamma);
  Json checks;
  checks["rank_equals_chi"] = rep.rank_matches_chi;
  checks["torsion_free"] = rep.torsion_free;
  checks["gr_matches_cohomology"] = rep.gr_matches_cohomology;
  checks["degree_truncation_absorbed"] = rep.degree_np1_absorbed;
  checks["monomial_basis"] = rep.monomial_basis_verified;
  j["checks"] = checks;
  j["witnesses"] = rep.witnesses;
  j["passed"] = rep.all_passed();
  return j;
}

std::string to_text(const FanReport& rep) {
  std::ostringstream os;
  os << "fan:        " << (rep.is_fan ? "yes" : "NO") << '\n';
  if (rep.is_smooth.has_value()) os << "smooth:     " << (*rep.is_smooth ? "yes" : "NO") << '\n';
  if (rep.is_complete.has_value())
    os << "complete:   " << (*rep.is_complete ? "yes" : "NO") << '\n';
  for (const auto& w : rep.witnesses) os << "  - " << w << '\n';
  return os.str();
}

std::string to_text(const ValidationReport& rep) {
  std::ostringstream os;
  os << "pure:              " << (rep.is_pure ? "yes" : "NO") << '\n';
  os << "locally standard:  " << (rep.is_locally_standard ? "yes" : "NO") << '\n';
  for (const auto& w : rep.witnesses) os << "  - " << w << '\n';
  return os.str();
}

std::string to_text(const ZModulePresentation& pres) {
  std::ostringstream os;
  os << "generators (face monomials, degree <= " << pres.degree_bound << "): " << pres.basis.size()
     << '\n';
  os << "  ";
  for (size_t i = 0; i < pres.basis.size(); ++i) os << (i ? ", " : "") << to_string(pres.basis[i]);
  os << '\n';
  os << "relation rows: " << pres.relations.rows << " (echelon rank " << pres.echelon.rows << ")\n";
  os << "snf rank: " << pres.snf.rank << ", invariant factors ";
  if (pres.torsion_free())
    os << "all 1";
  else {
    os << "[";
    auto nt = pres.nontrivial_factors();
    for (size_t i = 0; i < nt.size(); ++i) os << (i ? ", " : "") << nt[i].get_str();
    os << "]";
  }
  os << '\n';
  os << "quotient: Z^" << pres.quotient_rank();
  for (const Int& d : pres.snf.invariant_factors)
    if (d != 1) os << " + Z/" << d.get_str();
  os << '\n';
  return os.str();
}

std::string to_text(const CohomologySummary& css) {
  std::ostringstream os;
  os << "cohomology ranks by degree: " << ranks_text(css.ranks) << '\n';
  for (size_t j = 0; j < css.torsion_factors.size(); ++j)
    if (!css.torsion_factors[j].empty()) {
      os << "  torsion in degree " << j << ": [";
      for (size_t i = 0; i < css.torsion_factors[j].size(); ++i)
        os << (i ? ", " : "") << css.torsion_factors[j][i].get_str();
      os << "]\n";
    }
  if (css.torsion_free()) os << "torsion-free\n";
  return os.str();
}

std::string to_text(const MonomialBasisResult& mb) {
  std::ostringstream os;
  os << "monomial basis faces:";
  for (const auto& f : mb.gamma) os << ' ' << set_to_string(f);
  os << '\n';
  os << "complete: " << (mb.complete ? "yes" : "NO")
     << ", Z-basis of the K-ring: " << (mb.kring_basis_verified ? "yes" : "NO") << '\n';
  for (const auto& w : mb.witnesses) os << "  - " << w << '\n';
  return os.str();
}

std::string to_text(const VerificationReport& rep) {
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "chi (maximal faces):    " << rep.chi << '\n';
  os << "K-ring rank:            " << rep.kring_rank << "  [" << flag(rep.rank_matches_chi)
     << "]\n";
  os << "torsion:                ";
  if (rep.torsion_free)
    os << "none  [ok]\n";
  else
    os << "present  [FAIL]\n";
  os << "gr ranks:               " << ranks_text(rep.gr_ranks.per_degree) << '\n';
  os << "cohomology ranks:       " << ranks_text(rep.cohomology.ranks) << "  ["
     << flag(rep.gr_matches_cohomology) << "]\n";
  os << "truncation absorbed:    [" << flag(rep.degree_np1_absorbed) << "]\n";
  os << "monomial basis:        ";
  for (const auto& f : rep.gamma) os << ' ' << set_to_string(f);
  os << "  [" << flag(rep.monomial_basis_verified) << "]\n";
  os << "u-radius used:          " << rep.u_radius_used << '\n';
  for (const auto& w : rep.witnesses) os << "  - " << w << '\n';
  os << (rep.all_passed() ? "VERDICT: pass" : "VERDICT: FAIL") << '\n';
  return os.str();
}

}  // namespace kring
