#include "kring/presentations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kring {

TruncatedRing truncated_ring(const CharPair& cp, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("truncated_ring: bound must be positive");
  TruncatedRing ring;
  ring.vars = cp.facets;
  ring.degree_bound = degree_bound;
  ring.face_masks = face_mask_closure(cp.maximal_faces);
  return ring;
}

std::vector<Monomial> face_monomials(const CharPair& cp, int max_degree) {
  TruncatedRing ring = truncated_ring(cp, std::max(max_degree, 1));
  std::vector<Monomial> out;
  Monomial cur(cp.facets);
  auto rec = [&](auto&& self, int var, int budget) -> void {
    if (var == cp.facets) {
      if (ring.is_face(cur.support_mask()) && cur.degree() <= max_degree) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur.exp[size_t(var)] = e;
      self(self, var + 1, budget - e);
      cur.exp[size_t(var)] = 0;
    }
  };
  if (max_degree >= 0) rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<LatticeVector> u_sample(int dim, int radius) {
  if (radius < 1) throw std::invalid_argument("u_sample: radius must be positive");
  std::vector<LatticeVector> out;
  LatticeVector u(size_t(dim), Int(-radius));
  while (true) {
    int first_sign = 0;
    for (const Int& c : u)
      if (c != 0) {
        first_sign = sgn(c);
        break;
      }
    if (first_sign > 0) out.push_back(u);
    int k = dim - 1;
    while (k >= 0 && u[size_t(k)] == radius) u[size_t(k--)] = -radius;
    if (k < 0) break;
    u[size_t(k)] += 1;
  }
  return out;
}

IntPolynomial k_relation(const CharPair& cp, const TruncatedRing& ring, const LatticeVector& u) {
  std::vector<std::pair<int, int>> pos, neg;
  for (int i = 0; i < cp.facets; ++i) {
    Int a = pairing(u, cp.lambda[size_t(i)]);
    if (a > 0)
      pos.emplace_back(i, int(a.get_si()));
    else if (a < 0)
      neg.emplace_back(i, -int(a.get_si()));
  }
  return power_product(pos, ring) - power_product(neg, ring);
}

IntPolynomial linear_relation(const CharPair& cp, const LatticeVector& u) {
  IntPolynomial h(cp.facets);
  for (int i = 0; i < cp.facets; ++i)
    h.add_term(Monomial::of_variable(cp.facets, i), pairing(u, cp.lambda[size_t(i)]));
  return h;
}

RelationSet build_relations(const CharPair& cp, int u_radius, int degree_bound) {
  ValidationReport rep = validate_char_pair(cp);
  if (!rep.ok())
    throw std::invalid_argument(
        "build_relations: invalid characteristic pair: " +
        (rep.witnesses.empty() ? std::string("unspecified") : rep.witnesses[0]));
  RelationSet rels;
  rels.u_radius = u_radius;
  rels.degree_bound = degree_bound < 0 ? cp.dim : degree_bound;
  TruncatedRing ring = truncated_ring(cp, rels.degree_bound);
  for (const auto& nf : minimal_nonfaces(cp)) {
    Monomial m(cp.facets);
    for (int i : nf) m.exp[size_t(i)] = 1;
    rels.sr_monomials.push_back(std::move(m));
  }
  for (const LatticeVector& u : u_sample(cp.dim, u_radius)) {
    rels.k_relations.emplace_back(u, k_relation(cp, ring, u));
    rels.linear_relations.emplace_back(u, linear_relation(cp, u));
  }
  return rels;
}

std::vector<Int> ZModulePresentation::nontrivial_factors() const {
  std::vector<Int> out;
  for (const Int& d : snf.invariant_factors)
    if (d != 1) out.push_back(d);
  return out;
}

namespace {

using MonomialIndex = std::map<Monomial, int, GrlexLess>;

MonomialIndex index_of(const std::vector<Monomial>& basis) {
  MonomialIndex idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], int(i));
  return idx;
}

std::vector<Int> vectorize(const IntPolynomial& p, const MonomialIndex& idx, int cols) {
  std::vector<Int> row(size_t(cols), 0);
  for (const auto& [m, c] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw std::logic_error("vectorize: monomial outside the basis");
    row[size_t(it->second)] = c;
  }
  return row;
}

// Relation rows reduce(m * z_u) for all face-monomial multipliers of degree
// < bound, streamed into both an instance list and an echelon accumulator.
struct RelationRows {
  std::vector<std::vector<Int>> instances;  // deduplicated, zero rows dropped
  RowLattice lattice;
};

RelationRows relation_rows(const CharPair& cp, const RelationSet& rels,
                           const std::vector<Monomial>& basis, const MonomialIndex& idx,
                           bool keep_instances) {
  TruncatedRing ring = truncated_ring(cp, rels.degree_bound);
  std::vector<Monomial> multipliers = face_monomials(cp, rels.degree_bound - 1);
  RelationRows out{{}, RowLattice(int(basis.size()))};
  std::set<std::vector<Int>> seen;
  for (const auto& [u, z] : rels.k_relations) {
    for (const Monomial& m : multipliers) {
      IntPolynomial p = multiply(IntPolynomial::monomial(m, 1), z, ring);
      if (p.is_zero()) continue;
      std::vector<Int> row = vectorize(p, idx, int(basis.size()));
      if (!seen.insert(row).second) continue;
      if (keep_instances) out.instances.push_back(row);
      out.lattice.insert(std::move(row));
    }
  }
  return out;
}

}  // namespace

ZModulePresentation kring_presentation(const CharPair& cp, const RelationSet& rels) {
  ZModulePresentation pres;
  pres.degree_bound = rels.degree_bound;
  pres.basis = face_monomials(cp, rels.degree_bound);
  MonomialIndex idx = index_of(pres.basis);
  RelationRows rows = relation_rows(cp, rels, pres.basis, idx, true);
  pres.relations = IntMatrix::from_rows(rows.instances, int(pres.basis.size()));
  pres.echelon = rows.lattice.matrix();
  pres.snf = smith_normal_form(pres.echelon);
  return pres;
}

bool CohomologySummary::torsion_free() const {
  for (const auto& t : torsion_factors)
    if (!t.empty()) return false;
  return true;
}

CohomologySummary cohomology_presentation(const CharPair& cp) {
  ValidationReport rep = validate_char_pair(cp);
  if (!rep.ok())
    throw std::invalid_argument(
        "cohomology_presentation: invalid characteristic pair: " +
        (rep.witnesses.empty() ? std::string("unspecified") : rep.witnesses[0]));
  const int n = cp.dim;
  TruncatedRing ring = truncated_ring(cp, n);
  std::vector<Monomial> all = face_monomials(cp, n);
  std::vector<std::vector<Monomial>> by_degree(size_t(n) + 1);
  for (const Monomial& m : all) by_degree[size_t(m.degree())].push_back(m);

  std::vector<IntPolynomial> hs;
  for (int k = 0; k < n; ++k) {
    LatticeVector e(size_t(n), 0);
    e[size_t(k)] = 1;
    hs.push_back(linear_relation(cp, e));
  }

  CohomologySummary out;
  for (int j = 0; j <= n; ++j) {
    const auto& gens = by_degree[size_t(j)];
    MonomialIndex idx = index_of(gens);
    RowLattice acc(int(gens.size()));
    if (j >= 1)
      for (const Monomial& m : by_degree[size_t(j) - 1])
        for (const IntPolynomial& h : hs) {
          IntPolynomial p = multiply(IntPolynomial::monomial(m, 1), h, ring);
          if (!p.is_zero()) acc.insert(vectorize(p, idx, int(gens.size())));
        }
    SnfResult s = smith_normal_form(acc.matrix());
    out.ranks.push_back(int(gens.size()) - s.rank);
    std::vector<Int> torsion;
    for (const Int& d : s.invariant_factors)
      if (d != 1) torsion.push_back(d);
    out.torsion_factors.push_back(std::move(torsion));
  }
  return out;
}

GradedRanks graded_ranks_of_kring(const CharPair& cp, const ZModulePresentation& pres) {
  if (!pres.torsion_free())
    throw std::invalid_argument("graded_ranks_of_kring: presentation has torsion");
  const int n = cp.dim;
  const int cols = int(pres.basis.size());
  SnfTransform t = smith_normal_form_with_transform(pres.echelon);
  const int qrank = cols - t.snf.rank;

  // image of each basis monomial in the free quotient Z^qrank
  std::vector<std::vector<Int>> image;
  image.resize(size_t(cols));
  for (int j = 0; j < cols; ++j) {
    std::vector<Int> row(size_t(qrank), Int(0));
    for (int k = 0; k < qrank; ++k) row[size_t(k)] = t.col_transform.at(j, t.snf.rank + k);
    image[size_t(j)] = std::move(row);
  }

  GradedRanks out;
  std::vector<int> rank_from(size_t(n) + 2, 0);
  for (int j = n + 1; j >= 0; --j) {
    std::vector<std::vector<Int>> gens;
    for (int b = 0; b < cols; ++b)
      if (pres.basis[size_t(b)].degree() >= j) gens.push_back(image[size_t(b)]);
    rank_from[size_t(j)] =
        gens.empty() ? 0 : smith_normal_form(IntMatrix::from_rows(gens, qrank)).rank;
  }
  for (int j = 0; j <= n; ++j)
    out.per_degree.push_back(rank_from[size_t(j)] - rank_from[size_t(j) + 1]);
  return out;
}

namespace {

// Coordinates of the squarefree monomial of each candidate face in the free
// degreewise cohomology quotient, then greedy basis selection: a candidate is
// kept when the chosen set stays a unimodular set (saturated full-rank span).
struct DegreeBasisPick {
  std::vector<std::vector<int>> chosen;
  bool used_exhaustive = false;
  bool complete = false;
};

DegreeBasisPick pick_degree_basis(const std::vector<std::vector<int>>& candidates,
                                  const std::vector<std::vector<Int>>& coords, int need) {
  DegreeBasisPick pick;
  if (need == 0) {
    pick.complete = true;
    return pick;
  }
  std::vector<LatticeVector> vs;
  std::vector<int> taken;
  for (size_t c = 0; c < candidates.size() && int(vs.size()) < need; ++c) {
    vs.push_back(coords[c]);
    if (is_unimodular_set(vs)) {
      taken.push_back(int(c));
    } else {
      vs.pop_back();
    }
  }
  if (int(vs.size()) < need) {
    // exhaustive fallback over all size-`need` subsets of the candidates
    pick.used_exhaustive = true;
    std::vector<int> sel;
    auto rec = [&](auto&& self, int start) -> bool {
      if (int(sel.size()) == need) {
        std::vector<LatticeVector> test;
        for (int c : sel) test.push_back(coords[size_t(c)]);
        return is_unimodular_set(test);
      }
      for (int c = start; c < int(candidates.size()); ++c) {
        sel.push_back(c);
        if (self(self, c + 1)) return true;
        sel.pop_back();
      }
      return false;
    };
    if (!rec(rec, 0)) return pick;  // incomplete
    taken = sel;
  }
  for (int c : taken) pick.chosen.push_back(candidates[size_t(c)]);
  pick.complete = int(pick.chosen.size()) == need;
  return pick;
}

struct BasisSearchInput {
  const CharPair& cp;
  const CohomologySummary& css;
  const ZModulePresentation& pres;  // torsion-free K-ring presentation
};

MonomialBasisResult monomial_basis_search(const BasisSearchInput& in) {
  MonomialBasisResult res;
  const CharPair& cp = in.cp;
  const int n = cp.dim;
  if (!in.css.torsion_free()) {
    res.witnesses.push_back("cohomology has torsion; basis extraction undefined");
    return res;
  }

  TruncatedRing ring = truncated_ring(cp, n);
  std::vector<Monomial> all = face_monomials(cp, n);
  std::vector<std::vector<Monomial>> by_degree(size_t(n) + 1);
  for (const Monomial& m : all) by_degree[size_t(m.degree())].push_back(m);

  std::vector<IntPolynomial> hs;
  for (int k = 0; k < n; ++k) {
    LatticeVector e(size_t(n), 0);
    e[size_t(k)] = 1;
    hs.push_back(linear_relation(cp, e));
  }

  std::vector<std::vector<int>> all_faces = faces(cp);
  res.complete = true;
  for (int j = 0; j <= n; ++j) {
    const auto& gens = by_degree[size_t(j)];
    MonomialIndex idx = index_of(gens);
    RowLattice acc(int(gens.size()));
    if (j >= 1)
      for (const Monomial& m : by_degree[size_t(j) - 1])
        for (const IntPolynomial& h : hs) {
          IntPolynomial p = multiply(IntPolynomial::monomial(m, 1), h, ring);
          if (!p.is_zero()) acc.insert(vectorize(p, idx, int(gens.size())));
        }
    SnfTransform t = smith_normal_form_with_transform(acc.matrix());
    const int need = int(gens.size()) - t.snf.rank;

    std::vector<std::vector<int>> candidates;
    std::vector<std::vector<Int>> coords;
    for (const auto& f : all_faces) {
      if (int(f.size()) != j) continue;
      Monomial m(cp.facets);
      for (int i : f) m.exp[size_t(i)] = 1;
      std::vector<Int> unit(gens.size(), 0);
      unit[size_t(idx.at(m))] = 1;
      candidates.push_back(f);
      coords.push_back(free_quotient_coordinates(t, unit));
    }
    DegreeBasisPick pick = pick_degree_basis(candidates, coords, need);
    if (pick.used_exhaustive) {
      res.used_exhaustive = true;
      res.witnesses.push_back("degree " + std::to_string(j) +
                              ": greedy selection failed, used exhaustive search");
    }
    if (!pick.complete) {
      res.complete = false;
      res.witnesses.push_back("degree " + std::to_string(j) +
                              ": no squarefree face monomials complete a basis of rank " +
                              std::to_string(need));
      continue;
    }
    for (auto& f : pick.chosen) res.gamma.push_back(std::move(f));
  }
  if (!res.complete) return res;

  // transfer check: the images of the chosen monomials must be a Z-basis of
  // the K-ring, i.e. the change-of-basis matrix is unimodular
  MonomialIndex kidx = index_of(in.pres.basis);
  SnfTransform kt = smith_normal_form_with_transform(in.pres.echelon);
  std::vector<std::vector<Int>> rows;
  for (const auto& f : res.gamma) {
    Monomial m(cp.facets);
    for (int i : f) m.exp[size_t(i)] = 1;
    std::vector<Int> unit(in.pres.basis.size(), 0);
    unit[size_t(kidx.at(m))] = 1;
    rows.push_back(free_quotient_coordinates(kt, unit));
  }
  const int qrank = in.pres.quotient_rank();
  if (int(rows.size()) != qrank) {
    res.witnesses.push_back("basis has " + std::to_string(rows.size()) + " members, expected " +
                            std::to_string(qrank));
    return res;
  }
  SnfResult s = smith_normal_form(IntMatrix::from_rows(rows, qrank));
  res.kring_basis_verified = (s.rank == qrank) && s.all_factors_one();
  if (!res.kring_basis_verified)
    res.witnesses.push_back("chosen monomials do not form a Z-basis of the K-ring");
  return res;
}

}  // namespace

MonomialBasisResult monomial_basis(const CharPair& cp, int max_u_radius) {
  CohomologySummary css = cohomology_presentation(cp);
  const int chi = euler_characteristic(cp);
  for (int r = 1; r <= max_u_radius; ++r) {
    RelationSet rels = build_relations(cp, r);
    ZModulePresentation pres = kring_presentation(cp, rels);
    if (pres.quotient_rank() == chi && pres.torsion_free())
      return monomial_basis_search({cp, css, pres});
  }
  MonomialBasisResult res;
  res.witnesses.push_back("K-ring presentation did not stabilize within u-radius " +
                          std::to_string(max_u_radius));
  return res;
}

VerificationReport adaptive_verify(const CharPair& cp, int max_u_radius) {
  ValidationReport vrep = validate_char_pair(cp);
  if (!vrep.ok())
    throw std::invalid_argument(
        "adaptive_verify: invalid characteristic pair: " +
        (vrep.witnesses.empty() ? std::string("unspecified") : vrep.witnesses[0]));
  if (max_u_radius < 1) throw std::invalid_argument("adaptive_verify: radius cap must be >= 1");

  VerificationReport rep;
  rep.chi = euler_characteristic(cp);
  const int n = cp.dim;

  ZModulePresentation pres;
  bool stabilized = false;
  int radius = 0;
  for (radius = 1; radius <= max_u_radius; ++radius) {
    RelationSet rels = build_relations(cp, radius);
    pres = kring_presentation(cp, rels);
    if (pres.quotient_rank() == rep.chi && pres.torsion_free()) {
      stabilized = true;
      break;
    }
  }
  rep.u_radius_used = stabilized ? radius : max_u_radius;
  rep.kring_rank = pres.quotient_rank();
  rep.kring_torsion = pres.nontrivial_factors();
  rep.cohomology = cohomology_presentation(cp);

  rep.rank_matches_chi = (rep.kring_rank == rep.chi);
  if (!rep.rank_matches_chi) {
    std::ostringstream os;
    os << "K-ring rank " << rep.kring_rank << " != chi " << rep.chi << " at u-radius "
       << rep.u_radius_used;
    if (rep.kring_rank > rep.chi)
      os << " (relations may be insufficient; raise the radius cap)";
    else
      os << " (rank below chi cannot be repaired by more relations)";
    rep.witnesses.push_back(os.str());
  }

  rep.torsion_free = pres.torsion_free() && rep.cohomology.torsion_free();
  if (!pres.torsion_free()) {
    std::ostringstream os;
    os << "K-ring presentation has invariant factors [";
    for (size_t i = 0; i < rep.kring_torsion.size(); ++i)
      os << (i ? ", " : "") << rep.kring_torsion[i].get_str();
    os << "] at u-radius " << rep.u_radius_used;
    rep.witnesses.push_back(os.str());
  }
  if (!rep.cohomology.torsion_free())
    for (size_t j = 0; j < rep.cohomology.torsion_factors.size(); ++j)
      if (!rep.cohomology.torsion_factors[j].empty())
        rep.witnesses.push_back("cohomology degree " + std::to_string(j) + " has torsion");

  // (c) graded comparison
  if (pres.torsion_free()) {
    rep.gr_ranks = graded_ranks_of_kring(cp, pres);
    rep.gr_matches_cohomology = (rep.gr_ranks.per_degree == rep.cohomology.ranks);
    if (!rep.gr_matches_cohomology)
      for (int j = 0; j <= n; ++j)
        if (rep.gr_ranks.per_degree[size_t(j)] != rep.cohomology.ranks[size_t(j)])
          rep.witnesses.push_back(
              "gr rank " + std::to_string(rep.gr_ranks.per_degree[size_t(j)]) + " != cohomology rank " +
              std::to_string(rep.cohomology.ranks[size_t(j)]) + " in degree " + std::to_string(j));
  } else {
    rep.witnesses.push_back("graded comparison skipped: K-ring presentation has torsion");
  }

  // (d) absorption: with the bound raised to n+1, every degree-(n+1) face
  // monomial must already lie in the relation lattice
  {
    RelationSet wide = build_relations(cp, rep.u_radius_used, n + 1);
    std::vector<Monomial> basis = face_monomials(cp, n + 1);
    MonomialIndex idx = index_of(basis);
    RelationRows rows = relation_rows(cp, wide, basis, idx, false);
    SnfTransform t = smith_normal_form_with_transform(rows.lattice.matrix());
    rep.degree_np1_absorbed = true;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].degree() != n + 1) continue;
      std::vector<Int> unit(basis.size(), 0);
      unit[b] = 1;
      if (!in_row_lattice(t, unit)) {
        rep.degree_np1_absorbed = false;
        rep.witnesses.push_back("degree-" + std::to_string(n + 1) + " monomial " +
                                to_string(basis[b]) + " is not absorbed by the relation lattice");
      }
    }
  }

  // (e) monomial basis transfer
  if (pres.torsion_free() && rep.cohomology.torsion_free()) {
    MonomialBasisResult mb = monomial_basis_search({cp, rep.cohomology, pres});
    rep.gamma = mb.gamma;
    rep.monomial_basis_verified =
        mb.complete && mb.kring_basis_verified && int(mb.gamma.size()) == rep.chi;
    for (auto& w : mb.witnesses) rep.witnesses.push_back(std::move(w));
    if (mb.complete && int(mb.gamma.size()) != rep.chi)
      rep.witnesses.push_back("monomial basis has " + std::to_string(mb.gamma.size()) +
                              " members, expected chi = " + std::to_string(rep.chi));
  } else {
    rep.witnesses.push_back("monomial basis extraction skipped: torsion present");
  }

  return rep;
}

}  // namespace kring
