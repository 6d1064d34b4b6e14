#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "kring/presentations.hpp"

#include <doctest.h>

#include <algorithm>

#include "kring/corpus.hpp"
#include "kring/fan.hpp"

using namespace kring;

namespace {

CharPair cp_of(const corpus::Entry& e) {
  return e.kind == "fan" ? to_char_pair(std::get<Fan>(e.data)) : std::get<CharPair>(e.data);
}

Monomial mono(std::vector<int> e) {
  Monomial m;
  m.exp = std::move(e);
  return m;
}

}  // namespace

TEST_CASE("u_sample covers one representative of each antipodal pair") {
  auto us = u_sample(1, 1);
  REQUIRE(us.size() == 1);
  CHECK(us[0] == LatticeVector{1});

  us = u_sample(2, 1);
  CHECK(us.size() == 4);  // (3^2 - 1) / 2
  for (const auto& u : us) {
    bool positive_lead = false;
    for (const Int& c : u)
      if (c != 0) {
        positive_lead = c > 0;
        break;
      }
    CHECK(positive_lead);
  }
  CHECK(u_sample(2, 2).size() == 12);  // (5^2 - 1) / 2
  CHECK(u_sample(3, 1).size() == 13);  // (3^3 - 1) / 2
}

TEST_CASE("relations of P1") {
  CharPair cp = to_char_pair(corpus::projective_space(1));
  RelationSet rels = build_relations(cp, 1);
  REQUIRE(rels.sr_monomials.size() == 1);
  CHECK(rels.sr_monomials[0] == mono({1, 1}));
  REQUIRE(rels.k_relations.size() == 1);
  CHECK(to_string(rels.k_relations[0].second) == "-y0 + y1");  // (1-y0) - (1-y1)
  CHECK(to_string(rels.linear_relations[0].second) == "y0 - y1");
}

TEST_CASE("relations of P2 for u = e1") {
  CharPair cp = to_char_pair(corpus::projective_space(2));
  TruncatedRing ring = truncated_ring(cp, 2);
  // rays e1, e2, -e1-e2: pairings with e1 are +1, 0, -1
  IntPolynomial z = k_relation(cp, ring, LatticeVector{1, 0});
  CHECK(to_string(z) == "-y0 + y2");
}

TEST_CASE("relation of the Hirzebruch surface for u = e2") {
  CharPair cp = to_char_pair(corpus::hirzebruch(1));
  TruncatedRing ring = truncated_ring(cp, 2);
  // pairings of e2 with (1,0),(0,1),(-1,1),(0,-1) are 0, 1, 1, -1:
  // z = (1-y1)(1-y2) - (1-y3)
  IntPolynomial z = k_relation(cp, ring, LatticeVector{0, 1});
  IntPolynomial expect(4);
  expect.add_term(mono({0, 1, 0, 0}), -1);
  expect.add_term(mono({0, 0, 1, 0}), -1);
  expect.add_term(mono({0, 0, 0, 1}), 1);
  expect.add_term(mono({0, 1, 1, 0}), 1);
  CHECK(z == expect);
}

TEST_CASE("K-ring presentation of P1") {
  CharPair cp = to_char_pair(corpus::projective_space(1));
  RelationSet rels = build_relations(cp, 1);
  ZModulePresentation pres = kring_presentation(cp, rels);
  std::vector<Monomial> expect_basis = {mono({0, 0}), mono({1, 0}), mono({0, 1})};
  CHECK(pres.basis == expect_basis);
  CHECK(pres.snf.rank == 1);
  CHECK(pres.torsion_free());
  CHECK(pres.quotient_rank() == 2);
}

TEST_CASE("K-ring ranks match chi on small members") {
  struct Case {
    CharPair cp;
    int chi;
  };
  std::vector<Case> cases = {
      {to_char_pair(corpus::projective_space(2)), 3},
      {to_char_pair(corpus::p1_power(2)), 4},
      {corpus::square_quasitoric(), 4},
      {to_char_pair(corpus::hirzebruch(2)), 4},
      {to_char_pair(corpus::blowup_p2(3)), 6},
  };
  for (const auto& c : cases) {
    ZModulePresentation pres = kring_presentation(c.cp, build_relations(c.cp, 1));
    CHECK(pres.quotient_rank() == c.chi);
    CHECK(pres.torsion_free());
  }
}

TEST_CASE("cohomology ranks") {
  CohomologySummary p2 = cohomology_presentation(to_char_pair(corpus::projective_space(2)));
  CHECK(p2.ranks == std::vector<int>{1, 1, 1});
  CHECK(p2.torsion_free());

  CohomologySummary p1p1 = cohomology_presentation(to_char_pair(corpus::p1_power(2)));
  CHECK(p1p1.ranks == std::vector<int>{1, 2, 1});

  for (const auto& entry : corpus::entries()) {
    if (!entry.positive) continue;
    CohomologySummary css = cohomology_presentation(cp_of(entry));
    CHECK(css.ranks[0] == 1);  // only the empty monomial in degree 0
  }
}

TEST_CASE("graded ranks of the K-ring") {
  CharPair p2 = to_char_pair(corpus::projective_space(2));
  ZModulePresentation pres = kring_presentation(p2, build_relations(p2, 1));
  GradedRanks gr = graded_ranks_of_kring(p2, pres);
  CHECK(gr.per_degree == std::vector<int>{1, 1, 1});
  int total = 0;
  for (int r : gr.per_degree) total += r;
  CHECK(total == pres.quotient_rank());  // filtration exhausts the free rank

  CharPair p1 = to_char_pair(corpus::projective_space(1));
  ZModulePresentation pres1 = kring_presentation(p1, build_relations(p1, 1));
  CHECK(graded_ranks_of_kring(p1, pres1).per_degree == std::vector<int>{1, 1});
}

TEST_CASE("z_u itself lies in the relation lattice") {
  CharPair cp = corpus::square_quasitoric();
  RelationSet rels = build_relations(cp, 1);
  ZModulePresentation pres = kring_presentation(cp, rels);
  SnfTransform t = smith_normal_form_with_transform(pres.echelon);
  std::map<Monomial, int, GrlexLess> idx;
  for (size_t i = 0; i < pres.basis.size(); ++i) idx.emplace(pres.basis[i], int(i));
  for (const auto& [u, z] : rels.k_relations) {
    std::vector<Int> w(pres.basis.size(), 0);
    for (const auto& [m, c] : z.terms()) w[size_t(idx.at(m))] = c;
    CHECK(in_row_lattice(t, w));
  }
}

TEST_CASE("adaptive verification of P3 stabilizes at radius 1") {
  VerificationReport rep = adaptive_verify(to_char_pair(corpus::projective_space(3)), 3);
  CHECK(rep.u_radius_used == 1);
  CHECK(rep.chi == 4);
  CHECK(rep.kring_rank == 4);
  CHECK(rep.all_passed());
  CHECK(rep.gr_ranks.per_degree == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("adaptive verification of Hirzebruch-2") {
  VerificationReport rep = adaptive_verify(to_char_pair(corpus::hirzebruch(2)), 3);
  CHECK(rep.all_passed());
  CHECK(rep.kring_rank == 4);
}

TEST_CASE("invalid input is rejected before verification") {
  CHECK_THROWS_AS((void)to_char_pair(corpus::halfplane()), FanValidationError);
  CHECK_THROWS_AS((void)adaptive_verify(corpus::square_nonstandard(), 3), std::invalid_argument);
}

TEST_CASE("monomial basis of P2 and P1") {
  MonomialBasisResult mb = monomial_basis(to_char_pair(corpus::projective_space(2)));
  CHECK(mb.complete);
  CHECK(mb.kring_basis_verified);
  REQUIRE(mb.gamma.size() == 3);
  CHECK(mb.gamma[0].empty());      // constant monomial
  CHECK(mb.gamma[1].size() == 1);  // one ray
  CHECK(mb.gamma[2].size() == 2);  // one 2-cone

  mb = monomial_basis(to_char_pair(corpus::projective_space(1)));
  CHECK(mb.kring_basis_verified);
  REQUIRE(mb.gamma.size() == 2);
  CHECK(mb.gamma[0].empty());
  CHECK(mb.gamma[1].size() == 1);
}

TEST_CASE("monomial basis size equals chi across the corpus") {
  for (const auto& entry : corpus::entries()) {
    if (!entry.positive) continue;
    CharPair cp = cp_of(entry);
    MonomialBasisResult mb = monomial_basis(cp);
    CHECK(mb.complete);
    CHECK(int(mb.gamma.size()) == euler_characteristic(cp));
  }
}

TEST_CASE("enlarging the radius never raises the rank and fixes the result") {
  for (const auto& name : {std::string("p2"), std::string("hirzebruch-3"),
                           std::string("square-quasitoric")}) {
    const auto& es = corpus::entries();
    auto it = std::find_if(es.begin(), es.end(), [&](const auto& e) { return e.name == name; });
    REQUIRE(it != es.end());
    CharPair cp = cp_of(*it);
    int prev_rank = -1;
    std::vector<Int> stable_factors;
    for (int r = 1; r <= 3; ++r) {
      ZModulePresentation pres = kring_presentation(cp, build_relations(cp, r));
      int rank = pres.quotient_rank();
      if (prev_rank >= 0) CHECK(rank <= prev_rank);
      if (rank == it->chi) {
        if (stable_factors.empty()) stable_factors = pres.snf.invariant_factors;
        CHECK(pres.snf.invariant_factors == stable_factors);
      }
      prev_rank = rank;
    }
    CHECK(prev_rank == it->chi);
  }
}

TEST_CASE("fan route and hand-written pair route agree") {
  CharPair from_fan = to_char_pair(corpus::projective_space(2));
  CharPair direct = corpus::p2_nerve();
  ZModulePresentation a = kring_presentation(from_fan, build_relations(from_fan, 1));
  ZModulePresentation b = kring_presentation(direct, build_relations(direct, 1));
  CHECK(a.quotient_rank() == b.quotient_rank());
  CHECK(a.snf.invariant_factors == b.snf.invariant_factors);
  CHECK(cohomology_presentation(from_fan).ranks == cohomology_presentation(direct).ranks);
}

TEST_CASE("presentation results are invariant under unimodular coordinate changes") {
  CharPair cp = corpus::square_quasitoric();
  CharPair ch = cp;
  // v -> (v0 + 2*v1, -v0 - v1), determinant 1
  for (auto& v : ch.lambda) {
    Int a = v[0] + 2 * v[1];
    Int b = -v[0] - v[1];
    v = {a, b};
  }
  REQUIRE(validate_char_pair(ch).ok());
  // the sampling ball is not basis-invariant, so compare stabilized results
  VerificationReport a = adaptive_verify(cp, 3);
  VerificationReport b = adaptive_verify(ch, 3);
  CHECK(a.kring_rank == b.kring_rank);
  CHECK(a.torsion_free == b.torsion_free);
  CHECK(a.gr_ranks == b.gr_ranks);
  CHECK(a.cohomology.ranks == b.cohomology.ranks);
  CHECK(b.all_passed());
}

TEST_CASE("presentation results are invariant under relabeling") {
  CharPair cp = corpus::square_quasitoric();
  // rotate labels by one
  CharPair rot;
  rot.dim = cp.dim;
  rot.facets = cp.facets;
  rot.lambda.resize(4);
  for (int i = 0; i < 4; ++i) rot.lambda[size_t((i + 1) % 4)] = cp.lambda[size_t(i)];
  for (const auto& f : cp.maximal_faces) {
    std::vector<int> g;
    for (int i : f) g.push_back((i + 1) % 4);
    rot.maximal_faces.push_back(g);
  }
  ZModulePresentation a = kring_presentation(cp, build_relations(cp, 1));
  ZModulePresentation b = kring_presentation(rot, build_relations(rot, 1));
  CHECK(a.quotient_rank() == b.quotient_rank());
  CHECK(a.snf.invariant_factors == b.snf.invariant_factors);
}
