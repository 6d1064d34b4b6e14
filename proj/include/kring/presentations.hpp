#ifndef KRING_PRESENTATIONS_HPP
#define KRING_PRESENTATIONS_HPP

#include "kring/charpair.hpp"
#include "kring/lattice.hpp"
#include "kring/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kring {

// Ambient truncated quotient of Z[y_0..y_{d-1}] for a characteristic pair:
// non-face supports and total degrees beyond the bound are killed.
TruncatedRing truncated_ring(const CharPair& cp, int degree_bound);

// All face-supported monomials of total degree <= max_degree, in canonical
// (graded lexicographic) order.  These are the module generators of every
// presentation below.
std::vector<Monomial> face_monomials(const CharPair& cp, int max_degree);

// One representative of each antipodal pair {u,-u} with 0 < max-norm(u) <=
// radius; the representative has positive first nonzero coordinate.
std::vector<LatticeVector> u_sample(int dim, int radius);

// z_u = prod_{<u,v_i> > 0} (1-y_i)^{<u,v_i>} - prod_{<u,v_i> < 0}
// (1-y_i)^{-<u,v_i>}, reduced in the ring.  Empty products are 1.
IntPolynomial k_relation(const CharPair& cp, const TruncatedRing& ring, const LatticeVector& u);

// h_u = sum_i <u,v_i> y_i.  Note in(z_u) = -h_u = h_{-u} as literal
// polynomials; the relation lattices generated are identical.
IntPolynomial linear_relation(const CharPair& cp, const LatticeVector& u);

struct RelationSet {
  int u_radius = 0;
  int degree_bound = 0;
  std::vector<Monomial> sr_monomials;  // squarefree minimal non-face monomials
  std::vector<std::pair<LatticeVector, IntPolynomial>> k_relations;       // (u, z_u)
  std::vector<std::pair<LatticeVector, IntPolynomial>> linear_relations;  // (u, h_u)
};

// Relations of the presented K-ring for all sampled u, reduced at the given
// degree bound (default: the dimension n; every monomial of higher degree
// already lies in the ideal, and adaptive_verify re-checks that instance by
// instance).  Throws std::invalid_argument unless cp validates.
RelationSet build_relations(const CharPair& cp, int u_radius, int degree_bound = -1);

struct ZModulePresentation {
  std::vector<Monomial> basis;  // face monomials of degree <= bound
  int degree_bound = 0;
  IntMatrix relations;  // rows: reduce(m * z_u), m over face monomials of lower degree
  IntMatrix echelon;    // row-lattice basis of `relations`, for cheap re-use
  SnfResult snf;

  int quotient_rank() const { return int(basis.size()) - snf.rank; }
  bool torsion_free() const { return snf.all_factors_one(); }
  std::vector<Int> nontrivial_factors() const;
};

// The K-ring of (Q, Lambda) as a finitely presented abelian group.
ZModulePresentation kring_presentation(const CharPair& cp, const RelationSet& rels);

struct GradedRanks {
  std::vector<int> per_degree;  // index 0..n
  bool operator==(const GradedRanks&) const = default;
};

struct CohomologySummary {
  std::vector<int> ranks;                        // per degree 0..n
  std::vector<std::vector<Int>> torsion_factors; // nontrivial invariant factors per degree

  bool torsion_free() const;
};

// Degreewise cohomology of the pair: face monomials of degree j modulo the
// span of m*h_u (deg m = j-1) with u over the dual basis, one SNF per degree.
CohomologySummary cohomology_presentation(const CharPair& cp);

// Ranks of the subquotients R_j/R_{j+1} of the degree filtration of the
// K-ring.  Requires a torsion-free presentation (throws otherwise).
GradedRanks graded_ranks_of_kring(const CharPair& cp, const ZModulePresentation& pres);

struct MonomialBasisResult {
  std::vector<std::vector<int>> gamma;  // chosen faces, grouped degreewise, flattened
  bool used_exhaustive = false;
  bool complete = false;            // a cohomology basis was found in every degree
  bool kring_basis_verified = false;  // images form a Z-basis of the K-ring
  std::vector<std::string> witnesses;
};

// Squarefree face monomials whose classes are a Z-basis of the cohomology in
// every degree and of the K-ring: greedy per degree, exhaustive fallback.
MonomialBasisResult monomial_basis(const CharPair& cp, int max_u_radius = 3);

struct VerificationReport {
  bool rank_matches_chi = false;
  bool torsion_free = false;  // K-ring and every cohomology degree
  bool gr_matches_cohomology = false;
  bool degree_np1_absorbed = false;
  bool monomial_basis_verified = false;
  int u_radius_used = 0;  // radius at which the quotient stabilized
  int chi = 0;
  int kring_rank = 0;
  std::vector<Int> kring_torsion;  // nontrivial invariant factors, if any
  GradedRanks gr_ranks;
  CohomologySummary cohomology;
  std::vector<std::vector<int>> gamma;
  std::vector<std::string> witnesses;

  bool all_passed() const {
    return rank_matches_chi && torsion_free && gr_matches_cohomology && degree_np1_absorbed &&
           monomial_basis_verified;
  }
};

// Full structural verification: grow the u-radius until the quotient has rank
// chi and no torsion, then check the graded comparison with cohomology, the
// absorption of degree-(n+1) monomials into the relation lattice, and the
// monomial basis transfer.  Never reports success on a capped run.
VerificationReport adaptive_verify(const CharPair& cp, int max_u_radius = 3);

}  // namespace kring

#endif
