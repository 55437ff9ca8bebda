#pragma once

// Existence of even lattices with given invariants, embedding data for
// primitive embeddings L -> N, condition (*) and the transfer of data to
// (*)-sublattices and odd-index overlattices.
//
// All data are expressed in the coordinates of discriminant_group(L) and
// discriminant_group(N).

#include "enriques/embedding.hpp"
#include "enriques/fqf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace enriques {

struct ExistenceReport {
  bool signature_congruence = true;  // (1)
  bool rank_bound = true;            // (2)
  bool odd_discriminants = true;     // (3)
  bool two_adic_discriminant = true; // (4)
  std::vector<std::string> failures;

  bool holds() const { return signature_congruence && rank_bound && odd_discriminants && two_adic_discriminant; }
};

/// Nikulin's conditions for an even lattice of signature `sig` with
/// discriminant form `f`. Throws Unsupported when the 2-adic splitting stalls.
ExistenceReport existence_report(Signature sig, const FiniteQuadraticForm& f);
bool exists_even_lattice(Signature sig, const FiniteQuadraticForm& f);

struct KInvariants {
  int rank = 0;
  Signature signature;
  FiniteQuadraticForm form;
};

/// gamma is given on generators: gamma.col(i) is the image in A_N of
/// h_l.col(i), so H_N is the span of gamma. delta maps the generators of
/// -q_K into (q_L + -q_N) restricted to Gamma^perp / Gamma, in the
/// coordinates of datum_quotient.
struct EmbeddingDatum {
  ElementMatrix h_l;
  ElementMatrix gamma;
  KInvariants k;
  FormMap delta;
};

/// Gamma^perp / Gamma inside A_L + A_N with the form q_L + -q_N.
Subquotient datum_quotient(const Lattice& l, const EmbeddingDatum& d);

struct DatumCheck {
  bool shapes = false;
  bool gamma_bijective = false;
  bool gamma_isometry = false;
  bool graph_isotropic = false;
  bool k_rank = false;
  bool k_signature = false;
  bool delta_isometry = false;
  bool k_exists = false;
  std::vector<std::string> failures;

  bool ok() const {
    return shapes && gamma_bijective && gamma_isometry && graph_isotropic && k_rank && k_signature &&
           delta_isometry && k_exists;
  }
};

/// Checks every clause; K has rank 12 - rk L and signature (2 - t+, 10 - t-).
DatumCheck check_embedding_datum(const Lattice& l, const EmbeddingDatum& d);
bool verify_embedding_datum(const Lattice& l, const EmbeddingDatum& d);

/// The datum of a concrete primitive embedding: H_L, H_N and gamma from
/// the dual vectors of N lying in L (x) Q, K from the complement, delta by
/// isomorphism search. Throws DatumInvalid if the search fails.
EmbeddingDatum datum_from_embedding(const PrimitiveEmbedding& emb);

struct PrimeLength {
  std::int64_t prime;
  int length;  // l(A_{L',p})
};

struct StarReport {
  Integer index;
  bool gcd_ok = false;
  bool ell_bounds_ok = false;
  std::vector<PrimeLength> witness_primes;

  bool verdict() const { return gcd_ok && ell_bounds_ok; }
};

/// L' is given by a basis (columns, coordinates of L). Throws NotSublattice
/// when the basis does not have full rank.
StarReport condition_star(const Lattice& l, const IntMatrix& sub_basis);

struct IndexPSublattice {
  Sublattice sub;   // basis in coordinates of the lattice passed in
  IntVector pivot;  // v with (v^2) != 0 mod p; L' = {x : (x.v) = 0 mod p}
};

/// Throws BadPrime when p is not an odd prime or divides 2 discr(L);
/// NoUnitVector when no small pivot exists.
IndexPSublattice index_p_sublattice(const Lattice& l, std::int64_t p);

/// Repeats the hyperplane step, each time inside the previous sublattice
/// with a fresh pivot. Only the first lattice is required to be prime to p.
/// Bases are in coordinates of `l`.
std::vector<IndexPSublattice> index_p_chain(const Lattice& l, const std::vector<std::int64_t>& primes);

/// Datum for L' from a datum for L when L' satisfies (*). Throws
/// StarViolated, ExistenceFails or DatumInvalid.
EmbeddingDatum transfer_datum_down(const Lattice& l, const IntMatrix& sub_basis, const EmbeddingDatum& d);

/// Datum for the overlattice L from a datum for L' of odd index. Throws
/// EvenIndex or DatumInvalid.
EmbeddingDatum transfer_datum_up(const Lattice& l, const IntMatrix& sub_basis, const EmbeddingDatum& d_prime);

/// Restriction Hom(L, Z/2) -> Hom(L', Z/2) as a matrix over F_2 and whether
/// it is bijective.
bool restriction_mod2_bijective(const IntMatrix& sub_basis);

}  // namespace enriques
