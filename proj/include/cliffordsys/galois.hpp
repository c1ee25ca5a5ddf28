#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffordsys/graded.hpp"

namespace cliffordsys {

/// K = F_{q^n} over k = F_q with G = Z/n acting by powers of x -> x^q.
struct GaloisSetup {
  RingPtr field;  // K, with k as its named subring
  UnitModulePtr type;
  ScalarRestriction scalars;
  std::uint64_t q = 0;
  int n = 0;
};

/// K = F_p[x]/(f) with deg f divisible by n; q = p^(deg f / n). Verifies the
/// Galois predicate (faithful, fixed field exactly k).
GaloisSetup galois_setup(long p, const Poly& f, int n);

/// r u_g -> (x -> r phi(g)(x)) from K_phi G onto End_k(K) = M_n(k), in the
/// k-basis of K. Bijectivity and multiplicativity are verified; a failure
/// is an InternalError.
AlgebraMap split_skew_group_algebra(const GaloisSetup& s);

/// End_R(R*G) as |G| x |G| matrices over R acting on columns of coordinates
/// in the right R-basis {u_g}: left multiplication by b = r u_g has entry
/// (gh, h) = eta_gh^-1(r f(g,h)), and x in K acts as the scalar matrix x.
struct RestrictionReport {
  bool center_is_k = false;
  bool central_simple = false;
  bool iso_verified = false;
  std::size_t dim_source = 0;  // dim_K (R*G (x)_k K)
  std::size_t dim_target = 0;  // dim_K M_|G|(R)
  std::size_t dim_expected = 0;  // |G|^2 dim_K R
  bool ok() const {
    return center_is_k && central_simple && iso_verified && dim_source == dim_target && dim_target == dim_expected;
  }
};

/// Throws NotCentralSimpleBase unless the base of `a` is K-central simple.
RestrictionReport restriction_iso_check(const GaloisSetup& s, const CrossedProduct& a);

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// H^2(G, K^*_phi) = 0, splitting of K_phi G, and for every roster crossed
/// product: k-central simplicity, the restriction isomorphism, a unit in
/// every component, obstruction class zero and realization round trip.
std::vector<AuditCheck> brauer_desk_audit(const GaloisSetup& s, std::uint64_t seed);

/// Roster used by the audit: K_phi G, K^{d lambda}_phi G for a seeded
/// lambda, and M_2(K) with the coefficientwise action when its crossed
/// product fits the algebra rank bound.
std::vector<std::pair<std::string, CrossedProduct>> galois_roster(const GaloisSetup& s, std::uint64_t seed);

}  // namespace cliffordsys
