#pragma once

// Degrees of the radical extensions Q(zeta_M, g^(1/n)) with n | M, the fields
// K_n = Q(zeta_d, zeta_n, g^(1/n)), the entanglement fields
// I_n = Q(zeta_d) cap Q(zeta_n, g^(1/n)), and the Frobenius-class test.
//
// Degrees come from an explicit Kummer-index analysis. Intersections and
// quadratic subfields come from the maximal abelian subfield of
// Q(zeta_n, g^(1/n)), represented as a subgroup of (Z/NZ)^*.

#include <cstdint>
#include <vector>

namespace nearprim {

struct RadicalFieldSpec {
  std::int64_t M = 1;  // cyclotomic level
  std::int64_t n = 1;  // radical exponent, divides M
  std::int64_t g = 2;  // radicand, not in {-1, 0, 1}
};

struct IntersectionQuery {
  std::int64_t d = 1;
  std::int64_t n = 1;
  std::int64_t g = 2;
};

// Intermediate quantities of the degree computation. The Kummer index
// index = d0 * 2^e is the largest divisor of n with g an index-th power in
// Q(zeta_M); degree = phi(M) * n / index.
struct KummerTrace {
  std::int64_t h = 1;   // power_index(g)
  std::int64_t d0 = 1;  // gcd(n, h)
  int e = 0;            // extra 2-power gained inside Q(zeta_M)
  std::int64_t index = 1;
  std::int64_t degree = 1;
};

KummerTrace kummer_trace(const RadicalFieldSpec& spec);
std::int64_t kummer_degree(const RadicalFieldSpec& spec);

// [K_n : Q] = [Q(zeta_lcm(d,n), g^(1/n)) : Q].
std::int64_t kn_degree(std::int64_t d, std::int64_t n, std::int64_t g);

// The maximal abelian subfield of Q(zeta_n, g^(1/n)).
//
// For odd n it is Q(zeta_n). For even n, with k = gcd(n/2, exponent_gcd(g))
// and B = |g|^(1/k), it is Q(zeta_n, x) where x = sqrt(B) when g > 0 and
// x = sqrt(B) * zeta_{4k} when g < 0. An automorphism sigma_a with
// a = 1 (mod n) acts on x through the sign chi_B(a) * (-1)^((a-1)/2k).
class AbelianPart {
 public:
  AbelianPart(std::int64_t n, std::int64_t g);

  std::int64_t n() const { return n_; }
  // Smallest level N0 with the field inside Q(zeta_N0) as computed here.
  std::int64_t conductor() const { return conductor_; }
  // Residues a mod N (N a multiple of conductor()) whose sigma_a fixes the
  // field pointwise, in increasing order.
  std::vector<std::int64_t> stabilizer(std::int64_t N) const;
  // [field : Q].
  std::int64_t degree() const;

 private:
  int sign_on_radical(std::int64_t a) const;

  std::int64_t n_;
  bool radical_ = false;
  bool twist_ = false;
  std::int64_t k_ = 1;
  std::int64_t disc_ = 1;  // discriminant of Q(sqrt(B)); 1 when B is a square
  std::int64_t conductor_ = 1;
};

// True iff sqrt(m) lies in Q(zeta_n, g^(1/n)). m must be squarefree, m != 1.
bool quadratic_subfield_test(std::int64_t m, std::int64_t n, std::int64_t g);

// [I_n : Q] via phi(d) [Q(zeta_n, g^(1/n)):Q] / [Q(zeta_lcm(d,n), g^(1/n)):Q].
std::int64_t intersection_degree(const IntersectionQuery& q);
// [I_n : Q] via the abelian-part subgroup; an independent second route.
std::int64_t intersection_degree_galois(const IntersectionQuery& q);

// True iff sigma_a restricts to the identity on I_n, i.e. the class of
// automorphisms of K_n acting as sigma_a on Q(zeta_d) and trivially on
// Q(zeta_n, g^(1/n)) is nonempty.
bool frobenius_class_exists(std::int64_t d, std::int64_t a, std::int64_t n, std::int64_t g);

struct LemmaCheck {
  bool precondition_holds = false;  // gcd(q, 2dgt) = 1
  std::int64_t degree_t = 0;        // [I_t : Q]
  std::int64_t degree_qt = 0;       // [I_qt : Q]
  bool invariant = false;           // degree_t == degree_qt
};

// Compares [I_qt : Q] with [I_t : Q]. Runs even when the coprimality
// precondition fails, so counterexamples can be exhibited.
LemmaCheck lemma_invariance_check(std::int64_t d, std::int64_t t, std::int64_t q,
                                  std::int64_t g);

}  // namespace nearprim
