#include "nearprim/kummer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "nearprim/arith.hpp"

namespace nearprim {

namespace {

void require_radicand(std::int64_t g) {
  if (g >= -1 && g <= 1) throw DomainError("radicand g must not be -1, 0 or 1");
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// True iff g is a 2^s-th power in Q(zeta_M), where |g| = b^(2^a) with b not
// a square. Only meaningful for s >= 1 and 2^s | M.
//
// g > 0: the 2^s-th roots are b^(2^(a-s)) times roots of unity for s <= a;
// for s = a + 1 they are sqrt(b) times 2^(a+1)-th roots of unity, which lie
// in Q(zeta_M); larger s would need b^(1/4) in an abelian field.
//
// g < 0: for s <= a the roots are rational multiples of primitive
// 2^(s+1)-th roots of unity. For s = a + 1 they are sqrt(b) * w with w a
// primitive 2^(a+2)-th root of unity: a = 0 gives sqrt(-b); a = 1 gives
// sqrt(b) zeta_8 = sqrt(2b)(1 + i)/2, so sqrt(2b) decides (this contains
// -4w^4 = (w(1+i))^4); a >= 2 needs zeta_(2^(a+2)) and sqrt(b) separately.
bool is_two_power_power(std::int64_t g, std::int64_t b, int a, int s, std::int64_t M) {
  if (g > 0) {
    if (s <= a) return true;
    return s == a + 1 && sqrt_in_cyclotomic(b, M);
  }
  if (s <= a) return M % pow2(s + 1) == 0;
  if (s != a + 1) return false;
  if (a == 0) return sqrt_in_cyclotomic(-b, M);
  if (a == 1) return M % 4 == 0 && sqrt_in_cyclotomic(checked_mul(2, b), M);
  return a + 2 < 62 && M % pow2(a + 2) == 0 && sqrt_in_cyclotomic(b, M);
}

}  // namespace

KummerTrace kummer_trace(const RadicalFieldSpec& spec) {
  require_radicand(spec.g);
  if (spec.M < 1 || spec.n < 1) throw DomainError("M and n must be positive");
  if (spec.M % spec.n != 0) {
    throw DomainError("n = " + std::to_string(spec.n) + " does not divide M = " +
                      std::to_string(spec.M));
  }
  const std::int64_t G = exponent_gcd(spec.g);
  KummerTrace out;
  out.h = power_index(spec.g);
  out.d0 = std::gcd(spec.n, out.h);

  const std::int64_t odd_index = std::gcd(odd_part(spec.n), G);
  const int a = two_adic_valuation(G);
  const std::int64_t b = exact_root(abs64(spec.g), pow2(a));
  const int v = two_adic_valuation(spec.n);
  int s = 0;
  while (s < v && is_two_power_power(spec.g, b, a, s + 1, spec.M)) ++s;

  out.index = odd_index * pow2(s);
  out.e = s - two_adic_valuation(out.d0);
  if (out.e < 0 || out.index % out.d0 != 0) {
    throw InvariantViolation("Kummer index does not extend the rational power index");
  }
  out.degree = checked_mul(euler_phi(spec.M), spec.n / out.index);
  return out;
}

std::int64_t kummer_degree(const RadicalFieldSpec& spec) { return kummer_trace(spec).degree; }

std::int64_t kn_degree(std::int64_t d, std::int64_t n, std::int64_t g) {
  if (d < 1 || n < 1) throw DomainError("d and n must be positive");
  return kummer_degree({lcm64(d, n), n, g});
}

AbelianPart::AbelianPart(std::int64_t n, std::int64_t g) : n_(n), conductor_(n) {
  require_radicand(g);
  if (n < 1) throw DomainError("n must be positive");
  if (n % 2 != 0) return;
  // Largest m | n with Q(zeta_m, g^(1/m)) abelian is m = 2k: g^2 must be a
  // rational m-th power, i.e. |g| a k-th power.
  k_ = std::gcd(n / 2, exponent_gcd(g));
  const std::int64_t B = exact_root(abs64(g), k_);
  twist_ = g < 0;
  if (squarefree_kernel(B) != 1) disc_ = quad_discriminant(B);
  conductor_ = lcm64(lcm64(n, abs64(disc_)), twist_ ? checked_mul(4, k_) : 1);
  radical_ = true;
}

int AbelianPart::sign_on_radical(std::int64_t a) const {
  if (!radical_) return 1;
  int sign = disc_ == 1 ? 1 : kronecker_symbol(disc_, a);
  if (twist_ && ((a - 1) / (2 * k_)) % 2 != 0) sign = -sign;
  return sign;
}

std::vector<std::int64_t> AbelianPart::stabilizer(std::int64_t N) const {
  if (N < 1 || N % conductor_ != 0) {
    throw DomainError("stabilizer level must be a multiple of the conductor " +
                      std::to_string(conductor_));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a <= N; a += n_) {
    if (std::gcd(a, N) == 1 && sign_on_radical(a) == 1) out.push_back(a % N);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t AbelianPart::degree() const {
  const std::int64_t N = conductor_;
  return euler_phi(N) / static_cast<std::int64_t>(stabilizer(N).size());
}

bool quadratic_subfield_test(std::int64_t m, std::int64_t n, std::int64_t g) {
  if (m == 0 || m == 1 || squarefree_kernel(m) != m) {
    throw DomainError("quadratic_subfield_test: m must be squarefree and not 1");
  }
  const std::int64_t D = quad_discriminant(m);
  const AbelianPart part(n, g);
  const std::int64_t N = lcm64(part.conductor(), abs64(D));
  const auto H = part.stabilizer(N);
  return std::all_of(H.begin(), H.end(), [D](std::int64_t h) { return kronecker_symbol(D, h) == 1; });
}

std::int64_t intersection_degree(const IntersectionQuery& q) {
  if (q.d < 1 || q.n < 1) throw DomainError("d and n must be positive");
  const std::int64_t top = checked_mul(euler_phi(q.d), kummer_degree({q.n, q.n, q.g}));
  const std::int64_t bottom = kummer_degree({lcm64(q.d, q.n), q.n, q.g});
  if (top % bottom != 0) throw InvariantViolation("intersection degree is not an integer");
  return top / bottom;
}

std::int64_t intersection_degree_galois(const IntersectionQuery& q) {
  if (q.d < 1 || q.n < 1) throw DomainError("d and n must be positive");
  const AbelianPart part(q.n, q.g);
  const std::int64_t N = lcm64(part.conductor(), q.d);
  std::set<std::int64_t> image;
  for (std::int64_t h : part.stabilizer(N)) image.insert(h % q.d);
  return euler_phi(q.d) / static_cast<std::int64_t>(image.size());
}

bool frobenius_class_exists(std::int64_t d, std::int64_t a, std::int64_t n, std::int64_t g) {
  if (d < 1 || a < 1 || n < 1) throw DomainError("d, a and n must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("frobenius_class_exists: gcd(a, d) != 1");
  const AbelianPart part(n, g);
  const std::int64_t N = lcm64(part.conductor(), d);
  const std::int64_t target = a % d;
  for (std::int64_t h : part.stabilizer(N)) {
    if (h % d == target) return true;
  }
  return false;
}

LemmaCheck lemma_invariance_check(std::int64_t d, std::int64_t t, std::int64_t q,
                                  std::int64_t g) {
  require_radicand(g);
  if (d < 1 || t < 1 || q < 1) throw DomainError("d, t and q must be positive");
  LemmaCheck out;
  out.precondition_holds = q % 2 != 0 && std::gcd(q, d) == 1 && std::gcd(q, abs64(g)) == 1 &&
                           std::gcd(q, t) == 1;
  out.degree_t = intersection_degree({d, t, g});
  out.degree_qt = intersection_degree({d, checked_mul(q, t), g});
  out.invariant = out.degree_t == out.degree_qt;
  return out;
}

}  // namespace nearprim
