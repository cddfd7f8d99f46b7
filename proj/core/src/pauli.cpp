#include "pqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pqc {

namespace {

std::uint64_t bit(int qubit) { return std::uint64_t{1} << (qubit - 1); }

// Power of i in the single-qubit product a b, for non-identity a != b.
int letter_phase(PauliLetter a, PauliLetter b) {
  if (a == PauliLetter::I || b == PauliLetter::I || a == b) return 0;
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X Y = iZ, Y Z = iX, Z X = iY; reversed order gives -i.
  return (ib - ia + 3) % 3 == 1 ? 1 : 3;
}

Dyadic normalized(Dyadic v) {
  if (v.is_zero()) return {0, 0, 0};
  while (v.exp > 0 && v.re % 2 == 0 && v.im % 2 == 0) {
    v.re /= 2;
    v.im /= 2;
    --v.exp;
  }
  return v;
}

// State-index masks: qubit q is bit n - q of the basis index.
struct IndexMasks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y_count = 0;
};

IndexMasks index_masks(const PauliString& p) {
  IndexMasks m;
  for (int q = 1; q <= p.n; ++q) {
    const std::uint64_t at = std::uint64_t{1} << (p.n - q);
    if (p.x & bit(q)) m.x |= at;
    if (p.z & bit(q)) m.z |= at;
  }
  m.y_count = std::popcount(p.x & p.z);
  return m;
}

const cplx kIPower[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString PauliString::single(int n, int qubit, PauliLetter letter) {
  if (qubit < 1 || qubit > n || n > 64) throw DomainError("Pauli qubit index out of range");
  PauliString p{n, 0, 0};
  if (letter == PauliLetter::X || letter == PauliLetter::Y) p.x |= bit(qubit);
  if (letter == PauliLetter::Z || letter == PauliLetter::Y) p.z |= bit(qubit);
  return p;
}

PauliLetter PauliString::letter(int qubit) const {
  const bool hx = (x & bit(qubit)) != 0;
  const bool hz = (z & bit(qubit)) != 0;
  if (hx && hz) return PauliLetter::Y;
  if (hx) return PauliLetter::X;
  if (hz) return PauliLetter::Z;
  return PauliLetter::I;
}

int PauliString::weight() const { return std::popcount(x | z); }

std::string to_string(const PauliString& p) {
  if (p.is_identity()) return "I";
  static const char names[] = {'I', 'X', 'Y', 'Z'};
  std::string out;
  for (int q = 1; q <= p.n; ++q) {
    const auto l = p.letter(q);
    if (l == PauliLetter::I) continue;
    if (!out.empty()) out += ' ';
    out += names[static_cast<int>(l)];
    out += std::to_string(q);
  }
  return out;
}

PauliString parse_pauli_string(std::string_view text, int n) {
  PauliString p = PauliString::identity(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw DomainError("bad Pauli token '" + tok + "'");
    PauliLetter l;
    switch (tok[0]) {
      case 'X': l = PauliLetter::X; break;
      case 'Y': l = PauliLetter::Y; break;
      case 'Z': l = PauliLetter::Z; break;
      default: throw DomainError("bad Pauli letter in '" + tok + "'");
    }
    int q = 0;
    try {
      std::size_t used = 0;
      q = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) throw DomainError("bad Pauli token '" + tok + "'");
    } catch (const std::logic_error&) {
      throw DomainError("bad Pauli token '" + tok + "'");
    }
    if (p.letter(q) != PauliLetter::I) throw DomainError("qubit repeated in Pauli string");
    const auto s = PauliString::single(n, q, l);
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw SizeMismatch("Pauli strings on different qubit counts");
  int power = 0;
  const std::uint64_t both = (a.x | a.z) & (b.x | b.z);
  for (int q = 1; q <= a.n; ++q) {
    if (both & bit(q)) power += letter_phase(a.letter(q), b.letter(q));
  }
  return {power % 4, {a.n, a.x ^ b.x, a.z ^ b.z}};
}

Eigen::Matrix2cd pauli_matrix(PauliLetter letter) {
  Eigen::Matrix2cd m;
  switch (letter) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

void apply_pauli(const PauliString& p, cplx phase, const cplx* in, cplx* out) {
  const IndexMasks m = index_masks(p);
  const cplx base = phase * kIPower[m.y_count % 4];
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  for (std::uint64_t y = 0; y < dim; ++y) {
    out[y ^ m.x] = (std::popcount(y & m.z) % 2 ? -base : base) * in[y];
  }
}

Eigen::MatrixXcd pauli_dense(const PauliString& p) {
  const IndexMasks m = index_masks(p);
  const cplx base = kIPower[m.y_count % 4];
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << p.n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) {
    const auto uy = static_cast<std::uint64_t>(y);
    out(static_cast<Eigen::Index>(uy ^ m.x), y) = std::popcount(uy & m.z) % 2 ? -base : base;
  }
  return out;
}

cplx Dyadic::value() const { return {std::ldexp(static_cast<double>(re), -exp), std::ldexp(static_cast<double>(im), -exp)}; }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp, b.exp);
  const std::int64_t sa = std::int64_t{1} << (e - a.exp);
  const std::int64_t sb = std::int64_t{1} << (e - b.exp);
  return normalized({a.re * sa + b.re * sb, a.im * sa + b.im * sb, e});
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return normalized({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.exp + b.exp});
}

Dyadic times_i_power(const Dyadic& a, int power) {
  switch (((power % 4) + 4) % 4) {
    case 1: return {-a.im, a.re, a.exp};
    case 2: return {-a.re, -a.im, a.exp};
    case 3: return {a.im, -a.re, a.exp};
    default: return a;
  }
}

void ExactPauliSum::add(const PauliString& p, const Dyadic& c) {
  if (p.n != n_) throw SizeMismatch("Pauli string on the wrong qubit count");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(p, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

double ExactPauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_) s += std::abs(c.value());
  return s;
}

ExactPauliSum operator*(const ExactPauliSum& a, const ExactPauliSum& b) {
  if (a.n_ != b.n_) throw SizeMismatch("Pauli sums on different qubit counts");
  ExactPauliSum out(a.n_);
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      const auto prod = multiply(pa, pb);
      out.add(prod.string, times_i_power(ca * cb, prod.power));
    }
  }
  return out;
}

PauliSum PauliSum::from_exact(const ExactPauliSum& exact) {
  PauliSum out(exact.qubits());
  for (const auto& [p, c] : exact.terms()) out.terms_.emplace(p, c.value());
  return out;
}

void PauliSum::add(const PauliString& p, cplx c, double drop_below) {
  if (p.n != n_) throw SizeMismatch("Pauli string on the wrong qubit count");
  cplx& slot = terms_[p];
  slot += c;
  if (std::abs(slot) <= drop_below) terms_.erase(p);
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

double PauliSum::max_coeff() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
  return w;
}

Eigen::MatrixXcd pauli_dense(const PauliSum& sum, const ResourceCaps& caps) {
  const auto dim = static_cast<Eigen::Index>(qudit_dimension(2, sum.qubits(), caps));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : sum.terms()) out += c * pauli_dense(p);
  return out;
}

ExactPauliSum transposition_to_pauli(int i, int j, int n) {
  if (i == j) throw DomainError("transposition needs two distinct qubits");
  if (i < 1 || j < 1 || i > n || j > n || n > 64) throw DomainError("transposition qubit out of range");
  ExactPauliSum out(n);
  out.add(PauliString::identity(n), Dyadic::half());
  for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
    const auto a = PauliString::single(n, i, l);
    const auto b = PauliString::single(n, j, l);
    out.add({n, a.x | b.x, a.z | b.z}, Dyadic::half());
  }
  return out;
}

ExactPauliSum permutation_to_pauli(const Permutation& sigma) {
  const int n = sigma.size();
  ExactPauliSum out(n);
  out.add(PauliString::identity(n), Dyadic::from_int(1));
  for (const auto& [i, j] : transposition_decomposition(sigma)) out = out * transposition_to_pauli(i, j, n);
  return out;
}

PauliSum element_to_pauli(const AlgebraElement& f) {
  const int n = f.degree();
  std::map<PauliString, cplx> acc;
  for (const auto& [sigma, c] : f.terms()) {
    const ExactPauliSum expansion = permutation_to_pauli(sigma);
    for (const auto& [p, coeff] : expansion.terms()) acc[p] += c * coeff.value();
  }
  PauliSum out(n);
  for (const auto& [p, c] : acc) {
    if (std::abs(c) > 1e-15) out.add(p, c);
  }
  return out;
}

bool binomial_identity_check(int k) {
  if (k < 1 || k > 30) throw DomainError("binomial identity checked for 1 <= k <= 30");
  struct Rational {
    __int128 num;
    __int128 den;
  };
  auto gcd = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const __int128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  };
  auto reduce = [&](Rational r) {
    const __int128 g = gcd(r.num, r.den);
    return g > 1 ? Rational{r.num / g, r.den / g} : r;
  };
  auto pow_rational = [&](Rational base, int e) {
    Rational out{1, 1};
    if (e < 0) {
      base = {base.den, base.num};
      e = -e;
    }
    for (int i = 0; i < e; ++i) out = reduce({out.num * base.num, out.den * base.den});
    return out;
  };
  Rational sum{0, 1};
  __int128 binom = 1;  // binom(k-1, j)
  for (int j = 0; j <= k - 1; ++j) {
    const Rational a = pow_rational({2, 1}, k - 1 - 2 * j);
    const Rational b = pow_rational({3, 4}, k - 1 - j);
    const Rational term = reduce({binom * a.num * b.num, a.den * b.den});
    sum = reduce({sum.num * term.den + term.num * sum.den, sum.den * term.den});
    binom = binom * (k - 1 - j) / (j + 1);
  }
  const __int128 expected = static_cast<__int128>(1) << (k - 1);
  return sum.den == 1 && sum.num == expected;
}

namespace {

// Shared Pauli pipeline; L is the constant in the closed-form estimate.
PauliLcuResult pauli_pipeline(const Statevector& u, const Statevector& v, const PauliSum& h, int k, double c,
                              double L, double t, double epsilon, const ResourceCaps& caps) {
  if (u.local_dimension() != 2 || v.local_dimension() != 2) throw DomainError("the Pauli path needs qubits (d = 2)");
  if (u.qudits() != h.qubits() || v.qudits() != h.qubits()) throw SizeMismatch("states and Hamiltonian disagree on n");
  const int n = h.qubits();
  PauliLcuResult out;
  if (t == 0.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    out.value = u.inner(v);
    out.plan.epsilon = epsilon;
    out.plan.M = 0;
    out.plan.K = 0;
    out.gates.k = k;
    out.gates.L = L;
    return out;
  }
  for (const auto& [q, a] : h.terms()) {
    if (std::abs(a.imag()) > 1e-12) throw DomainError("Pauli Hamiltonian must have real coefficients");
  }
  SimulationPlan p = plan_for_norm(h.one_norm(), t, epsilon);
  p.n = n;
  p.max_coeff = c;
  p.locality = k;
  p.M_scaling = t * c * k * std::pow(static_cast<double>(n), k);
  {
    const double nk = std::pow(static_cast<double>(n), k);
    const double base = t * L * k * nk;
    const double l = base > 0.0 ? std::log(base / epsilon) : 0.0;
    const double ll = l > 1.0 ? std::log(l) : 0.0;
    p.closed_form_estimate = base > 0.0 ? t * L * k * k * k * nk * (ll > 0.0 ? l / ll : std::max(l, 1.0)) : 0.0;
  }

  // Order-K Taylor polynomial of exp(-i dt H), merged by Pauli string.
  const PauliString id = PauliString::identity(n);
  std::map<PauliString, cplx> total{{id, 1.0}};
  std::map<PauliString, int> length{{id, 0}};
  std::map<PauliString, cplx> power{{id, 1.0}};
  for (int m = 1; m <= p.K; ++m) {
    std::map<PauliString, cplx> next;
    const cplx scale(0.0, -p.delta_t / m);
    for (const auto& [q, b] : power) {
      for (const auto& [hp, a] : h.terms()) {
        const auto prod = multiply(hp, q);
        next[prod.string] += scale * a * b * kIPower[prod.power];
        length.emplace(prod.string, m);
      }
    }
    for (const auto& [q, b] : next) total[q] += b;
    power = std::move(next);
  }
  std::vector<double> beta;
  std::vector<cplx> phase;
  std::vector<PauliString> strings;
  double taylor_norm = 0.0;
  int longest = 0;
  int widest = 0;
  for (const auto& [q, gamma] : total) {
    const double b = std::abs(gamma);
    if (b == 0.0) continue;
    beta.push_back(b);
    phase.push_back(gamma / b);
    strings.push_back(q);
    taylor_norm += b;
    longest = std::max(longest, length.at(q));
    widest = std::max(widest, q.weight());
  }
  const double pad = 2.0 - taylor_norm;
  if (pad < -1e-12) throw DomainError("segment 1-norm exceeds 2");
  if (pad > 0.0) {
    for (double sign : {1.0, -1.0}) {
      beta.push_back(pad / 2.0);
      phase.push_back(sign);
      strings.push_back(id);
    }
  }
  p.term_count = beta.size();
  out.segment_terms = beta.size();

  auto select = [&](std::size_t j, bool adjoint, const cplx* in, cplx* o) {
    apply_pauli(strings[j], adjoint ? std::conj(phase[j]) : phase[j], in, o);
  };
  Eigen::VectorXcd cur = v.amplitudes();
  for (std::uint64_t m = 0; m < p.M; ++m) cur = detail::amplified_segment(beta, select, cur, caps);
  out.value = u.amplitudes().dot(cur);

  out.gates.per_segment = 3 * static_cast<std::uint64_t>(longest);
  out.gates.M = p.M;
  out.gates.K = p.K;
  out.gates.actual = p.M * out.gates.per_segment;
  out.gates.single_qubit_paulis = p.M * 3 * static_cast<std::uint64_t>(widest);
  out.gates.k = k;
  out.gates.L = L;
  out.gates.closed_form_estimate = p.closed_form_estimate;
  out.plan = p;
  return out;
}

}  // namespace

PauliLcuResult matrix_element_pauli(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                                    double epsilon, const ResourceCaps& caps) {
  if (u.qudits() != f.degree() || v.qudits() != f.degree()) throw SizeMismatch("states and element disagree on n");
  if (t != 0.0 && !f.is_hermitian()) {
    throw DomainError("simulation needs a Hermitian element (c(s^-1) = conj c(s))");
  }
  const int k = f.locality();
  const double L = k >= 1 ? std::ldexp(f.max_coeff(), k - 1) : f.max_coeff();
  return pauli_pipeline(u, v, element_to_pauli(f), k, f.max_coeff(), L, t, epsilon, caps);
}

PauliLcuResult matrix_element_pauli(const Statevector& u, const Statevector& v, const PauliSum& h, double t,
                                    double epsilon, const ResourceCaps& caps) {
  return pauli_pipeline(u, v, h, h.max_weight(), h.max_coeff(), h.max_coeff(), t, epsilon, caps);
}

}  // namespace pqc
