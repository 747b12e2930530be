#include "orbitdist/gf.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include "orbitdist/embedded_data.hpp"

namespace orbitdist {

namespace {

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense polynomial helpers over F_p (ascending coefficients) ---

void trim(std::vector<uint8_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const std::vector<uint8_t>& a) { return int(a.size()) - 1; }

std::vector<uint8_t> pmul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint32_t(a[i]) * b[j];
  }
  std::vector<uint8_t> r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = uint8_t(acc[i] % p);
  trim(r);
  return r;
}

std::vector<uint8_t> pmod(std::vector<uint8_t> a, const std::vector<uint8_t>& f, int p) {
  // f need not be monic here; normalize by its leading inverse
  trim(a);
  const int df = pdeg(f);
  assert(df >= 0 && f.back() != 0);
  int lead_inv = 1;
  for (int x = 1; x < p; ++x)
    if (x * f.back() % p == 1) lead_inv = x;
  while (pdeg(a) >= df) {
    const int shift = pdeg(a) - df;
    const uint32_t c = uint32_t(a.back()) * lead_inv % p;
    if (c) {
      for (int j = 0; j <= df; ++j) {
        int v = a[shift + j] - int(c) * f[j] % p;
        a[shift + j] = uint8_t((v % p + p) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<uint8_t> pmulmod(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                             const std::vector<uint8_t>& f, int p) {
  return pmod(pmul(a, b, p), f, p);
}

std::vector<uint8_t> ppowmod(std::vector<uint8_t> base, uint64_t k,
                             const std::vector<uint8_t>& f, int p) {
  std::vector<uint8_t> r = {1};
  base = pmod(std::move(base), f, p);
  while (k) {
    if (k & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    k >>= 1;
  }
  return r;
}

std::vector<uint8_t> pgcd(std::vector<uint8_t> a, std::vector<uint8_t> b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = pmod(std::move(a), b, p);
    std::swap(a, b);
  }
  // make monic
  if (!a.empty() && a.back() != 1) {
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * a.back() % p == 1) inv = x;
    for (auto& c : a) c = uint8_t(c * inv % p);
  }
  return a;
}

// Rabin test: f (degree m) irreducible over F_p iff x^(p^m) = x (mod f)
// and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
bool poly_irreducible(const std::vector<uint8_t>& f, int p) {
  const int m = pdeg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  // frob[j] = x^(p^j) mod f, built by iterating the p-th power map
  std::vector<std::vector<uint8_t>> frob(m + 1);
  frob[0] = pmod({0, 1}, f, p);
  for (int j = 1; j <= m; ++j) frob[j] = ppowmod(frob[j - 1], uint64_t(p), f, p);
  std::vector<uint8_t> xm = frob[m];
  // x^(p^m) - x must vanish mod f
  std::vector<uint8_t> diff = xm;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = uint8_t((diff[1] + p - 1) % p);
  trim(diff);
  if (!diff.empty()) return false;
  for (uint64_t r : prime_factors(uint64_t(m))) {
    std::vector<uint8_t> d = frob[m / r];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = uint8_t((d[1] + p - 1) % p);
    trim(d);
    std::vector<uint8_t> g = pgcd(f, d, p);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<uint64_t> prime_factors(uint64_t x) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= x; d += (d == 2) ? 1 : 2) {
    if (x % d == 0) {
      fs.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) fs.push_back(x);
  return fs;
}

// --- ConwayTable ---

ConwayTable ConwayTable::parse(const std::string& text) {
  ConwayTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int p, d;
    if (!(ls >> p >> d))
      throw Error("conway table line " + std::to_string(lineno) + ": bad header");
    std::vector<uint8_t> coeffs;
    int c;
    while (ls >> c) {
      if (c < 0 || c >= p)
        throw Error("conway table line " + std::to_string(lineno) + ": coefficient out of range");
      coeffs.push_back(uint8_t(c));
    }
    if (int(coeffs.size()) != d + 1 || coeffs.back() != 1)
      throw Error("conway table line " + std::to_string(lineno) + ": expected " +
                  std::to_string(d + 1) + " ascending coefficients, monic");
    t.polys_[{p, d}] = std::move(coeffs);
  }
  return t;
}

ConwayTable ConwayTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open conway table: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const ConwayTable& ConwayTable::bundled() {
  static const ConwayTable t = parse(embedded::conway_table());
  return t;
}

const std::vector<uint8_t>* ConwayTable::find(int p, int degree) const {
  auto it = polys_.find({p, degree});
  return it == polys_.end() ? nullptr : &it->second;
}

// --- FieldTower ---

FieldTower::FieldTower(int p, int e, int n, std::vector<uint8_t> modulus)
    : p_(p), e_(e), n_(n), modulus_(std::move(modulus)) {
  if (!is_prime_int(p)) throw DegreeMismatchError("p must be prime");
  if (e < 1 || n < 1) throw DegreeMismatchError("e and n must be positive");
  m_ = e * n;
  if (m_ > 40) throw DegreeMismatchError("field too large (e*n > 40)");
  {
    uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= uint64_t(p);
    if (q > 256) throw DegreeMismatchError("q too large (q > 256)");
    q_ = int(q);
  }
  order_ = 1;
  for (int i = 0; i < m_; ++i) {
    if (order_ > (uint64_t(1) << 42) / p) throw DegreeMismatchError("field too large");
    order_ *= uint64_t(p);
  }
  if (int(modulus_.size()) != m_ + 1)
    throw DegreeMismatchError("modulus must have degree e*n");
  if (modulus_.back() != 1) throw DegreeMismatchError("modulus must be monic");
  for (uint8_t c : modulus_)
    if (c >= p) throw DegreeMismatchError("modulus coefficient out of range");

  if (!poly_irreducible(modulus_, p_))
    throw NotIrreducibleError("modulus is not irreducible over F_p");

  // z^m reduced by the monic modulus
  zn_red_.assign(m_, 0);
  for (int i = 0; i < m_; ++i) zn_red_[i] = uint8_t((p_ - modulus_[i]) % p_);

  fp_ = FqArith::for_prime(p_);

  // primitivity: z must have order p^m - 1
  const uint64_t go = order_ - 1;
  for (uint64_t r : prime_factors(go)) {
    FFElem t = z_power(go / r);
    if (t == one()) throw NotPrimitiveError("z is not a primitive element (order divides " +
                                            std::to_string(go / r) + ")");
  }

  build_coord_matrices();
  build_fq_tables();
}

FieldTower FieldTower::from_conway(int p, int e, int n, const ConwayTable& table) {
  const auto* f = table.find(p, e * n);
  if (!f)
    throw Error("no conway polynomial for p=" + std::to_string(p) +
                " degree=" + std::to_string(e * n) + " in table");
  return FieldTower(p, e, n, *f);
}

FFElem FieldTower::make(std::vector<uint8_t> c) const {
  c.resize(m_, 0);
  return FFElem{this, std::move(c)};
}

FFElem FieldTower::zero() const { return make({}); }
FFElem FieldTower::one() const { return make({1}); }
FFElem FieldTower::z() const { return m_ == 1 ? make({zn_red_[0]}) : make({0, 1}); }

FFElem FieldTower::from_coeffs(std::vector<uint8_t> coeffs) const {
  if (int(coeffs.size()) > m_) throw DegreeMismatchError("coefficient vector too long");
  for (uint8_t c : coeffs)
    if (c >= p_) throw DegreeMismatchError("coefficient out of range");
  return make(std::move(coeffs));
}

FFElem FieldTower::z_power(uint64_t j) const { return pow(z(), j); }

FFElem FieldTower::add(const FFElem& a, const FFElem& b) const {
  require_same(a);
  require_same(b);
  std::vector<uint8_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = uint8_t((a.coeffs[i] + b.coeffs[i]) % p_);
  return FFElem{this, std::move(c)};
}

FFElem FieldTower::sub(const FFElem& a, const FFElem& b) const {
  require_same(a);
  require_same(b);
  std::vector<uint8_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = uint8_t((a.coeffs[i] + p_ - b.coeffs[i]) % p_);
  return FFElem{this, std::move(c)};
}

FFElem FieldTower::neg(const FFElem& a) const {
  require_same(a);
  std::vector<uint8_t> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = uint8_t((p_ - a.coeffs[i]) % p_);
  return FFElem{this, std::move(c)};
}

std::vector<uint8_t> FieldTower::raw_mul(const std::vector<uint8_t>& a,
                                         const std::vector<uint8_t>& b) const {
  std::vector<uint32_t> acc(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m_; ++j) acc[i + j] += uint32_t(a[i]) * b[j];
  }
  // fold degrees >= m down using z^m = zn_red_
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    const uint32_t c = acc[i] % p_;
    if (!c) continue;
    for (int j = 0; j < m_; ++j) acc[i - m_ + j] += c * zn_red_[j];
  }
  std::vector<uint8_t> r(m_);
  for (int i = 0; i < m_; ++i) r[i] = uint8_t(acc[i] % p_);
  return r;
}

FFElem FieldTower::mul(const FFElem& a, const FFElem& b) const {
  require_same(a);
  require_same(b);
  return FFElem{this, raw_mul(a.coeffs, b.coeffs)};
}

FFElem FieldTower::pow(const FFElem& a, uint64_t k) const {
  require_same(a);
  FFElem r = one();
  FFElem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FFElem FieldTower::inv(const FFElem& a) const {
  require_same(a);
  if (a.is_zero()) throw DivisionByZeroError("inverse of zero");
  return pow(a, order_ - 2);
}

int FieldTower::degree_over(const FFElem& a, int s) const {
  require_same(a);
  if (s < 1 || n_ % s != 0)
    throw InvalidSubfieldError("s = " + std::to_string(s) + " does not divide n = " +
                               std::to_string(n_));
  uint64_t qs = 1;
  for (int i = 0; i < s * e_; ++i) qs *= uint64_t(p_);
  FFElem b = a;
  for (int d = 1; d <= n_ / s; ++d) {
    b = pow(b, qs);
    if (b == a) {
      assert((n_ / s) % d == 0);
      return d;
    }
  }
  throw Error("degree_over failed to converge");  // unreachable for field elements
}

FFElem FieldTower::subfield_generator(int s) const {
  if (s < 1 || n_ % s != 0)
    throw InvalidSubfieldError("s = " + std::to_string(s) + " does not divide n = " +
                               std::to_string(n_));
  uint64_t qs = 1;
  for (int i = 0; i < s * e_; ++i) qs *= uint64_t(p_);
  return z_power((order_ - 1) / (qs - 1));
}

void FieldTower::build_coord_matrices() {
  if (e_ == 1) return;  // coefficients are F_q coordinates already
  // w generates F_q over F_p
  const FFElem w = z_power((order_ - 1) / uint64_t(q_ - 1));
  // columns: z^i w^j in standard coefficients, column index i*e + j
  FqMatrix B(m_, m_);
  FFElem zi = one();
  for (int i = 0; i < n_; ++i) {
    FFElem cur = zi;
    for (int j = 0; j < e_; ++j) {
      for (int r = 0; r < m_; ++r) B.at(r, i * e_ + j) = cur.coeffs[r];
      cur = mul(cur, w);
    }
    zi = mul(zi, z());
  }
  // invert by eliminating [B | I]
  FqMatrix aug(m_, 2 * m_);
  for (int r = 0; r < m_; ++r) {
    for (int c = 0; c < m_; ++c) aug.at(r, c) = B.at(r, c);
    aug.at(r, m_ + r) = 1;
  }
  RrefResult rr = rref(aug, fp_);
  if (rr.rank != m_) throw Error("tower basis is not invertible");  // cannot happen
  FqMatrix Binv(m_, m_);
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c) Binv.at(r, c) = rr.mat.at(r, m_ + c);
  basis_to_std_ = std::move(B);
  std_to_basis_ = std::move(Binv);
}

void FieldTower::build_fq_tables() {
  if (e_ == 1) {
    fq_ = fp_;
    fq_embed_.resize(q_);
    for (int d = 0; d < q_; ++d) fq_embed_[d] = make({uint8_t(d)});
    return;
  }
  const FFElem w = z_power((order_ - 1) / uint64_t(q_ - 1));
  fq_embed_.resize(q_);
  for (int d = 0; d < q_; ++d) {
    FFElem acc = zero();
    FFElem wp = one();
    int digits = d;
    for (int j = 0; j < e_; ++j) {
      const int dj = digits % p_;
      digits /= p_;
      if (dj) {
        FFElem t = wp;
        for (int c = 1; c < dj; ++c) t = add(t, wp);
        acc = add(acc, t);
      }
      wp = mul(wp, w);
    }
    fq_embed_[d] = acc;
  }
  // recover the digit of a subfield element from its tower coordinates
  auto digit_of = [&](const FFElem& a) -> int {
    std::vector<uint8_t> v = to_fq_coords(a);
    for (int i = 1; i < n_; ++i) assert(v[i] == 0);
    return v[0];
  };
  fq_.q = q_;
  fq_.add_tab.resize(q_ * q_);
  fq_.mul_tab.resize(q_ * q_);
  fq_.neg_tab.resize(q_);
  fq_.inv_tab.resize(q_);
  fq_.inv_tab[0] = 0;
  for (int a = 0; a < q_; ++a) {
    fq_.neg_tab[a] = uint8_t(digit_of(neg(fq_embed_[a])));
    for (int b = 0; b < q_; ++b) {
      fq_.add_tab[a * q_ + b] = uint8_t(digit_of(add(fq_embed_[a], fq_embed_[b])));
      fq_.mul_tab[a * q_ + b] = uint8_t(digit_of(mul(fq_embed_[a], fq_embed_[b])));
    }
    if (a) fq_.inv_tab[a] = uint8_t(digit_of(inv(fq_embed_[a])));
  }
}

std::vector<uint8_t> FieldTower::to_fq_coords(const FFElem& a) const {
  require_same(a);
  if (e_ == 1) return a.coeffs;
  std::vector<uint8_t> v(m_, 0);
  for (int r = 0; r < m_; ++r) {
    uint32_t acc = 0;
    for (int c = 0; c < m_; ++c) acc += uint32_t(std_to_basis_.at(r, c)) * a.coeffs[c];
    v[r] = uint8_t(acc % p_);
  }
  std::vector<uint8_t> digits(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int d = 0;
    int mult = 1;
    for (int j = 0; j < e_; ++j) {
      d += v[i * e_ + j] * mult;
      mult *= p_;
    }
    digits[i] = uint8_t(d);
  }
  return digits;
}

FFElem FieldTower::from_fq_coords(const std::vector<uint8_t>& coords) const {
  if (int(coords.size()) != n_) throw AmbientMismatchError("coordinate vector must have length n");
  if (e_ == 1) {
    for (uint8_t c : coords)
      if (c >= q_) throw DegreeMismatchError("coordinate out of range");
    return make(coords);
  }
  std::vector<uint8_t> v(m_, 0);
  for (int i = 0; i < n_; ++i) {
    int d = coords[i];
    if (d >= q_) throw DegreeMismatchError("coordinate out of range");
    for (int j = 0; j < e_; ++j) {
      v[i * e_ + j] = uint8_t(d % p_);
      d /= p_;
    }
  }
  std::vector<uint8_t> c(m_, 0);
  for (int r = 0; r < m_; ++r) {
    uint32_t acc = 0;
    for (int k = 0; k < m_; ++k) acc += uint32_t(basis_to_std_.at(r, k)) * v[k];
    c[r] = uint8_t(acc % p_);
  }
  return make(std::move(c));
}

FFElem FieldTower::fq_elem(uint8_t digit) const {
  if (digit >= q_) throw DegreeMismatchError("F_q digit out of range");
  return fq_embed_[digit];
}

uint8_t FieldTower::trace_to_fq(const FFElem& a) const {
  require_same(a);
  FFElem acc = a;
  FFElem frob = a;
  for (int i = 1; i < n_; ++i) {
    frob = pow(frob, uint64_t(q_));
    acc = add(acc, frob);
  }
  std::vector<uint8_t> digits = to_fq_coords(acc);
  for (int i = 1; i < n_; ++i) assert(digits[i] == 0);
  return digits[0];
}

uint64_t FieldTower::order_of(const FFElem& a) const {
  require_same(a);
  if (a.is_zero()) throw DivisionByZeroError("order of zero");
  uint64_t ord = order_ - 1;
  for (uint64_t r : prime_factors(order_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
  }
  return ord;
}

std::string FieldTower::describe_modulus() const {
  std::string s;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(int(modulus_[i]));
  }
  return s;
}

}  // namespace orbitdist
