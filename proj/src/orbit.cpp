#include "orbitdist/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstring>
#include <thread>
#include <unordered_set>

namespace orbitdist {

namespace {

// ---------------------------------------------------------------------
// sweep engines: hold U's canonical basis, a current shifted basis
// z^j * {u_1..u_k}, and answer dim(U ∩ z^j U); advance() multiplies the
// current basis by z. Coordinates equal prime-field coefficients on the
// packed paths (e == 1), so the shifted elements are the matrix rows.
// ---------------------------------------------------------------------

class EngineGF2 {
 public:
  EngineGF2(const Subspace& u, uint64_t start_exp) : k_(u.k()), n_(u.tower().n()) {
    const FieldTower& T = u.tower();
    modmask_ = 0;
    for (int i = 0; i <= n_; ++i)
      if (T.modulus()[i]) modmask_ |= uint64_t(1) << i;
    uref_.resize(k_);
    pivot_.resize(k_);
    for (int r = 0; r < k_; ++r) {
      uint64_t row = 0;
      for (int c = 0; c < n_; ++c)
        if (u.basis().at(r, c)) row |= uint64_t(1) << c;
      uref_[r] = row;
      pivot_[r] = row & (~row + 1);  // lowest set bit
    }
    cur_.resize(k_);
    const FFElem zj = T.z_power(start_exp);
    std::vector<FFElem> be = u.basis_elements();
    for (int i = 0; i < k_; ++i) {
      const FFElem x = T.mul(zj, be[i]);
      uint64_t row = 0;
      for (int c = 0; c < n_; ++c)
        if (x.coeffs[c]) row |= uint64_t(1) << c;
      cur_[i] = row;
    }
    work_.resize(k_);
  }

  int current_intersection_dim() {
    for (int i = 0; i < k_; ++i) {
      uint64_t v = cur_[i];
      for (int r = 0; r < k_; ++r)
        if (v & pivot_[r]) v ^= uref_[r];
      work_[i] = v;
    }
    return k_ - gf2kernel::rank_destructive(work_.data(), k_);
  }

  void advance() {
    const uint64_t top = uint64_t(1) << n_;
    for (int i = 0; i < k_; ++i) {
      uint64_t v = cur_[i] << 1;
      if (v & top) v ^= modmask_;
      cur_[i] = v;
    }
  }

 private:
  int k_, n_;
  uint64_t modmask_;
  std::vector<uint64_t> uref_, pivot_, cur_, work_;
};

class EngineGF3 {
 public:
  EngineGF3(const Subspace& u, uint64_t start_exp) : k_(u.k()), n_(u.tower().n()) {
    const FieldTower& T = u.tower();
    red_[0] = pack_coeffs(T, std::vector<uint8_t>(T.modulus().begin(),
                                                  T.modulus().begin() + n_), true);
    red_[1] = gf3kernel::add(red_[0], red_[0]);  // 2 * (z^n reduced)... see below
    // pack_coeffs(.., true) negates: z^n = -(low part of modulus)
    uref_.resize(k_);
    upivcol_.resize(k_);
    upivdig_.resize(k_);
    for (int r = 0; r < k_; ++r) {
      std::vector<uint8_t> row = u.basis().row_vec(r);
      uref_[r] = pack_coeffs(T, row, false);
      int c = 0;
      while (row[c] == 0) ++c;
      upivcol_[r] = c;
      upivdig_[r] = row[c];
    }
    cur_.resize(k_);
    const FFElem zj = T.z_power(start_exp);
    std::vector<FFElem> be = u.basis_elements();
    for (int i = 0; i < k_; ++i)
      cur_[i] = pack_coeffs(T, T.mul(zj, be[i]).coeffs, false);
    work_.resize(k_);
  }

  int current_intersection_dim() {
    for (int i = 0; i < k_; ++i) {
      gf3kernel::Row v = cur_[i];
      for (int r = 0; r < k_; ++r) {
        const int d = gf3kernel::digit(v, upivcol_[r]);
        if (!d) continue;
        v = (d == upivdig_[r]) ? gf3kernel::sub(v, uref_[r])
                               : gf3kernel::add(v, uref_[r]);
      }
      work_[i] = v;
    }
    return k_ - gf3kernel::rank_destructive(work_.data(), k_);
  }

  void advance() {
    const uint64_t top = uint64_t(1) << n_;
    const uint64_t keep = top - 1;
    for (int i = 0; i < k_; ++i) {
      gf3kernel::Row v{cur_[i].lo << 1, cur_[i].hi << 1};
      const int d = int((v.lo & top) ? 1 : 0) + int((v.hi & top) ? 2 : 0);
      v.lo &= keep;
      v.hi &= keep;
      if (d) v = gf3kernel::add(v, red_[d - 1]);
      cur_[i] = v;
    }
  }

 private:
  static gf3kernel::Row pack_coeffs(const FieldTower& T, const std::vector<uint8_t>& c,
                                    bool negate) {
    gf3kernel::Row r;
    for (size_t i = 0; i < c.size(); ++i) {
      uint8_t d = c[i];
      if (negate) d = uint8_t((3 - d) % 3);
      if (d == 1) r.lo |= uint64_t(1) << i;
      if (d == 2) r.hi |= uint64_t(1) << i;
    }
    (void)T;
    return r;
  }

  int k_, n_;
  gf3kernel::Row red_[2];  // z^n and 2*z^n, reduced
  std::vector<gf3kernel::Row> uref_, cur_, work_;
  std::vector<int> upivcol_, upivdig_;
};

// fallback for composite q or large p: scalar rows with F_q tables
class EngineGeneric {
 public:
  EngineGeneric(const Subspace& u, uint64_t start_exp)
      : T_(u.tower()), k_(u.k()), n_(T_.n()), m_(T_.ext_degree()) {
    uref_ = u.basis();
    upiv_ = rref(uref_, T_.fq()).pivots;
    const FFElem zj = T_.z_power(start_exp);
    std::vector<FFElem> be = u.basis_elements();
    cur_.resize(k_);
    for (int i = 0; i < k_; ++i) cur_[i] = T_.mul(zj, be[i]).coeffs;
    work_.assign(size_t(k_) * n_, 0);
    modneg_.resize(m_);
    for (int i = 0; i < m_; ++i) modneg_[i] = uint8_t((T_.p() - T_.modulus()[i]) % T_.p());
  }

  int current_intersection_dim() {
    const FqArith& F = T_.fq();
    for (int i = 0; i < k_; ++i) {
      FFElem x{&T_, cur_[i]};
      std::vector<uint8_t> row = T_.to_fq_coords(x);
      // clear U's pivot columns
      for (int r = 0; r < k_; ++r) {
        const uint8_t d = row[upiv_[r]];
        if (!d) continue;
        for (int c = upiv_[r]; c < n_; ++c)
          row[c] = F.sub(row[c], F.mul(d, uref_.at(r, c)));
      }
      std::memcpy(&work_[size_t(i) * n_], row.data(), n_);
    }
    // rank of the residual rows
    int rank = 0;
    for (int c = 0; c < n_ && rank < k_; ++c) {
      int piv = -1;
      for (int i = rank; i < k_; ++i)
        if (work_[size_t(i) * n_ + c]) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != rank)
        for (int j = c; j < n_; ++j)
          std::swap(work_[size_t(rank) * n_ + j], work_[size_t(piv) * n_ + j]);
      const FqArith& F2 = T_.fq();
      const uint8_t inv = F2.inv(work_[size_t(rank) * n_ + c]);
      for (int i = rank + 1; i < k_; ++i) {
        const uint8_t d = work_[size_t(i) * n_ + c];
        if (!d) continue;
        const uint8_t f = F2.mul(d, inv);
        for (int j = c; j < n_; ++j)
          work_[size_t(i) * n_ + j] =
              F2.sub(work_[size_t(i) * n_ + j], F2.mul(f, work_[size_t(rank) * n_ + j]));
      }
      ++rank;
    }
    return k_ - rank;
  }

  void advance() {
    const int p = T_.p();
    for (int i = 0; i < k_; ++i) {
      auto& c = cur_[i];
      const uint8_t topc = c[m_ - 1];
      for (int j = m_ - 1; j > 0; --j) c[j] = c[j - 1];
      c[0] = 0;
      if (topc)
        for (int j = 0; j < m_; ++j) c[j] = uint8_t((c[j] + topc * modneg_[j]) % p);
    }
  }

 private:
  const FieldTower& T_;
  int k_, n_, m_;
  FqMatrix uref_;
  std::vector<int> upiv_;
  std::vector<std::vector<uint8_t>> cur_;
  std::vector<uint8_t> work_;
  std::vector<uint8_t> modneg_;
};

template <class Engine>
void sweep_range(const Subspace& u, uint64_t begin, uint64_t end,
                 std::vector<uint64_t>& hist, std::atomic<uint64_t>* done,
                 const std::function<void(uint64_t, uint64_t)>* progress,
                 uint64_t total) {
  Engine eng(u, begin);
  const uint64_t tick = 1 << 16;
  uint64_t since = 0;
  for (uint64_t j = begin; j < end; ++j) {
    ++hist[size_t(eng.current_intersection_dim())];
    eng.advance();
    if (done && ++since == tick) {
      *done += tick;
      since = 0;
      if (progress) (*progress)(done->load(), total);
    }
  }
  if (done) *done += since;
}

enum class EngineKind { GF2, GF3, Generic };

EngineKind pick_engine(const FieldTower& T) {
  if (T.e() == 1 && T.p() == 2 && T.n() < 64) return EngineKind::GF2;
  if (T.e() == 1 && T.p() == 3 && T.n() < 64) return EngineKind::GF3;
  return EngineKind::Generic;
}

void run_sweep(const Subspace& u, uint64_t begin, uint64_t end,
               std::vector<uint64_t>& hist, std::atomic<uint64_t>* done,
               const std::function<void(uint64_t, uint64_t)>* progress, uint64_t total) {
  switch (pick_engine(u.tower())) {
    case EngineKind::GF2:
      sweep_range<EngineGF2>(u, begin, end, hist, done, progress, total);
      break;
    case EngineKind::GF3:
      sweep_range<EngineGF3>(u, begin, end, hist, done, progress, total);
      break;
    case EngineKind::Generic:
      sweep_range<EngineGeneric>(u, begin, end, hist, done, progress, total);
      break;
  }
}

}  // namespace

IntersectionDistribution intersection_distribution(const Subspace& u,
                                                   const SweepOptions& opts) {
  const int k = u.k();
  if (k < 1) throw Error("intersection distribution requires dim >= 1");
  const StabilizerResult st = u.stabilizer();
  const uint64_t N = st.orbit_size;
  if (N > opts.budget) throw BudgetExceededError(N, opts.budget);

  IntersectionDistribution out;
  out.k = k;
  out.t = st.t;
  out.orbit_size = N;
  out.lambda.assign(k, 0);
  if (N <= 1) return out;

  const uint64_t steps = N - 1;
  int threads = std::max(1, opts.threads);
  if (steps < (uint64_t(1) << 14)) threads = 1;
  threads = int(std::min<uint64_t>(threads, steps));

  // histogram has a k-th bin to catch dim == k, which would mean a coset
  // representative stabilized U; the orbit-stabilizer argument rules it out
  std::vector<std::vector<uint64_t>> hists(threads, std::vector<uint64_t>(k + 1, 0));
  std::atomic<uint64_t> done{0};
  const auto* prog = opts.progress ? &opts.progress : nullptr;

  if (threads == 1) {
    run_sweep(u, 1, N, hists[0], prog ? &done : nullptr, prog, steps);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = steps / threads;
    for (int w = 0; w < threads; ++w) {
      const uint64_t b = 1 + uint64_t(w) * chunk;
      const uint64_t e = (w == threads - 1) ? N : b + chunk;
      pool.emplace_back([&, w, b, e] {
        run_sweep(u, b, e, hists[w], prog && w == 0 ? &done : nullptr, prog, steps);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& h : hists) {
    assert(h[k] == 0);
    for (int i = 0; i < k; ++i) out.lambda[i] += h[i];
  }
  for (int i = k - 1; i >= 0; --i)
    if (out.lambda[i]) { out.max_dim = i; break; }
  assert(out.sum() == N - 1);
  return out;
}

DistanceDistribution distance_distribution(const IntersectionDistribution& d) {
  DistanceDistribution dd;
  dd.k = d.k;
  dd.delta[0] = 1;
  for (int i = 0; i < d.k; ++i) dd.delta[2 * d.k - 2 * i] = d.lambda[i];
  if (d.max_dim) dd.min_distance = 2 * d.k - 2 * *d.max_dim;
  return dd;
}

std::map<int, uint64_t> pair_counts(const IntersectionDistribution& d) {
  DistanceDistribution dd = distance_distribution(d);
  std::map<int, uint64_t> pc;
  for (const auto& [dist, cnt] : dd.delta) {
    const unsigned __int128 prod = (unsigned __int128)cnt * d.orbit_size;
    if (prod > (unsigned __int128)UINT64_MAX)
      throw OverflowError("pair count exceeds 64 bits");
    pc[dist] = uint64_t(prod);
  }
  return pc;
}

SClass s_class(const FFElem& alpha, const Subspace& u) {
  const FieldTower& T = u.tower();
  T.require_same(alpha);
  if (T.degree_over(alpha, 1) == 1)
    throw AlphaInBaseFieldError("alpha must lie outside F_q");
  if (u.stabilizer().t != 1)
    throw NotFullLengthError("S-classes require a full-length orbit");

  SClass cls;
  cls.representative = alpha;
  std::unordered_set<Subspace, SubspaceHash> seen;
  auto add_U_gamma = [&](const FFElem& gamma) {
    for (int s = 0; s < T.q(); ++s) {
      const FFElem g = T.add(gamma, T.fq_elem(uint8_t(s)));
      Subspace v = u.shifted(g);
      if (seen.insert(v).second) cls.members.push_back(std::move(v));
    }
  };
  add_U_gamma(alpha);
  for (int lam = 0; lam < T.q(); ++lam) {
    const FFElem al = T.add(alpha, T.fq_elem(uint8_t(lam)));
    add_U_gamma(T.inv(al));
  }
  return cls;
}

std::vector<SClass> s_partition(const Subspace& u, int i, const SweepOptions& opts) {
  const FieldTower& T = u.tower();
  const int k = u.k();
  if (i < 0 || i >= k) throw Error("intersection dimension index out of range");
  const StabilizerResult st = u.stabilizer();
  if (st.t != 1) throw NotFullLengthError("S-classes require a full-length orbit");
  if (st.orbit_size > opts.budget) throw BudgetExceededError(st.orbit_size, opts.budget);

  // collect the exponents j with dim(U ∩ z^j U) = i
  std::vector<uint64_t> exps;
  {
    const FqArith& F = T.fq();
    std::vector<FFElem> be = u.basis_elements();
    std::vector<FFElem> cur;
    for (const auto& b : be) cur.push_back(T.mul(T.z(), b));
    for (uint64_t j = 1; j < st.orbit_size; ++j) {
      FqMatrix rows(0, T.n());
      for (const auto& c : cur) rows.append_row(T.to_fq_coords(c));
      if (intersection_dim(u.basis(), rows, F) == i) exps.push_back(j);
      for (auto& c : cur) c = T.mul(T.z(), c);
    }
  }

  std::unordered_set<Subspace, SubspaceHash> covered;
  std::vector<SClass> classes;
  for (uint64_t j : exps) {
    const FFElem alpha = T.z_power(j);
    Subspace v = u.shifted(alpha);
    if (covered.count(v)) continue;
    SClass cls = s_class(alpha, u);
    for (const Subspace& w : cls.members) {
      const bool fresh = covered.insert(w).second;
      assert(fresh);  // classes are identical or disjoint
      (void)fresh;
    }
    classes.push_back(std::move(cls));
  }
  // the classes exactly cover O_i
  uint64_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  assert(total == exps.size());
  (void)total;
  return classes;
}

SubfieldShiftCount count_subfield_line_shifts(const Subspace& u, int t) {
  const FieldTower& T = u.tower();
  if (t < 1 || T.n() % (2 * t) != 0)
    throw InvalidSubfieldError("2t = " + std::to_string(2 * t) + " must divide n = " +
                               std::to_string(T.n()));
  if (t > 1) {
    // U must be an F_{q^t}-space for the shift count to make sense
    if (!(u.shifted(T.subfield_generator(t)) == u))
      throw Error("subspace is not stabilized by F_{q^" + std::to_string(t) + "}");
  }
  const FFElem beta = T.subfield_generator(2 * t);
  const Subspace w = u.intersect(u.shifted(T.inv(beta)));
  const int dimw = w.k();
  assert(dimw % (2 * t) == 0);
  SubfieldShiftCount res;
  res.m = dimw / (2 * t);
  uint64_t q2t = 1;
  for (int i = 0; i < 2 * t * T.e(); ++i) q2t *= uint64_t(T.p());
  uint64_t q2tm = 1;
  for (int i = 0; i < res.m; ++i) q2tm *= q2t;
  res.count = (q2tm - 1) / (q2t - 1);
  return res;
}

Subspace trace_dual(const Subspace& u) {
  const FieldTower& T = u.tower();
  const int n = T.n();
  // Gram matrix of the trace form in the z-power basis
  std::vector<FFElem> zpow(2 * n - 1);
  zpow[0] = T.one();
  for (int i = 1; i < 2 * n - 1; ++i) zpow[i] = T.mul(zpow[i - 1], T.z());
  FqMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const uint8_t tr = T.trace_to_fq(zpow[i + j]);
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  const FqArith& F = T.fq();
  // y ⊥ U  iff  (B G) y^T = 0
  FqMatrix bg(u.k(), n);
  for (int r = 0; r < u.k(); ++r)
    for (int c = 0; c < n; ++c) {
      uint8_t acc = 0;
      for (int j = 0; j < n; ++j)
        acc = F.add(acc, F.mul(u.basis().at(r, j), gram.at(j, c)));
      bg.at(r, c) = acc;
    }
  Subspace dual = Subspace::from_coord_rows(T, kernel_basis(bg, F));
  assert(dual.k() == n - u.k());
  return dual;
}

bool is_sidon(const Subspace& u, const SweepOptions& opts) {
  if (u.k() < 1 || 2 * u.k() > u.tower().n())
    throw Error("Sidon test requires 1 <= dim <= n/2");
  const IntersectionDistribution d = intersection_distribution(u, opts);
  return d.t == 1 && (!d.max_dim || *d.max_dim <= 1);
}

}  // namespace orbitdist
