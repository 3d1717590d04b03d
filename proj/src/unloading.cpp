#include "nagata/unloading.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nagata {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long tail_sum_of(const MultVector& w) {
  return std::accumulate(w.begin() + 1, w.end(), 0LL);
}

std::string render_full(const MultVector& w) {
  std::ostringstream os;
  os << "(" << w[0] << ";";
  for (size_t k = 1; k < w.size(); ++k) os << (k > 1 ? "," : "") << w[k];
  os << ")";
  return os.str();
}

std::string render_block(const BlockVector& b) {
  std::ostringstream os;
  os << "(" << b.a << ";" << b.b << "^" << b.c;
  long long rest = b.n - 1 - b.c;
  if (rest > 0) os << "," << (b.b - 1) << "^" << rest;
  os << ")";
  return os.str();
}

std::string render_vec(const MultVector& w) {
  if (auto b = to_block(w)) return render_block(*b);
  return render_full(w);
}

void check_index(const MultVector& w, int i) {
  if (i < 2 || static_cast<size_t>(i) > w.size() - 1)
    throw std::invalid_argument("routine index must satisfy 2 <= i <= n-1");
}

MultVector q_step_impl(MultVector w, int i, bool* clipped) {
  check_index(w, i);
  if (dot_vi(w, i) >= 0) return w;
  w[0] += 1;
  for (int k = 1; k <= i; ++k) w[k] -= 1;
  for (auto& e : w) {
    if (e < 0) {
      e = 0;
      if (clipped) *clipped = true;
    }
  }
  return w;
}

RoutineResult run_routine_impl(MultVector w, int i, UnloadTrace* trace,
                               NaiveDiagnostics* diag) {
  auto note = [&](const MultVector& v, long long j) {
    if (diag && !to_block(sort_tail(v))) diag->block_form_held = false;
    if (trace) {
      MultVector s = sort_tail(v);
      trace->lines.push_back({i, j, s[0], tail_sum_of(s), render_vec(s)});
    }
  };
  note(w, 0);
  long long steps = 0;
  for (;;) {
    MultVector sorted = sort_tail(w);
    bool clipped = false;
    MultVector next = sort_tail(q_step_impl(sorted, i, &clipped));
    if (diag && clipped) diag->rectify_clipped = true;
    if (next == sorted) return {next, steps};
    ++steps;
    note(next, steps);
    w = std::move(next);
  }
}

}  // namespace

MultVector sort_tail(MultVector w) {
  if (w.size() > 1)
    std::sort(w.begin() + 1, w.end(), std::greater<long long>());
  return w;
}

MultVector rectify(MultVector w) {
  for (auto& e : w)
    if (e < 0) e = 0;
  return w;
}

long long dot_vi(const MultVector& w, int i) {
  check_index(w, i);
  long long s = 0;
  for (int k = 1; k <= i; ++k) s += w[k];
  return w[0] - s;
}

MultVector q_step(MultVector w, int i) {
  return q_step_impl(std::move(w), i, nullptr);
}

MultVector g_step(const MultVector& w, int i) {
  return sort_tail(q_step(sort_tail(w), i));
}

MultVector BlockVector::expand() const {
  MultVector w;
  w.reserve(n);
  w.push_back(a);
  for (long long k = 0; k < c; ++k) w.push_back(b);
  for (long long k = 0; k < n - 1 - c; ++k) w.push_back(b - 1);
  return w;
}

long long BlockVector::tail_sum() const { return (n - 1) * (b - 1) + c; }

std::optional<BlockVector> to_block(const MultVector& w) {
  long long n = static_cast<long long>(w.size());
  if (n < 2) return std::nullopt;
  long long hi = w[1];
  long long lo = w[n - 1];
  for (size_t k = 2; k + 1 < w.size(); ++k)
    if (w[k] > w[k - 1]) return std::nullopt;  // tail must be sorted
  if (hi == lo) return BlockVector{w[0], hi, n - 1, n};
  if (hi - lo != 1) return std::nullopt;
  long long c = 0;
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k] == hi) ++c;
  return BlockVector{w[0], hi, c, n};
}

std::string UnloadTrace::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines)
    os << "i=" << l.routine << " j=" << l.step << " R=" << l.first
       << " S=" << l.tail_sum << " w=" << l.vec << "\n";
  return os.str();
}

RoutineResult run_routine(MultVector w, int i, UnloadTrace* trace) {
  return run_routine_impl(std::move(w), i, trace, nullptr);
}

NaiveResult roe_R_naive(long long m, long long n, bool want_trace) {
  if (m < 1 || n < 3)
    throw std::domain_error("roe_R_naive: requires m >= 1 and n >= 3");
  NaiveResult res;
  res.diag = {};
  if (want_trace) res.trace.emplace();
  MultVector w(n, m);
  for (int i = 2; i <= n - 1; ++i) {
    auto rr = run_routine_impl(std::move(w), i,
                               want_trace ? &*res.trace : nullptr, &res.diag);
    w = std::move(rr.fixpoint);
  }
  res.R = w[0];
  res.final = std::move(w);
  return res;
}

long long solve_t(int i, long long R_prev, long long S_prev, long long n) {
  long long k = n - 1;
  for (long long j = 0;; ++j) {
    long long x = S_prev - j * i;
    long long q = floor_div(x, k);
    long long rho = x - q * k;
    long long top = i * q + std::min(rho, static_cast<long long>(i));
    if (top <= R_prev + j) return j;
  }
}

BlockResult roe_R_block(long long m, long long n, bool want_trace) {
  if (m < 1 || n < 3)
    throw std::domain_error("roe_R_block: requires m >= 1 and n >= 3");
  BlockResult res;
  if (want_trace) res.trace.emplace();
  long long k = n - 1;
  long long R = m;
  long long S = k * m;
  res.states.push_back({1, R, S, S % k});
  auto note = [&](int i, long long j, long long Rj, long long Sj) {
    if (!res.trace) return;
    long long q = floor_div(Sj, k);
    long long rho = Sj - q * k;
    BlockVector b = rho == 0 ? BlockVector{Rj, q, k, n}
                             : BlockVector{Rj, q + 1, rho, n};
    res.trace->lines.push_back({i, j, Rj, Sj, render_block(b)});
  };
  for (int i = 2; i <= n - 1; ++i) {
    long long t = solve_t(i, R, S, n);
    note(i, 0, R, S);
    for (long long j = 1; j <= t; ++j) note(i, j, R + j, S - j * i);
    R += t;
    S -= t * i;
    res.states.push_back({i, R, S, S % k});
  }
  res.R = R;
  return res;
}

}  // namespace nagata
