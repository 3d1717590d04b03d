#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nagata {

/// Multiplicity vector (m_1, ..., m_n); entry 0 is the distinguished first entry.
using MultVector = std::vector<long long>;

/// Sort entries after the first into nonincreasing order.
MultVector sort_tail(MultVector w);

/// Replace every negative entry by 0.
MultVector rectify(MultVector w);

/// w . v_i where v_i = (1, -1 x i, 0, ...).
long long dot_vi(const MultVector& w, int i);

/// w if w.v_i >= 0, else rectify(w + v_i).
MultVector q_step(MultVector w, int i);

/// sort_tail(q_step(sort_tail(w), i)).
MultVector g_step(const MultVector& w, int i);

/// v(a,b,c,n) = (a; b x c, (b-1) x (n-1-c)), 1 <= c <= n-1.
struct BlockVector {
  long long a;
  long long b;
  long long c;
  long long n;
  MultVector expand() const;
  long long tail_sum() const;  // (n-1)(b-1) + c
};

/// Block form of a sorted-tail vector, when the tail takes at most two
/// values differing by 1.
std::optional<BlockVector> to_block(const MultVector& w);

struct TraceLine {
  int routine;
  long long step;
  long long first;
  long long tail_sum;
  std::string vec;  // "(a;b^c,(b-1)^k)" or a full "(a;m2,...)" fallback
};

struct UnloadTrace {
  std::vector<TraceLine> lines;
  /// One line per step: "i=<routine> j=<step> R=<first> S=<tailsum> w=<vec>".
  std::string to_text() const;
};

struct RoutineResult {
  MultVector fixpoint;
  long long steps;  // g_step applications that changed the vector
};

/// Iterate g_step at fixed i until stable.
RoutineResult run_routine(MultVector w, int i, UnloadTrace* trace = nullptr);

struct NaiveDiagnostics {
  bool rectify_clipped = false;  // rectification ever changed an entry
  bool block_form_held = true;   // every intermediate had a block form
};

struct NaiveResult {
  long long R;
  MultVector final;
  std::optional<UnloadTrace> trace;
  NaiveDiagnostics diag;
};

/// Roe's algorithm, literal vector-rewriting engine: start from (m,...,m),
/// apply routines O_2 .. O_{n-1}; R is the first entry of the result.
NaiveResult roe_R_naive(long long m, long long n, bool want_trace = false);

struct RoeState {
  int i;
  long long R;
  long long S;
  long long rho;  // S mod (n-1)
};

/// Least j >= 0 with i*floor((S-ji)/(n-1)) + min(rho_j, i) <= R + j,
/// rho_j the remainder of S - ji mod (n-1).
long long solve_t(int i, long long R_prev, long long S_prev, long long n);

struct BlockResult {
  long long R;
  std::vector<RoeState> states;  // states for i = 1 .. n-1
  std::optional<UnloadTrace> trace;
};

/// Block-form engine for R(m,n) via the R_i/S_i recurrences.
BlockResult roe_R_block(long long m, long long n, bool want_trace = false);

}  // namespace nagata
