#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace trigroots_test {

// Exact packing on an integer circle of M units. Candidate starts are a
// uniform grid plus chains of whole lengths hanging off every window that
// ends at a point; counts come from binary search over the sorted points.
struct IntegerPacking {
  std::int64_t M;
  std::int64_t L;
  std::vector<std::int64_t> pts;  // sorted, in [0, M)

  int count(std::int64_t a, bool closed) const {
    // Points p with (p - a) mod M in (0, L] or [0, L].
    auto in_range = [&](std::int64_t lo, std::int64_t hi) {  // [lo, hi] within [0, M)
      if (lo > hi) return 0;
      return static_cast<int>(std::upper_bound(pts.begin(), pts.end(), hi) -
                              std::lower_bound(pts.begin(), pts.end(), lo));
    };
    std::int64_t lo = ((a % M) + M) % M + (closed ? 0 : 1);
    std::int64_t hi = lo + L - (closed ? 0 : 1);
    int c = 0;
    if (lo >= M) {
      lo -= M;
      hi -= M;
    }
    if (hi < M) {
      c = in_range(lo, hi);
    } else {
      c = in_range(lo, M - 1) + in_range(0, hi - M);
    }
    return c;
  }

  int solve(int T, bool closed, std::int64_t grid_step) const {
    std::vector<std::int64_t> cand;
    for (std::int64_t g = 0; g < M; g += grid_step) cand.push_back(g);
    const std::int64_t chain = M / L + 2;
    for (std::int64_t p : pts) {
      std::int64_t a = p - L;
      for (std::int64_t t = 0; t <= chain; ++t) {
        cand.push_back(((a % M) + M) % M);
        // Closed intervals just past a previous right end.
        cand.push_back((((a + 1) % M) + M) % M);
        a += L;
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::int64_t> q;
    for (std::int64_t a : cand)
      if (count(a, closed) >= T) q.push_back(a);
    if (q.empty()) return 0;
    const std::size_t K = q.size();
    std::vector<std::int64_t> pos(2 * K);
    for (std::size_t i = 0; i < K; ++i) {
      pos[i] = q[i];
      pos[i + K] = q[i] + M;
    }
    const std::int64_t gap = closed ? L + 1 : L;
    // nxt[i]: first qualifying start at least `gap` after pos[i].
    const int LOG = 20;
    std::vector<std::vector<std::int32_t>> up(LOG, std::vector<std::int32_t>(2 * K + 1, static_cast<std::int32_t>(2 * K)));
    for (std::size_t i = 0; i < 2 * K; ++i) {
      const auto it = std::lower_bound(pos.begin(), pos.end(), pos[i] + gap);
      up[0][i] = static_cast<std::int32_t>(it - pos.begin());
    }
    for (int k = 1; k < LOG; ++k)
      for (std::size_t i = 0; i <= 2 * K; ++i) up[k][i] = up[k - 1][up[k - 1][i]];
    int best = 0;
    for (std::size_t s = 0; s < K; ++s) {
      // Last start must leave room before the first start comes round again.
      const std::int64_t limit = pos[s] + M - gap;
      std::size_t cur = s;
      int cnt = 1;
      for (int k = LOG - 1; k >= 0; --k) {
        const std::size_t nx = up[k][cur];
        if (nx < 2 * K && pos[nx] <= limit) {
          cur = nx;
          cnt += 1 << k;
        }
      }
      best = std::max(best, cnt);
    }
    return best;
  }
};

// Residues that would put a chain end exactly on a point (or one unit away).
inline bool clean_length(std::int64_t L, std::int64_t unit, std::int64_t chains) {
  if (L % 2 == 0) return false;
  for (std::int64_t t = 1; t <= chains; ++t) {
    const std::int64_t r = (t * L) % unit;
    if (r == 0 || r == 1 || r == unit - 1) return false;
  }
  return true;
}

}  // namespace trigroots_test
