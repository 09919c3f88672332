#pragma once

// Boundary-to-boundary distances in the alignment grid of s against the
// reverse of t, computed by recursive block splitting. Within a block the
// distance matrix from the left/top boundary to the bottom/right boundary
// is Monge, so each merge is a batch of monotone-argmin searches.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tedhard/detail/num.hpp"

namespace tedhard::detail {

template <class T>
class ReverseTableBuilder {
  using N = Num<T>;

 public:
  /// pair_cost[(i - 1) * m + (j - 1)] is the cost of pairing s[i] with t[j].
  ReverseTableBuilder(std::size_t n, std::size_t m, const std::vector<T>& pair_cost)
      : n_(n), m_(m), pair_cost_(pair_cost) {}

  /// (n+1) x (m+1) row-major table R[i][j].
  std::vector<T> build() const {
    std::vector<T> out((n_ + 1) * (m_ + 1), N::zero());
    if (n_ == 0 || m_ == 0) return out;
    const Block whole{0, n_, 0, m_};
    const std::vector<T> d = solve(whole);
    const std::size_t len = whole.len();
    for (std::size_t i = 0; i <= n_; ++i) {
      for (std::size_t j = 0; j <= m_; ++j) {
        // source (0, m - j) on the top row, sink (i, m) on the right column
        out[i * (m_ + 1) + j] = d[(n_ + m_ - j) * len + (m_ + n_ - i)];
      }
    }
    return out;
  }

 private:
  struct Point {
    std::size_t r, c;
  };

  // Vertices [r0, r1] x [c0, c1]. Entry order runs up the left column and
  // then along the top row; exit order runs along the bottom row and then
  // up the right column.
  struct Block {
    std::size_t r0, r1, c0, c1;

    std::size_t h() const { return r1 - r0; }
    std::size_t w() const { return c1 - c0; }
    std::size_t len() const { return h() + w() + 1; }
    Point in(std::size_t t) const {
      return t <= h() ? Point{r1 - t, c0} : Point{r0, c0 + t - h()};
    }
    Point out(std::size_t t) const {
      return t <= w() ? Point{r1, c0 + t} : Point{r1 - (t - w()), c1};
    }
    std::size_t in_index(Point p) const {
      return p.c == c0 ? r1 - p.r : h() + (p.c - c0);
    }
    std::size_t out_index(Point p) const {
      return p.r == r1 ? p.c - c0 : w() + (r1 - p.r);
    }
  };

  // Diagonal edge (r - 1, c - 1) -> (r, c) pairs s[r] with t[m + 1 - c].
  const T& diag(std::size_t r, std::size_t c) const {
    return pair_cost_[(r - 1) * m_ + (m_ - c)];
  }

  std::vector<T> solve(const Block& b) const {
    if (b.h() + b.w() <= 12 || b.h() == 0 || b.w() == 0) return direct(b);
    return b.h() >= b.w() ? split_rows(b) : split_cols(b);
  }

  std::vector<T> direct(const Block& b) const {
    const std::size_t len = b.len();
    const std::size_t w1 = b.w() + 1;
    std::vector<T> res(len * len, N::inf());
    std::vector<T> dp((b.h() + 1) * w1);
    for (std::size_t pi = 0; pi < len; ++pi) {
      const Point p = b.in(pi);
      const std::size_t pr = p.r - b.r0;
      const std::size_t pc = p.c - b.c0;
      for (std::size_t r = pr; r <= b.h(); ++r) {
        for (std::size_t c = pc; c <= b.w(); ++c) {
          T v = (r == pr && c == pc) ? N::zero() : N::inf();
          if (r > pr && dp[(r - 1) * w1 + c] < v) v = dp[(r - 1) * w1 + c];
          if (c > pc && dp[r * w1 + c - 1] < v) v = dp[r * w1 + c - 1];
          if (r > pr && c > pc) {
            T cand = N::add(dp[(r - 1) * w1 + c - 1], diag(b.r0 + r, b.c0 + c));
            if (cand < v) v = std::move(cand);
          }
          dp[r * w1 + c] = std::move(v);
        }
      }
      for (std::size_t qi = 0; qi < len; ++qi) {
        const Point q = b.out(qi);
        if (q.r >= p.r && q.c >= p.c) res[pi * len + qi] = dp[(q.r - b.r0) * w1 + (q.c - b.c0)];
      }
    }
    return res;
  }

  // Leftmost-argmin search over rows q in [qa, qb] of a Monge matrix whose
  // finite entries in row q lie in window(q).
  template <class Window, class Value, class Emit>
  static void monotone_min(std::size_t qa, std::size_t qb, std::size_t ka, std::size_t kb,
                           const Window& window, const Value& value, const Emit& emit) {
    if (qa > qb) return;
    const std::size_t qm = qa + (qb - qa) / 2;
    auto [lo, hi] = window(qm);
    lo = std::max(lo, ka);
    hi = std::min(hi, kb);
    T best = N::inf();
    std::size_t arg = lo;
    for (std::size_t k = lo; k <= hi; ++k) {
      T v = value(qm, k);
      if (v < best) {
        best = std::move(v);
        arg = k;
      }
    }
    emit(qm, best);
    if (qm > qa) monotone_min(qa, qm - 1, ka, arg, window, value, emit);
    monotone_min(qm + 1, qb, arg, kb, window, value, emit);
  }

  std::vector<T> split_rows(const Block& b) const {
    const std::size_t rm = b.r0 + b.h() / 2;
    const Block top{b.r0, rm, b.c0, b.c1};
    const Block bot{rm, b.r1, b.c0, b.c1};
    const std::vector<T> dt = solve(top);
    const std::vector<T> du = solve(bot);
    const std::size_t len = b.len(), lt = top.len(), lu = bot.len();
    std::vector<T> res(len * len, N::inf());
    // Exits strictly below the middle row, in exit order.
    const std::size_t q_last = b.w() + (b.r1 - rm - 1);
    for (std::size_t pi = 0; pi < len; ++pi) {
      const Point p = b.in(pi);
      T* row = &res[pi * len];
      if (p.r >= rm) {
        const std::size_t ui = bot.in_index(p);
        for (std::size_t qi = 0; qi < len; ++qi) {
          const Point q = b.out(qi);
          if (q.r >= rm) row[qi] = du[ui * lu + bot.out_index(q)];
        }
        continue;
      }
      const std::size_t ti = top.in_index(p);
      for (std::size_t qi = q_last + 1; qi < len; ++qi) {
        row[qi] = dt[ti * lt + top.out_index(b.out(qi))];
      }
      // Crossing paths meet the middle row at column c0 + k.
      const std::size_t k0 = p.c - b.c0;
      monotone_min(
          k0, q_last, k0, b.w(),
          [&](std::size_t qi) {
            const Point q = b.out(qi);
            return std::pair<std::size_t, std::size_t>{k0, q.c - b.c0};
          },
          [&](std::size_t qi, std::size_t k) {
            return N::add(dt[ti * lt + k], du[(bot.h() + k) * lu + bot.out_index(b.out(qi))]);
          },
          [&](std::size_t qi, const T& v) { row[qi] = v; });
    }
    return res;
  }

  std::vector<T> split_cols(const Block& b) const {
    const std::size_t cm = b.c0 + b.w() / 2;
    const Block left{b.r0, b.r1, b.c0, cm};
    const Block right{b.r0, b.r1, cm, b.c1};
    const std::vector<T> dl = solve(left);
    const std::vector<T> dr = solve(right);
    const std::size_t len = b.len(), ll = left.len(), lr = right.len();
    std::vector<T> res(len * len, N::inf());
    const std::size_t q_first = cm - b.c0 + 1;  // first exit strictly right of cm
    for (std::size_t pi = 0; pi < len; ++pi) {
      const Point p = b.in(pi);
      T* row = &res[pi * len];
      if (p.r == b.r0 && p.c >= cm) {
        const std::size_t ri = right.in_index(p);
        for (std::size_t qi = 0; qi < len; ++qi) {
          const Point q = b.out(qi);
          if (q.c >= cm) row[qi] = dr[ri * lr + right.out_index(q)];
        }
        continue;
      }
      const std::size_t li = left.in_index(p);
      for (std::size_t qi = 0; qi < q_first; ++qi) {
        row[qi] = dl[li * ll + left.out_index(b.out(qi))];
      }
      // Crossing paths meet column cm at row r1 - k.
      const std::size_t q_last = b.w() + (b.r1 - p.r);
      const std::size_t k_hi = b.r1 - p.r;
      monotone_min(
          q_first, q_last, 0, k_hi,
          [&](std::size_t qi) {
            const Point q = b.out(qi);
            return std::pair<std::size_t, std::size_t>{b.r1 - q.r, k_hi};
          },
          [&](std::size_t qi, std::size_t k) {
            return N::add(dl[li * ll + left.w() + k], dr[k * lr + right.out_index(b.out(qi))]);
          },
          [&](std::size_t qi, const T& v) { row[qi] = v; });
    }
    return res;
  }

  std::size_t n_, m_;
  const std::vector<T>& pair_cost_;
};

}  // namespace tedhard::detail
