#include "core/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace cops {

namespace {

// cop positions form a sorted multiset, ranked through the colex rank of the
// strictly increasing tuple (c_i + i)
struct Binom {
  long long c[48][48];
  Binom() {
    for (int i = 0; i < 48; ++i) {
      c[i][0] = 1;
      for (int j = 1; j < 48; ++j) c[i][j] = j > i ? 0 : c[i - 1][j - 1] + c[i - 1][j];
    }
  }
};
const Binom kBinom;

struct Solve {
  int n, k;
  long long nconf;
  std::vector<std::array<std::uint8_t, 8>> config;  // by rank
  std::vector<Mask> occupied;                       // by rank
  std::vector<std::vector<int>> moves;              // config ranks reachable in one joint cop move
  std::vector<std::uint8_t> win;
  std::vector<std::uint8_t> cnt;
  std::vector<std::int32_t> best;  // cops-to-move: chosen successor state

  long long state(long long cr, int r, int side) const { return (cr * n + r) * 2 + side; }

  long long rank(const std::uint8_t* c) const {
    long long r = 0;
    for (int i = 0; i < k; ++i) r += kBinom.c[c[i] + i][i + 1];
    return r;
  }
};

void enumerate_configs(Solve& s, std::array<std::uint8_t, 8>& cur, int at, int from) {
  if (at == s.k) {
    long long r = s.rank(cur.data());
    s.config[r] = cur;
    Mask occ = 0;
    for (int i = 0; i < s.k; ++i) occ |= vbit(cur[i]);
    s.occupied[r] = occ;
    return;
  }
  for (int v = from; v < s.n; ++v) {
    cur[at] = static_cast<std::uint8_t>(v);
    enumerate_configs(s, cur, at + 1, v);
  }
}

void joint_moves(const Graph& g, Solve& s, const std::array<std::uint8_t, 8>& from,
                 std::array<std::uint8_t, 8>& cur, int at, std::vector<int>& out) {
  if (at == s.k) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.begin() + s.k);
    out.push_back(static_cast<int>(s.rank(sorted.data())));
    return;
  }
  for (Mask m = g.closed_neighbors(from[at]); m;) {
    int v = lowest_vertex(m);
    m &= m - 1;
    cur[at] = static_cast<std::uint8_t>(v);
    joint_moves(g, s, from, cur, at + 1, out);
  }
}

Solve solve_game(const Graph& g, int k, std::uint64_t max_states) {
  if (k <= 0) throw std::invalid_argument("cop count must be positive");
  if (g.order() == 0) throw std::invalid_argument("cop game on the empty graph");
  if (!g.is_connected()) throw std::invalid_argument("cop_wins requires a connected graph");
  Solve s;
  s.n = g.order();
  s.k = k;
  s.nconf = kBinom.c[s.n + k - 1][k];
  std::uint64_t total = static_cast<std::uint64_t>(s.nconf) * s.n * 2;
  if (total > max_states) throw BudgetError("cop game arena exceeds the state budget");

  s.config.resize(s.nconf);
  s.occupied.resize(s.nconf);
  std::array<std::uint8_t, 8> tmp{};
  enumerate_configs(s, tmp, 0, 0);

  s.moves.resize(s.nconf);
  for (long long cr = 0; cr < s.nconf; ++cr) {
    joint_moves(g, s, s.config[cr], tmp, 0, s.moves[cr]);
    auto& v = s.moves[cr];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  s.win.assign(total, 0);
  s.cnt.assign(total, 0);
  s.best.assign(total, -1);
  std::vector<std::int64_t> queue;
  queue.reserve(std::min<std::uint64_t>(total, std::uint64_t{1} << 20));

  for (long long cr = 0; cr < s.nconf; ++cr)
    for (int r = 0; r < s.n; ++r) {
      s.cnt[s.state(cr, r, 1)] = static_cast<std::uint8_t>(g.degree(r) + 1);
      if (s.occupied[cr] & vbit(r)) {
        for (int side = 0; side < 2; ++side) {
          s.win[s.state(cr, r, side)] = 1;
          queue.push_back(s.state(cr, r, side));
        }
      }
    }

  for (size_t head = 0; head < queue.size(); ++head) {
    long long st = queue[head];
    int side = static_cast<int>(st & 1);
    long long t = st >> 1;
    int r = static_cast<int>(t % s.n);
    long long cr = t / s.n;
    if (side == 1) {
      // cops can move into this winning robber-to-move state
      for (int cr2 : s.moves[cr]) {
        long long p = s.state(cr2, r, 0);
        if (s.win[p]) continue;
        s.win[p] = 1;
        s.best[p] = static_cast<std::int32_t>(st);
        queue.push_back(p);
      }
    } else {
      // robber moves r' -> r are exhausted one by one
      for (Mask m = g.closed_neighbors(r); m;) {
        int r2 = lowest_vertex(m);
        m &= m - 1;
        long long p = s.state(cr, r2, 1);
        if (s.win[p]) continue;
        if (--s.cnt[p] == 0) {
          s.win[p] = 1;
          queue.push_back(p);
        }
      }
    }
  }
  return s;
}

std::optional<long long> winning_placement(const Solve& s) {
  for (long long cr = 0; cr < s.nconf; ++cr) {
    bool all = true;
    for (int r = 0; r < s.n && all; ++r)
      all = (s.occupied[cr] & vbit(r)) || s.win[s.state(cr, r, 0)];
    if (all) return cr;
  }
  return std::nullopt;
}

}  // namespace

CopVerdict cop_wins(const Graph& g, int k, std::uint64_t max_states) {
  Solve s = solve_game(g, k, max_states);
  CopVerdict v;
  if (auto cr = winning_placement(s)) {
    v.cops_win = true;
    std::vector<int> cert(k);
    for (int i = 0; i < k; ++i) cert[i] = s.config[*cr][i];
    v.certificate = std::move(cert);
  }
  return v;
}

bool is_dismantlable(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("dismantlability requires a connected graph");
  Graph cur = g;
  while (cur.order() > 1) {
    int corner = -1;
    for (int v = 0; v < cur.order() && corner < 0; ++v)
      for (int u = 0; u < cur.order() && corner < 0; ++u) {
        if (u == v) continue;
        if ((cur.closed_neighbors(v) & ~cur.closed_neighbors(u)) == 0) corner = v;
      }
    if (corner < 0) return false;
    cur = induced_subgraph(cur, cur.vertices() & ~vbit(corner)).graph;
  }
  return cur.order() == 1;
}

CornerReduction corner_reduce(const Graph& g) {
  CornerReduction r;
  Graph cur = g;
  std::vector<int> orig(g.order());
  std::iota(orig.begin(), orig.end(), 0);
  for (;;) {
    int corner = -1;
    for (int v = 0; v < cur.order() && corner < 0; ++v)
      for (int u = 0; u < cur.order(); ++u) {
        if (u == v) continue;
        if ((cur.neighbors(v) & ~cur.closed_neighbors(u)) == 0) {
          corner = v;
          break;
        }
      }
    if (corner < 0) break;
    r.removed.push_back(orig[corner]);
    Induced ind = induced_subgraph(cur, cur.vertices() & ~vbit(corner));
    std::vector<int> next(ind.graph.order());
    for (int i = 0; i < ind.graph.order(); ++i) next[i] = orig[ind.new_to_old[i]];
    orig = std::move(next);
    cur = ind.graph;
  }
  r.graph = cur;
  return r;
}

int cop_number(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("cop number of the empty graph");
  int best = 1;
  for (Mask comp : g.components()) {
    Graph h = induced_subgraph(g, comp).graph;
    int c;
    if (h.order() == 1 || is_dismantlable(h)) {
      c = 1;
    } else {
      c = 2;
      while (!cop_wins(h, c).cops_win) ++c;
    }
    best = std::max(best, c);
  }
  return best;
}

bool certificate_holds(const Graph& g, const std::vector<int>& placement) {
  int k = static_cast<int>(placement.size());
  if (k == 0) return false;
  for (int v : placement)
    if (v < 0 || v >= g.order()) return false;
  Solve s = solve_game(g, k, std::uint64_t{1} << 24);
  std::array<std::uint8_t, 8> c0{};
  std::vector<int> sorted = placement;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) c0[i] = static_cast<std::uint8_t>(sorted[i]);
  long long cr0 = s.rank(c0.data());
  long long bound = static_cast<long long>(s.win.size()) * 2 + 4;
  for (int r0 = 0; r0 < s.n; ++r0) {
    if (s.occupied[cr0] & vbit(r0)) continue;  // captured at placement
    long long st = s.state(cr0, r0, 0);
    if (!s.win[st]) return false;
    long long steps = 0;
    long long cr = cr0;
    int r = r0;
    int side = 0;
    for (;;) {
      if (++steps > bound) return false;  // cycle: strategy failed to progress
      if (s.occupied[cr] & vbit(r)) break;
      if (side == 0) {
        long long nxt = s.best[s.state(cr, r, 0)];
        if (nxt < 0) return false;
        cr = (nxt >> 1) / s.n;
        side = 1;
      } else {
        // adversarial robber: escape if the solve left a hole, else stall
        int pick = -1, stall = -1;
        for (Mask m = g.closed_neighbors(r); m;) {
          int r2 = lowest_vertex(m);
          m &= m - 1;
          if (!s.win[s.state(cr, r2, 0)]) {
            pick = r2;
            break;
          }
          if (!(s.occupied[cr] & vbit(r2))) stall = r2;
        }
        if (pick >= 0) return false;  // robber found a non-losing reply
        r = stall >= 0 ? stall : r;
        side = 0;
        if (s.occupied[cr] & vbit(r)) break;
      }
    }
  }
  return true;
}

}  // namespace cops
