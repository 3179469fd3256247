#pragma once

// Incremental 3D convex hull (quickhull with conflict lists) over Euclidean
// coordinates, plus polygon-face extraction that keeps every extreme point
// of a face, including exactly co-circular corners. Orbit configurations
// with symmetries produce many-sided coplanar faces, so the polygon pass is
// tolerance driven rather than triangle based.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "gausscell/minkowski.hpp"

namespace gausscell {

struct HullFace {
  Vec3 normal;      // outward Euclidean unit normal
  double offset;    // <normal, x> = offset on the face plane
  std::vector<int> corners;  // point indices, ccw seen from outside
};

namespace hull_detail {

struct Tri {
  std::array<int, 3> v;
  std::array<int, 3> nb;  // neighbor across edge (v[i], v[i+1])
  Vec3 n;                 // outward unit normal
  double off;
  bool alive = true;
  std::vector<int> outside;
};

inline double plane_eps(double scale, double eps_rel) { return eps_rel * (1.0 + scale); }

class QuickHull {
 public:
  QuickHull(const std::vector<Vec3>& pts, double eps_rel)
      : pts_(pts), eps_rel_(eps_rel) {
    if (pts.size() < 4) throw Error(ErrorCode::DegenerateConfiguration, "need >= 4 points");
    for (const Vec3& p : pts) scale_ = std::max(scale_, p.template lpNorm<Eigen::Infinity>());
    build();
  }

  const std::vector<Tri>& tris() const { return tris_; }
  const std::vector<Vec3>& pts() const { return pts_; }
  double scale() const { return scale_; }
  double eps() const { return hull_detail::plane_eps(scale_, eps_rel_); }

 private:
  const std::vector<Vec3>& pts_;
  double eps_rel_;
  double scale_ = 0;
  std::vector<Tri> tris_;

  double sdist(const Tri& t, int p) const { return t.n.dot(pts_[p]) - t.off; }

  void set_plane(Tri& t) {
    const Vec3 &a = pts_[t.v[0]], &b = pts_[t.v[1]], &c = pts_[t.v[2]];
    Vec3 n = (b - a).cross(c - a);
    double ln = n.norm();
    if (ln == 0) throw Error(ErrorCode::DegenerateConfiguration, "zero-area hull triangle");
    t.n = n / ln;
    t.off = t.n.dot(a);
  }

  void build() {
    int n = (int)pts_.size();
    // initial extreme simplex
    int i0 = 0, i1 = 0;
    for (int i = 1; i < n; ++i) {
      if (pts_[i][0] < pts_[i0][0]) i0 = i;
      if (pts_[i][0] > pts_[i1][0]) i1 = i;
    }
    if (i0 == i1) i1 = (i0 + 1) % n;
    double best = -1;
    int i2 = -1;
    Vec3 d = pts_[i1] - pts_[i0];
    for (int i = 0; i < n; ++i) {
      Vec3 r = pts_[i] - pts_[i0];
      double a = (r - r.dot(d) / std::max(1e-300, d.squaredNorm()) * d).norm();
      if (a > best) { best = a; i2 = i; }
    }
    Vec3 nrm = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]);
    best = -1;
    int i3 = -1;
    for (int i = 0; i < n; ++i) {
      double a = std::abs(nrm.dot(pts_[i] - pts_[i0]));
      if (a > best) { best = a; i3 = i; }
    }
    if (best <= eps())
      throw Error(ErrorCode::DegenerateConfiguration, "point set is coplanar");
    if (nrm.dot(pts_[i3] - pts_[i0]) > 0) std::swap(i1, i2);

    auto mk = [&](int a, int b, int c) {
      Tri t;
      t.v = {a, b, c};
      set_plane(t);
      tris_.push_back(t);
    };
    mk(i0, i1, i2);
    mk(i0, i3, i1);
    mk(i1, i3, i2);
    mk(i2, i3, i0);
    tris_[0].nb = {1, 2, 3};
    tris_[1].nb = {3, 2, 0};
    tris_[2].nb = {1, 3, 0};
    tris_[3].nb = {2, 1, 0};

    std::vector<int> work;
    for (int i = 0; i < n; ++i) {
      if (i == i0 || i == i1 || i == i2 || i == i3) continue;
      assign(i, 0, 4, work);
    }
    std::vector<int> stack;
    for (int f = 0; f < 4; ++f)
      if (!tris_[f].outside.empty()) stack.push_back(f);

    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      if (!tris_[f].alive || tris_[f].outside.empty()) continue;
      int far = -1;
      double fd = -1;
      for (int p : tris_[f].outside) {
        double ds = sdist(tris_[f], p);
        if (ds > fd) { fd = ds; far = p; }
      }
      add_point(far, f, stack);
    }
  }

  void assign(int p, int lo, int hi, std::vector<int>&) {
    for (int f = lo; f < hi; ++f) {
      if (!tris_[f].alive) continue;
      if (sdist(tris_[f], p) > eps()) {
        tris_[f].outside.push_back(p);
        return;
      }
    }
  }

  void add_point(int p, int seed, std::vector<int>& stack) {
    // BFS for the visible region
    std::vector<int> visible;
    std::vector<char> mark(tris_.size(), 0);
    std::vector<int> bfs = {seed};
    mark[seed] = 1;
    while (!bfs.empty()) {
      int f = bfs.back();
      bfs.pop_back();
      visible.push_back(f);
      for (int k = 0; k < 3; ++k) {
        int g = tris_[f].nb[k];
        if (mark[g] || !tris_[g].alive) continue;
        if (sdist(tris_[g], p) > eps()) {
          mark[g] = 1;
          bfs.push_back(g);
        }
      }
    }
    // horizon: directed edges of visible faces whose neighbor is hidden
    struct HEdge { int a, b, hidden, hidden_side; };
    std::vector<HEdge> horizon;
    for (int f : visible) {
      for (int k = 0; k < 3; ++k) {
        int g = tris_[f].nb[k];
        if (mark[g]) continue;
        int a = tris_[f].v[k], b = tris_[f].v[(k + 1) % 3];
        int side = -1;
        for (int j = 0; j < 3; ++j)
          if (tris_[g].nb[j] == f) side = j;
        horizon.push_back({a, b, g, side});
      }
    }
    // collect orphaned outside points
    std::vector<int> orphans;
    for (int f : visible) {
      for (int q : tris_[f].outside)
        if (q != p) orphans.push_back(q);
      tris_[f].alive = false;
      tris_[f].outside.clear();
    }
    // new fan
    int base = (int)tris_.size();
    std::vector<int> fan(horizon.size());
    for (size_t h = 0; h < horizon.size(); ++h) {
      Tri t;
      t.v = {horizon[h].a, horizon[h].b, p};
      set_plane(t);
      t.nb = {horizon[h].hidden, -1, -1};
      fan[h] = base + (int)h;
      tris_.push_back(t);
      tris_[horizon[h].hidden].nb[horizon[h].hidden_side] = fan[h];
    }
    // wire fan neighbors: edge (b, p) of face h meets edge (p, a) of the
    // face whose a equals this b
    std::vector<std::pair<int, int>> by_a;
    for (size_t h = 0; h < horizon.size(); ++h) by_a.push_back({horizon[h].a, fan[h]});
    for (size_t h = 0; h < horizon.size(); ++h) {
      int b = horizon[h].b;
      int succ = -1;
      for (auto& [a, f] : by_a)
        if (a == b) succ = f;
      if (succ < 0) throw Error(ErrorCode::DegenerateConfiguration, "open horizon loop");
      tris_[fan[h]].nb[1] = succ;           // edge (b, p)
      tris_[succ].nb[2] = fan[h];           // edge (p, a)
    }
    // redistribute orphans
    std::sort(orphans.begin(), orphans.end());
    orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());
    for (int q : orphans) {
      for (size_t h = 0; h < horizon.size(); ++h) {
        if (sdist(tris_[fan[h]], q) > eps()) {
          tris_[fan[h]].outside.push_back(q);
          break;
        }
      }
    }
    for (size_t h = 0; h < horizon.size(); ++h)
      if (!tris_[fan[h]].outside.empty()) stack.push_back(fan[h]);
  }
};

// 2D convex hull (monotone chain) returning hull indices in ccw order and a
// flag for input points lying on the boundary without being corners.
inline std::vector<int> hull2d(const std::vector<Eigen::Vector2d>& q, double eps,
                               bool* interior_or_edge_point = nullptr) {
  int n = (int)q.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (q[a][0] != q[b][0]) return q[a][0] < q[b][0];
    return q[a][1] < q[b][1];
  });
  auto cross = [&](int o, int a, int b) {
    return (q[a][0] - q[o][0]) * (q[b][1] - q[o][1]) -
           (q[a][1] - q[o][1]) * (q[b][0] - q[o][0]);
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {
    int i = idx[ii];
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= eps) --k;
    h[k++] = i;
  }
  for (int ii = n - 2, lower = k + 1; ii >= 0; --ii) {
    int i = idx[ii];
    while (k >= lower && cross(h[k - 2], h[k - 1], i) <= eps) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  if (interior_or_edge_point) *interior_or_edge_point = ((int)h.size() < n);
  return h;
}

}  // namespace hull_detail

// Full hull as merged polygon faces. eps_rel scales with the point cloud.
inline std::vector<HullFace> convex_hull_faces(const std::vector<Vec3>& pts,
                                               double eps_rel = 1e-9) {
  hull_detail::QuickHull qh(pts, eps_rel);
  const auto& tris = qh.tris();

  // union adjacent coplanar triangles
  int nt = (int)tris.size();
  std::vector<int> parent(nt);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < nt; ++f) {
    if (!tris[f].alive) continue;
    for (int k = 0; k < 3; ++k) {
      int g = tris[f].nb[k];
      if (g < 0 || !tris[g].alive) continue;
      if (tris[f].n.dot(tris[g].n) > 1.0 - eps_rel &&
          std::abs(tris[f].off - tris[g].off) < qh.eps())
        parent[find(f)] = find(g);
    }
  }
  std::map<int, std::vector<int>> clusters;
  for (int f = 0; f < nt; ++f)
    if (tris[f].alive) clusters[find(f)].push_back(f);

  std::vector<HullFace> out;
  for (auto& [root, fs] : clusters) {
    // plane from the largest member triangle
    double best_area = -1;
    Vec3 n;
    double off = 0;
    for (int f : fs) {
      const auto& t = tris[f];
      double area = (pts[t.v[1]] - pts[t.v[0]]).cross(pts[t.v[2]] - pts[t.v[0]]).norm();
      if (area > best_area) { best_area = area; n = t.n; off = t.off; }
    }
    // collect all points on the plane
    std::vector<int> on_plane;
    for (int i = 0; i < (int)pts.size(); ++i)
      if (std::abs(n.dot(pts[i]) - off) <= qh.eps()) on_plane.push_back(i);
    // 2D frame in the plane
    Vec3 u = n.cross(Vec3(1, 0, 0));
    if (u.norm() < 0.1) u = n.cross(Vec3(0, 1, 0));
    u.normalize();
    Vec3 v = n.cross(u);
    std::vector<Eigen::Vector2d> q;
    for (int i : on_plane) q.push_back({u.dot(pts[i]), v.dot(pts[i])});
    double local = 0;
    for (auto& p : q) local = std::max(local, p.template lpNorm<Eigen::Infinity>());
    std::vector<int> hull = hull_detail::hull2d(q, eps_rel * (1 + local) * (1 + local));
    HullFace face;
    face.normal = n;
    face.offset = off;
    for (int i : hull) face.corners.push_back(on_plane[i]);
    // make ccw as seen from outside (frame (u, v, n) is right-handed iff
    // u x v = n; here u x v = -n, so reverse)
    if (u.cross(v).dot(n) < 0) std::reverse(face.corners.begin(), face.corners.end());
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace gausscell
