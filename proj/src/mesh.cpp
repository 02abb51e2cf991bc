#include "curvlab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace curvlab {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 normalized(Vec3 v) {
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

struct BaseMesh {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
};

BaseMesh icosahedron_with_pole() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p = normalized(p);
  // rotate vertex 0 onto the north pole (north pole = x -> infinity)
  Vec3 a = v[0];
  double c = a[2];
  Vec3 ax = {a[1], -a[0], 0.0};  // a x z
  double s = std::sqrt(ax[0] * ax[0] + ax[1] * ax[1] + ax[2] * ax[2]);
  if (s > 1e-12) {
    ax = normalized(ax);
    double theta = std::acos(std::clamp(c, -1.0, 1.0));
    double ct = std::cos(theta), st = std::sin(theta);
    for (auto& p : v) {
      Vec3 k = ax;
      Vec3 kxp = {k[1] * p[2] - k[2] * p[1], k[2] * p[0] - k[0] * p[2], k[0] * p[1] - k[1] * p[0]};
      double kdp = k[0] * p[0] + k[1] * p[1] + k[2] * p[2];
      for (int i = 0; i < 3; ++i) p[i] = p[i] * ct + kxp[i] * st + k[i] * kdp * (1 - ct);
    }
  }
  BaseMesh m;
  m.pos = std::move(v);
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return m;
}

void subdivide(BaseMesh& m) {
  std::map<std::pair<int, int>, int> mid;
  auto midpoint = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = mid.find(key);
    if (it != mid.end()) return it->second;
    Vec3 p = normalized({m.pos[a][0] + m.pos[b][0], m.pos[a][1] + m.pos[b][1],
                         m.pos[a][2] + m.pos[b][2]});
    int id = static_cast<int>(m.pos.size());
    m.pos.push_back(p);
    mid.emplace(key, id);
    return id;
  };
  std::vector<std::array<int, 3>> out;
  out.reserve(m.faces.size() * 4);
  for (const auto& [a, b, c] : m.faces) {
    int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
    out.push_back({a, ab, ca});
    out.push_back({ab, b, bc});
    out.push_back({ca, bc, c});
    out.push_back({ab, bc, ca});
  }
  m.faces = std::move(out);
}

cplx stereo(const Vec3& p) { return cplx{p[0], p[1]} / (1.0 - p[2]); }

Vec3 unstereo(cplx x) {
  double a2 = std::norm(x);
  return {2 * x.real() / (1 + a2), 2 * x.imag() / (1 + a2), (a2 - 1) / (1 + a2)};
}

double sph_dist(const Vec3& a, const Vec3& b) {
  double d = std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0);
  return std::acos(d);
}

double tri_min_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  double la = sph_dist(b, c), lb = sph_dist(c, a), lc = sph_dist(a, b);
  double worst = std::numbers::pi;
  auto ang = [](double lo, double l1, double l2) {
    double ca = (std::cos(lo) - std::cos(l1) * std::cos(l2)) / (std::sin(l1) * std::sin(l2));
    return std::acos(std::clamp(ca, -1.0, 1.0));
  };
  worst = std::min(worst, ang(la, lb, lc));
  worst = std::min(worst, ang(lb, lc, la));
  worst = std::min(worst, ang(lc, la, lb));
  return worst;
}

// Snapped spherical template: subdivided icosahedron with the pole vertex
// assigned to infinity and the six nearest distinct vertices moved onto the
// roots. The template level is the smallest that keeps the snapped base
// mesh nondegenerate.
BaseMesh snapped_template(const HyperellipticCurve& curve, std::array<int, 6>& root_vid,
                          int& inf_vid) {
  for (int tmpl = 1; tmpl <= 4; ++tmpl) {
    BaseMesh m = icosahedron_with_pole();
    for (int t = 0; t < tmpl; ++t) subdivide(m);
    inf_vid = 0;
    std::vector<char> taken(m.pos.size(), 0);
    taken[0] = 1;
    bool ok = true;
    for (int k = 0; k < 6 && ok; ++k) {
      Vec3 target = unstereo(curve.roots()[k]);
      int best = -1;
      double best_d = 1e9;
      for (int v = 0; v < static_cast<int>(m.pos.size()); ++v) {
        if (taken[v]) continue;
        double d = sph_dist(m.pos[v], target);
        if (d < best_d) {
          best_d = d;
          best = v;
        }
      }
      if (best < 0) {
        ok = false;
        break;
      }
      taken[best] = 1;
      m.pos[best] = target;
      root_vid[k] = best;
    }
    if (!ok) continue;
    double worst = std::numbers::pi;
    for (const auto& [a, b, c] : m.faces)
      worst = std::min(worst, tri_min_angle(m.pos[a], m.pos[b], m.pos[c]));
    if (worst > 5.0 * std::numbers::pi / 180.0) return m;
  }
  throw input_error("cannot build a nondegenerate base mesh for this curve (roots too clustered)");
}

int64_t ekey(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b);
}

// 4-point Gauss-Legendre on fixed panels
template <typename F>
double chart_length(const F& density, cplx z0, cplx z1, int panels = 12) {
  static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    cplx a = z0 + (z1 - z0) * (static_cast<double>(p) / panels);
    cplx b = z0 + (z1 - z0) * (static_cast<double>(p + 1) / panels);
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double habs = std::abs(half);
    for (int g = 0; g < 4; ++g) total += gw[g] * density(mid + half * gx[g]) * habs;
  }
  return total;
}

struct TriScratch {
  double angles[3];
  double area;
};

TriScratch tri_geometry(const std::array<double, 3>& l) {
  TriScratch out{};
  double s = 0.5 * (l[0] + l[1] + l[2]);
  double h = s * (s - l[0]) * (s - l[1]) * (s - l[2]);
  out.area = std::sqrt(std::max(h, 1e-300));
  for (int c = 0; c < 3; ++c) {
    double lo = l[c], la = l[(c + 1) % 3], lb = l[(c + 2) % 3];
    out.angles[c] = std::acos(std::clamp((la * la + lb * lb - lo * lo) / (2 * la * lb), -1.0, 1.0));
  }
  return out;
}

double corner_cot(const std::array<double, 3>& l, int corner) {
  double lo = l[corner], la = l[(corner + 1) % 3], lb = l[(corner + 2) % 3];
  double s = 0.5 * (l[0] + l[1] + l[2]);
  double area = std::sqrt(std::max(s * (s - l[0]) * (s - l[1]) * (s - l[2]), 1e-300));
  return (la * la + lb * lb - lo * lo) / (4.0 * area);
}

}  // namespace

double SurfaceMesh::background_factor(int cv) const {
  int b = vert_base[cv];
  if (vert_kind[cv] == VertexKind::kBranch) {
    int k = vert_branch[cv];
    cplx r = curve.roots()[k];
    return 4.0 * (1.0 + kConeSmoothing * std::norm(r)) / std::abs(curve.q(k, r));
  }
  if (vert_kind[cv] == VertexKind::kInfinity) {
    return kConeSmoothing / std::abs(curve.p_tilde(cplx{0, 0}));
  }
  cplx x = base_x[b];
  return (1.0 + kConeSmoothing * std::norm(x)) / std::abs(curve.p(x));
}

std::vector<std::vector<int>> SurfaceMesh::vertex_adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  std::unordered_set<int64_t> seen;
  for (const auto& f : faces)
    for (int c = 0; c < 3; ++c) {
      int a = f[c], b = f[(c + 1) % 3];
      if (seen.insert(ekey(a, b)).second) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  return adj;
}

SurfaceMesh build_mesh(const HyperellipticCurve& curve, int refinement_level) {
  if (refinement_level < 0 || refinement_level > 6)
    throw input_error("refinement level must be in 0..6");

  std::array<int, 6> root_vid{};
  int inf_vid = 0;
  BaseMesh base = snapped_template(curve, root_vid, inf_vid);
  for (int l = 0; l < refinement_level; ++l) subdivide(base);
  const int nb = static_cast<int>(base.pos.size());
  const int nf = static_cast<int>(base.faces.size());

  std::vector<cplx> x_of(nb);
  std::vector<char> at_inf(nb, 0);
  for (int v = 0; v < nb; ++v) {
    if (v == inf_vid) {
      at_inf[v] = 1;
      x_of[v] = cplx{0, 0};
    } else {
      x_of[v] = stereo(base.pos[v]);
    }
  }

  // edges and face adjacency
  std::unordered_map<int64_t, int> edge_id;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> edge_faces;
  edge_id.reserve(nf * 2);
  for (int t = 0; t < nf; ++t) {
    const auto& f = base.faces[t];
    for (int c = 0; c < 3; ++c) {
      int a = f[c], b = f[(c + 1) % 3];
      int64_t k = ekey(a, b);
      auto it = edge_id.find(k);
      if (it == edge_id.end()) {
        it = edge_id.emplace(k, static_cast<int>(edges.size())).first;
        edges.push_back({std::min(a, b), std::max(a, b)});
        edge_faces.push_back({-1, -1});
      }
      auto& ef = edge_faces[it->second];
      (ef[0] < 0 ? ef[0] : ef[1]) = t;
    }
  }
  const int ne = static_cast<int>(edges.size());
  for (const auto& ef : edge_faces)
    if (ef[0] < 0 || ef[1] < 0) throw numeric_error("base mesh is not closed");

  std::vector<std::vector<int>> adj(nb);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }

  // branch cuts: three vertex-disjoint paths pairing roots sorted by
  // argument; crossing a cut edge swaps sheets
  std::vector<char> cut(ne, 0);
  {
    std::vector<char> used(nb, 0);
    for (int m = 0; m < 3; ++m) {
      int s = root_vid[2 * m], t = root_vid[2 * m + 1];
      std::vector<char> avoid(nb, 0);
      for (int k = 0; k < 6; ++k)
        if (root_vid[k] != s && root_vid[k] != t) avoid[root_vid[k]] = 1;
      avoid[inf_vid] = 1;
      for (int v = 0; v < nb; ++v)
        if (used[v]) avoid[v] = 1;
      std::vector<int> parent(nb, -2);
      std::deque<int> dq{s};
      parent[s] = -1;
      while (!dq.empty() && parent[t] == -2) {
        int u = dq.front();
        dq.pop_front();
        for (int w : adj[u]) {
          if (parent[w] != -2) continue;
          if (avoid[w] && w != t) continue;
          parent[w] = u;
          dq.push_back(w);
        }
      }
      if (parent[t] == -2)
        throw input_error("cannot route disjoint branch cuts at this refinement level");
      for (int v = t; parent[v] != -1; v = parent[v]) {
        cut[edge_id.at(ekey(v, parent[v]))] = 1;
        used[v] = 1;
      }
      used[s] = 1;
    }
  }

  // background edge lengths by chart
  const double eps2 = kConeSmoothing;
  double max_root = 0.0;
  for (const auto& r : curve.roots()) max_root = std::max(max_root, std::abs(r));
  const double s_region = std::max(3.0, 2.0 * max_root + 1.0);
  std::array<double, 6> root_disk{};
  for (int k = 0; k < 6; ++k) {
    double dmin = 1e18;
    for (int j = 0; j < 6; ++j)
      if (j != k) dmin = std::min(dmin, std::abs(curve.roots()[k] - curve.roots()[j]));
    root_disk[k] = std::min(0.45 * dmin, 1.0);
  }
  auto sf = [&](cplx x) { return 1.0 + eps2 * std::norm(x); };
  std::vector<double> base_len(ne);
  std::vector<char> is_root_v(nb, 0);
  std::vector<int> root_of(nb, -1);
  for (int k = 0; k < 6; ++k) {
    is_root_v[root_vid[k]] = 1;
    root_of[root_vid[k]] = k;
  }
  for (int e = 0; e < ne; ++e) {
    int a = edges[e][0], b = edges[e][1];
    cplx xa = x_of[a], xb = x_of[b];
    int near_root = -1;
    for (int k = 0; k < 6; ++k) {
      cplx r = curve.roots()[k];
      bool touches = (root_of[a] == k) || (root_of[b] == k);
      bool inside = !at_inf[a] && !at_inf[b] && std::abs(xa - r) < root_disk[k] &&
                    std::abs(xb - r) < root_disk[k];
      if (touches || inside) {
        near_root = k;
        break;
      }
    }
    if (near_root >= 0) {
      int k = near_root;
      cplx r = curve.roots()[k];
      cplx wa, wb;
      if (root_of[a] == k) {
        wa = cplx{0, 0};
        wb = std::sqrt(std::abs(xb - r)) * std::polar(1.0, std::arg(xb - r) / 2.0);
      } else if (root_of[b] == k) {
        wb = cplx{0, 0};
        wa = std::sqrt(std::abs(xa - r)) * std::polar(1.0, std::arg(xa - r) / 2.0);
      } else {
        double tha = std::arg(xa - r);
        double thb = tha + std::arg((xb - r) / (xa - r));
        wa = std::sqrt(std::abs(xa - r)) * std::polar(1.0, tha / 2.0);
        wb = std::sqrt(std::abs(xb - r)) * std::polar(1.0, thb / 2.0);
      }
      base_len[e] = chart_length(
          [&](cplx w) {
            cplx x = r + w * w;
            return 2.0 * std::sqrt(sf(x) / std::abs(curve.q(k, x)));
          },
          wa, wb);
    } else if (at_inf[a] || at_inf[b] ||
               (std::abs(xa) > s_region && std::abs(xb) > s_region)) {
      cplx sa = at_inf[a] ? cplx{0, 0} : 1.0 / xa;
      cplx sb = at_inf[b] ? cplx{0, 0} : 1.0 / xb;
      base_len[e] = chart_length(
          [&](cplx s) { return std::sqrt((std::norm(s) + eps2) / std::abs(curve.p_tilde(s))); },
          sa, sb);
    } else {
      base_len[e] =
          chart_length([&](cplx x) { return std::sqrt(sf(x) / std::abs(curve.p(x))); }, xa, xb);
    }
    if (!(base_len[e] > 0.0) || !std::isfinite(base_len[e]))
      throw numeric_error("degenerate background edge length");
  }

  // lift to the double cover: ring walk around each base vertex assigns
  // sheet-consistent cover vertices to face corners
  SurfaceMesh mesh;
  mesh.curve = curve;
  mesh.level = refinement_level;
  mesh.base_x = x_of;
  mesh.base_at_inf = at_inf;

  std::vector<std::vector<int>> vert_faces(nb);
  for (int t = 0; t < nf; ++t)
    for (int v : base.faces[t]) vert_faces[v].push_back(t);
  auto other_face = [&](int t, int e) {
    return edge_faces[e][0] == t ? edge_faces[e][1] : edge_faces[e][0];
  };
  auto face_edge_through = [&](int t, int v, int not_face) {
    const auto& f = base.faces[t];
    for (int c = 0; c < 3; ++c) {
      int a = f[c], b = f[(c + 1) % 3];
      if (a != v && b != v) continue;
      int e = edge_id.at(ekey(a, b));
      if (other_face(t, e) != not_face) return e;
    }
    return -1;
  };

  // cover corner map: (face, sheet) -> cover vertex, per base vertex corner
  std::vector<std::array<int, 2>> corner_cover(static_cast<std::size_t>(nf) * 3, {-1, -1});
  auto corner_of = [&](int t, int v) {
    const auto& f = base.faces[t];
    for (int c = 0; c < 3; ++c)
      if (f[c] == v) return c;
    return -1;
  };
  int ncv = 0;
  for (int v = 0; v < nb; ++v) {
    // ordered ring of incident faces with sheet parity
    std::vector<int> ring{vert_faces[v][0]};
    std::vector<int> par{0};
    int guard = static_cast<int>(vert_faces[v].size()) + 2;
    int parity = 0;
    for (;;) {
      int prev = ring.size() > 1 ? ring[ring.size() - 2] : -1;
      int e = face_edge_through(ring.back(), v, prev);
      if (e < 0) throw numeric_error("broken vertex ring");
      int nxt = other_face(ring.back(), e);
      parity ^= cut[e];
      if (nxt == ring.front()) break;
      ring.push_back(nxt);
      par.push_back(parity);
      if (static_cast<int>(ring.size()) > guard) throw numeric_error("vertex ring does not close");
    }
    bool is_branch = is_root_v[v];
    if (parity != (is_branch ? 1 : 0))
      throw numeric_error("cut system has inconsistent monodromy");
    if (is_branch) {
      int cid = ncv++;
      mesh.vert_base.push_back(v);
      mesh.vert_kind.push_back(VertexKind::kBranch);
      mesh.vert_branch.push_back(root_of[v]);
      for (std::size_t i = 0; i < ring.size(); ++i) {
        int c = corner_of(ring[i], v);
        corner_cover[static_cast<std::size_t>(ring[i]) * 3 + c] = {cid, cid};
      }
    } else {
      int c0 = ncv++, c1 = ncv++;
      VertexKind kind = (v == inf_vid) ? VertexKind::kInfinity : VertexKind::kOrdinary;
      for (int rep = 0; rep < 2; ++rep) {
        mesh.vert_base.push_back(v);
        mesh.vert_kind.push_back(kind);
        mesh.vert_branch.push_back(-1);
      }
      for (std::size_t i = 0; i < ring.size(); ++i) {
        int c = corner_of(ring[i], v);
        int p = par[i];
        corner_cover[static_cast<std::size_t>(ring[i]) * 3 + c] = {p == 0 ? c0 : c1,
                                                                   p == 0 ? c1 : c0};
      }
    }
  }
  mesh.num_vertices = ncv;
  mesh.faces.reserve(static_cast<std::size_t>(nf) * 2);
  mesh.face_len.reserve(static_cast<std::size_t>(nf) * 2);
  for (int t = 0; t < nf; ++t) {
    const auto& f = base.faces[t];
    std::array<double, 3> lens{};
    for (int c = 0; c < 3; ++c)
      lens[c] = base_len[edge_id.at(ekey(f[(c + 1) % 3], f[(c + 2) % 3]))];
    for (int s = 0; s < 2; ++s) {
      std::array<int, 3> cf{};
      for (int c = 0; c < 3; ++c) cf[c] = corner_cover[static_cast<std::size_t>(t) * 3 + c][s];
      mesh.faces.push_back(cf);
      mesh.face_len.push_back(lens);
    }
  }

  // intrinsic Delaunay flips: edge map (face, opposite corner)
  std::unordered_map<int64_t, std::vector<std::pair<int, int>>> em;
  em.reserve(mesh.faces.size() * 2);
  auto register_face = [&](int fi) {
    const auto& f = mesh.faces[fi];
    for (int c = 0; c < 3; ++c) em[ekey(f[(c + 1) % 3], f[(c + 2) % 3])].emplace_back(fi, c);
  };
  auto unregister_face = [&](int fi) {
    const auto& f = mesh.faces[fi];
    for (int c = 0; c < 3; ++c) {
      auto& lst = em[ekey(f[(c + 1) % 3], f[(c + 2) % 3])];
      lst.erase(std::remove_if(lst.begin(), lst.end(),
                               [fi](const auto& pr) { return pr.first == fi; }),
                lst.end());
    }
  };
  for (int fi = 0; fi < static_cast<int>(mesh.faces.size()); ++fi) register_face(fi);
  std::deque<int64_t> queue;
  std::unordered_set<int64_t> inq;
  for (const auto& [k, _] : em) {
    queue.push_back(k);
    inq.insert(k);
  }
  int flips = 0;
  const int flip_cap = static_cast<int>(mesh.faces.size()) * 40;
  while (!queue.empty() && flips < flip_cap) {
    int64_t k = queue.front();
    queue.pop_front();
    inq.erase(k);
    auto it = em.find(k);
    if (it == em.end() || it->second.size() != 2) continue;
    auto [f0, c0] = it->second[0];
    auto [f1, c1] = it->second[1];
    double w = corner_cot(mesh.face_len[f0], c0) + corner_cot(mesh.face_len[f1], c1);
    if (w >= -1e-12) continue;
    int u = static_cast<int>(k >> 32), v = static_cast<int>(k & 0xffffffff);
    int p0 = mesh.faces[f0][c0], p1 = mesh.faces[f1][c1];
    if (p0 == p1) continue;
    auto nk = ekey(p0, p1);
    if (auto jt = em.find(nk); jt != em.end() && !jt->second.empty()) continue;
    double l_uv = mesh.face_len[f0][c0];
    auto lens_from = [&](int fi, int ci, double& du, double& dv) {
      const auto& f = mesh.faces[fi];
      int a = f[(ci + 1) % 3];
      double da = mesh.face_len[fi][(ci + 2) % 3];  // |p - a|
      double db = mesh.face_len[fi][(ci + 1) % 3];  // |p - b|
      if (a == u) {
        du = da;
        dv = db;
      } else {
        du = db;
        dv = da;
      }
    };
    double d0u, d0v, d1u, d1v;
    lens_from(f0, c0, d0u, d0v);
    lens_from(f1, c1, d1u, d1v);
    auto place = [&](double du, double dv, double sign, double& px, double& py) {
      px = (du * du - dv * dv + l_uv * l_uv) / (2 * l_uv);
      py = sign * std::sqrt(std::max(du * du - px * px, 0.0));
    };
    double x0, y0, x1, y1;
    place(d0u, d0v, 1.0, x0, y0);
    place(d1u, d1v, -1.0, x1, y1);
    double newlen = std::hypot(x0 - x1, y0 - y1);
    if (!(newlen > 1e-14)) continue;
    // new faces (p0,u,p1) and (p1,v,p0) with opposite-edge lengths
    std::array<double, 3> nl0 = {d1u, newlen, d0u};
    std::array<double, 3> nl1 = {d0v, newlen, d1v};
    auto valid = [](const std::array<double, 3>& l) {
      return l[0] + l[1] > l[2] * (1 + 1e-12) && l[1] + l[2] > l[0] * (1 + 1e-12) &&
             l[2] + l[0] > l[1] * (1 + 1e-12);
    };
    if (!valid(nl0) || !valid(nl1)) continue;
    unregister_face(f0);
    unregister_face(f1);
    mesh.faces[f0] = {p0, u, p1};
    mesh.face_len[f0] = nl0;
    mesh.faces[f1] = {p1, v, p0};
    mesh.face_len[f1] = nl1;
    register_face(f0);
    register_face(f1);
    ++flips;
    for (int fi : {f0, f1}) {
      const auto& f = mesh.faces[fi];
      for (int c = 0; c < 3; ++c) {
        int64_t k2 = ekey(f[(c + 1) % 3], f[(c + 2) % 3]);
        if (inq.insert(k2).second) queue.push_back(k2);
      }
    }
  }
  mesh.delaunay_flips = flips;
  mesh.num_edges = 0;
  for (const auto& [k2, lst] : em) {
    if (lst.empty()) continue;
    if (lst.size() != 2) throw numeric_error("flipped triangulation is not an edge-manifold");
    ++mesh.num_edges;
  }

  // geometry and operators
  const int NF = static_cast<int>(mesh.faces.size());
  mesh.corner_angle.resize(NF);
  mesh.face_area.resize(NF);
  mesh.vertex_area.assign(ncv, 0.0);
  std::vector<double> angle_sum(ncv, 0.0);
  mesh.min_angle = std::numbers::pi;
  mesh.max_angle = 0.0;
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(NF) * 12);
  for (int fi = 0; fi < NF; ++fi) {
    TriScratch g = tri_geometry(mesh.face_len[fi]);
    for (int c = 0; c < 3; ++c) {
      mesh.corner_angle[fi][c] = g.angles[c];
      mesh.min_angle = std::min(mesh.min_angle, g.angles[c]);
      mesh.max_angle = std::max(mesh.max_angle, g.angles[c]);
      angle_sum[mesh.faces[fi][c]] += g.angles[c];
    }
    mesh.face_area[fi] = g.area;
    for (int c = 0; c < 3; ++c) {
      mesh.vertex_area[mesh.faces[fi][c]] += g.area / 3.0;
      int i = mesh.faces[fi][(c + 1) % 3], j = mesh.faces[fi][(c + 2) % 3];
      double w = 0.5 / std::tan(g.angles[c]);
      trips.emplace_back(i, j, -w);
      trips.emplace_back(j, i, -w);
      trips.emplace_back(i, i, w);
      trips.emplace_back(j, j, w);
    }
  }
  mesh.angle_defect.resize(ncv);
  for (int v = 0; v < ncv; ++v) mesh.angle_defect[v] = 2.0 * std::numbers::pi - angle_sum[v];
  mesh.stiffness.resize(ncv, ncv);
  mesh.stiffness.setFromTriplets(trips.begin(), trips.end());

  if (mesh.euler_characteristic() != -2) {
    std::ostringstream os;
    os << "cover has wrong topology: chi = " << mesh.euler_characteristic();
    throw numeric_error(os.str());
  }
  const double deg = std::numbers::pi / 180.0;
  if (mesh.min_angle < 1.0 * deg || mesh.max_angle > 178.0 * deg) {
    std::ostringstream os;
    os << "mesh quality out of bounds: angles in [" << mesh.min_angle / deg << ", "
       << mesh.max_angle / deg << "] degrees";
    throw numeric_error(os.str());
  }
  double defect_sum = 0.0;
  for (double d : mesh.angle_defect) defect_sum += d;
  if (std::abs(defect_sum + 4.0 * std::numbers::pi) > 1e-6)
    throw numeric_error("discrete Gauss-Bonnet failed on the background mesh");
  return mesh;
}

}  // namespace curvlab
