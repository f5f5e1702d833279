#include "densecvx/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace densecvx {

namespace {

bool lex_less(const IntPoint3& a, const IntPoint3& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0;
  if (int c = cmp(a.y, b.y); c != 0) return c < 0;
  return cmp(a.z, b.z) < 0;
}

struct NormalKeyLess {
  bool operator()(const IntPoint3& a, const IntPoint3& b) const { return lex_less(a, b); }
};

struct Face {
  std::array<int, 3> v{};
  std::array<int, 3> nb{-1, -1, -1};  // nb[e] lies across edge v[e] -> v[e+1]
  IntPoint3 normal;
  BigInt offset;
  bool alive = true;
  std::vector<int> conflicts;
};

// Randomized incremental hull with a full conflict graph. Visibility is
// strict, so points on the current boundary are dropped; the triangulation
// can still keep boundary points inserted earlier, which is why extreme
// vertices are recovered afterwards from the incident facet planes.
class Hull3Builder {
 public:
  Hull3Builder(const std::vector<IntPoint3>& pts, std::span<const int> order)
      : pts_(pts), point_faces_(pts.size()), processed_(pts.size(), 0),
        point_stamp_(pts.size(), 0) {
    build_tetrahedron(order.subspan(0, 4));
    for (int q : order.subspan(4)) {
      for (int f = 0; f < static_cast<int>(faces_.size()); ++f) add_if_visible(f, q);
    }
    for (int p : order.subspan(4)) insert(p);
  }

  std::vector<const Face*> alive_faces() const {
    std::vector<const Face*> out;
    for (const auto& f : faces_) {
      if (f.alive) out.push_back(&f);
    }
    return out;
  }

 private:
  bool visible(const Face& f, const IntPoint3& q) {
    mpz_mul(tmp_.get_mpz_t(), f.normal.x.get_mpz_t(), q.x.get_mpz_t());
    mpz_addmul(tmp_.get_mpz_t(), f.normal.y.get_mpz_t(), q.y.get_mpz_t());
    mpz_addmul(tmp_.get_mpz_t(), f.normal.z.get_mpz_t(), q.z.get_mpz_t());
    return mpz_cmp(tmp_.get_mpz_t(), f.offset.get_mpz_t()) > 0;
  }

  void add_if_visible(int f, int q) {
    if (visible(faces_[f], pts_[q])) {
      faces_[f].conflicts.push_back(q);
      point_faces_[q].push_back(f);
    }
  }

  int make_face(int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    f.normal = plane_normal(pts_[a], pts_[b], pts_[c]);
    f.offset = dot(f.normal, pts_[a]);
    faces_.push_back(std::move(f));
    face_stamp_.push_back(0);
    return static_cast<int>(faces_.size()) - 1;
  }

  void build_tetrahedron(std::span<const int> t) {
    int a = t[0], b = t[1], c = t[2], d = t[3];
    if (orient3d(pts_[a], pts_[b], pts_[c], pts_[d]) > 0) std::swap(b, c);
    // With d below plane(a, b, c) all four faces below are outward.
    make_face(a, b, c);
    make_face(a, d, b);
    make_face(b, d, c);
    make_face(c, d, a);
    std::map<std::pair<int, int>, int> edge_owner;
    for (int f = 0; f < 4; ++f) {
      for (int e = 0; e < 3; ++e) edge_owner[{faces_[f].v[e], faces_[f].v[(e + 1) % 3]}] = f;
    }
    for (int f = 0; f < 4; ++f) {
      for (int e = 0; e < 3; ++e) {
        faces_[f].nb[e] = edge_owner.at({faces_[f].v[(e + 1) % 3], faces_[f].v[e]});
      }
    }
    for (int i : t) processed_[i] = 1;
  }

  struct HorizonEdge {
    int u, w, removed, kept;
  };

  void insert(int p) {
    processed_[p] = 1;
    std::vector<int> visible_faces;
    for (int f : point_faces_[p]) {
      if (faces_[f].alive) visible_faces.push_back(f);
    }
    point_faces_[p].clear();
    point_faces_[p].shrink_to_fit();
    if (visible_faces.empty()) return;

    ++stamp_;
    for (int f : visible_faces) face_stamp_[f] = stamp_;

    std::vector<HorizonEdge> horizon;
    for (int f : visible_faces) {
      for (int e = 0; e < 3; ++e) {
        int g = faces_[f].nb[e];
        if (face_stamp_[g] != stamp_) {
          horizon.push_back({faces_[f].v[e], faces_[f].v[(e + 1) % 3], f, g});
        }
      }
    }

    std::unordered_map<int, int> starts_at, ends_at;
    std::vector<int> created;
    created.reserve(horizon.size());
    for (const auto& h : horizon) {
      int nf = make_face(h.u, h.w, p);
      faces_[nf].nb[0] = h.kept;
      Face& kept = faces_[h.kept];
      for (int e = 0; e < 3; ++e) {
        if (kept.v[e] == h.w && kept.v[(e + 1) % 3] == h.u) kept.nb[e] = nf;
      }
      starts_at[h.u] = nf;
      ends_at[h.w] = nf;
      created.push_back(nf);
    }
    for (std::size_t i = 0; i < created.size(); ++i) {
      Face& f = faces_[created[i]];
      f.nb[1] = starts_at.at(f.v[1]);
      f.nb[2] = ends_at.at(f.v[0]);

      // A point sees the new face only if it saw one of the two faces
      // that met along the horizon edge.
      ++conflict_stamp_;
      for (int source : {horizon[i].removed, horizon[i].kept}) {
        for (int q : faces_[source].conflicts) {
          if (processed_[q] || point_stamp_[q] == conflict_stamp_) continue;
          point_stamp_[q] = conflict_stamp_;
          if (visible(f, pts_[q])) {
            f.conflicts.push_back(q);
            point_faces_[q].push_back(created[i]);
          }
        }
      }
    }

    for (int f : visible_faces) {
      faces_[f].alive = false;
      std::vector<int>().swap(faces_[f].conflicts);
    }
  }

  const std::vector<IntPoint3>& pts_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> point_faces_;
  std::vector<char> processed_;
  std::vector<unsigned> face_stamp_;
  std::vector<unsigned> point_stamp_;
  unsigned stamp_ = 0;
  unsigned conflict_stamp_ = 0;
  BigInt tmp_;
};

void rotate_to_min(std::vector<std::size_t>& cycle, const std::vector<std::size_t>& rank) {
  auto it = std::min_element(cycle.begin(), cycle.end(),
                             [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::rotate(cycle.begin(), it, cycle.end());
}

void fan_triangulate(ConvexHull& hull) {
  for (const auto& f : hull.facets) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) hull.triangles.push_back({f[0], f[i], f[i + 1]});
  }
}

ConvexHull planar_hull(const std::vector<IntPoint3>& pts, const std::vector<std::size_t>& ids,
                       const IntPoint3& normal, const std::vector<std::size_t>& rank) {
  const BigInt* nc[3] = {&normal.x, &normal.y, &normal.z};
  int drop = 0;
  for (int a = 1; a < 3; ++a) {
    if (mpz_cmpabs(nc[a]->get_mpz_t(), nc[drop]->get_mpz_t()) > 0) drop = a;
  }
  auto coord = [&](std::size_t id, int axis) -> const BigInt& {
    const IntPoint3& p = pts[id];
    return axis == 0 ? p.x : axis == 1 ? p.y : p.z;
  };
  const int ua = (drop + 1) % 3, va = (drop + 2) % 3;

  std::vector<std::size_t> sorted = ids;
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    if (int c = cmp(coord(a, ua), coord(b, ua)); c != 0) return c < 0;
    return cmp(coord(a, va), coord(b, va)) < 0;
  });
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    BigInt d = (coord(a, ua) - coord(o, ua)) * (coord(b, va) - coord(o, va)) -
               (coord(a, va) - coord(o, va)) * (coord(b, ua) - coord(o, ua));
    return sgn(d);
  };
  std::vector<std::size_t> chain;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = chain.size();
    for (std::size_t id : sorted) {
      while (chain.size() >= base + 2 && turn(chain[chain.size() - 2], chain.back(), id) <= 0) {
        chain.pop_back();
      }
      chain.push_back(id);
    }
    chain.pop_back();
    std::reverse(sorted.begin(), sorted.end());
  }
  if (sgn(*nc[drop]) < 0) std::reverse(chain.begin(), chain.end());

  ConvexHull hull;
  hull.dimension = 2;
  hull.vertices = chain;
  std::sort(hull.vertices.begin(), hull.vertices.end());
  rotate_to_min(chain, rank);
  hull.facets.push_back(std::move(chain));
  fan_triangulate(hull);
  return hull;
}

}  // namespace

std::size_t ConvexHull::edge_count() const {
  switch (dimension) {
    case 0: return 0;
    case 1: return 1;
    case 2: return facets.empty() ? 0 : facets.front().size();
    default: {
      std::size_t total = 0;
      for (const auto& f : facets) total += f.size();
      return total / 2;
    }
  }
}

ConvexHull convex_hull_3d(const ScaledPoints& scaled) {
  const auto& pts = scaled.points;
  ConvexHull hull;
  if (pts.empty()) return hull;

  std::vector<std::size_t> by_lex(pts.size());
  std::iota(by_lex.begin(), by_lex.end(), std::size_t{0});
  std::stable_sort(by_lex.begin(), by_lex.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(pts[a], pts[b]); });
  std::vector<std::size_t> rank(pts.size());
  std::vector<std::size_t> distinct;  // first index of each distinct point, lexicographic
  for (std::size_t r = 0; r < by_lex.size(); ++r) {
    rank[by_lex[r]] = r;
    if (r == 0 || !(pts[by_lex[r - 1]] == pts[by_lex[r]])) distinct.push_back(by_lex[r]);
  }

  const std::size_t i0 = distinct.front();
  if (distinct.size() == 1) {
    hull.dimension = 0;
    hull.vertices = {i0};
    return hull;
  }
  const std::size_t i1 = distinct[1];
  const IntPoint3 dir = pts[i1] - pts[i0];

  auto it2 = std::find_if(distinct.begin() + 2, distinct.end(),
                          [&](std::size_t i) { return !is_zero(cross(dir, pts[i] - pts[i0])); });
  if (it2 == distinct.end()) {
    hull.dimension = 1;
    hull.vertices = {distinct.front(), distinct.back()};
    std::sort(hull.vertices.begin(), hull.vertices.end());
    return hull;
  }
  const std::size_t i2 = *it2;
  const IntPoint3 normal = plane_normal(pts[i0], pts[i1], pts[i2]);
  auto it3 = std::find_if(distinct.begin() + 2, distinct.end(),
                          [&](std::size_t i) { return sgn(dot(normal, pts[i] - pts[i0])) != 0; });
  if (it3 == distinct.end()) return planar_hull(pts, distinct, normal, rank);
  const std::size_t i3 = *it3;

  // Work on the distinct points only; local ids index into `work`.
  std::vector<IntPoint3> work;
  work.reserve(distinct.size());
  std::vector<std::size_t> original;
  original.reserve(distinct.size());
  std::vector<int> order;
  for (std::size_t i : {i0, i1, i2, i3}) {
    order.push_back(static_cast<int>(work.size()));
    work.push_back(pts[i]);
    original.push_back(i);
  }
  std::vector<int> rest;
  for (std::size_t i : distinct) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    rest.push_back(static_cast<int>(work.size()));
    work.push_back(pts[i]);
    original.push_back(i);
  }
  std::mt19937_64 shuffle_rng(0x5eedc0deULL);
  std::shuffle(rest.begin(), rest.end(), shuffle_rng);
  order.insert(order.end(), rest.begin(), rest.end());

  Hull3Builder builder(work, order);
  const auto faces = builder.alive_faces();

  // Group triangles by facet plane; a convex polytope has one facet per
  // outward normal direction.
  std::map<IntPoint3, int, NormalKeyLess> plane_ids;
  std::vector<int> face_plane(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto [it, inserted] = plane_ids.try_emplace(primitive(faces[f]->normal), static_cast<int>(plane_ids.size()));
    face_plane[f] = it->second;
  }

  // A boundary point is extreme iff it lies on at least three facets.
  std::unordered_map<int, std::vector<int>> incident_planes;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int v : faces[f]->v) {
      auto& list = incident_planes[v];
      if (std::find(list.begin(), list.end(), face_plane[f]) == list.end()) list.push_back(face_plane[f]);
    }
  }
  std::vector<char> extreme(work.size(), 0);
  for (const auto& [v, planes] : incident_planes) {
    if (planes.size() >= 3) {
      extreme[v] = 1;
      hull.vertices.push_back(original[v]);
    }
  }
  std::sort(hull.vertices.begin(), hull.vertices.end());

  std::vector<std::vector<std::size_t>> groups(plane_ids.size());
  for (std::size_t f = 0; f < faces.size(); ++f) groups[face_plane[f]].push_back(f);
  for (const auto& group : groups) {
    std::map<std::pair<int, int>, int> edges;
    for (std::size_t f : group) {
      for (int e = 0; e < 3; ++e) edges[{faces[f]->v[e], faces[f]->v[(e + 1) % 3]}] = 1;
    }
    std::unordered_map<int, int> next;
    for (const auto& [edge, unused] : edges) {
      if (!edges.contains({edge.second, edge.first})) next[edge.first] = edge.second;
    }
    std::vector<std::size_t> cycle;
    const int start = next.begin()->first;
    int cur = start;
    do {
      if (extreme[cur]) cycle.push_back(original[cur]);
      cur = next.at(cur);
    } while (cur != start);
    rotate_to_min(cycle, rank);
    hull.facets.push_back(std::move(cycle));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                  [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
            });
  hull.dimension = 3;
  fan_triangulate(hull);
  return hull;
}

ConvexHull convex_hull_3d(std::span<const RationalPoint3> points) {
  return convex_hull_3d(scale_to_integers(points));
}

ConvexHull convex_hull_3d(const PointCloud& cloud) { return convex_hull_3d(std::span(cloud.points())); }

}  // namespace densecvx
