#include <ostream>

#include <fmt/format.h>

#include "hosvd3/cli.hpp"

namespace hosvd3::cli {
namespace {

using Point = std::array<double, 3>;

Point lerp(const Point& a, const Point& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
}

void add_line(std::vector<MeshVertex>& mesh, const std::string& name, const Point& from, const Point& to,
              std::size_t resolution) {
  for (std::size_t i = 0; i < resolution; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
    mesh.push_back({name, 0, i, lerp(from, to, t)});
  }
}

// Splits triangle (p0, p1, p2) into (resolution−1)² congruent triangles,
// numbering parts from `first_part`. Returns the next free part index.
std::size_t add_triangle(std::vector<MeshVertex>& mesh, const std::string& name, const Point& p0,
                         const Point& p1, const Point& p2, std::size_t resolution, std::size_t first_part) {
  const std::size_t n = resolution - 1;
  auto at = [&](std::size_t i, std::size_t j) {
    const double u = static_cast<double>(i) / static_cast<double>(n);
    const double v = static_cast<double>(j) / static_cast<double>(n);
    return Point{p0[0] + u * (p1[0] - p0[0]) + v * (p2[0] - p0[0]),
                 p0[1] + u * (p1[1] - p0[1]) + v * (p2[1] - p0[1]),
                 p0[2] + u * (p1[2] - p0[2]) + v * (p2[2] - p0[2])};
  };
  std::size_t part = first_part;
  auto emit = [&](const Point& a, const Point& b, const Point& c) {
    mesh.push_back({name, part, 0, a});
    mesh.push_back({name, part, 1, b});
    mesh.push_back({name, part, 2, c});
    ++part;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      emit(at(i, j), at(i + 1, j), at(i, j + 1));
      if (i + j + 1 < n) emit(at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
    }
  }
  return part;
}

// The plane s_a = s_b inside the polytope: corners (½,½,½), (¾,¾,½), (1,1,1), (½,½,1)
// written with the free coordinate in slot `other`.
void add_slice_plane(std::vector<MeshVertex>& mesh, const std::string& name, std::size_t other,
                     std::size_t resolution) {
  auto embed = [other](double equal, double free) {
    Point p{equal, equal, equal};
    p[other] = free;
    return p;
  };
  const Point a = embed(0.5, 0.5);
  const Point b = embed(0.75, 0.5);
  const Point c = embed(1.0, 1.0);
  const Point d = embed(0.5, 1.0);
  const std::size_t next = add_triangle(mesh, name, a, b, c, resolution, 0);
  add_triangle(mesh, name, a, c, d, resolution, next);
}

}  // namespace

std::vector<MeshVertex> polytope_mesh(std::size_t resolution) {
  if (resolution < 2) throw InputError("mesh resolution must be at least 2");
  std::vector<MeshVertex> mesh;
  const Point low{0.5, 0.5, 0.5};
  const Point top{1.0, 1.0, 1.0};

  add_line(mesh, "diagonal", low, top, resolution);
  add_line(mesh, "case2_line_1", low, {1.0, 0.5, 0.5}, resolution);
  add_line(mesh, "case2_line_2", low, {0.5, 1.0, 0.5}, resolution);
  add_line(mesh, "case2_line_3", low, {0.5, 0.5, 1.0}, resolution);
  add_line(mesh, "biseparable_A_BC", {1.0, 0.5, 0.5}, top, resolution);
  add_line(mesh, "biseparable_B_CA", {0.5, 1.0, 0.5}, top, resolution);
  add_line(mesh, "biseparable_C_AB", {0.5, 0.5, 1.0}, top, resolution);

  add_slice_plane(mesh, "slice_plane_s1", 2, resolution);
  add_slice_plane(mesh, "slice_plane_s2", 1, resolution);
  add_slice_plane(mesh, "slice_plane_s3", 0, resolution);

  add_triangle(mesh, "facet_12_3", top, {0.5, 1.0, 0.5}, {1.0, 0.5, 0.5}, resolution, 0);
  add_triangle(mesh, "facet_13_2", top, {0.5, 0.5, 1.0}, {1.0, 0.5, 0.5}, resolution, 0);
  add_triangle(mesh, "facet_23_1", top, {0.5, 1.0, 0.5}, {0.5, 0.5, 1.0}, resolution, 0);

  add_triangle(mesh, "lower_face_1", low, {0.5, 1.0, 0.5}, {0.5, 0.5, 1.0}, resolution, 0);
  add_triangle(mesh, "lower_face_2", low, {1.0, 0.5, 0.5}, {0.5, 0.5, 1.0}, resolution, 0);
  add_triangle(mesh, "lower_face_3", low, {1.0, 0.5, 0.5}, {0.5, 1.0, 0.5}, resolution, 0);
  return mesh;
}

void write_mesh(std::ostream& out, const std::vector<MeshVertex>& mesh) {
  out << "element,part,vertex,s1,s2,s3\n";
  std::string buf;
  for (const auto& v : mesh) {
    buf.clear();
    fmt::format_to(std::back_inserter(buf), "{},{},{},{:.12g},{:.12g},{:.12g}\n", v.element, v.part, v.vertex, v.s[0],
                   v.s[1], v.s[2]);
    out << buf;
  }
}

}  // namespace hosvd3::cli
