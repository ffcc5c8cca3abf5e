#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsurf/torus.hpp"

namespace qsurf {

enum class ArcKind { Internal, Boundary };

struct Arc {
    int id = 0;
    ArcKind kind = ArcKind::Internal;
};

// Sides listed counterclockwise.
struct Triangle {
    std::array<int, 3> sides{};
};

class Triangulation {
  public:
    // Validates incidence, numbering and the absence of punctures.
    Triangulation(std::vector<Arc> arcs, std::vector<Triangle> triangles,
                  std::optional<IntMatrix> lambda = std::nullopt);

    static Triangulation from_json_text(const std::string& text);
    static Triangulation from_file(const std::string& path);

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::optional<IntMatrix>& lambda() const { return lambda_; }
    size_t n() const { return n_; }
    size_t m() const { return arcs_.size(); }
    bool is_internal(int arc) const { return arc >= 1 && static_cast<size_t>(arc) <= n_; }

    // Triangles containing arc, in list order.
    const std::vector<int>& triangles_of(int arc) const;
    int other_triangle(int arc, int tri) const;
    // (arc, next side counterclockwise, the one after).
    std::array<int, 3> rotated(int tri, int arc) const;
    // Side following arc counterclockwise; called clockwise of arc.
    int x_side(int tri, int arc) const { return rotated(tri, arc)[1]; }
    int y_side(int tri, int arc) const { return rotated(tri, arc)[2]; }
    int third_side(int tri, int a, int b) const;
    bool is_internal_triangle(int tri) const;

  private:
    void validate();

    std::vector<Arc> arcs_;
    std::vector<Triangle> triangles_;
    std::optional<IntMatrix> lambda_;
    size_t n_ = 0;
    std::vector<std::vector<int>> incidence_;
};

struct Arrow {
    int id = 0; // 0-based
    int source = 0;
    int target = 0;
    int triangle = 0;
    std::string name;
};

struct QuiverWithRelations {
    std::vector<int> vertices;
    std::vector<Arrow> arrows;
    // Each relation is a path of arrow ids, first arrow first.
    std::vector<std::vector<int>> relations;

    bool is_relation(int first, int second) const;
    const Arrow& arrow(int id) const { return arrows.at(static_cast<size_t>(id)); }
    std::optional<int> arrow_by_name(const std::string& name) const;
};

struct GentleReport {
    bool ok = true;
    std::string reason;
};

std::string arrow_name(int index);
QuiverWithRelations build_quiver(const Triangulation& t);
GentleReport check_gentle(const QuiverWithRelations& q);
IntMatrix b_matrix(const Triangulation& t, bool frozen_rows);

struct ArcNeighborhood {
    int arc = 0;
    int t1 = 0, t2 = 0;
    int a1 = 0, a2 = 0, a3 = 0, a4 = 0; // a1, a3 clockwise; a2, a4 counterclockwise
};
ArcNeighborhood neighborhood(const Triangulation& t, int k);

struct LambdaSolution {
    IntMatrix lambda;
    IntVector d;
};
LambdaSolution find_lambda(const IntMatrix& b_tilde, int64_t bound = 8, int64_t max_d = 8);

enum class SeedMode { Auto, Principal, Frozen };

// A triangulation together with its quiver and compatible pair. In principal
// mode the lattice is indexed by internal arcs only and boundary arcs
// evaluate to 1; in frozen mode boundary arcs are frozen generators.
struct Surface {
    std::string name;
    Triangulation triangulation;
    QuiverWithRelations quiver;
    bool frozen = false;
    CompatiblePair pair;

    size_t rank() const { return pair.m(); }
    size_t n() const { return triangulation.n(); }
    // Lattice coordinate of an arc, or -1 for a boundary arc in principal mode.
    int lattice_index(int arc) const;
    int64_t uniform_d() const;

    static Surface build(const Triangulation& t, SeedMode mode, const std::string& name = "");
};

Surface load_surface(const std::string& path, SeedMode mode = SeedMode::Auto);

} // namespace qsurf
