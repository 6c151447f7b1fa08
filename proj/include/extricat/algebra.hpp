#pragma once

#include "extricat/exactlin.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace extricat {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

// Finite acyclic quiver. Vertex and arrow labels are unique; the vertex
// order is the one given at construction and fixes all coordinates.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& label) const;
    void validate() const; // throws on duplicate labels or oriented cycles
};

// A path is a composable arrow sequence read left to right: {a, b} is
// "first a, then b". An empty sequence is the trivial path at src_vertex.
struct Path {
    int src_vertex = 0;
    std::vector<int> arrows;

    int target(const Quiver& q) const;
    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path& o) const = default;
    bool operator<(const Path& o) const;
};

// F_p-linear combination of parallel paths of length >= 2.
struct Relation {
    std::vector<std::pair<unsigned, Path>> terms; // coefficient, path
};

// Bound quiver algebra kQ/I with a fixed residue basis of paths per
// (source, target) pair. Immutable after build_algebra.
class Algebra {
public:
    const Quiver& quiver() const { return quiver_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }

    int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
    int dim() const;

    // Residue-class basis paths from s to t, in the canonical path order.
    const std::vector<Path>& basis_paths(int s, int t) const;

    // Coordinates of (path extended by arrow a) in basis_paths(s, target(a)).
    // `idx` indexes basis_paths(s, src(a)).
    Vec compose_with_arrow(int s, int idx, int a) const;

    // Deterministic content hash covering quiver, relations and field.
    std::string content_key() const;

    friend std::shared_ptr<const Algebra> build_algebra(const Quiver&, const std::vector<Relation>&,
                                                        const FieldSpec&);

private:
    Quiver quiver_;
    FieldSpec field_;
    std::vector<Relation> relations_;

    struct PairData {
        std::vector<Path> all_paths;        // every path s -> t, canonical order
        Mat ideal_rref;                     // echelon rows over all_paths coordinates
        std::vector<int> ideal_pivots;
        std::vector<Path> basis;            // non-pivot paths
        std::vector<int> basis_coords;      // coordinate of each basis path in all_paths
        std::map<Path, int> path_index;
    };
    // keyed by s * n + t
    std::vector<PairData> pairs_;

    const PairData& pair(int s, int t) const;
    Vec reduce(int s, int t, const std::map<Path, unsigned>& combo) const;
};

std::shared_ptr<const Algebra> build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                             const FieldSpec& f);

} // namespace extricat
