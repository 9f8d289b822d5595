#pragma once

#include <array>
#include <string>
#include <vector>

#include "repknot/errors.hpp"
#include "repknot/intlinalg.hpp"
#include "repknot/words.hpp"

namespace repknot {

// Arc-level view of a crossing; ids are 0-based arc indices.
struct CrossingRef {
  int over_arc;
  int under_in_arc;
  int under_out_arc;
  int sign;  // +1 or -1
};

// Edge-level view: slot_edge[k] holds the 1-based PD edge label at slot k.
// Slots are listed counterclockwise around the crossing with slot 0 the
// incoming under-edge and slot 2 the outgoing under-edge.  sign +1 means the
// over-strand runs slot 3 -> slot 1, sign -1 means slot 1 -> slot 3.
struct EdgeCrossing {
  std::array<int, 4> slot_edge;
  int sign;
  bool operator==(const EdgeCrossing&) const = default;
};

// Combinatorial oriented link diagram.  The arc-level data (crossings, arcs,
// components) is what the Wirtinger presentation consumes; the edge-level
// planar map is retained for face tracing, checkerboard forms and rendering.
struct LinkDiagram {
  std::vector<CrossingRef> crossings;
  std::vector<int> arc_component;  // arc id -> component id
  int n_components = 0;
  std::string source_notation;

  std::vector<EdgeCrossing> edge_crossings;  // parallel to `crossings`
  int n_edges = 0;                           // labels 1..n_edges
  std::vector<int> edge_component;           // label-1 -> component id
  std::vector<int> edge_arc;                 // label-1 -> arc id
  std::vector<int> edge_succ;                // label-1 -> next label downstream
  int n_free_loops = 0;  // crossing-free components; they still carry one arc each

  int n_arcs() const { return static_cast<int>(arc_component.size()); }
  int n_crossings() const { return static_cast<int>(crossings.size()); }

  bool structurally_equal(const LinkDiagram& o) const {
    return edge_crossings == o.edge_crossings && n_edges == o.n_edges &&
           n_free_loops == o.n_free_loops && edge_succ == o.edge_succ;
  }
};

// Notation:
//   X(a,b,c,d) terms, comma separated, optionally prefixed "PD:".  a is the
//   incoming under-edge and edges are listed so that the crossing is positive
//   exactly when the over-strand runs b -> d (the KnotInfo-compatible rule:
//   d = b+1 up to the per-component wraparound).  Labels 1..2n increase along
//   the orientation of each component.  `U` terms add crossing-free unknot
//   components; the bare string "U" is the 0-crossing unknot.
//   BR[n; k1,...,km] is the closure of the braid word, letters in +-(1..n-1);
//   a positive letter is a positive crossing between strands |k| and |k|+1.
LinkDiagram parse_notation(const std::string& text);
LinkDiagram parse_pd(const std::string& text);
LinkDiagram parse_braid(const std::string& text);

// Canonical PD text; parse_pd(render(d)) reproduces d structurally.
std::string render(const LinkDiagram& d);

// Half the signed count of crossings between two distinct components.
int linking_number(const LinkDiagram& d, int c1, int c2);

int writhe(const LinkDiagram& d);
bool is_connected(const LinkDiagram& d);

// Checkerboard incidence form of one connected piece plus the correction term
// of the Gordon-Litherland signature formula.
struct GoeritzPiece {
  IntMatrix matrix;      // white-region form with the seed region deleted
  long long correction;  // sum of eta over type II crossings
  long long det;         // determinant of `matrix` (empty matrix: 1)
  int signature;         // sym_signature(matrix) - correction
};

struct GoeritzData {
  bool disconnected = false;
  std::vector<GoeritzPiece> pieces;  // one per split piece (free loops included)
  long long det() const;             // 0 when disconnected
  int signature() const;             // additive over split pieces
};

GoeritzData goeritz(const LinkDiagram& d);

// Untwisted longitude of one component as a word in arc meridians: the
// over-arcs passed under along the component, corrected by base^(-writhe).
Word longitude_word(const LinkDiagram& d, int component);

}  // namespace repknot
