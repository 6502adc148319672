#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgs/errors.hpp"

namespace mgs {

using Vertex = int;  // mutable vertices are labeled 1..n

enum class VertexColor { Green, Red };

// Loop-free, 2-cycle-free directed multigraph on vertices 1..n, stored as the
// signed multiplicity matrix b(i,j) = #(i->j) - #(j->i). Skew-symmetry makes
// the 2-cycle cancellation step of mutation automatic.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n);
  Quiver(int n, const std::vector<std::pair<Vertex, Vertex>>& arrows);

  int size() const { return n_; }

  int arrow(Vertex i, Vertex j) const;  // b(i,j)
  void set_arrow(Vertex i, Vertex j, int mult);
  void add_arrow(Vertex i, Vertex j, int mult = 1);

  // Fomin-Zelevinsky mutation at k. Pure; the receiver is unchanged.
  Quiver mutated(Vertex k) const;

  // Arrows as (tail, head, multiplicity), row-major order, mult > 0.
  std::vector<std::pair<std::pair<Vertex, Vertex>, int>> arrows() const;

  bool operator==(const Quiver&) const = default;

 private:
  friend class Seed;
  int n_ = 0;
  std::vector<int> b_;

  int idx(Vertex i, Vertex j) const { return (i - 1) * n_ + (j - 1); }
  void check_vertex(Vertex k) const;
};

inline Quiver mutate(const Quiver& q, Vertex k) { return q.mutated(k); }

// A quiver plus the frozen-arrow block reached from a framed seed:
// c(j,i) = #(j' -> i) - #(i -> j') for frozen j' and mutable i. The frozen
// vertices themselves are never mutated and carry no arrows between them.
class Seed {
 public:
  Seed() = default;
  Seed(Quiver q, std::vector<int> c);

  const Quiver& quiver() const { return q_; }
  int size() const { return q_.size(); }

  int frozen_arrow(Vertex frozen_j, Vertex i) const;  // c(j,i)

  // Mutation of the extended matrix at a mutable vertex k.
  Seed mutated(Vertex k) const;

  // Green iff column i of c is <= 0, red iff >= 0. A mixed-sign column means
  // the seed is not reachable from a framed seed: IntegrityError.
  VertexColor color(Vertex i) const;
  bool all_red() const;
  bool all_green() const;

  // Deterministic byte encoding of the extended matrix; equal seeds give
  // equal keys and vice versa. Used to deduplicate search states.
  std::string canonical_key() const;

  bool operator==(const Seed&) const = default;

 private:
  Quiver q_;
  std::vector<int> c_;  // row-major: c_[(j-1)*n + (i-1)]
};

Seed frame(const Quiver& q);    // c = -I, all vertices green
Seed coframe(const Quiver& q);  // c = +I, all vertices red

// True iff some permutation of the mutable vertices maps a onto b while
// fixing every frozen vertex.
bool is_isomorphic_fixing_frozen(const Seed& a, const Seed& b);

}  // namespace mgs
