#pragma once

#include <cstdint>
#include <vector>

namespace sphandle {

// Finite quandle on {0..n-1} given by its Cayley table, table[x][y] = x |> y.
struct FiniteQuandle {
  int n = 0;
  std::vector<std::vector<int>> table;

  int op(int x, int y) const { return table[x][y]; }

  // Inverse of the column map S_y; requires Q2 to be meaningful.
  int op_inverse(int x, int y) const;
};

// Witnesses are the smallest offending tuples, at most one per axiom.
struct AxiomReport {
  bool q1_ok = true;
  bool q2_ok = true;
  bool q3_ok = true;
  std::vector<std::vector<int>> violations;

  bool all_ok() const { return q1_ok && q2_ok && q3_ok; }
};

struct FiniteQuandleHom {
  FiniteQuandle source;
  FiniteQuandle target;
  std::vector<int> map;
};

struct HomReport {
  bool ok = true;
  std::vector<std::vector<int>> violations;  // pairs (x, y) with f(x|>y) != f(x)|>f(y)
};

FiniteQuandle dihedral(int n);
FiniteQuandle trivial(int n);

// Exhaustive check of Q1-Q3 over all tuples.  Malformed tables (out-of-range
// entries, ragged rows) raise MalformedInput.
AxiomReport check_axioms(const FiniteQuandle& q);

bool is_involutory(const FiniteQuandle& q);

HomReport check_hom(const FiniteQuandleHom& h);

struct InnerGroup {
  std::size_t order = 0;
  std::vector<std::vector<int>> generators;  // S_y as permutations, y = 0..n-1
  std::vector<std::vector<int>> elements;    // the full closure
};

// Closure of {S_y} under composition by breadth-first multiplication.
InnerGroup inner_automorphism_group(const FiniteQuandle& q);

// True iff a |> b = a for all a, b in the given subset.
bool image_is_trivial_subquandle(const std::vector<int>& colors, const FiniteQuandle& q);

}  // namespace sphandle
