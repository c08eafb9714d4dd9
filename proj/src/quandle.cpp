#include "sphandle/quandle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sphandle/error.hpp"

namespace sphandle {

namespace {

void validate_table(const FiniteQuandle& q) {
  if (q.n < 1) fail(ErrorKind::InvalidSize, "quandle size must be >= 1");
  if (static_cast<int>(q.table.size()) != q.n) {
    fail(ErrorKind::MalformedInput, "table row count != n");
  }
  for (int x = 0; x < q.n; ++x) {
    if (static_cast<int>(q.table[x].size()) != q.n) {
      fail(ErrorKind::MalformedInput, "table row length != n");
    }
    for (int y = 0; y < q.n; ++y) {
      const int v = q.table[x][y];
      if (v < 0 || v >= q.n) {
        std::ostringstream msg;
        msg << "table[" << x << "][" << y << "] = " << v << " out of range";
        fail(ErrorKind::MalformedInput, msg.str());
      }
    }
  }
}

}  // namespace

int FiniteQuandle::op_inverse(int x, int y) const {
  for (int s = 0; s < n; ++s) {
    if (table[s][y] == x) return s;
  }
  fail(ErrorKind::MalformedInput, "op_inverse: column is not a permutation");
}

FiniteQuandle dihedral(int n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "dihedral: n must be >= 1");
  FiniteQuandle q;
  q.n = n;
  q.table.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      q.table[x][y] = ((2 * y - x) % n + n) % n;
    }
  }
  return q;
}

FiniteQuandle trivial(int n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "trivial: n must be >= 1");
  FiniteQuandle q;
  q.n = n;
  q.table.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) q.table[x][y] = x;
  }
  return q;
}

AxiomReport check_axioms(const FiniteQuandle& q) {
  validate_table(q);
  AxiomReport rep;

  for (int x = 0; x < q.n && rep.q1_ok; ++x) {
    if (q.table[x][x] != x) {
      rep.q1_ok = false;
      rep.violations.push_back({x});
    }
  }

  for (int y = 0; y < q.n && rep.q2_ok; ++y) {
    std::vector<bool> hit(q.n, false);
    for (int x = 0; x < q.n; ++x) hit[q.table[x][y]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      rep.q2_ok = false;
      // witness: the column, identified by y and a missing value
      const int missing =
          static_cast<int>(std::find(hit.begin(), hit.end(), false) - hit.begin());
      rep.violations.push_back({missing, y});
    }
  }

  for (int x = 0; x < q.n && rep.q3_ok; ++x) {
    for (int y = 0; y < q.n && rep.q3_ok; ++y) {
      for (int z = 0; z < q.n && rep.q3_ok; ++z) {
        const int lhs = q.table[q.table[x][y]][z];
        const int rhs = q.table[q.table[x][z]][q.table[y][z]];
        if (lhs != rhs) {
          rep.q3_ok = false;
          rep.violations.push_back({x, y, z});
        }
      }
    }
  }
  return rep;
}

bool is_involutory(const FiniteQuandle& q) {
  validate_table(q);
  for (int x = 0; x < q.n; ++x) {
    for (int y = 0; y < q.n; ++y) {
      if (q.table[q.table[x][y]][y] != x) return false;
    }
  }
  return true;
}

HomReport check_hom(const FiniteQuandleHom& h) {
  validate_table(h.source);
  validate_table(h.target);
  if (static_cast<int>(h.map.size()) != h.source.n) {
    fail(ErrorKind::MalformedInput, "hom map length != source.n");
  }
  for (int v : h.map) {
    if (v < 0 || v >= h.target.n) {
      fail(ErrorKind::MalformedInput, "hom map value out of target range");
    }
  }
  HomReport rep;
  for (int x = 0; x < h.source.n; ++x) {
    for (int y = 0; y < h.source.n; ++y) {
      if (h.map[h.source.op(x, y)] != h.target.op(h.map[x], h.map[y])) {
        rep.ok = false;
        rep.violations.push_back({x, y});
      }
    }
  }
  return rep;
}

InnerGroup inner_automorphism_group(const FiniteQuandle& q) {
  validate_table(q);
  InnerGroup g;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;

  for (int y = 0; y < q.n; ++y) {
    std::vector<int> s(q.n);
    for (int x = 0; x < q.n; ++x) s[x] = q.table[x][y];
    g.generators.push_back(s);
    if (seen.insert(s).second) frontier.push_back(s);
  }

  // BFS closure under composition with the generators.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& s : g.generators) {
        std::vector<int> c(q.n);
        for (int x = 0; x < q.n; ++x) c[x] = s[p[x]];
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }

  g.elements.assign(seen.begin(), seen.end());
  g.order = g.elements.size();
  return g;
}

bool image_is_trivial_subquandle(const std::vector<int>& colors, const FiniteQuandle& q) {
  for (int a : colors) {
    if (a < 0 || a >= q.n) fail(ErrorKind::MalformedInput, "color out of range");
  }
  for (int a : colors) {
    for (int b : colors) {
      if (q.op(a, b) != a) return false;
    }
  }
  return true;
}

}  // namespace sphandle
