#include "repknot/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace repknot {

namespace {

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Split on commas that are not inside parentheses.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(strip(cur));
  return out;
}

long long parse_int(const std::string& s, const char* what) {
  std::string t = strip(s);
  if (t.empty()) throw MalformedNotation(std::string("empty ") + what);
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw MalformedNotation(std::string("bad ") + what + " '" + t + "'");
  }
  if (pos != t.size()) throw MalformedNotation(std::string("bad ") + what + " '" + t + "'");
  return v;
}

struct Passage {
  int in_edge = 0, out_edge = 0;  // 1-based labels
  bool over = false;
  int crossing = -1;
};

// Shared tail of diagram construction: derive components, arcs and the
// arc-level crossing list from the edge-level map, validating as we go.
void finalize(LinkDiagram& d) {
  int n = d.n_edges;
  if (static_cast<int>(d.edge_succ.size()) != n)
    throw NonPlanarOrInconsistent("successor relation incomplete");
  // succ must be a bijection on 1..n
  std::vector<int> indeg(n, 0);
  for (int e = 0; e < n; ++e) {
    int t = d.edge_succ[e];
    if (t < 1 || t > n) throw NonPlanarOrInconsistent("successor out of range");
    ++indeg[t - 1];
  }
  for (int e = 0; e < n; ++e)
    if (indeg[e] != 1) throw NonPlanarOrInconsistent("broken strand cycles");

  // cycles; every cycle must be a consecutive label block with a single wrap
  d.edge_component.assign(n, -1);
  int n_cycles = 0;
  for (int e0 = 0; e0 < n; ++e0) {
    if (d.edge_component[e0] >= 0) continue;
    int comp = n_cycles++;
    int lo = e0 + 1, hi = e0 + 1, count = 0;
    int e = e0 + 1;
    do {
      d.edge_component[e - 1] = comp;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
      ++count;
      e = d.edge_succ[e - 1];
    } while (e != e0 + 1);
    if (count != hi - lo + 1)
      throw NonPlanarOrInconsistent("component labels are not a consecutive block");
    for (int x = lo; x <= hi; ++x)
      if (d.edge_component[x - 1] != comp)
        throw NonPlanarOrInconsistent("component labels are not a consecutive block");
    for (int x = lo; x < hi; ++x)
      if (d.edge_succ[x - 1] != x + 1)
        throw NonPlanarOrInconsistent("labels do not increase along orientation");
    if (d.edge_succ[hi - 1] != lo) throw NonPlanarOrInconsistent("missing wraparound");
  }
  d.n_components = n_cycles + d.n_free_loops;

  // passage bookkeeping: each edge leaves through exactly one crossing slot
  std::vector<int> under_out(n, 0), over_out(n, 0);
  for (const EdgeCrossing& c : d.edge_crossings) {
    for (int s = 0; s < 4; ++s)
      if (c.slot_edge[s] < 1 || c.slot_edge[s] > n)
        throw NonPlanarOrInconsistent("crossing references unknown edge");
    int ui = c.slot_edge[0], uo = c.slot_edge[2];
    int oi = c.sign > 0 ? c.slot_edge[3] : c.slot_edge[1];
    int oo = c.sign > 0 ? c.slot_edge[1] : c.slot_edge[3];
    if (under_out[ui - 1]++ || over_out[oi - 1]++)
      throw NonPlanarOrInconsistent("edge leaves through two passages");
    if (d.edge_succ[ui - 1] != uo || d.edge_succ[oi - 1] != oo)
      throw NonPlanarOrInconsistent("passage contradicts successor relation");
  }
  for (int e = 0; e < n; ++e)
    if (under_out[e] + over_out[e] != 1)
      throw NonPlanarOrInconsistent("edge does not pass through exactly one crossing exit");

  // arcs: edges merge with their successor across over-passages
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int e = 0; e < n; ++e)
    if (over_out[e]) unite(e, d.edge_succ[e] - 1);

  std::map<int, int> arc_id;  // root -> arc index, ordered by smallest edge
  for (int e = 0; e < n; ++e) arc_id.emplace(find(e), 0);
  int next_arc = 0;
  for (auto& [root, id] : arc_id) id = next_arc++;
  d.edge_arc.assign(n, -1);
  for (int e = 0; e < n; ++e) d.edge_arc[e] = arc_id[find(e)];

  d.arc_component.assign(next_arc + d.n_free_loops, -1);
  for (int e = 0; e < n; ++e) d.arc_component[d.edge_arc[e]] = d.edge_component[e];
  for (int l = 0; l < d.n_free_loops; ++l) d.arc_component[next_arc + l] = n_cycles + l;

  d.crossings.clear();
  for (const EdgeCrossing& c : d.edge_crossings) {
    CrossingRef r;
    r.under_in_arc = d.edge_arc[c.slot_edge[0] - 1];
    r.under_out_arc = d.edge_arc[c.slot_edge[2] - 1];
    int oa = d.edge_arc[c.slot_edge[1] - 1];
    int ob = d.edge_arc[c.slot_edge[3] - 1];
    if (oa != ob) throw NonPlanarOrInconsistent("over-strand edges lie on different arcs");
    r.over_arc = oa;
    r.sign = c.sign;
    d.crossings.push_back(r);
  }
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  std::string body = strip(text);
  if (body.rfind("PD:", 0) == 0) body = strip(body.substr(3));
  if (body.empty()) throw MalformedNotation("empty notation");

  LinkDiagram d;
  d.source_notation = text;
  std::vector<std::array<int, 4>> quads;
  for (const std::string& term : split_terms(body)) {
    if (term == "U" || term == "u") {
      ++d.n_free_loops;
      continue;
    }
    if (term.size() < 3 || (term[0] != 'X' && term[0] != 'x'))
      throw MalformedNotation("expected X(a,b,c,d) or U, got '" + term + "'");
    size_t open = term.find('(');
    if (open == std::string::npos || term.back() != ')')
      throw MalformedNotation("expected X(a,b,c,d), got '" + term + "'");
    std::string inner = term.substr(open + 1, term.size() - open - 2);
    auto parts = split_terms(inner);
    if (parts.size() != 4) throw MalformedNotation("crossing needs 4 labels: '" + term + "'");
    std::array<int, 4> q;
    for (int i = 0; i < 4; ++i) {
      long long v = parse_int(parts[i], "edge label");
      if (v < 1) throw MalformedNotation("edge labels must be positive");
      q[i] = static_cast<int>(v);
    }
    quads.push_back(q);
  }

  int n = 2 * static_cast<int>(quads.size());
  d.n_edges = n;
  std::vector<int> occur(n + 1, 0);
  for (auto& q : quads)
    for (int v : q) {
      if (v > n) throw NonPlanarOrInconsistent("edge label exceeds 2 * crossings");
      ++occur[v];
    }
  for (int v = 1; v <= n; ++v)
    if (occur[v] != 2) throw NonPlanarOrInconsistent("each label must appear exactly twice");

  // successor relation: under-passages a -> c are given; over-direction is
  // inferred from which endpoint already has its exit taken, falling back to
  // the label convention (adjacent: ascending; otherwise block wraparound).
  std::vector<int> succ(n, 0);
  auto set_succ = [&](int from, int to) {
    if (succ[from - 1]) throw NonPlanarOrInconsistent("edge leaves twice");
    succ[from - 1] = to;
  };
  for (auto& q : quads) set_succ(q[0], q[2]);
  std::vector<int> over_in(quads.size());
  for (size_t t = 0; t < quads.size(); ++t) {
    int b = quads[t][1], dd = quads[t][3];
    bool b_taken = succ[b - 1] != 0, d_taken = succ[dd - 1] != 0;
    int from, to;
    if (b_taken && d_taken) throw NonPlanarOrInconsistent("over-strand has no free exit");
    if (b_taken) {
      from = dd;
      to = b;
    } else if (d_taken) {
      from = b;
      to = dd;
    } else if (b + 1 == dd) {
      from = b;
      to = dd;
    } else if (dd + 1 == b) {
      from = dd;
      to = b;
    } else {
      from = std::max(b, dd);
      to = std::min(b, dd);  // wraparound runs from the block max to the min
    }
    set_succ(from, to);
    over_in[t] = from;
  }
  d.edge_succ = succ;

  for (size_t t = 0; t < quads.size(); ++t) {
    EdgeCrossing c;
    // X(a,b,c,d) lists edges clockwise in our internal orientation, so the
    // counterclockwise slot order is a, d, c, b.
    c.slot_edge = {quads[t][0], quads[t][3], quads[t][2], quads[t][1]};
    c.sign = (over_in[t] == quads[t][1]) ? +1 : -1;
    d.edge_crossings.push_back(c);
  }
  finalize(d);
  return d;
}

LinkDiagram parse_braid(const std::string& text) {
  std::string body = strip(text);
  if (body.rfind("BR", 0) != 0) throw MalformedNotation("braid notation must start with BR");
  size_t open = body.find('[');
  if (open == std::string::npos || body.back() != ']')
    throw MalformedNotation("expected BR[n; word]");
  std::string inner = body.substr(open + 1, body.size() - open - 2);
  size_t semi = inner.find(';');
  if (semi == std::string::npos) throw MalformedNotation("expected BR[n; word]");
  long long strands = parse_int(inner.substr(0, semi), "strand count");
  if (strands < 1) throw MalformedNotation("strand count must be >= 1");
  std::vector<int> word;
  std::string rest = strip(inner.substr(semi + 1));
  if (!rest.empty())
    for (const std::string& part : split_terms(rest)) {
      long long k = parse_int(part, "braid letter");
      if (k == 0 || std::llabs(k) >= strands)
        throw LetterOutOfRange("braid letter " + std::to_string(k) + " out of range for " +
                               std::to_string(strands) + " strands");
      word.push_back(static_cast<int>(k));
    }

  int n_pos = static_cast<int>(strands);
  // temporary edge ids; union-find merges the trace closure
  int n_temp = n_pos + 2 * static_cast<int>(word.size());
  std::vector<int> parent(n_temp);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<int> current(n_pos);
  std::iota(current.begin(), current.end(), 0);
  int next_edge = n_pos;
  struct TempCrossing {
    std::array<int, 4> slot;
    int sign;
  };
  std::vector<TempCrossing> temp;
  for (int k : word) {
    int p = std::abs(k) - 1;  // left position, 0-based
    int in_l = current[p], in_r = current[p + 1];
    int out_l = next_edge++, out_r = next_edge++;
    TempCrossing c;
    if (k > 0) {
      // right strand passes over: under runs TL->BR, over TR->BL
      c.slot = {in_l, out_l, out_r, in_r};
      c.sign = +1;
    } else {
      // left strand passes over: under runs TR->BL, over TL->BR
      c.slot = {in_r, in_l, out_l, out_r};
      c.sign = -1;
    }
    temp.push_back(c);
    current[p] = out_l;
    current[p + 1] = out_r;
  }
  for (int p = 0; p < n_pos; ++p) unite(current[p], p);

  LinkDiagram d;
  d.source_notation = text;
  // a class with no crossing incidence is a crossing-free loop
  std::vector<bool> used(n_temp, false);
  for (auto& c : temp)
    for (int s : c.slot) used[find(s)] = true;
  std::map<int, int> cls;  // root -> compact id
  for (int x = 0; x < n_temp; ++x) {
    int r = find(x);
    if (used[r]) cls.emplace(r, 0);
  }
  int n_classes = 0;
  for (auto& [root, id] : cls) id = n_classes++;
  // distinct untouched roots are crossing-free loops, counted once each
  d.n_free_loops = 0;
  {
    std::vector<bool> seen(n_temp, false);
    for (int p = 0; p < n_pos; ++p) {
      int r = find(p);
      if (!used[r] && !seen[r]) {
        seen[r] = true;
        ++d.n_free_loops;
      }
    }
  }

  // successor over classes, from the passages
  std::vector<int> csucc(n_classes, -1);
  for (auto& c : temp) {
    int ui = cls[find(c.slot[0])], uo = cls[find(c.slot[2])];
    int oi = c.sign > 0 ? cls[find(c.slot[3])] : cls[find(c.slot[1])];
    int oo = c.sign > 0 ? cls[find(c.slot[1])] : cls[find(c.slot[3])];
    csucc[ui] = uo;
    csucc[oi] = oo;
  }

  // canonical labels: components ordered by smallest class id, each traversed
  // from its smallest class id so labels increase along the orientation
  std::vector<int> label(n_classes, 0);
  int next_label = 1;
  std::vector<bool> in_cycle(n_classes, false);
  for (int c0 = 0; c0 < n_classes; ++c0) {
    if (in_cycle[c0]) continue;
    int c = c0;
    do {
      in_cycle[c] = true;
      c = csucc[c];
    } while (c != c0 && c >= 0);
    if (c < 0) throw NonPlanarOrInconsistent("braid closure produced a broken cycle");
    c = c0;
    do {
      label[c] = next_label++;
      c = csucc[c];
    } while (c != c0);
  }

  d.n_edges = n_classes;
  d.edge_succ.assign(n_classes, 0);
  for (int c = 0; c < n_classes; ++c) d.edge_succ[label[c] - 1] = label[csucc[c]];
  for (auto& c : temp) {
    EdgeCrossing e;
    for (int s = 0; s < 4; ++s) e.slot_edge[s] = label[cls[find(c.slot[s])]];
    e.sign = c.sign;
    d.edge_crossings.push_back(e);
  }
  finalize(d);
  return d;
}

LinkDiagram parse_notation(const std::string& text) {
  std::string body = strip(text);
  if (body.empty()) throw MalformedNotation("empty notation");
  if (body.rfind("BR", 0) == 0) return parse_braid(body);
  return parse_pd(body);
}

std::string render(const LinkDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const EdgeCrossing& c : d.edge_crossings) {
    if (!first) out << ",";
    out << "X(" << c.slot_edge[0] << "," << c.slot_edge[3] << "," << c.slot_edge[2] << ","
        << c.slot_edge[1] << ")";
    first = false;
  }
  for (int l = 0; l < d.n_free_loops; ++l) {
    if (!first) out << ",";
    out << "U";
    first = false;
  }
  return out.str();
}

int linking_number(const LinkDiagram& d, int c1, int c2) {
  if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= d.n_components || c2 >= d.n_components)
    throw UnknownComponent("components " + std::to_string(c1) + ", " + std::to_string(c2));
  int total = 0;
  for (const CrossingRef& c : d.crossings) {
    int co = d.arc_component[c.over_arc];
    int cu = d.arc_component[c.under_in_arc];
    if ((co == c1 && cu == c2) || (co == c2 && cu == c1)) total += c.sign;
  }
  assert(total % 2 == 0);
  return total / 2;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const CrossingRef& c : d.crossings) w += c.sign;
  return w;
}

namespace {

// Connected pieces of the 4-valent graph (crossings joined by shared edges).
std::vector<std::vector<int>> crossing_pieces(const LinkDiagram& d) {
  int nc = d.n_crossings();
  std::vector<std::vector<int>> edge_uses(d.n_edges);
  for (int t = 0; t < nc; ++t)
    for (int s = 0; s < 4; ++s) edge_uses[d.edge_crossings[t].slot_edge[s] - 1].push_back(t);
  std::vector<int> piece(nc, -1);
  std::vector<std::vector<int>> pieces;
  for (int t0 = 0; t0 < nc; ++t0) {
    if (piece[t0] >= 0) continue;
    int id = static_cast<int>(pieces.size());
    pieces.push_back({});
    std::vector<int> stack{t0};
    piece[t0] = id;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      pieces[id].push_back(t);
      for (int s = 0; s < 4; ++s)
        for (int u : edge_uses[d.edge_crossings[t].slot_edge[s] - 1])
          if (piece[u] < 0) {
            piece[u] = id;
            stack.push_back(u);
          }
    }
    std::sort(pieces[id].begin(), pieces[id].end());
  }
  return pieces;
}

GoeritzPiece goeritz_piece(const LinkDiagram& d, const std::vector<int>& piece) {
  GoeritzPiece out;
  if (piece.empty()) {  // crossing-free unknot piece
    out.correction = 0;
    out.det = 1;
    out.signature = 0;
    return out;
  }
  int nc = static_cast<int>(piece.size());
  std::map<int, int> local;  // global crossing idx -> local
  for (int i = 0; i < nc; ++i) local[piece[i]] = i;

  // darts are (local crossing, slot); mate = other end of the same edge
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int i = 0; i < nc; ++i)
    for (int s = 0; s < 4; ++s)
      ends[d.edge_crossings[piece[i]].slot_edge[s]].push_back({i, s});
  for (auto& [e, v] : ends)
    if (v.size() != 2) throw NonPlanarOrInconsistent("edge has wrong number of endpoints");

  auto mate = [&](std::pair<int, int> dart) {
    int e = d.edge_crossings[piece[dart.first]].slot_edge[dart.second];
    auto& v = ends[e];
    return v[0] == dart ? v[1] : v[0];
  };

  // face tracing: orbits of dart -> rotate(mate(dart))
  std::vector<std::vector<int>> corner_face(nc, std::vector<int>(4, -1));
  std::vector<std::vector<int>> dart_face(nc, std::vector<int>(4, -1));
  int n_faces = 0;
  for (int i0 = 0; i0 < nc; ++i0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (dart_face[i0][s0] >= 0) continue;
      int f = n_faces++;
      std::pair<int, int> dart{i0, s0};
      do {
        dart_face[dart.first][dart.second] = f;
        auto m = mate(dart);
        corner_face[m.first][m.second] = f;
        dart = {m.first, (m.second + 1) % 4};
      } while (dart != std::make_pair(i0, s0));
    }
  if (n_faces != nc + 2)
    throw NonPlanarOrInconsistent("face count " + std::to_string(n_faces) + " for " +
                                  std::to_string(nc) + " crossings: diagram is not planar");

  // checkerboard coloring: faces across an edge get opposite colors
  std::vector<int> color(n_faces, -1);
  // seed region: the face at the lexicographically first dart
  color[dart_face[0][0]] = 0;  // white
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nc; ++i)
      for (int s = 0; s < 4; ++s) {
        int f1 = dart_face[i][s];
        auto m = mate({i, s});
        int f2 = dart_face[m.first][m.second];
        for (int rep = 0; rep < 2; ++rep) {
          if (color[f1] >= 0 && color[f2] < 0) {
            color[f2] = 1 - color[f1];
            changed = true;
          }
          std::swap(f1, f2);
        }
        if (color[f1] >= 0 && color[f2] >= 0 && color[f1] == color[f2])
          throw NonPlanarOrInconsistent("diagram regions are not checkerboard colorable");
      }
  }

  // white-region indices, seed region first
  int seed_face = dart_face[0][0];
  std::vector<int> white_index(n_faces, -1);
  int n_white = 0;
  white_index[seed_face] = n_white++;
  for (int f = 0; f < n_faces; ++f)
    if (color[f] == 0 && white_index[f] < 0) white_index[f] = n_white++;

  IntMatrix full(n_white, std::vector<long long>(n_white, 0));
  long long mu = 0;
  for (int i = 0; i < nc; ++i) {
    const EdgeCrossing& c = d.edge_crossings[piece[i]];
    // corners 0,2 form one color pair, 1,3 the other
    assert(color[corner_face[i][0]] == color[corner_face[i][2]]);
    assert(color[corner_face[i][1]] == color[corner_face[i][3]]);
    assert(color[corner_face[i][0]] != color[corner_face[i][1]]);
    bool pair_a_white = color[corner_face[i][0]] == 0;
    long long eta = pair_a_white ? +1 : -1;
    // crossing type II exactly when eta matches the crossing sign
    if (eta == c.sign) mu += eta;
    int wi = white_index[pair_a_white ? corner_face[i][0] : corner_face[i][1]];
    int wj = white_index[pair_a_white ? corner_face[i][2] : corner_face[i][3]];
    full[wi][wi] += eta;
    full[wj][wj] += eta;
    full[wi][wj] -= eta;
    full[wj][wi] -= eta;
  }

  out.matrix.assign(n_white - 1, std::vector<long long>(n_white - 1, 0));
  for (int i = 1; i < n_white; ++i)
    for (int j = 1; j < n_white; ++j) out.matrix[i - 1][j - 1] = full[i][j];
  out.correction = mu;
  out.det = int_det(out.matrix);
  out.signature = sym_signature(out.matrix) - static_cast<int>(mu);
  return out;
}

}  // namespace

bool is_connected(const LinkDiagram& d) {
  auto pieces = crossing_pieces(d);
  int total = static_cast<int>(pieces.size()) + d.n_free_loops;
  return total <= 1 || (total == 1 && d.n_free_loops == 0);
}

GoeritzData goeritz(const LinkDiagram& d) {
  GoeritzData out;
  auto pieces = crossing_pieces(d);
  for (auto& p : pieces) out.pieces.push_back(goeritz_piece(d, p));
  for (int l = 0; l < d.n_free_loops; ++l) out.pieces.push_back(goeritz_piece(d, {}));
  if (out.pieces.empty()) out.pieces.push_back(goeritz_piece(d, {}));  // empty diagram guard
  out.disconnected = out.pieces.size() > 1;
  return out;
}

long long GoeritzData::det() const {
  if (disconnected) return 0;
  return std::llabs(pieces[0].det);
}

int GoeritzData::signature() const {
  int s = 0;
  for (const auto& p : pieces) s += p.signature;
  return s;
}

Word longitude_word(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.n_components)
    throw UnknownComponent(std::to_string(component));
  Word w;
  // start edge: smallest label on the component
  int start = -1;
  for (int e = 0; e < d.n_edges; ++e)
    if (d.edge_component[e] == component) {
      start = e + 1;
      break;
    }
  if (start < 0) return w;  // crossing-free loop: trivial longitude

  // map: under-in edge -> crossing index
  std::vector<int> under_at(d.n_edges, -1);
  for (int t = 0; t < d.n_crossings(); ++t)
    under_at[d.edge_crossings[t].slot_edge[0] - 1] = t;

  int base_arc = d.edge_arc[start - 1];
  int self_writhe = 0;
  for (const CrossingRef& c : d.crossings)
    if (d.arc_component[c.over_arc] == component &&
        d.arc_component[c.under_in_arc] == component)
      self_writhe += c.sign;

  int e = start;
  do {
    int t = under_at[e - 1];
    if (t >= 0) w.push_back({d.crossings[t].over_arc, d.crossings[t].sign});
    e = d.edge_succ[e - 1];
  } while (e != start);
  for (int k = 0; k < std::abs(self_writhe); ++k)
    w.push_back({base_arc, self_writhe > 0 ? -1 : +1});
  return w;
}

}  // namespace repknot
