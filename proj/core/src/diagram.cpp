#include "okh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace okh {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Numeric labels first (by value), then the rest lexicographically.
bool label_less(const std::string& a, const std::string& b) {
  const bool na = all_digits(a), nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    const auto strip = [](const std::string& s) {
      const auto p = s.find_first_not_of('0');
      return p == std::string::npos ? std::string("0") : s.substr(p);
    };
    const std::string sa = strip(a), sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

struct RawCrossing {
  std::array<std::string, 4> labels;
  int declared_sign = 0;
  int line = 0;
};

struct RawMarking {
  std::string arc;
  Rational alpha, beta1, beta2;
  int position = 0;
  int line = 0;
  int column = 0;
};

class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an arc label");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

Rational rational_token(LineScanner& s) {
  const std::string t = s.token();
  try {
    return parse_rational(t);
  } catch (const std::invalid_argument& e) {
    s.fail("bad rational '" + t + "': " + e.what());
  }
}

struct SlotRef {
  int crossing;
  int slot;
};

// Both endpoints of every arc as (crossing, slot); unknot arcs have none.
std::vector<std::vector<SlotRef>> arc_ends(const MarkedDiagram& d) {
  std::vector<std::vector<SlotRef>> ends(d.arc_count());
  for (int k = 0; k < d.crossing_count(); ++k) {
    for (int p = 0; p < 4; ++p) ends[d.crossings[k].arcs[p]].push_back({k, p});
  }
  return ends;
}

SlotRef other_end(const std::vector<std::vector<SlotRef>>& ends, const MarkedDiagram& d,
                  SlotRef at) {
  const auto& e = ends[d.crossings[at.crossing].arcs[at.slot]];
  if (e[0].crossing == at.crossing && e[0].slot == at.slot) return e[1];
  return e[0];
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Orients every component and derives crossing signs.
void orient(MarkedDiagram& d, const std::vector<int>& declared) {
  const auto ends = arc_ends(d);
  const int n = d.crossing_count();
  // entry[k][strand] = slot through which the oriented strand enters crossing k,
  // strand 0 is the under-strand (slots 0/2), strand 1 the over-strand (1/3).
  std::vector<std::array<int, 2>> entry(n, {-1, -1});
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});

  for (int a = 0; a < d.arc_count(); ++a) {
    if (ends[a].empty()) continue;
    const SlotRef start = ends[a][0];
    if (seen[start.crossing][start.slot]) continue;
    // Walk the component entering crossings; record entries.
    std::vector<SlotRef> entries;
    SlotRef cur = start;
    do {
      entries.push_back(cur);
      seen[cur.crossing][cur.slot] = true;
      const SlotRef exit{cur.crossing, (cur.slot + 2) % 4};
      seen[exit.crossing][exit.slot] = true;
      cur = other_end(ends, d, exit);
    } while (!(cur.crossing == start.crossing && cur.slot == start.slot));

    int direction = 0;  // +1 keep, -1 reverse
    for (const auto& e : entries) {
      if (e.slot % 2 != 0) continue;
      const int dir = e.slot == 0 ? 1 : -1;
      if (direction != 0 && dir != direction) {
        throw ValidationError("under-strand directions disagree along a component");
      }
      direction = dir;
    }
    if (direction == 0) {
      // Only over-passes: fall back on declared signs, else keep the traversal.
      for (const auto& e : entries) {
        const int want = declared[e.crossing];
        if (want == 0) continue;
        const int dir = (e.slot == 3) == (want > 0) ? 1 : -1;
        if (direction != 0 && dir != direction) {
          throw ValidationError("declared signs disagree along a component");
        }
        direction = dir;
      }
      if (direction == 0) direction = 1;
    }
    for (const auto& e : entries) {
      const int slot = direction > 0 ? e.slot : (e.slot + 2) % 4;
      entry[e.crossing][e.slot % 2] = slot;
    }
  }

  d.n_plus = d.n_minus = 0;
  for (int k = 0; k < n; ++k) {
    const int s = entry[k][1] == 3 ? 1 : -1;
    if (declared[k] != 0 && declared[k] != s) {
      throw ValidationError("crossing " + std::to_string(k) + ": declared sign does not match orientation");
    }
    d.crossings[k].sign = s;
    (s > 0 ? d.n_plus : d.n_minus) += 1;
  }
}

}  // namespace

int MarkedDiagram::arc_index(std::string_view label) const {
  for (int i = 0; i < arc_count(); ++i) {
    if (arc_labels[i] == label) return i;
  }
  return -1;
}

Rational MarkedDiagram::total_alpha() const {
  Rational s = 0;
  for (const auto& m : markings) s += m.alpha;
  return s;
}

MarkedDiagram parse_pd(std::string_view text) {
  std::vector<RawCrossing> raw;
  std::vector<RawMarking> marks;
  int unknots = 0;
  bool unknots_seen = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineScanner s(line, line_no);
    if (s.done()) continue;

    if (s.peek() == 'X') {
      s.expect('X');
      s.expect('[');
      RawCrossing c;
      c.line = line_no;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) s.expect(',');
        c.labels[i] = s.label();
      }
      s.expect(']');
      if (!s.done()) {
        const std::string t = s.token();
        if (t == "sign=+") {
          c.declared_sign = 1;
        } else if (t == "sign=-") {
          c.declared_sign = -1;
        } else {
          s.fail("expected sign=+ or sign=-, got '" + t + "'");
        }
      }
      if (!s.done()) s.fail("trailing characters after crossing");
      raw.push_back(std::move(c));
      continue;
    }

    const std::string keyword = s.token();
    if (keyword == "mark") {
      RawMarking m;
      m.line = line_no;
      m.column = s.column();
      m.arc = s.label();
      m.alpha = rational_token(s);
      m.beta1 = rational_token(s);
      m.beta2 = rational_token(s);
      if (!s.done()) {
        const std::string t = s.token();
        if (!all_digits(t)) s.fail("expected a marking position, got '" + t + "'");
        m.position = std::stoi(t);
      }
      if (!s.done()) s.fail("trailing characters after marking");
      marks.push_back(std::move(m));
    } else if (keyword == "unknots") {
      if (unknots_seen) s.fail("duplicate unknots line");
      unknots_seen = true;
      const std::string t = s.token();
      if (!all_digits(t)) s.fail("expected a component count");
      unknots = std::stoi(t);
      if (!s.done()) s.fail("trailing characters after unknots");
    } else {
      throw ParseError(line_no, 1, "unknown directive '" + keyword + "'");
    }
  }

  std::map<std::string, int> uses;
  for (const auto& c : raw) {
    for (const auto& l : c.labels) ++uses[l];
  }
  for (const auto& [label, count] : uses) {
    if (count != 2) {
      throw ValidationError("arc '" + label + "' used " + std::to_string(count) + " times");
    }
  }
  std::vector<std::string> labels;
  for (const auto& [label, count] : uses) labels.push_back(label);
  for (int i = 1; i <= unknots; ++i) {
    const std::string l = "o" + std::to_string(i);
    if (uses.count(l)) throw ValidationError("label '" + l + "' is reserved for crossingless unknots");
    labels.push_back(l);
  }
  if (raw.empty() && !unknots_seen && marks.empty()) {
    // An empty document is the crossingless unknot.
    labels.push_back("o1");
  } else if (raw.empty() && unknots == 0 && !marks.empty()) {
    throw ValidationError("markings given but the diagram has no arcs");
  }
  std::sort(labels.begin(), labels.end(), label_less);

  MarkedDiagram d;
  d.arc_labels = labels;
  std::vector<int> declared;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    Crossing c;
    c.id = static_cast<int>(k);
    for (int p = 0; p < 4; ++p) c.arcs[p] = d.arc_index(raw[k].labels[p]);
    d.crossings.push_back(c);
    declared.push_back(raw[k].declared_sign);
  }
  for (const auto& m : marks) {
    const int arc = d.arc_index(m.arc);
    if (arc < 0) throw ValidationError("marking on unknown arc '" + m.arc + "'");
    if (m.alpha != m.beta1 + m.beta2) {
      throw ValidationError("marking on '" + m.arc + "' violates alpha = beta1 + beta2");
    }
    d.markings.push_back({arc, m.position, m.alpha, m.beta1, m.beta2});
  }
  orient(d, declared);
  return d;
}

std::string to_pd(const MarkedDiagram& d) {
  std::ostringstream out;
  int unknots = 0;
  std::vector<int> used(d.arc_count(), 0);
  for (const auto& c : d.crossings) {
    out << "X[" << d.arc_labels[c.arcs[0]] << ',' << d.arc_labels[c.arcs[1]] << ','
        << d.arc_labels[c.arcs[2]] << ',' << d.arc_labels[c.arcs[3]] << "] sign="
        << (c.sign > 0 ? '+' : '-') << '\n';
    for (int a : c.arcs) used[a] = 1;
  }
  for (int a = 0; a < d.arc_count(); ++a) unknots += used[a] ? 0 : 1;
  if (unknots > 0 && !(d.crossings.empty() && unknots == 1 && d.markings.empty())) {
    out << "unknots " << unknots << '\n';
  }
  for (const auto& m : d.markings) {
    out << "mark " << d.arc_labels[m.arc] << ' ' << to_string(m.alpha) << ' '
        << to_string(m.beta1) << ' ' << to_string(m.beta2);
    if (m.position != 0) out << ' ' << m.position;
    out << '\n';
  }
  return out.str();
}

Resolution resolution_from_index(std::uint64_t index, int n) {
  Resolution r(n);
  for (int k = 0; k < n; ++k) r[k] = static_cast<std::uint8_t>((index >> k) & 1U);
  return r;
}

int smoothing_partner(int slot, int bit) {
  if (bit == 0) return slot ^ 1;
  return 3 - slot;
}

StateCircles resolve_state(const MarkedDiagram& d, const Resolution& r) {
  if (static_cast<int>(r.size()) != d.crossing_count()) {
    throw std::invalid_argument("resolution length differs from crossing count");
  }
  UnionFind uf(d.arc_count());
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto& a = d.crossings[k].arcs;
    const int p = smoothing_partner(0, r[k]);
    uf.unite(a[0], a[p]);
    int q = 1;
    while (q == p) ++q;
    uf.unite(a[q], a[smoothing_partner(q, r[k])]);
  }
  StateCircles s;
  s.circle_of_arc.assign(d.arc_count(), -1);
  std::vector<int> circle_of_root(d.arc_count(), -1);
  for (int a = 0; a < d.arc_count(); ++a) {
    const int root = uf.find(a);
    if (circle_of_root[root] < 0) circle_of_root[root] = s.c++;
    s.circle_of_arc[a] = circle_of_root[root];
  }
  s.eps_f.assign(s.c, 0);
  s.eps_h1.assign(s.c, 0);
  s.eps_h2.assign(s.c, 0);
  for (const auto& m : d.markings) {
    const int i = s.circle_of_arc[m.arc];
    s.eps_f[i] += m.alpha;
    s.eps_h1[i] += m.beta1;
    s.eps_h2[i] += m.beta2;
  }
  return s;
}

SaddleDescriptor saddle_info(const MarkedDiagram& d, const Resolution& r, int k) {
  if (k < 0 || k >= d.crossing_count()) throw std::out_of_range("saddle_info: crossing index");
  if (r[k] != 0) throw std::invalid_argument("saddle_info: crossing already 1-resolved");
  Resolution r1 = r;
  r1[k] = 1;
  const StateCircles src = resolve_state(d, r);
  const StateCircles dst = resolve_state(d, r1);
  const auto& arcs = d.crossings[k].arcs;

  SaddleDescriptor s;
  s.target.assign(src.c, -1);
  for (int a = 0; a < d.arc_count(); ++a) {
    const int i = src.circle_of_arc[a];
    if (s.target[i] < 0) s.target[i] = dst.circle_of_arc[a];
  }
  const int ca = src.circle_of_arc[arcs[0]];
  const int cb = src.circle_of_arc[arcs[2]];
  if (ca != cb) {
    s.kind = SaddleKind::Merge;
    s.source_a = std::min(ca, cb);
    s.source_b = std::max(ca, cb);
    s.y = dst.circle_of_arc[arcs[0]];
  } else {
    s.kind = SaddleKind::Split;
    s.source_y = ca;
    s.y1 = dst.circle_of_arc[arcs[0]];  // joined to slot 3 in the 1-smoothing
    s.y2 = dst.circle_of_arc[arcs[1]];  // joined to slot 2
    s.target[ca] = s.y1;
  }
  return s;
}

Rational nu_of_state(const MarkedDiagram& d, const Resolution& r) {
  int weight = 0;
  for (auto b : r) weight += b;
  const int c = resolve_state(d, r).c;
  return Rational(d.crossing_count() - weight - c, 2);
}

namespace {

struct Passage {
  int crossing;
  int from;
  int to;
};

std::vector<Passage> walk_circle(const MarkedDiagram& d, const Resolution& r,
                                 const std::vector<std::vector<SlotRef>>& ends, SlotRef start) {
  std::vector<Passage> out;
  SlotRef cur = start;
  do {
    const int to = smoothing_partner(cur.slot, r[cur.crossing]);
    out.push_back({cur.crossing, cur.slot, to});
    cur = other_end(ends, d, {cur.crossing, to});
  } while (!(cur.crossing == start.crossing && cur.slot == start.slot));
  return out;
}

}  // namespace

std::optional<int> ladybug_class(const MarkedDiagram& d, const Resolution& r, int j, int k) {
  if (r[j] != 0 || r[k] != 0 || j == k) return std::nullopt;
  const auto ends = arc_ends(d);
  const auto walk = walk_circle(d, r, ends, {j, 0});

  // Chord endpoint: the passage through slots {0,1} is the tail, {2,3} the head.
  struct Endpoint {
    int chord;  // 0 for j, 1 for k
    bool head;
    bool left;  // crossing centre on the left of the traversal
  };
  std::vector<Endpoint> pts;
  for (const auto& p : walk) {
    if (p.crossing != j && p.crossing != k) continue;
    pts.push_back({p.crossing == j ? 0 : 1, std::min(p.from, p.to) >= 2,
                   p.to == (p.from + 1) % 4});
  }
  if (pts.size() != 4) return std::nullopt;
  bool j_left = false, k_left = false;
  int jc = 0, kc = 0;
  for (const auto& p : pts) {
    if (p.chord == 0) {
      j_left = p.left;
      ++jc;
    } else {
      k_left = p.left;
      ++kc;
    }
  }
  if (jc != 2 || kc != 2) return std::nullopt;
  for (const auto& p : pts) {
    if ((p.chord == 0 ? j_left : k_left) != p.left) return std::nullopt;
  }
  if (j_left == k_left) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (pts[i].chord == pts[(i + 1) % 4].chord) return std::nullopt;  // not interleaved
  }
  if (!j_left) std::reverse(pts.begin(), pts.end());
  for (int i = 0; i < 4; ++i) {
    if (pts[i].chord == 0 && pts[i].head) return pts[(i + 1) % 4].head ? 1 : 0;
  }
  return std::nullopt;
}

}  // namespace okh
