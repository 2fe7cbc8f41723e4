#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "altknot/diagram.hpp"
#include "altknot/error.hpp"

namespace altknot {

namespace {

struct Record {
  char kind = 'X';
  std::vector<int> args;
};

class PdLexer {
 public:
  explicit PdLexer(const std::string& text) : text_(text) {}

  std::vector<Record> records() {
    std::vector<Record> out;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      char k = text_[pos_];
      if (k != 'X' && k != 'O') fail("expected X( or O(");
      ++pos_;
      skip_spaces();
      expect('(');
      Record r;
      r.kind = k;
      for (;;) {
        skip_spaces();
        r.args.push_back(number());
        skip_spaces();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      if (k == 'X' && r.args.size() != 4) fail("X record needs four edge labels");
      if (k == 'O' && r.args.size() != 1) fail("O record needs one label");
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    long v = std::stol(text_.substr(start, pos_ - start));
    if (v <= 0 || v > 1'000'000'000) fail("edge label out of range");
    return static_cast<int>(v);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("SyntaxError", msg + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd_unchecked(const std::string& text) {
  std::vector<Record> recs = PdLexer(text).records();

  std::vector<CrossingSpec> crossings;
  std::vector<LoopSpec> loops;
  std::map<int, std::vector<std::pair<int, int>>> occ;  // edge -> (crossing index, slot)
  for (const auto& r : recs) {
    if (r.kind == 'O') {
      loops.push_back(LoopSpec{r.args[0], r.args[0], false});
      continue;
    }
    CrossingSpec c;
    c.id = static_cast<int>(crossings.size()) + 1;
    c.over = {false, true, false, true};
    for (int s = 0; s < 4; ++s) {
      c.edge_ids[s] = r.args[s];
      occ[r.args[s]].emplace_back(static_cast<int>(crossings.size()), s);
    }
    crossings.push_back(c);
  }
  for (const auto& l : loops)
    if (occ.count(l.id))
      throw input_error("IncidenceError", "label " + std::to_string(l.id) + " used by both O and X records");
  for (const auto& [eid, v] : occ)
    if (v.size() != 2)
      throw input_error("IncidenceError", "edge " + std::to_string(eid) + " appears " + std::to_string(v.size()) +
                                              " times (expected 2)");

  // Orient each strand. Under-strand slots fix the direction: slot 0 is
  // incoming, slot 2 outgoing. Strands that only pass over take the direction
  // leaving the first occurrence of their smallest label.
  std::map<int, std::pair<int, int>> tail;  // edge -> (crossing index, slot)
  auto other_occ = [&](int eid, std::pair<int, int> here) {
    const auto& v = occ.at(eid);
    return v[0] == here ? v[1] : v[0];
  };
  for (const auto& [start_edge, v] : occ) {
    if (tail.count(start_edge)) continue;
    std::vector<std::pair<int, std::pair<int, int>>> walk;  // (edge, departure)
    int agree = 0, disagree = 0;
    std::pair<int, int> dep = v[0];
    int eid = start_edge;
    for (;;) {
      std::pair<int, int> arr = other_occ(eid, dep);
      walk.emplace_back(eid, dep);
      if (dep.second == 2) ++agree;
      if (dep.second == 0) ++disagree;
      if (arr.second == 0) ++agree;
      if (arr.second == 2) ++disagree;
      std::pair<int, int> next_dep{arr.first, (arr.second + 2) & 3};
      int next_edge = crossings[arr.first].edge_ids[next_dep.second];
      if (next_edge == start_edge && next_dep == v[0]) break;
      eid = next_edge;
      dep = next_dep;
      if (walk.size() > 4 * crossings.size() + 4)
        throw input_error("SyntaxError", "strand through edge " + std::to_string(start_edge) + " does not close");
    }
    if (agree > 0 && disagree > 0)
      throw input_error("OrientationError",
                        "under-strand directions disagree along the strand through edge " + std::to_string(start_edge));
    bool reverse = disagree > 0;
    for (const auto& [e, d] : walk) tail[e] = reverse ? other_occ(e, d) : d;
  }

  std::vector<EdgeSpec> edges;
  for (const auto& [eid, t] : tail) edges.push_back(EdgeSpec{eid, eid, false, crossings[t.first].id, t.second});
  return Diagram::assemble(std::move(crossings), std::move(edges), std::move(loops));
}

Diagram parse_pd(const std::string& text) {
  Diagram d = parse_pd_unchecked(text);
  FaceMap fm = faces(d);
  PieceCensus pc = piece_census(d, fm);
  for (int p = 0; p < pc.pieces; ++p) {
    int chi = pc.v[p] - pc.e[p] + pc.f[p];
    if (chi != 2)
      throw input_error("SphericityError",
                        "rotation system is not spherical: V-E+F = " + std::to_string(chi) + " on piece " +
                            std::to_string(p));
  }
  return d;
}

std::string serialize_pd(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : d.crossings()) {
    int start = 0;
    for (int s = 0; s < 4; ++s) {
      if (!c.over[s] && c.end[s] == 1) {
        start = s;
        break;
      }
    }
    os << (first ? "" : " ") << "X(";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << d.edge(c.edge[(start + k) & 3]).id;
    os << ")";
    first = false;
  }
  for (const auto& l : d.loops()) {
    os << (first ? "" : " ") << "O(" << l.id << ")";
    first = false;
  }
  return os.str();
}

std::vector<CorpusEntry> split_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream is(text);
  std::string line;
  CorpusEntry cur;
  bool has_content = false;
  int lineno = 0;
  auto flush = [&] {
    if (has_content) {
      if (cur.name.empty()) cur.name = "diagram" + std::to_string(out.size() + 1);
      out.push_back(cur);
    }
    cur = CorpusEntry{};
    has_content = false;
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    std::string body = line.substr(first);
    if (body[0] == '#') {
      auto p = body.find("name:");
      if (p != std::string::npos) {
        if (has_content) flush();
        std::string n = body.substr(p + 5);
        n.erase(0, n.find_first_not_of(" \t"));
        while (!n.empty() && std::isspace(static_cast<unsigned char>(n.back()))) n.pop_back();
        cur.name = n;
        cur.line = lineno;
      }
      continue;
    }
    if (!has_content && cur.line == 0) cur.line = lineno;
    cur.pd += (cur.pd.empty() ? "" : " ") + body;
    has_content = true;
  }
  flush();
  return out;
}

}  // namespace altknot
