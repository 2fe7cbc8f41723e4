#include <doctest.h>

#include <fstream>
#include <sstream>

#include "altknot/analysis.hpp"
#include "altknot/diagram.hpp"
#include "altknot/error.hpp"
#include "altknot/generator.hpp"
#include "altknot/overlay.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace altknot;

namespace {

std::string kind_of(const std::string& pd) {
  try {
    parse_pd(pd);
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::string corpus_text() {
  std::ifstream in(ALTKNOT_CORPUS);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("trefoil parses with V=3, E=6, F=5") {
  Diagram d = parse_pd(fx::trefoil);
  ValidationReport r = validate_diagram(d);
  CHECK(r.valid);
  CHECK(r.v == 3);
  CHECK(r.e == oracle::edge_count(fx::trefoil));
  CHECK(r.f == oracle::face_count(fx::trefoil));
  CHECK(r.v - r.e + r.f == 2);
  CHECK(d.num_components() == 1);
}

TEST_CASE("zero-crossing loop") {
  Diagram d = parse_pd("O(1)");
  CHECK(d.num_crossings() == 0);
  CHECK(d.num_components() == 1);
  CHECK(faces(d).faces.size() == 2);
  CHECK(end_labels(d).empty());
  CHECK(serialize_pd(d) == "O(1)");
}

TEST_CASE("parse errors") {
  CHECK(kind_of("X(1,2,3,4)") == "IncidenceError");
  CHECK(kind_of("X(1,2,3") == "SyntaxError");
  CHECK(kind_of("Y(1,2,3,4)") == "SyntaxError");
  // Swapping two slots of a record turns the sphere into a torus.
  CHECK(kind_of("X(1,4,5,2) X(3,6,4,1) X(5,2,6,3)") == "SphericityError");
  CHECK(kind_of("X(4,1,2,5) X(3,6,4,1) X(5,2,6,3)") == "SphericityError");
  CHECK(kind_of("X(1,2,4,5) X(3,6,4,1) X(5,2,6,3)") == "OrientationError");
  try {
    parse_pd("X(1,2,3,4)");
  } catch (const Error& e) {
    CHECK(e.error_class() == ErrorClass::Input);
  }
}

TEST_CASE("serialization") {
  CHECK(serialize_pd(parse_pd(fx::trefoil)) == fx::trefoil);
  CHECK(serialize_pd(Diagram{}).empty());
  CHECK(serialize_pd(flip_crossing(parse_pd(fx::trefoil), 1)) == fx::flipped_trefoil);
}

TEST_CASE("label consistency failure") {
  Diagram t = parse_pd(fx::trefoil);
  auto cs = t.crossing_specs();
  cs[0].over = {true, true, false, false};
  ValidationReport r = validate_diagram(Diagram::assemble(cs, t.edge_specs()));
  CHECK_FALSE(r.valid);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].find("labels") != std::string::npos);
}

TEST_CASE("faces of trefoil, loop and Hopf link") {
  FaceMap fm = faces(parse_pd(fx::trefoil));
  int bigons = 0, triangles = 0;
  for (const auto& f : fm.faces) {
    bigons += f.degree() == 2;
    triangles += f.degree() == 3;
  }
  CHECK(fm.faces.size() == 5);
  CHECK(bigons == 3);
  CHECK(triangles == 2);

  Diagram h = parse_pd(fx::hopf);
  FaceMap hf = faces(h);
  CHECK(hf.faces.size() == 4);
  for (const auto& f : hf.faces) CHECK(f.degree() == 2);
  CHECK(h.num_components() == 2);
}

TEST_CASE("end labels") {
  Diagram t = parse_pd(fx::trefoil);
  for (const auto& [e, l] : end_labels(t)) CHECK(l.first != l.second);

  auto fl = end_labels(parse_pd(fx::flipped_trefoil));
  CHECK(fl.at(1) == std::pair{Sign::Plus, Sign::Plus});
  CHECK(fl.at(2) == std::pair{Sign::Plus, Sign::Plus});
  CHECK(fl.at(4) == std::pair{Sign::Minus, Sign::Minus});
  CHECK(fl.at(5) == std::pair{Sign::Minus, Sign::Minus});
  CHECK(fl.at(3).first != fl.at(3).second);
  CHECK(fl.at(6).first != fl.at(6).second);
}

TEST_CASE("flip_crossing") {
  Diagram t = parse_pd(fx::trefoil);
  for (const auto& c : t.crossings()) {
    Diagram f = flip_crossing(t, c.id);
    CHECK(serialize_pd(flip_crossing(f, c.id)) == fx::trefoil);
    std::set<int> incident;
    for (int s = 0; s < 4; ++s) incident.insert(t.edge(c.edge[s]).id);
    CHECK(oracle::non_alternating(serialize_pd(f)) == incident);
    CHECK(classify_edges(f).non_alternating == incident);
  }
  try {
    flip_crossing(Diagram{}, 1);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "UnknownCrossing");
  }
}

TEST_CASE("subdividing edges") {
  Diagram t = parse_pd(fx::trefoil);
  // Edge 1 runs from its + end to a - end; a point with e_sign - near the
  // + end leaves an alternating first half.
  auto [ov, p] = subdivide_edge_with_crossing(t, Overlay{}, 1, 0, Sign::Minus, 0.5);
  auto labels = piece_labels(t, ov, 1);
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].first == end_labels(t).at(1).first);
  CHECK(labels[0].first != labels[0].second);
  CHECK(labels[1].first == Sign::Minus);

  auto [ov2, q] = subdivide_edge_with_crossing(t, ov, 1, 0, Sign::Plus, 0.75);
  CHECK(q == p + 1);
  CHECK(ov2.points_on(1).size() == 2);
  for (int i : ov2.points_on(1)) CHECK(ov2.points[i].origin == 1);

  Diagram f = parse_pd(fx::flipped_trefoil);
  Sign forced = forced_sign(f, Overlay{}, 1, 0.5);
  CHECK(forced == Sign::Minus);
  auto [ov3, r] = subdivide_edge_with_crossing(f, Overlay{}, 1, 0, forced, 0.5);
  for (const auto& [a, b] : piece_labels(f, ov3, 1)) CHECK(a != b);

  CHECK_THROWS_AS(subdivide_edge_with_crossing(t, Overlay{}, 99, 0, Sign::Plus, 0.5), Error);
  CHECK_THROWS_AS(subdivide_edge_with_crossing(t, Overlay{}, 1, 0, Sign::Plus, 1.0), Error);
  CHECK_THROWS_AS(subdivide_edge_with_crossing(t, ov, 1, 0, Sign::Plus, 0.5), Error);
}

TEST_CASE("corpus round trip and face oracle") {
  auto entries = split_corpus(corpus_text());
  REQUIRE(entries.size() >= 10);
  for (const auto& e : entries) {
    CAPTURE(e.name);
    Diagram d = parse_pd(e.pd);
    std::string text = serialize_pd(d);
    CHECK(serialize_pd(parse_pd(text)) == text);
    CHECK(same_map(parse_pd(text), d));
    CHECK(validate_diagram(d).valid);
    if (d.loops().empty()) {
      CHECK(static_cast<int>(faces(d).faces.size()) == oracle::face_count(text));
      CHECK(classify_edges(d).non_alternating == oracle::non_alternating(text));
    }
  }
}

TEST_CASE("generated diagrams against the face and label oracles") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    Diagram d = generate_random_diagram(seed, 6 + static_cast<int>(seed % 20), static_cast<int>(seed % 3)).diagram;
    std::string text = serialize_pd(d);
    CHECK(static_cast<int>(faces(d).faces.size()) == oracle::face_count(text));
    auto na = oracle::non_alternating(text);
    CHECK(classify_edges(d).non_alternating == na);
    CHECK(na.size() % 2 == 0);
    for (const auto& c : d.crossings()) {
      int changes = 0;
      for (int s = 0; s < 4; ++s) changes += c.label(s) != c.label(s + 1);
      CHECK(changes == 4);
    }
  }
}
