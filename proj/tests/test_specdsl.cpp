#include <doctest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "orbitkit/catalog.hpp"
#include "orbitkit/dsl.hpp"

using namespace orbitkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string example_path(const std::string& name) {
  return std::string(ORBITKIT_SOURCE_DIR) + "/examples/" + name;
}

}  // namespace

TEST_CASE("empty document") {
  dsl::ParseResult pr = dsl::parse("");
  CHECK(pr.ok());
  CHECK(pr.doc.decls.empty());
  CHECK(dsl::parse("  # only a comment\n").ok());
}

TEST_CASE("so(3) source elaborates bit-identically to the catalog algebra") {
  const char* src =
      "algebra k { basis e1 e2 e3 "
      "bracket [e1,e2] = e3 bracket [e1,e3] = -e2 bracket [e2,e3] = e1 }";
  dsl::Elaboration el = dsl::load(src);
  REQUIRE(el.ok());
  const LieAlgebra& got = el.algebras.at("k");
  CHECK(got == build_fixture("se3").sd.k());
}

TEST_CASE("bracket of an element with itself is rejected with a span") {
  dsl::ParseResult pr = dsl::parse(
      "algebra k { basis e1 e2 bracket [e1,e1] = e2 }");
  REQUIRE(pr.ok());
  dsl::Elaboration el = dsl::elaborate(pr.doc);
  REQUIRE(!el.ok());
  CHECK(el.diagnostics.front().message ==
        "bracket of a basis element with itself must be zero");
  CHECK(el.diagnostics.front().span.line1 == 1);
}

TEST_CASE("reversed bracket order and duplicates are rejected") {
  dsl::Elaboration el =
      dsl::load("algebra k { basis e1 e2 e3 bracket [e2,e1] = e3 }");
  REQUIRE(!el.ok());
  CHECK(el.diagnostics.front().message ==
        "declare brackets with the earlier basis element first");

  dsl::Elaboration el2 = dsl::load(
      "algebra k { basis e1 e2 e3 bracket [e1,e2] = e3 bracket [e1,e2] = e3 }");
  REQUIRE(!el2.ok());
  CHECK(el2.diagnostics.front().message == "duplicate bracket definition");
}

TEST_CASE("Jacobi violations point at the offending declarations") {
  dsl::Elaboration el = dsl::load(read_file(example_path("bad_jacobi.lie")));
  REQUIRE(!el.ok());
  bool found = false;
  for (const auto& d : el.diagnostics)
    if (d.message.find("Jacobi identity violated on (e1, e2, e3)") == 0) found = true;
  CHECK(found);
}

TEST_CASE("rep shape and homomorphism diagnostics") {
  dsl::Elaboration el = dsl::load(
      "algebra k { basis e1 }\n"
      "rep r on k dim 2 { e1 -> [1,0; 0,1; 0,0] }\n");
  REQUIRE(!el.ok());
  CHECK(el.diagnostics.front().message.find("rows, expected 2") != std::string::npos);

  // so(3) with one perturbed matrix: homomorphism violation
  dsl::Elaboration el2 = dsl::load(
      "algebra k { basis e1 e2 e3 bracket [e1,e2] = e3 bracket [e1,e3] = -e2 "
      "bracket [e2,e3] = e1 }\n"
      "rep r on k dim 3 { e1 -> [0,0,0; 0,0,-1; 0,1,0] "
      "e2 -> [0,0,1; 0,0,0; -1,0,0] e3 -> [0,-1,0; 1,0,0; 0,0,1] }\n");
  REQUIRE(!el2.ok());
  bool found = false;
  for (const auto& d : el2.diagnostics)
    if (d.message.find("homomorphism violated") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("unknown and forward references are diagnosed") {
  CHECK(!dsl::load("product g = k x r").ok());
  CHECK(!dsl::load("rep r on nowhere dim 2 { }").ok());
  CHECK(!dsl::load("algebra k { basis e1 bracket [e1,e9] = e1 }").ok());
  CHECK(!dsl::load("point n in g* { f = e1; p = v1 }").ok());
  // declaration order matters: rep before its algebra is an error
  CHECK(!dsl::load("rep r on k dim 1 { }\nalgebra k { basis e1 }").ok());
}

TEST_CASE("fixture .lie files elaborate bit-identically to the catalog") {
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    dsl::Elaboration el = dsl::load(read_file(example_path(name + ".lie")));
    REQUIRE(el.ok());
    REQUIRE(el.products.count(name) == 1);
    const SemidirectProduct& sd = el.products.at(name);
    CHECK(sd.k() == fix.sd.k());
    CHECK(sd.rho() == fix.sd.rho());
    CHECK(sd.g() == fix.sd.g());
    for (const auto& [pname, point] : fix.points) {
      REQUIRE(el.points.count(pname) == 1);
      CHECK(el.points.at(pname).value.f == point.f);
      CHECK(el.points.at(pname).value.p == point.p);
    }
    for (const auto& [hname, h] : fix.polarizations) {
      REQUIRE(el.polarizations.count(hname) == 1);
      CHECK(el.polarizations.at(hname).h == h);
    }
  }
}

TEST_CASE("lie_source is the canonical print of its own parse") {
  for (const auto& name : fixture_names()) {
    std::string src = lie_source(name);
    dsl::ParseResult pr = dsl::parse(src);
    REQUIRE(pr.ok());
    std::string printed = dsl::print(pr.doc);
    dsl::ParseResult pr2 = dsl::parse(printed);
    REQUIRE(pr2.ok());
    CHECK(dsl::print(pr2.doc) == printed);
    // the elaborations agree structurally
    dsl::Elaboration a = dsl::elaborate(pr.doc);
    dsl::Elaboration b = dsl::elaborate(pr2.doc);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    for (const auto& [pname, prod] : a.products) {
      CHECK(b.products.at(pname).g() == prod.g());
    }
  }
}

TEST_CASE("complex coefficients parse only inside polarization blocks") {
  std::string base = read_file(example_path("bargmann.lie"));
  dsl::Elaboration el = dsl::load(base);
  REQUIRE(el.ok());
  const ComplexSubspace& h = el.polarizations.at("holomorphic_plus").h;
  CHECK(h.dim() == 7);

  // an imaginary bracket coefficient is a parse error
  dsl::ParseResult bad = dsl::parse(
      "algebra k { basis e1 e2 e3 bracket [e1,e2] = 1i*e3 }");
  REQUIRE(!bad.ok());
  CHECK(bad.diagnostics.front().message ==
        "imaginary coefficients are only allowed in polarization blocks");
}

TEST_CASE("rational literals") {
  dsl::Elaboration el = dsl::load(
      "algebra k { basis e1 e2 e3 bracket [e1,e2] = 2/3*e3 - 1/6*e1 }");
  REQUIRE(el.ok());
  const LieAlgebra& alg = el.algebras.at("k");
  CHECK(alg.c(0, 1, 2) == Rat(2, 3));
  CHECK(alg.c(0, 1, 0) == Rat(-1, 6));
  CHECK(alg.c(1, 0, 2) == Rat(-2, 3));

  CHECK(!dsl::parse("algebra k { basis e1 bracket [e1,e1] = 1/ }").ok());
}

TEST_CASE("malformed megabyte input diagnoses quickly without throwing") {
  std::string big;
  big.reserve(1 << 20);
  while (big.size() < (1 << 20)) big += "algebra ) { basis !! } bracket\n";
  auto start = std::chrono::steady_clock::now();
  dsl::ParseResult pr = dsl::parse(big);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(!pr.ok());
  CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() <
        1000);
}
