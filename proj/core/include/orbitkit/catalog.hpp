#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/induction.hpp"
#include "orbitkit/semidirect.hpp"

namespace orbitkit {

/// One expected value of the worked examples, with the provenance the report
/// carries: `stated` rows quote a value the example states outright,
/// `derived` rows were frozen from an independent oracle computation.
struct ExpectedRow {
  std::string point;   // point or polarization the row refers to
  std::string check;   // stable check name, e.g. "orbit_dim"
  std::string value;   // expected value rendered as text
  std::string source;  // short human-readable justification
  bool stated = false;
};

struct Fixture {
  std::string name;
  SemidirectProduct sd;
  std::vector<std::string> point_order;
  std::map<std::string, CovectorPoint> points;
  std::vector<std::string> polarization_order;
  std::map<std::string, std::string> polarization_point;
  std::map<std::string, ComplexSubspace> polarizations;
  std::vector<ExpectedRow> expected;
};

/// Scale parameters of the worked examples; any positive rationals work, the
/// verdicts are scale-covariant. Defaults pick the unit normalizations with
/// the energy offset 2.
struct FixtureParams {
  Rat spin = Rat(1);    // s
  Rat momentum = Rat(1);  // k
  Rat mass = Rat(1);    // m
  Rat energy = Rat(2);  // E
};

std::vector<std::string> fixture_names();
bool is_fixture_name(const std::string& name);
Fixture build_fixture(const std::string& name);
Fixture build_fixture(const std::string& name, const FixtureParams& params);

/// Exact rational rotation from the Cayley transform of the skew matrix of s.
QMatrix cayley_rotation(const std::vector<Rat>& s);

/// Exact group elements for the fixture: K_p-elements stabilizing the named
/// point and generic elements of G. Built from rational rotations so that
/// group-law checks run exactly.
ExactSamplers exact_samplers(const Fixture& fix, const std::string& point,
                             Rng& rng, int count);

/// Canonical .lie source for the fixture; parsing and elaborating it must
/// reproduce the fixture structures bit-identically.
std::string lie_source(const std::string& name);

/// Recomputes the value an expected-table row refers to, rendered the same
/// way the row stores it.
std::string computed_value(const Fixture& fix, const ExpectedRow& row,
                           const SamplingOptions& opts);

}  // namespace orbitkit
