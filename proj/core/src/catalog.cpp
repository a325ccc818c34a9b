#include "orbitkit/catalog.hpp"

#include <stdexcept>

namespace orbitkit {

namespace {

int eps(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i + 1) % 3 == j) return 1;  // cyclic (i, i+1, i+2)
  return -1;
}

QMatrix hat(std::size_t i) {
  QMatrix m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = Rat(eps(static_cast<int>(i), c, r));
  return m;
}

LieAlgebra so3_algebra() {
  LieAlgebra k(3, {"j1", "j2", "j3"});
  k.set_bracket(0, 1, 2, Rat(1));
  k.set_bracket(0, 2, 1, Rat(-1));
  k.set_bracket(1, 2, 0, Rat(1));
  return k;
}

LieAlgebra se3_algebra() {
  LieAlgebra k(6, {"j1", "j2", "j3", "b1", "b2", "b3"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int t = 0; t < 3; ++t) {
        if (i < j && eps(i, j, t) != 0)
          k.set_bracket(i, j, t, Rat(eps(i, j, t)));
        if (eps(i, j, t) != 0 && i != j)
          if (i < 3) k.set_bracket(i, 3 + j, 3 + t, Rat(eps(i, j, t)));
      }
  return k;
}

Representation so3_vector_rep() {
  Representation rho(3, 3);
  for (std::size_t i = 0; i < 3; ++i) rho.set_matrix(i, hat(i));
  return rho;
}

Representation galilei_rep() {
  Representation rho(6, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    QMatrix m(4, 4);
    QMatrix h = hat(i);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = h(r, c);
    rho.set_matrix(i, m);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    QMatrix m(4, 4);
    m(i, 3) = Rat(1);
    rho.set_matrix(3 + i, m);
  }
  return rho;
}

Representation bargmann_rep() {
  Representation rho(6, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    QMatrix m(5, 5);
    QMatrix h = hat(i);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = h(r, c);
    rho.set_matrix(i, m);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    QMatrix m(5, 5);
    m(i, 3) = Rat(1);
    m(4, i) = Rat(-1);
    rho.set_matrix(3 + i, m);
  }
  return rho;
}

std::vector<Rat> rvec(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

ComplexSubspace make_h(const SemidirectProduct& sd,
                       const std::vector<std::vector<CRat>>& a_vectors) {
  CMatrix rows(a_vectors.size() + sd.dim_v(), sd.dim_g());
  for (std::size_t r = 0; r < a_vectors.size(); ++r) {
    if (a_vectors[r].size() != sd.dim_k())
      throw std::invalid_argument("polarization spanning vector has wrong size");
    for (std::size_t i = 0; i < sd.dim_k(); ++i) rows(r, i) = a_vectors[r][i];
  }
  for (std::size_t s = 0; s < sd.dim_v(); ++s)
    rows(a_vectors.size() + s, sd.dim_k() + s) = CRat(1);
  return ComplexSubspace::span(sd.dim_g(), rows);
}

std::vector<CRat> cunit(std::size_t dim, std::size_t i) {
  std::vector<CRat> v(dim, CRat(0));
  v[i] = CRat(1);
  return v;
}

void row(Fixture& f, const std::string& point, const std::string& check,
         const std::string& value, const std::string& source, bool stated) {
  f.expected.push_back({point, check, value, source, stated});
}

Fixture build_se3(const FixtureParams& prm) {
  Fixture f;
  f.name = "se3";
  f.sd = SemidirectProduct(so3_algebra(), so3_vector_rep());
  CovectorPoint n;
  n.f = {Rat(0), Rat(0), prm.spin};
  n.p = {Rat(0), Rat(0), prm.momentum};
  f.point_order = {"spin_momentum"};
  f.points["spin_momentum"] = n;
  f.polarization_order = {"trivial"};
  f.polarization_point["trivial"] = "spin_momentum";
  f.polarizations["trivial"] = make_h(f.sd, {cunit(3, 2)});

  const std::string pt = "spin_momentum";
  row(f, pt, "orbit_dim", "4", "orbit is the cotangent bundle of the 2-sphere", true);
  row(f, pt, "base_dim", "2", "K-orbit of p is a 2-sphere", true);
  row(f, pt, "little_orbit_dim", "0", "little group orbit is a point", true);
  row(f, pt, "isotropy_dim", "2", "kernel of the fundamental-field map", false);
  row(f, pt, "kernel_tau_star_dim", "1", "axis of p", false);
  row(f, pt, "kp_in_kf", "true", "K_p = K_f, rotations about the common axis", true);
  row(f, pt, "n_lagrangian", "true", "cotangent-type point", false);
  row(f, pt, "l_lagrangian", "false", "f does not vanish on [k,k]", false);
  row(f, pt, "char_dist_dim", "0", "k_f = k_p at this point", false);
  row(f, "trivial", "polarization_passes", "true", "real polarization of the worked example", true);
  row(f, "trivial", "pukanszky_holds", "true", "stated by the worked example", true);
  row(f, pt, "symmetric_spaces", "true", "point and 2-sphere are symmetric spaces", true);
  return f;
}

Fixture build_galilei(const FixtureParams& prm) {
  Fixture f;
  f.name = "galilei";
  f.sd = SemidirectProduct(se3_algebra(), galilei_rep());
  CovectorPoint n1;
  n1.f = {Rat(0), Rat(0), prm.spin, Rat(0), Rat(0), Rat(0)};
  n1.p = {Rat(0), Rat(0), prm.momentum, prm.energy};
  CovectorPoint n2;
  n2.f = rvec({0, 0, 0, 1, 0, 0});
  n2.p = rvec({0, 0, 1, 0});
  f.point_order = {"massless_spin", "infinite_velocity"};
  f.points["massless_spin"] = n1;
  f.points["infinite_velocity"] = n2;
  f.polarization_order = {"trivial", "boosts"};
  f.polarization_point["trivial"] = "massless_spin";
  f.polarization_point["boosts"] = "infinite_velocity";
  f.polarizations["trivial"] = make_h(f.sd, {cunit(6, 2), cunit(6, 3), cunit(6, 4)});
  f.polarizations["boosts"] = make_h(f.sd, {cunit(6, 3), cunit(6, 4)});

  row(f, "massless_spin", "orbit_dim", "6", "modified cotangent bundle of S^2 x R", true);
  row(f, "massless_spin", "base_dim", "3", "K-orbit of p is S^2 x R", true);
  row(f, "massless_spin", "little_orbit_dim", "0", "little group orbit is a point", true);
  row(f, "massless_spin", "isotropy_dim", "4", "exact-sequence dimension count", false);
  row(f, "massless_spin", "kernel_tau_star_dim", "1", "rank count of tau*", false);
  row(f, "massless_spin", "kp_in_kf", "true", "cotangent-type point", false);
  row(f, "trivial", "polarization_passes", "true", "real polarization of the worked example", true);
  row(f, "trivial", "pukanszky_holds", "true", "stated by the worked example", true);
  row(f, "massless_spin", "symmetric_spaces", "true", "bracket-table check", false);

  row(f, "infinite_velocity", "orbit_dim", "8", "stated 8-dimensional orbit", true);
  row(f, "infinite_velocity", "isotropy_dim", "2", "stated 2-dimensional isotropy group", true);
  row(f, "infinite_velocity", "little_orbit_dim", "2", "little orbit is the cylinder T*S^1", true);
  row(f, "infinite_velocity", "base_dim", "3", "same K-orbit type as the massless case", false);
  row(f, "infinite_velocity", "kernel_tau_star_dim", "1", "line through p", true);
  row(f, "infinite_velocity", "kp_in_kf", "false", "not of cotangent type", false);
  row(f, "infinite_velocity", "char_dist_dim", "1", "intersection oracle", false);
  row(f, "infinite_velocity", "n_dim", "3", "rank of tau*", false);
  row(f, "boosts", "polarization_passes", "true", "real polarization spanned by the boosts", true);
  row(f, "boosts", "pukanszky_holds", "true", "orbit of phi fills the affine line", true);
  row(f, "boosts", "e_ann_reduced_dim", "1", "one-dimensional affine plane through phi", true);
  row(f, "infinite_velocity", "symmetric_spaces", "false", "no invariant complement of the boosts in k_p", false);
  return f;
}

Fixture build_bargmann(const FixtureParams& prm) {
  Fixture f;
  f.name = "bargmann";
  f.sd = SemidirectProduct(se3_algebra(), bargmann_rep());
  CovectorPoint n;
  n.f = {Rat(0), Rat(0), prm.spin, Rat(0), Rat(0), Rat(0)};
  n.p = {Rat(0), Rat(0), Rat(0), Rat(0), prm.mass};
  f.point_order = {"massive_spin"};
  f.points["massive_spin"] = n;
  std::vector<CRat> aplus(6, CRat(0)), aminus(6, CRat(0));
  aplus[0] = CRat(1);
  aplus[1] = CRat::i();
  aminus[0] = CRat(1);
  aminus[1] = CRat(Rat(0), Rat(-1));
  f.polarization_order = {"holomorphic_plus", "holomorphic_minus"};
  f.polarization_point["holomorphic_plus"] = "massive_spin";
  f.polarization_point["holomorphic_minus"] = "massive_spin";
  f.polarizations["holomorphic_plus"] = make_h(f.sd, {aplus, cunit(6, 2)});
  f.polarizations["holomorphic_minus"] = make_h(f.sd, {aminus, cunit(6, 2)});

  const std::string pt = "massive_spin";
  row(f, pt, "orbit_dim", "8", "phase space T*R^3 x S^2", true);
  row(f, pt, "base_dim", "3", "K-orbit of p is R^3", true);
  row(f, pt, "little_orbit_dim", "2", "little orbit is the 2-sphere", true);
  row(f, pt, "isotropy_dim", "3", "exact-sequence dimension count", false);
  row(f, pt, "kernel_tau_star_dim", "2", "rank count of tau*", false);
  row(f, pt, "kp_is_so3", "true", "little group is the rotation group", true);
  row(f, pt, "kp_in_kf", "false", "not of cotangent type", false);
  row(f, pt, "char_dist_dim", "3", "intersection oracle", false);
  for (const char* pol : {"holomorphic_plus", "holomorphic_minus"}) {
    row(f, pol, "polarization_passes", "true", "complex polarizations of the worked example", true);
    row(f, pol, "pukanszky_holds", "true", "e-annihilator vanishes on the reduced side", true);
    row(f, pol, "e_ann_reduced_dim", "0", "e is all of k_p", true);
    row(f, pol, "e_mod_d_dim", "2", "fibre E/D is the 2-sphere", true);
    row(f, pol, "t_ge_dim", "6", "base T*(G/E) = T*R^3", true);
  }
  row(f, pt, "symmetric_spaces", "true", "S^2 and R^3 are symmetric spaces", false);
  return f;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"se3", "galilei", "bargmann"}; }

bool is_fixture_name(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

Fixture build_fixture(const std::string& name, const FixtureParams& params) {
  if (sgn(params.spin) <= 0 || sgn(params.momentum) <= 0 ||
      sgn(params.mass) <= 0)
    throw std::invalid_argument("fixture parameters must be positive");
  if (name == "se3") return build_se3(params);
  if (name == "galilei") return build_galilei(params);
  if (name == "bargmann") return build_bargmann(params);
  throw std::invalid_argument("unknown fixture: " + name);
}

Fixture build_fixture(const std::string& name) {
  return build_fixture(name, FixtureParams{});
}

QMatrix cayley_rotation(const std::vector<Rat>& s) {
  if (s.size() != 3) throw std::invalid_argument("cayley_rotation expects 3 parameters");
  QMatrix skew(3, 3);
  skew(0, 1) = -s[2];
  skew(1, 0) = s[2];
  skew(0, 2) = s[1];
  skew(2, 0) = -s[1];
  skew(1, 2) = -s[0];
  skew(2, 1) = s[0];
  QMatrix id = QMatrix::identity(3);
  auto inv = (id - skew).inverse();
  if (!inv) throw std::logic_error("Cayley transform of a real skew matrix is defined");
  return (*inv) * (id + skew);
}

namespace {

GroupElemQ se3_fixture_element(const QMatrix& r) {
  return group_from_k_action(r, r, std::vector<Rat>(3, Rat(0)));
}

/// K = SE(3) element (R, b) for the Galilei and Bargmann fixtures: the
/// adjoint action on se(3) and the representation matrix on V.
GroupElemQ se3_k_element(const std::string& fixture, const QMatrix& r,
                         const std::vector<Rat>& b) {
  QMatrix ad(6, 6);
  QMatrix bh(3, 3);
  bh(0, 1) = -b[2];
  bh(1, 0) = b[2];
  bh(0, 2) = b[1];
  bh(2, 0) = -b[1];
  bh(1, 2) = -b[0];
  bh(2, 1) = b[0];
  QMatrix br = bh * r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ad(i, j) = r(i, j);
      ad(3 + i, 3 + j) = r(i, j);
      ad(3 + i, j) = br(i, j);
    }
  if (fixture == "galilei") {
    QMatrix rho(4, 4);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) rho(i, j) = r(i, j);
      rho(i, 3) = b[i];
    }
    rho(3, 3) = Rat(1);
    return group_from_k_action(ad, rho, std::vector<Rat>(4, Rat(0)));
  }
  QMatrix rho(5, 5);
  Rat b2(0);
  for (int i = 0; i < 3; ++i) b2 += b[i] * b[i];
  QMatrix btr(1, 3);
  for (int j = 0; j < 3; ++j) {
    Rat v(0);
    for (int i = 0; i < 3; ++i) v += b[i] * r(i, j);
    btr(0, j) = v;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) rho(i, j) = r(i, j);
    rho(i, 3) = b[i];
    rho(4, i) = -btr(0, i);
  }
  rho(3, 3) = Rat(1);
  rho(4, 3) = -b2 / 2;
  rho(4, 4) = Rat(1);
  return group_from_k_action(ad, rho, std::vector<Rat>(5, Rat(0)));
}

}  // namespace

ExactSamplers exact_samplers(const Fixture& fix, const std::string& point,
                             Rng& rng, int count) {
  ExactSamplers out;
  for (int i = 0; i < count; ++i) {
    if (fix.name == "se3") {
      // K_p for p on the third axis: rotations about that axis.
      QMatrix rz = cayley_rotation({Rat(0), Rat(0), rng.rational(3, 3)});
      out.kp_elements.push_back(se3_fixture_element(rz));
      QMatrix rg = cayley_rotation(rng.rational_vector(3, 2, 3));
      out.g_elements.push_back(se3_fixture_element(rg));
    } else if (fix.name == "galilei") {
      // K_p = SO(2) x R^2: axis rotations with boosts orthogonal to the axis.
      QMatrix rz = cayley_rotation({Rat(0), Rat(0), rng.rational(3, 3)});
      std::vector<Rat> b = {rng.rational(2, 3), rng.rational(2, 3), Rat(0)};
      out.kp_elements.push_back(se3_k_element("galilei", rz, b));
      QMatrix rg = cayley_rotation(rng.rational_vector(3, 2, 3));
      out.g_elements.push_back(
          se3_k_element("galilei", rg, rng.rational_vector(3, 2, 3)));
    } else if (fix.name == "bargmann") {
      // K_p = SO(3) x {0}: arbitrary rotations, boost part zero.
      QMatrix rz = cayley_rotation(rng.rational_vector(3, 2, 3));
      out.kp_elements.push_back(
          se3_k_element("bargmann", rz, std::vector<Rat>(3, Rat(0))));
      QMatrix rg = cayley_rotation(rng.rational_vector(3, 2, 3));
      out.g_elements.push_back(
          se3_k_element("bargmann", rg, rng.rational_vector(3, 2, 3)));
    } else {
      throw std::invalid_argument("no exact samplers for fixture: " + fix.name);
    }
  }
  (void)point;
  return out;
}

namespace {

const CovectorPoint& row_point(const Fixture& fix, const ExpectedRow& row) {
  auto it = fix.points.find(row.point);
  if (it != fix.points.end()) return it->second;
  auto pol_pt = fix.polarization_point.find(row.point);
  if (pol_pt == fix.polarization_point.end())
    throw std::invalid_argument("expected row names unknown point: " + row.point);
  return fix.points.at(pol_pt->second);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string computed_value(const Fixture& fix, const ExpectedRow& row,
                           const SamplingOptions& opts) {
  const SemidirectProduct& sd = fix.sd;
  const CovectorPoint& n = row_point(fix, row);
  if (row.check == "orbit_dim" || row.check == "base_dim" ||
      row.check == "little_orbit_dim" || row.check == "isotropy_dim" ||
      row.check == "kernel_tau_star_dim" || row.check == "n_dim" ||
      row.check == "kp_in_kf" || row.check == "n_lagrangian" ||
      row.check == "l_lagrangian") {
    OrbitReport r = analyze_point(sd, n);
    if (row.check == "orbit_dim") return std::to_string(r.dim_orbit);
    if (row.check == "base_dim") return std::to_string(r.dim_base);
    if (row.check == "little_orbit_dim") return std::to_string(r.dim_little_orbit);
    if (row.check == "isotropy_dim") return std::to_string(r.dim_isotropy);
    if (row.check == "kernel_tau_star_dim")
      return std::to_string(r.dim_kernel_tau_star);
    if (row.check == "n_dim") return std::to_string(r.dim_N);
    if (row.check == "kp_in_kf") return bool_str(r.kp_in_kf);
    if (row.check == "n_lagrangian") return bool_str(r.n_lagrangian);
    return bool_str(r.l_lagrangian);
  }
  if (row.check == "char_dist_dim")
    return std::to_string(characteristic_distribution(sd, n).value.dim());
  if (row.check == "kp_is_so3") {
    SubalgebraStructure kp = subalgebra_structure(sd.k(), little_algebra(sd, n.p));
    return bool_str(kp.closed && kp.algebra == so3_algebra());
  }
  if (row.check == "polarization_passes")
    return bool_str(
        check_polarization(sd, n, fix.polarizations.at(row.point), opts).passes());
  if (row.check == "pukanszky_holds")
    return bool_str(
        pukanszky_check(sd, n, fix.polarizations.at(row.point), opts).holds());
  if (row.check == "e_ann_reduced_dim") {
    ReductionCheck rc =
        reduction_theorem_check(sd, n, fix.polarizations.at(row.point), opts);
    return std::to_string(rc.little_puk.e_annihilator.dim());
  }
  if (row.check == "e_mod_d_dim" || row.check == "t_ge_dim") {
    BundleCheck bc =
        pukanszky_bundle_check(sd, n, fix.polarizations.at(row.point), opts);
    return std::to_string(row.check == "e_mod_d_dim" ? bc.dim_e_mod_d
                                                     : bc.dim_t_ge);
  }
  if (row.check == "symmetric_spaces") {
    // The P of the check is cut out by the first polarization at this point.
    std::string pol;
    for (const auto& name : fix.polarization_order)
      if (fix.polarization_point.at(name) == row.point) pol = name;
    if (pol.empty())
      throw std::invalid_argument("no polarization for symmetric-space row");
    PolarizationCandidate cand =
        analyze_candidate(sd, fix.polarizations.at(pol));
    Subspace kp = little_algebra(sd, n.p);
    SymmetricSpaceCheck sc = symmetric_space_check(sd, kp, cand.p_alg);
    return bool_str(sc.canonical_connection_exists);
  }
  throw std::invalid_argument("unknown expected-table check: " + row.check);
}

std::string lie_source(const std::string& name) {
  static const char* so3_block =
      "algebra so3 {\n"
      "  basis j1 j2 j3\n"
      "  bracket [j1,j2] = j3\n"
      "  bracket [j1,j3] = -j2\n"
      "  bracket [j2,j3] = j1\n"
      "}\n";
  static const char* se3_block =
      "algebra se3 {\n"
      "  basis j1 j2 j3 b1 b2 b3\n"
      "  bracket [j1,j2] = j3\n"
      "  bracket [j1,j3] = -j2\n"
      "  bracket [j2,j3] = j1\n"
      "  bracket [j1,b2] = b3\n"
      "  bracket [j1,b3] = -b2\n"
      "  bracket [j2,b1] = -b3\n"
      "  bracket [j2,b3] = b1\n"
      "  bracket [j3,b1] = b2\n"
      "  bracket [j3,b2] = -b1\n"
      "}\n";
  if (name == "se3") {
    return std::string(so3_block) +
           "rep vec on so3 dim 3 {\n"
           "  j1 -> [0,0,0; 0,0,-1; 0,1,0]\n"
           "  j2 -> [0,0,1; 0,0,0; -1,0,0]\n"
           "  j3 -> [0,-1,0; 1,0,0; 0,0,0]\n"
           "}\n"
           "product se3 = so3 x vec\n"
           "point spin_momentum in se3* { f = j3; p = v3 }\n"
           "polarization trivial at spin_momentum { a = span { j3 } }\n";
  }
  if (name == "galilei") {
    return std::string(se3_block) +
           "rep spacetime on se3 dim 4 {\n"
           "  j1 -> [0,0,0,0; 0,0,-1,0; 0,1,0,0; 0,0,0,0]\n"
           "  j2 -> [0,0,1,0; 0,0,0,0; -1,0,0,0; 0,0,0,0]\n"
           "  j3 -> [0,-1,0,0; 1,0,0,0; 0,0,0,0; 0,0,0,0]\n"
           "  b1 -> [0,0,0,1; 0,0,0,0; 0,0,0,0; 0,0,0,0]\n"
           "  b2 -> [0,0,0,0; 0,0,0,1; 0,0,0,0; 0,0,0,0]\n"
           "  b3 -> [0,0,0,0; 0,0,0,0; 0,0,0,1; 0,0,0,0]\n"
           "}\n"
           "product galilei = se3 x spacetime\n"
           "point massless_spin in galilei* { f = j3; p = v3 + 2*v4 }\n"
           "point infinite_velocity in galilei* { f = b1; p = v3 }\n"
           "polarization trivial at massless_spin { a = span { j3, b1, b2 } }\n"
           "polarization boosts at infinite_velocity { a = span { b1, b2 } }\n";
  }
  if (name == "bargmann") {
    return std::string(se3_block) +
           "rep extended on se3 dim 5 {\n"
           "  j1 -> [0,0,0,0,0; 0,0,-1,0,0; 0,1,0,0,0; 0,0,0,0,0; 0,0,0,0,0]\n"
           "  j2 -> [0,0,1,0,0; 0,0,0,0,0; -1,0,0,0,0; 0,0,0,0,0; 0,0,0,0,0]\n"
           "  j3 -> [0,-1,0,0,0; 1,0,0,0,0; 0,0,0,0,0; 0,0,0,0,0; 0,0,0,0,0]\n"
           "  b1 -> [0,0,0,1,0; 0,0,0,0,0; 0,0,0,0,0; 0,0,0,0,0; -1,0,0,0,0]\n"
           "  b2 -> [0,0,0,0,0; 0,0,0,1,0; 0,0,0,0,0; 0,0,0,0,0; 0,-1,0,0,0]\n"
           "  b3 -> [0,0,0,0,0; 0,0,0,0,0; 0,0,0,1,0; 0,0,0,0,0; 0,0,-1,0,0]\n"
           "}\n"
           "product bargmann = se3 x extended\n"
           "point massive_spin in bargmann* { f = j3; p = v5 }\n"
           "polarization holomorphic_plus at massive_spin { a = span { j1 + 1i*j2, j3 } }\n"
           "polarization holomorphic_minus at massive_spin { a = span { j1 - 1i*j2, j3 } }\n";
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace orbitkit
