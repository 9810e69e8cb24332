#include <catch2/catch_amalgamated.hpp>
#include <orbispec/orbifold.hpp>

#include <map>
#include <random>
#include <sstream>

using namespace orbispec;

namespace {

ExactReal mirror_total(const std::vector<SingularStratum>& census) {
  ExactReal total;
  for (const auto& s : census)
    if (s.dim == 1) total += s.volume;
  return total;
}

std::map<long, ExactReal> codim_totals(const std::vector<SingularStratum>& census) {
  std::map<long, ExactReal> out;
  for (const auto& s : census) out[s.codim] += s.volume;
  return out;
}

std::string census_fingerprint(const std::vector<SingularStratum>& census) {
  std::ostringstream os;
  for (const auto& s : census) {
    os << s.dim << '|' << s.codim << '|' << s.isotropy_order << '|' << s.volume.str() << '|'
       << s.orbit_size << '|' << s.component_count << '|';
    for (const auto& x : s.base_point) os << rat_string(x) << ',';
    os << '\n';
  }
  return os.str();
}

IntMat random_unimodular(long d, std::mt19937& rng) {
  std::uniform_int_distribution<long> coord(0, d - 1), shear(-2, 2), coin(0, 1);
  IntMat b = IntMat::identity(d);
  for (int step = 0; step < 6; ++step) {
    long i = coord(rng), j = coord(rng);
    if (i == j) continue;
    IntMat e = IntMat::identity(d);
    e(i, j) = shear(rng);
    b = mul(b, e);
    if (coin(rng)) {
      IntMat sw = IntMat::identity(d);
      sw(i, i) = 0;
      sw(j, j) = 0;
      sw(i, j) = 1;
      sw(j, i) = coin(rng) ? -1 : 1;
      b = mul(b, sw);
    }
  }
  return b;
}

}  // namespace

TEST_CASE("fixed point sets of torus maps") {
  // point reflection with offset: four isolated fixed points
  IntMat neg = IntMat::identity(2);
  neg(0, 0) = -1;
  neg(1, 1) = -1;
  AffineIsometry f(neg, RatVec{Rat(1, 2), Rat(1, 2)});
  FixedPointSet fps = fixed_point_components(f);
  REQUIRE(fps.solvable);
  REQUIRE(fps.direction.cols == 0);
  REQUIRE(fps.points.size() == 4);
  for (const auto& p : fps.points) {
    REQUIRE((p[0] == Rat(1, 4) || p[0] == Rat(3, 4)));
    REQUIRE((p[1] == Rat(1, 4) || p[1] == Rat(3, 4)));
  }

  // glide reflection: no fixed points
  IntMat refl = IntMat::identity(2);
  refl(1, 1) = -1;
  AffineIsometry glide(refl, RatVec{Rat(1, 2), Rat(0)});
  REQUIRE_FALSE(fixed_point_components(glide).solvable);

  // plain reflection: two circles
  AffineIsometry mirror(refl, RatVec{Rat(0), Rat(0)});
  FixedPointSet mf = fixed_point_components(mirror);
  REQUIRE(mf.solvable);
  REQUIRE(mf.direction.cols == 1);
  REQUIRE(mf.points.size() == 2);
}

TEST_CASE("torus catalog entries have empty censuses") {
  for (const char* name : {"torus", "torus(1)", "torus(4)"}) {
    FlatOrbifoldSpec spec = catalog(name);
    REQUIRE(spec.holonomy.size() == 1);
    REQUIRE(singular_strata(spec).empty());
    REQUIRE(orientability(spec) == Orientability::GloballyOrientable);
  }
  REQUIRE(catalog("torus(4)").dim() == 4);
  REQUIRE(orbifold_volume(catalog("torus(4)")) == ExactReal(Rat(1)));
}

TEST_CASE("sign-flip quotients: census shape and volumes") {
  for (auto [d, k] : std::vector<std::pair<long, long>>{{2, 1}, {4, 2}, {9, 3}}) {
    std::ostringstream name;
    name << "O(" << d << "," << k << ")";
    FlatOrbifoldSpec spec = catalog(name.str());
    REQUIRE(spec.holonomy.size() == 2);
    auto census = singular_strata(spec);
    REQUIRE(static_cast<long>(census.size()) == (1L << k));
    for (const auto& s : census) {
      REQUIRE(s.dim == d - k);
      REQUIRE(s.codim == k);
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.iso_max.size() == 1);
      REQUIRE(s.primary);
      REQUIRE(s.volume == ExactReal(Rat(1)));
      REQUIRE(s.orbit_size == 1);
      REQUIRE(s.gram_det == Rat(1));
      for (long i = 0; i < k; ++i)
        REQUIRE((s.base_point[i] == 0 || s.base_point[i] == Rat(1, 2)));
    }
  }
}

TEST_CASE("half-shift variants have empty censuses") {
  for (const char* name : {"M(2,1)", "M(4,2)", "M(9,3)", "M(9,6)", "klein_bottle",
                           "M(4,2,(0,0,1/2,0))", "M(4,2,(1/2,1/2,1/2,1/2))"}) {
    auto census = singular_strata(catalog(name));
    REQUIRE(census.empty());
  }
}

TEST_CASE("orientability classification") {
  REQUIRE(orientability(catalog("O(4,2)")) == Orientability::GloballyOrientable);
  REQUIRE(orientability(catalog("O(9,6)")) == Orientability::GloballyOrientable);
  REQUIRE(orientability(catalog("O(4,1)")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("O(9,3)")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("cylinder")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("M(4,2)")) == Orientability::GloballyOrientable);
  REQUIRE(orientability(catalog("M(9,6)")) == Orientability::GloballyOrientable);
  REQUIRE(orientability(catalog("M(4,1)")) == Orientability::LocallyOrientableOnly);
  REQUIRE(orientability(catalog("M(9,3)")) == Orientability::LocallyOrientableOnly);
  REQUIRE(orientability(catalog("klein_bottle")) == Orientability::LocallyOrientableOnly);
  REQUIRE(orientability(catalog("square_2222")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("disk_22star")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("rp2_22x")) == Orientability::LocallyOrientableOnly);
  REQUIRE(orientability(catalog("disk_2star22")) == Orientability::NotLocallyOrientable);
  REQUIRE(orientability(catalog("sphere_244")) == Orientability::GloballyOrientable);
  REQUIRE(orientability_string(Orientability::LocallyOrientableOnly) ==
          "locally orientable only");
}

TEST_CASE("square reflection quotient: four edges and four corners") {
  auto census = singular_strata(catalog("square_2222"));
  REQUIRE(census.size() == 8);
  long edges = 0, corners = 0;
  for (const auto& s : census) {
    REQUIRE(s.component_count == 1);
    if (s.dim == 1) {
      ++edges;
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.volume == ExactReal(Rat(1, 2)));
      REQUIRE_FALSE(s.orientation_preserving_isotropy);
      REQUIRE(s.iso_max.size() == 1);
    } else {
      ++corners;
      REQUIRE(s.isotropy_order == 4);
      REQUIRE(s.volume == ExactReal(Rat(1)));
      REQUIRE(s.orbit_size == 1);
      REQUIRE(s.iso_max.size() == 1);  // only the point reflection fixes a point alone
      for (const auto& x : s.base_point) REQUIRE((x == 0 || x == Rat(1, 2)));
    }
  }
  REQUIRE(edges == 4);
  REQUIRE(corners == 4);
  REQUIRE(mirror_total(census) == ExactReal(Rat(2)));
}

TEST_CASE("half-shifted reflection quotient: one boundary circle and two cones") {
  auto census = singular_strata(catalog("disk_22star"));
  REQUIRE(census.size() == 3);
  long circles = 0, cones = 0;
  for (const auto& s : census) {
    if (s.dim == 1) {
      ++circles;
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.volume == ExactReal(Rat(1)));
      REQUIRE(s.orbit_size == 2);
    } else {
      ++cones;
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.volume == ExactReal(Rat(1)));
      REQUIRE(s.orbit_size == 2);
      REQUIRE(s.orientation_preserving_isotropy);
      REQUIRE((s.base_point[0] == Rat(1, 4) || s.base_point[0] == Rat(3, 4)));
    }
  }
  REQUIRE(circles == 1);
  REQUIRE(cones == 2);
  REQUIRE(mirror_total(census) == ExactReal(Rat(1)));
}

TEST_CASE("double glide quotient: two cones, no mirrors") {
  auto census = singular_strata(catalog("rp2_22x"));
  REQUIRE(census.size() == 2);
  for (const auto& s : census) {
    REQUIRE(s.dim == 0);
    REQUIRE(s.isotropy_order == 2);
    REQUIRE(s.volume == ExactReal(Rat(1)));
    REQUIRE(s.orbit_size == 2);
    REQUIRE(s.orientation_preserving_isotropy);
    REQUIRE((s.base_point[0] == Rat(1, 4) || s.base_point[0] == Rat(3, 4)));
    REQUIRE((s.base_point[1] == Rat(1, 4) || s.base_point[1] == Rat(3, 4)));
  }
  REQUIRE(mirror_total(census).is_zero());
}

TEST_CASE("diagonal reflection quotient: two diagonal edges, two corners, one cone") {
  auto census = singular_strata(catalog("disk_2star22"));
  REQUIRE(census.size() == 5);
  long edges = 0, corners = 0, cones = 0;
  for (const auto& s : census) {
    if (s.dim == 1) {
      ++edges;
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.volume == ExactReal::sqrt_of(Rat(1, 2)));
      REQUIRE(s.gram_det == Rat(2));
    } else if (s.isotropy_order == 4) {
      ++corners;
      REQUIRE(s.volume == ExactReal(Rat(1)));
      REQUIRE(s.orbit_size == 1);
      REQUIRE(s.base_point[0] == s.base_point[1]);
    } else {
      ++cones;
      REQUIRE(s.isotropy_order == 2);
      REQUIRE(s.orbit_size == 2);
      REQUIRE(s.orientation_preserving_isotropy);
    }
  }
  REQUIRE(edges == 2);
  REQUIRE(corners == 2);
  REQUIRE(cones == 1);
  REQUIRE(mirror_total(census) == ExactReal::sqrt_of(Rat(2)));
}

TEST_CASE("quarter-turn quotient: cone orders 4, 4, 2") {
  auto census = singular_strata(catalog("sphere_244"));
  REQUIRE(census.size() == 3);
  std::vector<long> orders;
  for (const auto& s : census) {
    REQUIRE(s.dim == 0);
    REQUIRE(s.volume == ExactReal(Rat(1)));
    REQUIRE(s.orientation_preserving_isotropy);
    orders.push_back(s.isotropy_order);
    if (s.isotropy_order == 4) {
      REQUIRE(s.iso_max.size() == 3);
      REQUIRE(s.orbit_size == 1);
    } else {
      REQUIRE(s.iso_max.size() == 1);
      REQUIRE(s.orbit_size == 2);
    }
  }
  std::sort(orders.begin(), orders.end());
  REQUIRE(orders == std::vector<long>{2, 4, 4});
  REQUIRE(mirror_total(census).is_zero());
}

TEST_CASE("boundary lengths distinguish the three mirror variants") {
  ExactReal a = mirror_total(singular_strata(catalog("square_2222")));
  ExactReal b = mirror_total(singular_strata(catalog("disk_22star")));
  ExactReal c = mirror_total(singular_strata(catalog("disk_2star22")));
  REQUIRE(a != b);
  REQUIRE(a != c);
  REQUIRE(b != c);
}

TEST_CASE("hexagonal cone times a 4-torus") {
  FlatOrbifoldSpec spec = catalog("hex_cone_d6");
  REQUIRE(spec.holonomy.size() == 3);
  auto census = singular_strata(spec);
  REQUIRE(census.size() == 3);
  for (const auto& s : census) {
    REQUIRE(s.dim == 4);
    REQUIRE(s.codim == 2);
    REQUIRE(s.isotropy_order == 3);
    REQUIRE(s.iso_max.size() == 2);
    REQUIRE(s.volume == ExactReal(Rat(1)));
    REQUIRE(s.component_count == -1);
    REQUIRE(s.orientation_preserving_isotropy);
  }
  REQUIRE(orientability(spec) == Orientability::GloballyOrientable);
  // unit-determinant Gram: the quotient volume is (sqrt 3/4)/3
  REQUIRE(orbifold_volume(spec) == Rat(1, 6) * ExactReal::sqrt_of(Rat(3)));
}

TEST_CASE("structural invariants across the catalog") {
  for (const char* name : {"O(2,1)", "O(4,2)", "O(4,1)", "M(4,1)", "square_2222",
                           "disk_22star", "rp2_22x", "disk_2star22", "sphere_244",
                           "hex_cone_d6"}) {
    FlatOrbifoldSpec spec = catalog(name);
    auto census = singular_strata(spec);
    for (const auto& s : census) {
      CAPTURE(name, s.dim, s.codim);
      REQUIRE(s.dim + s.codim == spec.dim());
      REQUIRE(s.isotropy_order >= 2);
      REQUIRE(s.isotropy.size() == static_cast<size_t>(s.isotropy_order));
      REQUIRE(s.isotropy.front() == 0);  // identity belongs to every stabilizer
      REQUIRE(s.primary);
      REQUIRE(s.volume.to_double() > 0);
      REQUIRE(s.orbit_size >= 1);
      for (long idx : s.iso_max) {
        IntMat a = spec.holonomy[idx].M;
        for (long i = 0; i < spec.dim(); ++i) a(i, i) -= 1;
        REQUIRE(nullity(a) == s.dim);
      }
      for (const auto& x : s.base_point) {
        REQUIRE(x >= 0);
        REQUIRE(x < 1);
      }
      if (spec.dim() <= 2) REQUIRE(s.component_count == 1);
    }
    // deterministic output
    REQUIRE(census_fingerprint(census) == census_fingerprint(singular_strata(spec)));
  }
}

TEST_CASE("census volumes are invariant under unimodular basis changes") {
  std::mt19937 rng(20260823);
  for (const char* name : {"square_2222", "disk_2star22", "sphere_244", "O(4,2)",
                           "hex_cone_d6"}) {
    FlatOrbifoldSpec spec = catalog(name);
    auto base = codim_totals(singular_strata(spec));
    for (int rep = 0; rep < 3; ++rep) {
      IntMat b = random_unimodular(spec.dim(), rng);
      FlatOrbifoldSpec moved = change_basis(spec, b);
      auto totals = codim_totals(singular_strata(moved));
      CAPTURE(name, rep);
      REQUIRE(totals.size() == base.size());
      for (const auto& [codim, vol] : base) {
        REQUIRE(totals.count(codim) == 1);
        REQUIRE(totals.at(codim) == vol);
      }
      REQUIRE(orbifold_volume(moved) == orbifold_volume(spec));
      REQUIRE(orientability(moved) == orientability(spec));
    }
  }
}

TEST_CASE("catalog rejects malformed names") {
  REQUIRE_THROWS_AS(catalog("heptagon"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(4)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(4,0)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(4,4)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(1,1)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("torus(0)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("torus(2,3)"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("M(4,2,(0,0,0,0))"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("M(4,2,(1/2,0,0,0))"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("M(4,2,(0,0,0,1/3))"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("M(4,2,(0,0,1/2))"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(4,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(catalog("O(x,2)"), std::invalid_argument);
}

TEST_CASE("explicit half-integer translations are accepted when valid") {
  FlatOrbifoldSpec spec = catalog("M(4,2,(1/2,0,0,1/2))");
  REQUIRE(spec.holonomy.size() == 2);
  REQUIRE(singular_strata(spec).empty());
}
