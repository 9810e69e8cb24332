#pragma once
// Flat-orbifold specifications over a rational Gram lattice: validation via
// group closure, the singular-strata census (fixed subtori, their orbits and
// quotient volumes, full refinement to connected strata in dimension two),
// orientability, and the builtin catalog of named constructions.

#include <orbispec/isometry.hpp>
#include <orbispec/lattice.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbispec {

struct FlatOrbifoldSpec {
  std::string name;
  Lattice lattice;
  std::vector<AffineIsometry> holonomy;  // closed, identity first, t mod 1
  long dim() const { return lattice.d; }
};

inline FlatOrbifoldSpec make_orbifold(std::string name, RatMat gram,
                                      const std::vector<AffineIsometry>& generators) {
  FlatOrbifoldSpec spec;
  spec.lattice = make_lattice(std::move(gram));
  spec.holonomy = group_closure(generators, spec.lattice.gram);
  spec.name = std::move(name);
  return spec;
}

inline ExactReal orbifold_volume(const FlatOrbifoldSpec& spec) {
  return ExactReal::sqrt_of(det(spec.lattice.gram)) *
         Rat(1, static_cast<long>(spec.holonomy.size()));
}

// Fixed-point set of a torus map: a finite union of parallel affine subtori
// sharing the saturated direction lattice ker(M - I).
struct FixedPointSet {
  bool solvable = false;
  IntMat direction;            // d x m, m = dim ker(M - I)
  std::vector<RatVec> points;  // one base point per component, entries in [0,1)
};

namespace census_detail {
inline RatVec frac_vec(RatVec v) {
  for (auto& x : v) x = frac_mod1(x);
  return v;
}
}  // namespace census_detail

inline FixedPointSet fixed_point_components(const AffineIsometry& f) {
  long d = f.dim();
  IntMat A = f.M;
  for (long i = 0; i < d; ++i) A(i, i) -= 1;
  SnfResult snf = smith(A);
  RatVec mt(d);
  for (long i = 0; i < d; ++i) mt[i] = -f.t[i];
  RatVec c = mul(to_rat(snf.U), mt);

  FixedPointSet out;
  for (long i = snf.rank; i < d; ++i)
    if (frac_mod1(c[i]) != 0) return out;
  out.solvable = true;

  long m = d - snf.rank;
  out.direction = IntMat(d, m);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < m; ++j) out.direction(i, j) = snf.V(i, snf.rank + j);

  std::vector<long> radix(snf.rank);
  long total = 1;
  for (long i = 0; i < snf.rank; ++i) {
    radix[i] = snf.D(i, i).get_si();
    total *= radix[i];
  }
  std::vector<long> idx(snf.rank, 0);
  for (long n = 0; n < total; ++n) {
    RatVec y(d, Rat(0));
    for (long i = 0; i < snf.rank; ++i) y[i] = (c[i] + Rat(idx[i])) / Rat(radix[i]);
    out.points.push_back(census_detail::frac_vec(mul(to_rat(snf.V), y)));
    for (long i = 0; i < snf.rank; ++i) {
      if (++idx[i] < radix[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

struct SingularStratum {
  long dim = 0;
  long codim = 0;
  long isotropy_order = 0;      // |Iso| at a generic point, identity included
  std::vector<long> isotropy;   // indices into holonomy of the pointwise stabilizer
  std::vector<long> iso_max;    // subset with dim ker(M - I) == dim (excludes identity)
  bool primary = false;
  Rat gram_det = Rat(1);        // det of the direction Gram (1 for point strata)
  ExactReal volume;             // quotient volume in O; counting measure for points
  long component_count = 1;     // connected pieces in this record; -1 = unrefined (d > 2)
  long orbit_size = 1;          // torus components merged into this stratum
  RatVec base_point;            // representative generic point, entries in [0,1)
  IntMat direction;             // representative direction basis (d x dim)
  bool orientation_preserving_isotropy = true;
};

namespace census_detail {

struct Component {
  RatVec x0;
  IntMat dir;
};

inline Component apply(const AffineIsometry& h, const Component& c) {
  RatVec x = mul(h.M, c.x0);
  for (long i = 0; i < h.dim(); ++i) x[i] += h.t[i];
  return Component{frac_vec(std::move(x)), mul(h.M, c.dir)};
}

// Canonical key of an affine subtorus: Hermite form of the direction lattice
// plus the base point's image under the quotient map T^d -> T^{d-m} given by
// the saturated kernel of dir^T (an isomorphism onto the quotient torus).
inline std::string key_of(const Component& c) {
  long d = c.dir.rows, m = c.dir.cols;
  std::string key;
  if (m > 0) {
    HnfResult h = row_hermite(transpose(c.dir));
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < d; ++j) {
        key += h.H(i, j).get_str();
        key += ',';
      }
  }
  key += ';';
  IntMat K = (m == 0) ? IntMat::identity(d) : integer_kernel(transpose(c.dir));
  RatVec z = mul(transpose(K), c.x0);
  for (const auto& v : z) {
    key += rat_string(frac_mod1(v));
    key += ',';
  }
  return key;
}

// Pointwise stabilizer: elements fixing the base point and the direction space.
inline std::vector<long> pointwise_stabilizer(const FlatOrbifoldSpec& spec, const Component& c) {
  long d = spec.dim();
  std::vector<long> out;
  for (size_t hi = 0; hi < spec.holonomy.size(); ++hi) {
    const AffineIsometry& h = spec.holonomy[hi];
    IntMat A = h.M;
    for (long i = 0; i < d; ++i) A(i, i) -= 1;
    if (!mul(A, c.dir).is_zero()) continue;
    RatVec r = mul(A, c.x0);
    bool fixes = true;
    for (long i = 0; i < d; ++i)
      if (frac_mod1(r[i] + h.t[i]) != 0) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(static_cast<long>(hi));
  }
  return out;
}

inline SingularStratum base_record(const FlatOrbifoldSpec& spec, const Component& c,
                                   const std::vector<long>& pw, long orbit_size,
                                   long setwise_order) {
  long d = spec.dim(), m = c.dir.cols;
  SingularStratum s;
  s.dim = m;
  s.codim = d - m;
  s.isotropy = pw;
  s.isotropy_order = static_cast<long>(pw.size());
  for (long idx : pw) {
    IntMat A = spec.holonomy[idx].M;
    for (long i = 0; i < d; ++i) A(i, i) -= 1;
    if (nullity(A) == m) s.iso_max.push_back(idx);
    if (det(spec.holonomy[idx].M) != 1) s.orientation_preserving_isotropy = false;
  }
  s.primary = !s.iso_max.empty();
  s.gram_det = (m == 0) ? Rat(1)
                        : det(mul(mul(to_rat(transpose(c.dir)), spec.lattice.gram),
                                  to_rat(c.dir)));
  s.volume = sublattice_covolume(spec.lattice.gram, c.dir) *
             make_rat(Int(s.isotropy_order), Int(setwise_order));
  s.orbit_size = orbit_size;
  s.base_point = c.x0;
  s.direction = c.dir;
  s.component_count = (d > 2) ? -1 : 1;
  return s;
}

// Splits a singular circle in a 2-torus at its isotropy-jump parameters and
// groups the resulting arcs under the setwise stabilizer; each arc orbit is
// one stratum of the quotient.  Jump parameters solve s (M-I)u = b mod Z^2.
inline std::vector<SingularStratum> refine_circle(const FlatOrbifoldSpec& spec,
                                                  const Component& c,
                                                  const std::vector<long>& pw,
                                                  const std::vector<long>& setwise,
                                                  long orbit_size) {
  IntVec u{c.dir(0, 0), c.dir(1, 0)};
  std::set<long> pw_set(pw.begin(), pw.end());

  std::set<Rat> jumps;
  for (size_t hi = 0; hi < spec.holonomy.size(); ++hi) {
    if (pw_set.count(static_cast<long>(hi))) continue;
    const AffineIsometry& h = spec.holonomy[hi];
    IntVec w{(h.M(0, 0) - 1) * u[0] + h.M(0, 1) * u[1],
             h.M(1, 0) * u[0] + (h.M(1, 1) - 1) * u[1]};
    if (w[0] == 0 && w[1] == 0) continue;
    RatVec b(2);
    b[0] = -((h.M(0, 0) - 1) * c.x0[0] + h.M(0, 1) * c.x0[1] + h.t[0]);
    b[1] = -(h.M(1, 0) * c.x0[0] + (h.M(1, 1) - 1) * c.x0[1] + h.t[1]);
    long i0 = (w[0] != 0) ? 0 : 1, i1 = 1 - i0;
    Int cnt = w[i0] < 0 ? Int(-w[i0]) : w[i0];
    for (Int j = 0; j < cnt; j += 1) {
      Rat s = (b[i0] + Rat(j)) / Rat(w[i0]);
      if (frac_mod1(s * Rat(w[i1]) - b[i1]) == 0) jumps.insert(frac_mod1(s));
    }
  }

  ExactReal unit_len = ExactReal::sqrt_of(Rat(u[0]) * spec.lattice.gram(0, 0) * Rat(u[0]) +
                                          2 * Rat(u[0]) * spec.lattice.gram(0, 1) * Rat(u[1]) +
                                          Rat(u[1]) * spec.lattice.gram(1, 1) * Rat(u[1]));

  if (jumps.empty()) {
    SingularStratum s = base_record(spec, c, pw, orbit_size, static_cast<long>(setwise.size()));
    return {s};
  }

  std::vector<Rat> start(jumps.begin(), jumps.end());
  long n = static_cast<long>(start.size());
  std::vector<Rat> len(n);
  for (long i = 0; i < n; ++i)
    len[i] = (i + 1 < n ? start[i + 1] : start[0] + 1) - start[i];

  // Setwise elements act on the parameter circle as s -> eps s + shift.
  std::vector<long> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto locate = [&](const Rat& s) -> long {
    auto it = std::lower_bound(start.begin(), start.end(), s);
    if (it == start.end() || *it != s)
      throw std::logic_error("refine_circle: jump set is not stabilizer-invariant");
    return static_cast<long>(it - start.begin());
  };
  for (long hidx : setwise) {
    const AffineIsometry& h = spec.holonomy[hidx];
    IntVec mu{h.M(0, 0) * u[0] + h.M(0, 1) * u[1], h.M(1, 0) * u[0] + h.M(1, 1) * u[1]};
    long eps;
    if (mu == u)
      eps = 1;
    else if (mu[0] == -u[0] && mu[1] == -u[1])
      eps = -1;
    else
      throw std::logic_error("refine_circle: stabilizer does not preserve the direction");
    RatVec delta(2);
    delta[0] = h.M(0, 0) * c.x0[0] + h.M(0, 1) * c.x0[1] + h.t[0] - c.x0[0];
    delta[1] = h.M(1, 0) * c.x0[0] + h.M(1, 1) * c.x0[1] + h.t[1] - c.x0[1];
    // u-coefficient of delta in a unimodular completion [u, u'] of u
    Int g, sco, tco;
    mpz_gcdext(g.get_mpz_t(), sco.get_mpz_t(), tco.get_mpz_t(), u[0].get_mpz_t(),
               u[1].get_mpz_t());
    if (g != 1) throw std::logic_error("refine_circle: direction is not primitive");
    Rat alpha = Rat(sco) * delta[0] + Rat(tco) * delta[1];
    Rat beta = Rat(-u[1]) * delta[0] + Rat(u[0]) * delta[1];
    if (!is_integer(beta))
      throw std::logic_error("refine_circle: stabilizer does not preserve the circle");
    for (long i = 0; i < n; ++i) {
      Rat image = (eps == 1) ? frac_mod1(start[i] + alpha)
                             : frac_mod1(alpha - start[i] - len[i]);
      long j = locate(image);
      if (len[j] != len[i]) throw std::logic_error("refine_circle: arc lengths disagree");
      long a = find(i), bzz = find(j);
      if (a != bzz) parent[a] = bzz;
    }
  }

  std::map<long, std::vector<long>> groups;
  for (long i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<SingularStratum> out;
  for (const auto& [root, members] : groups) {
    long i = members.front();
    if (static_cast<long>(members.size()) * pw.size() != setwise.size())
      throw std::logic_error("refine_circle: arc orbit size mismatch");
    SingularStratum s;
    s.dim = 1;
    s.codim = 1;
    s.isotropy = pw;
    s.isotropy_order = static_cast<long>(pw.size());
    for (long idx : pw) {
      IntMat A = spec.holonomy[idx].M;
      A(0, 0) -= 1;
      A(1, 1) -= 1;
      if (nullity(A) == 1) s.iso_max.push_back(idx);
      if (det(spec.holonomy[idx].M) != 1) s.orientation_preserving_isotropy = false;
    }
    s.primary = !s.iso_max.empty();
    s.gram_det = Rat(u[0]) * spec.lattice.gram(0, 0) * Rat(u[0]) +
                 2 * Rat(u[0]) * spec.lattice.gram(0, 1) * Rat(u[1]) +
                 Rat(u[1]) * spec.lattice.gram(1, 1) * Rat(u[1]);
    s.volume = len[i] * unit_len;
    s.component_count = 1;
    s.orbit_size = orbit_size;
    Rat mid = start[i] + len[i] / 2;
    s.base_point = frac_vec(RatVec{c.x0[0] + mid * Rat(u[0]), c.x0[1] + mid * Rat(u[1])});
    s.direction = c.dir;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace census_detail

// The singular-strata census: F-orbits of fixed-subtorus components with
// generic isotropy and quotient volumes; in dimension two, circles are further
// split into true connected strata at isotropy jumps.  Deterministic order:
// ascending codimension, isotropy order, volume, base point.
inline std::vector<SingularStratum> singular_strata(const FlatOrbifoldSpec& spec) {
  using census_detail::Component;
  std::vector<Component> comps;
  std::map<std::string, long> index_of;
  for (const auto& f : spec.holonomy) {
    if (f.M.is_identity()) continue;
    FixedPointSet fps = fixed_point_components(f);
    if (!fps.solvable) continue;
    for (auto& pt : fps.points) {
      Component c{pt, fps.direction};
      std::string key = census_detail::key_of(c);
      if (!index_of.count(key)) {
        index_of[key] = static_cast<long>(comps.size());
        comps.push_back(std::move(c));
      }
    }
  }

  std::vector<long> orbit_of(comps.size(), -1);
  std::vector<SingularStratum> census;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (orbit_of[i] != -1) continue;
    // orbit BFS from the representative
    std::vector<long> orbit{static_cast<long>(i)};
    orbit_of[i] = static_cast<long>(i);
    for (size_t head = 0; head < orbit.size(); ++head) {
      const Component& cur = comps[orbit[head]];
      for (const auto& h : spec.holonomy) {
        std::string key = census_detail::key_of(census_detail::apply(h, cur));
        auto it = index_of.find(key);
        if (it == index_of.end())
          throw std::logic_error("singular_strata: orbit leaves the component set");
        if (orbit_of[it->second] == -1) {
          orbit_of[it->second] = static_cast<long>(i);
          orbit.push_back(it->second);
        }
      }
    }
    const Component& rep = comps[i];
    std::vector<long> pw = census_detail::pointwise_stabilizer(spec, rep);
    std::string rep_key = census_detail::key_of(rep);
    std::vector<long> setwise;
    for (size_t hi = 0; hi < spec.holonomy.size(); ++hi)
      if (census_detail::key_of(census_detail::apply(spec.holonomy[hi], rep)) == rep_key)
        setwise.push_back(static_cast<long>(hi));

    long orbit_size = static_cast<long>(orbit.size());
    if (spec.dim() == 2 && rep.dir.cols == 1) {
      for (auto& s : census_detail::refine_circle(spec, rep, pw, setwise, orbit_size))
        census.push_back(std::move(s));
    } else {
      census.push_back(census_detail::base_record(spec, rep, pw, orbit_size,
                                                  static_cast<long>(setwise.size())));
    }
  }

  std::sort(census.begin(), census.end(),
            [](const SingularStratum& a, const SingularStratum& b) {
              if (a.codim != b.codim) return a.codim < b.codim;
              if (a.isotropy_order != b.isotropy_order) return a.isotropy_order < b.isotropy_order;
              double va = a.volume.to_double(), vb = b.volume.to_double();
              if (va != vb) return va < vb;
              auto ka = [](const RatVec& v) {
                std::string s;
                for (const auto& x : v) {
                  s += rat_string(x);
                  s += ',';
                }
                return s;
              };
              return ka(a.base_point) < ka(b.base_point);
            });
  return census;
}

enum class Orientability { GloballyOrientable, LocallyOrientableOnly, NotLocallyOrientable };

inline Orientability orientability(const FlatOrbifoldSpec& spec) {
  bool all_preserve = true, reversing_fixes = false;
  for (const auto& f : spec.holonomy) {
    if (f.M.is_identity()) continue;
    if (det(f.M) == 1) continue;
    all_preserve = false;
    if (fixed_point_components(f).solvable) reversing_fixes = true;
  }
  if (all_preserve) return Orientability::GloballyOrientable;
  return reversing_fixes ? Orientability::NotLocallyOrientable
                         : Orientability::LocallyOrientableOnly;
}

inline std::string orientability_string(Orientability o) {
  switch (o) {
    case Orientability::GloballyOrientable: return "globally orientable";
    case Orientability::LocallyOrientableOnly: return "locally orientable only";
    default: return "not locally orientable";
  }
}

// The same orbifold written in the lattice basis given by the columns of B.
inline FlatOrbifoldSpec change_basis(const FlatOrbifoldSpec& spec, const IntMat& B) {
  IntMat binv = int_inverse(B);
  RatMat gram2 = mul(mul(to_rat(transpose(B)), spec.lattice.gram), to_rat(B));
  std::vector<AffineIsometry> gens;
  for (const auto& f : spec.holonomy) {
    if (f.M.is_identity()) continue;
    gens.emplace_back(mul(mul(binv, f.M), B), mul(binv, f.t));
  }
  return make_orbifold(spec.name, std::move(gram2), gens);
}

// ---------------------------------------------------------------------------
// Builtin catalog.

namespace catalog_detail {

inline IntMat sign_block(long d, long k) {
  IntMat m = IntMat::identity(d);
  for (long i = 0; i < k; ++i) m(i, i) = -1;
  return m;
}

inline IntMat two_by_two(long a, long b, long c, long d) {
  IntMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Splits "name(arg1,arg2,...)" at top level; returns {name} when no parens.
inline std::vector<std::string> split_name(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos) return {s};
  if (s.back() != ')') throw std::invalid_argument("catalog: malformed name '" + s + "'");
  std::vector<std::string> parts{s.substr(0, open)};
  long depth = 0;
  std::string cur;
  for (size_t i = open + 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("catalog: bad integer '" + s + "'");
  return v;
}

// "(a1,...,ad)" -> rational vector.
inline RatVec parse_vector(const std::string& s) {
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("catalog: bad vector '" + s + "'");
  RatVec out;
  std::string cur;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == ',') {
      out.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(parse_rat(cur));
  return out;
}

inline AffineIsometry from_a(IntMat M, const RatVec& a) {
  RatVec t = mul(M, a);
  return normalize_mod1(AffineIsometry(std::move(M), std::move(t)));
}

inline FlatOrbifoldSpec okmk(const std::string& name, long d, long k, const RatVec* a) {
  if (d < 2 || k < 1 || k > d - 1)
    throw std::invalid_argument("catalog: need d >= 2 and 1 <= k <= d-1");
  IntMat gamma = sign_block(d, k);
  RatVec av(d, Rat(0));
  if (a) {
    if (static_cast<long>(a->size()) != d)
      throw std::invalid_argument("catalog: translation vector has wrong length");
    av = *a;
    bool half_in_tail = false;
    for (long i = 0; i < d; ++i) {
      if (!is_integer(av[i] * 2))
        throw std::invalid_argument("catalog: translation entries must be half-integers");
      if (i >= k && frac_mod1(av[i]) == Rat(1, 2)) half_in_tail = true;
    }
    if (!half_in_tail)
      throw std::invalid_argument(
          "catalog: need a half-integer translation in one of the last d-k coordinates");
  }
  return make_orbifold(name, RatMat::identity(d), {from_a(gamma, av)});
}

}  // namespace catalog_detail

// Named constructions.  Grammar: torus | torus(d) | O(d,k) | M(d,k) |
// M(d,k,(a1,...,ad)) | square_2222 | disk_22star | rp2_22x | disk_2star22 |
// sphere_244 | cylinder | klein_bottle | hex_cone_d6.  M's default translation
// is (0,...,0,1/2).
inline FlatOrbifoldSpec catalog(const std::string& name) {
  using namespace catalog_detail;
  auto parts = split_name(name);
  const std::string& head = parts[0];

  if (head == "torus") {
    long d = 2;
    if (parts.size() == 2)
      d = parse_long(parts[1]);
    else if (parts.size() > 2)
      throw std::invalid_argument("catalog: torus takes at most one argument");
    if (d < 1) throw std::invalid_argument("catalog: torus dimension must be positive");
    return make_orbifold(name, RatMat::identity(d), {});
  }
  if (head == "O") {
    if (parts.size() != 3) throw std::invalid_argument("catalog: O needs (d,k)");
    return okmk(name, parse_long(parts[1]), parse_long(parts[2]), nullptr);
  }
  if (head == "M") {
    if (parts.size() != 3 && parts.size() != 4)
      throw std::invalid_argument("catalog: M needs (d,k) or (d,k,(a...))");
    long d = parse_long(parts[1]), k = parse_long(parts[2]);
    RatVec a(std::max(d, 1L), Rat(0));
    if (parts.size() == 4)
      a = parse_vector(parts[3]);
    else if (d >= 1)
      a[d - 1] = Rat(1, 2);
    return okmk(name, d, k, &a);
  }
  if (head == "cylinder") return okmk(name, 2, 1, nullptr);
  if (head == "klein_bottle") {
    RatVec a{Rat(0), Rat(1, 2)};
    return okmk(name, 2, 1, &a);
  }

  if (head == "square_2222" || head == "disk_22star" || head == "rp2_22x") {
    RatVec a1(2, Rat(0)), a2(2, Rat(0));
    if (head != "square_2222") a1[0] = Rat(1, 2);
    if (head == "rp2_22x") a2[1] = Rat(1, 2);
    return make_orbifold(name, RatMat::identity(2),
                         {from_a(two_by_two(1, 0, 0, -1), a1),
                          from_a(two_by_two(-1, 0, 0, 1), a2)});
  }
  if (head == "disk_2star22") {
    RatVec zero(2, Rat(0));
    return make_orbifold(name, RatMat::identity(2),
                         {from_a(two_by_two(0, 1, 1, 0), zero),
                          from_a(two_by_two(0, -1, -1, 0), zero)});
  }
  if (head == "sphere_244") {
    RatVec zero(2, Rat(0));
    return make_orbifold(name, RatMat::identity(2), {from_a(two_by_two(0, -1, 1, 0), zero)});
  }
  if (head == "hex_cone_d6") {
    RatMat gram = RatMat::identity(6);
    gram(0, 1) = gram(1, 0) = Rat(-1, 2);
    IntMat rot = IntMat::identity(6);
    rot(0, 0) = 0;
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    rot(1, 1) = -1;
    return make_orbifold(name, std::move(gram),
                         {AffineIsometry(std::move(rot), RatVec(6, Rat(0)))});
  }
  throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

}  // namespace orbispec
