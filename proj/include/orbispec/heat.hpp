#pragma once
// Leading heat-trace invariants of flat orbifolds: exact per-stratum
// coefficients, the closed 1-form formula from eigenvalue data, aggregation by
// codimension parity, recovery of singular volumes from spectral data, and a
// numeric comparison of truncated heat traces with the two-term expansion.

#include <orbispec/krawtchouk.hpp>
#include <orbispec/spectrum.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbispec {

// b0 coefficient of one stratum: sum over maximal isotropy elements of
// exterior trace over moved-space determinant, scaled by the stratum volume.
inline ExactReal b0p_stratum(const FlatOrbifoldSpec& spec, const SingularStratum& s, long p) {
  Rat bracket(0);
  for (long idx : s.iso_max) {
    const AffineIsometry& f = spec.holonomy[idx];
    bracket += make_rat(exterior_trace(f, p), det_complement(f));
  }
  return bracket * s.volume;
}

// Closed 1-form weight of an isotropy element with k = r + 2s moved
// dimensions: (d - k - r + sum 2cos theta) * 2^{-k} * prod csc^2(theta/2).
inline double b01_eigentype(const EigenvalueType& e, long d, long k) {
  if (k != e.minus_mult + 2 * e.s())
    throw std::invalid_argument("b01_eigentype: k must equal r + 2s");
  double trace = static_cast<double>(d - k - e.minus_mult);
  double product = 1;
  for (double theta : e.angles) {
    trace += 2 * std::cos(theta);
    double sn = std::sin(theta / 2);
    product /= sn * sn;
  }
  return trace * std::ldexp(product, -static_cast<int>(k));
}

struct ParityInvariants {
  ExactReal b_plus, b_minus;            // aggregates over minimal-codimension strata
  std::optional<long> k_plus, k_minus;  // those codimensions, when strata exist
};

// Aggregates b0/|Iso| over the strata of minimal even and minimal odd
// codimension; parities with no strata contribute zero.
inline ParityInvariants parity_invariants(const FlatOrbifoldSpec& spec,
                                          const std::vector<SingularStratum>& census, long p) {
  ParityInvariants out;
  for (const auto& s : census) {
    if (!s.primary) continue;
    auto& k = (s.codim % 2 == 0) ? out.k_plus : out.k_minus;
    if (!k || s.codim < *k) k = s.codim;
  }
  for (const auto& s : census) {
    if (!s.primary) continue;
    auto& k = (s.codim % 2 == 0) ? out.k_plus : out.k_minus;
    if (s.codim != *k) continue;
    ExactReal term = b0p_stratum(spec, s, p) * Rat(1, s.isotropy_order);
    ((s.codim % 2 == 0) ? out.b_plus : out.b_minus) += term;
  }
  return out;
}

inline ParityInvariants parity_invariants(const FlatOrbifoldSpec& spec, long p) {
  return parity_invariants(spec, singular_strata(spec), p);
}

struct VolumeRecovery {
  bool determined = false;
  ExactReal volume;  // total singular volume, when determined
  long codim = 0;    // the single codimension carrying all strata
};

// Inverts the odd-parity aggregate: when every stratum sits in one odd
// codimension k and the degree-p trace at k is nonzero, the total singular
// volume is 2^{k+1} B_minus / K_p^d(k).
inline VolumeRecovery singular_volume_from_spectrum(const FlatOrbifoldSpec& spec, long p) {
  std::vector<SingularStratum> census = singular_strata(spec);
  if (census.empty())
    throw std::domain_error("singular_volume_from_spectrum: the census is empty");
  long k = census.front().codim;
  for (const auto& s : census)
    if (s.codim != k)
      throw std::domain_error(
          "singular_volume_from_spectrum: strata span multiple codimensions");
  VolumeRecovery out;
  out.codim = k;
  if (k % 2 == 0) return out;
  Int kr = krawtchouk(spec.dim(), p, Int(k));
  if (kr == 0) return out;
  ParityInvariants pi = parity_invariants(spec, census, p);
  out.determined = true;
  out.volume = pi.b_minus * make_rat(Int(1) << (k + 1), kr);
  return out;
}

struct HeatReport {
  std::string spec_name;
  long p = 0;
  ExactReal a0;                       // C(d,p) * vol(O)
  std::vector<ExactReal> stratum_b0;  // aligned with the census order
  ParityInvariants parity;
  std::map<Rat, double> c;  // exponent j/2 -> bracket coefficient of t^{j/2}
};

inline HeatReport heat_report(const FlatOrbifoldSpec& spec,
                              const std::vector<SingularStratum>& census, long p) {
  HeatReport out;
  out.spec_name = spec.name;
  out.p = p;
  out.a0 = binomial(Int(spec.dim()), p) * orbifold_volume(spec);
  for (const auto& s : census) out.stratum_b0.push_back(b0p_stratum(spec, s, p));
  out.parity = parity_invariants(spec, census, p);
  constexpr double kFourPi = 12.566370614359172953850573533118;
  out.c[Rat(0)] = out.a0.to_double();
  if (out.parity.k_plus)
    out.c[make_rat(Int(*out.parity.k_plus), Int(2))] =
        std::pow(kFourPi, *out.parity.k_plus / 2.0) * out.parity.b_plus.to_double();
  if (out.parity.k_minus)
    out.c[make_rat(Int(*out.parity.k_minus), Int(2))] =
        std::pow(kFourPi, *out.parity.k_minus / 2.0) * out.parity.b_minus.to_double();
  return out;
}

inline HeatReport heat_report(const FlatOrbifoldSpec& spec, long p) {
  return heat_report(spec, singular_strata(spec), p);
}

struct HeatTraceCheckRow {
  double t = 0;
  double truncated_sum = 0;  // S(t), eigenvalues up to the cutoff
  double predicted = 0;      // leading-term prediction P(t)
  double rel_error = 0;      // |S - P| / |P|
  double tail_bound = 0;     // bound on the dropped eigenvalue terms
};

struct HeatTraceCheck {
  std::string spec_name;
  long p = 0;
  Rat cutoff;
  std::vector<HeatTraceCheckRow> rows;
};

// Compares the truncated spectral sum S(t) = sum m exp(-4 pi^2 q t) with
// P(t) = (4 pi t)^{-d/2} C(d,p) vol(O) + sum_N (4 pi t)^{-dim N/2} b0(N)/|Iso(N)|.
// The reported tail bound dominates the dropped q > cutoff part of S via the
// integral comparison  sum_{q(v)>Q} e^{-bq} <= b int_Q^inf Vol(s) e^{-bs} ds
// with Vol(s) a ball-count upper estimate for the dual lattice.
inline HeatTraceCheck heat_trace_check(const FlatOrbifoldSpec& spec, long p, const Rat& cutoff,
                                       const std::vector<double>& ts) {
  long d = spec.dim();
  for (double t : ts)
    if (!(t > 0)) throw std::invalid_argument("heat_trace_check: t must be positive");

  SpectrumTable table = p_spectrum(spec, p, cutoff);
  std::vector<SingularStratum> census = singular_strata(spec);

  double cdp = binomial(Int(d), p).get_d();
  double vol = orbifold_volume(spec).to_double();
  std::vector<std::pair<long, double>> stratum_terms;  // (dim N, b0/|Iso|)
  for (const auto& s : census)
    stratum_terms.emplace_back(
        s.dim, (b0p_stratum(spec, s, p) * Rat(1, s.isotropy_order)).to_double());

  constexpr double kPi = 3.14159265358979323846264338328;

  // ball-count parameters for the dual lattice
  RatMat a = spec.lattice.gram_inv;
  double cover = 0;
  for (long i = 0; i < d; ++i) cover += std::sqrt(a(i, i).get_d());
  cover /= 2;
  double ball_unit = std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1) *
                     std::sqrt(det(spec.lattice.gram).get_d());
  HeatTraceCheck out;
  out.spec_name = spec.name;
  out.p = p;
  out.cutoff = cutoff;
  for (double t : ts) {
    HeatTraceCheckRow row;
    row.t = t;
    double beta = 4 * kPi * kPi * t;
    for (const auto& r : table.rows)
      row.truncated_sum += static_cast<double>(r.multiplicity) * std::exp(-beta * r.q.get_d());
    row.predicted = std::pow(4 * kPi * t, -d / 2.0) * cdp * vol;
    for (const auto& [ndim, coeff] : stratum_terms)
      row.predicted += std::pow(4 * kPi * t, -ndim / 2.0) * coeff;
    row.rel_error = std::abs(row.truncated_sum - row.predicted) / std::abs(row.predicted);

    // Simpson integration of b * Vol(s) e^{-bs} over [Q, Q + 60/b]
    double q0 = cutoff.get_d(), width = 60.0 / beta;
    auto integrand = [&](double s) {
      return beta * ball_unit * std::pow(std::sqrt(s) + cover, d) * std::exp(-beta * s);
    };
    const int n = 2000;
    double h = width / n, integral = integrand(q0) + integrand(q0 + width);
    for (int i = 1; i < n; ++i) integral += integrand(q0 + i * h) * (i % 2 ? 4.0 : 2.0);
    integral *= h / 3;
    row.tail_bound = cdp * integral;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace orbispec
