#pragma once
// p-form spectra of flat orbifolds: dual-lattice shells weighted by
// exterior-power traces and holonomy phases, with integrality checks on every
// multiplicity, plus comparison utilities reporting the first divergence.

#include <orbispec/orbifold.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbispec {

struct SpectrumRow {
  Rat q;              // eigenvalue parameter; lambda = 4 pi^2 q
  double lambda = 0;
  long multiplicity = 0;
};

struct SpectrumTable {
  std::string name;
  long p = 0;
  Rat cutoff;                    // rows cover every eigenvalue with q <= cutoff
  std::vector<SpectrumRow> rows; // ascending q; q = 0 always kept, else only m > 0
  double max_residual = 0;       // worst deviation from integrality seen
};

namespace spectrum_detail {
constexpr double kIntegralityTol = 1e-6;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace spectrum_detail

inline SpectrumTable p_spectrum(const FlatOrbifoldSpec& spec, long p, const Rat& cutoff) {
  long d = spec.dim();
  if (p < 0 || p > d) throw std::invalid_argument("p_spectrum: p out of range");
  if (cutoff < 0) throw std::invalid_argument("p_spectrum: negative cutoff");

  struct Elem {
    IntMat mt;
    RatVec a;
    double trace;
    bool trivial_phase;
  };
  std::vector<Elem> elems;
  for (const auto& f : spec.holonomy) {
    Int tr = exterior_trace(f, p);
    if (tr == 0) continue;
    RatVec a = a_of(f);
    bool trivial = true;
    for (const auto& x : a)
      if (x != 0) trivial = false;
    elems.push_back({transpose(f.M), std::move(a), tr.get_d(), trivial});
  }
  double order = static_cast<double>(spec.holonomy.size());

  SpectrumTable table;
  table.name = spec.name;
  table.p = p;
  table.cutoff = cutoff;
  for (const Shell& shell : shells_up_to(spec.lattice, cutoff)) {
    double acc_re = 0, acc_im = 0;
    for (const Elem& e : elems) {
      double er = 0, ei = 0;
      for (const IntVec& v : shell.vectors) {
        bool fixed = true;
        for (long i = 0; i < d && fixed; ++i) {
          Int s(0);
          for (long j = 0; j < d; ++j) s += e.mt(i, j) * v[j];
          fixed = (s == v[i]);
        }
        if (!fixed) continue;
        if (e.trivial_phase) {
          er += 1;
        } else {
          Rat dot(0);
          for (long i = 0; i < d; ++i) dot += Rat(v[i]) * e.a[i];
          double x = spectrum_detail::kTwoPi * frac_mod1(dot).get_d();
          er += std::cos(x);
          ei += std::sin(x);
        }
      }
      acc_re += e.trace * er;
      acc_im += e.trace * ei;
    }
    double m_real = acc_re / order, m_imag = acc_im / order;
    long m = static_cast<long>(std::llround(m_real));
    double residual = std::max(std::abs(m_imag), std::abs(m_real - static_cast<double>(m)));
    table.max_residual = std::max(table.max_residual, residual);
    if (residual >= spectrum_detail::kIntegralityTol)
      throw std::runtime_error("p_spectrum: multiplicity failed the integrality check");
    if (m < 0) throw std::runtime_error("p_spectrum: negative multiplicity");
    if (m == 0 && shell.q != 0) continue;
    double lambda = spectrum_detail::kTwoPi * spectrum_detail::kTwoPi * shell.q.get_d();
    table.rows.push_back({shell.q, lambda, m});
  }
  return table;
}

struct SpectrumComparison {
  bool equal = true;
  Rat q;                      // first divergence when equal is false
  long mult_a = 0, mult_b = 0;
};

// Compares multiplicities for all q up to the smaller cutoff; a q missing from
// one table counts as multiplicity zero there.
inline SpectrumComparison compare_spectra(const SpectrumTable& a, const SpectrumTable& b) {
  Rat limit = a.cutoff < b.cutoff ? a.cutoff : b.cutoff;
  size_t i = 0, j = 0;
  while (true) {
    bool ia = i < a.rows.size() && a.rows[i].q <= limit;
    bool jb = j < b.rows.size() && b.rows[j].q <= limit;
    if (!ia && !jb) return {};
    Rat q;
    if (ia && (!jb || a.rows[i].q <= b.rows[j].q)) q = a.rows[i].q;
    else q = b.rows[j].q;
    long ma = 0, mb = 0;
    if (ia && a.rows[i].q == q) ma = a.rows[i++].multiplicity;
    if (jb && b.rows[j].q == q) mb = b.rows[j++].multiplicity;
    if (ma != mb) return {false, q, ma, mb};
  }
}

struct MutualDivergence {
  size_t first = 0, second = 0;
  SpectrumComparison cmp;
};

// First divergence among any pair, or nullopt when all tables agree.
inline std::optional<MutualDivergence> find_spectral_divergence(
    const std::vector<SpectrumTable>& tables) {
  for (size_t i = 0; i < tables.size(); ++i)
    for (size_t j = i + 1; j < tables.size(); ++j) {
      SpectrumComparison c = compare_spectra(tables[i], tables[j]);
      if (!c.equal) return MutualDivergence{i, j, c};
    }
  return std::nullopt;
}

}  // namespace orbispec
