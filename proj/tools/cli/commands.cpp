#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "spectra_forge/convolution.hpp"
#include "spectra_forge/cyclotomic.hpp"
#include "spectra_forge/errors.hpp"
#include "spectra_forge/frames.hpp"
#include "spectra_forge/measure_json.hpp"
#include "spectra_forge/spectra.hpp"

namespace spectra_forge::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxFrequencies = 1 << 14;

json strings(const FrequencySet& s) { return rationals_to_json(s.values()); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_depths(const std::string& text) {
  std::vector<int> out;
  for (auto v : parse_int_list(text)) {
    if (v < 1 || v > 16) throw ParseError("depth " + std::to_string(v) + " outside 1..16");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

AtomicMeasure atomic_from_text(const std::string& atoms, const std::string& weights) {
  if (atoms.empty()) throw ParseError("--atoms is required");
  auto a = parse_rational_list(atoms);
  if (weights.empty()) return AtomicMeasure::uniform(std::move(a));
  return AtomicMeasure(std::move(a), parse_rational_list(weights));
}

SelfSimilarMeasure selfsimilar_from_text(const std::string& digits, std::int64_t scale) {
  return SelfSimilarMeasure(parse_int_list(digits), scale);
}

void check_size(std::size_t count, const char* what) {
  if (count > kMaxFrequencies) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(count) + " frequencies exceed the cap of " +
                          std::to_string(kMaxFrequencies));
  }
}

std::size_t tower_size(const SelfSimilarMeasure& mu, int depth) {
  double size = std::pow(static_cast<double>(mu.digits().size()), depth);
  return size > static_cast<double>(kMaxFrequencies) ? kMaxFrequencies + 1 : static_cast<std::size_t>(size);
}

std::vector<double> grid(double lo, double hi, int points) {
  if (points < 1) throw ParseError("--points must be positive");
  if (!(hi >= lo)) throw ParseError("grid: max must not be below min");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g.push_back(points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1));
  }
  return g;
}

json pair_evidence(const BiZeroCertificate& cert, std::size_t limit) {
  json pairs = json::array();
  for (std::size_t i = 0; i < cert.pairs.size() && i < limit; ++i) {
    const auto& p = cert.pairs[i];
    json e{{"pair", {to_string(p.first), to_string(p.second)}}};
    switch (p.kind) {
      case PairWitness::cyclotomic:
        e["cyclotomic_divisor"] = p.divisor;
        break;
      case PairWitness::zero_set:
        e["level"] = p.level;
        e["denominator"] = p.divisor;
        break;
      case PairWitness::numeric:
        e["magnitude"] = p.magnitude;
        e["tolerance"] = p.tolerance;
        break;
    }
    pairs.push_back(std::move(e));
  }
  return pairs;
}

// Eigen's Hermitian solver is backward stable; a conservative a-posteriori bound.
double eigen_rounding_bound(std::size_t n, double upper) {
  return 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * std::max(1.0, upper);
}

Report selfsimilar_spectrum_report(const SpectrumOptions& o) {
  Report r;
  const SelfSimilarMeasure mu = selfsimilar_from_text(o.atoms, *o.scale);
  r.input = {{"digits", mu.digits()}, {"scale", mu.scale()}, {"depth", o.depth}};
  r.certificate.policy.depth = o.depth;
  SpectrumTower tower;
  try {
    tower = selfsimilar_tower(mu);
  } catch (const StructureError& e) {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.provenance = "tiling complement search";
    r.certificate.reason = e.what();
    r.certificate.witnesses["tiling_complement"] = nullptr;
    return r;
  }
  check_size(tower_size(mu, o.depth), "spectrum-find");
  const FrequencySet trunc = tower.truncation(o.depth);
  const BiZeroOutcome bz = is_bizero(trunc, mu);
  r.certificate.witnesses["gamma"] = strings(tower.gamma);
  r.certificate.witnesses["scale"] = tower.scale;
  std::vector<std::int64_t> tiled;
  for (auto d : mu.digits()) tiled.push_back(d / tower.divisor);
  r.certificate.witnesses["complement"] = *tiling_complement(tiled, mu.scale());
  if (tower.divisor != 1) r.certificate.witnesses["digit_divisor"] = tower.divisor;
  r.certificate.witnesses["truncation"] = strings(trunc);
  r.certificate.witnesses["truncation_orthogonal"] = static_cast<bool>(bz);
  if (bz) r.certificate.witnesses["pairs_certified"] = bz.certificate->pairs.size();
  if (!bz) {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.provenance = "exact zero-set membership";
    r.certificate.reason = "truncation not orthogonal: " + bz.reason;
  } else if (!tower.warnings.empty()) {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.provenance = "tiling complement; spectrum tower";
    r.certificate.reason = tower.warnings.front();
  } else {
    r.certificate.verdict = Verdict::spectral;
    r.certificate.provenance =
        "tiling complement gives the spectrum tower; truncation certified by exact zero-set membership";
  }
  return r;
}

}  // namespace

Report tile_analyze(const TileOptions& o) {
  Report r;
  const auto a = parse_int_list(o.set);
  r.input = {{"set", a}, {"n", o.n}};
  const TileCertificate tc = analyze_tile(a, o.n);
  r.result = to_json(tc);
  r.certificate.witnesses["tile"] = r.result;
  if (!tc.complement) {
    r.certificate.verdict = Verdict::no_tiling;
    r.certificate.provenance = "exhaustive greedy complement search";
    r.certificate.reason = "no B with A (+) B = {0.." + std::to_string(o.n - 1) + "}";
  } else if (tc.spectrum) {
    r.certificate.verdict = Verdict::spectral;
    r.certificate.provenance = "(T1), (T2) and the explicit prime-power spectrum, verified exactly";
  } else {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.provenance = "tiling conditions";
    r.certificate.reason = std::string("tile found but ") + (tc.t1 ? "(T2)" : "(T1)") + " fails";
  }
  return r;
}

Report spectrum_find(const SpectrumOptions& o) {
  if (o.scale) return selfsimilar_spectrum_report(o);
  Report r;
  const AtomicMeasure mu = atomic_from_text(o.atoms, o.weights);
  r.input = {{"measure", to_json(mu)}};
  r.certificate.policy.tolerance = o.tolerance;
  r.certificate.witnesses["weights"] = rationals_to_json(mu.weights());
  if (!mu.is_uniform()) {
    r.certificate.verdict = Verdict::not_spectral;
    r.certificate.provenance = "exact weight uniformity test for discrete spectral measures";
    r.certificate.reason = "weights are not all equal";
    return r;
  }
  // spectra are translation invariant; shift the smallest atom to 0
  const Rational shift = mu.atoms().front();
  std::vector<Rational> shifted;
  for (const auto& a : mu.atoms()) shifted.push_back(a - shift);
  const AtomicMeasure base = AtomicMeasure::uniform(shifted);
  const auto c = base.integer_atoms();
  if (shift != 0) r.certificate.witnesses["translated_by"] = to_string(-shift);

  const UniformClassification uc = classify_uniform(c);
  r.certificate.witnesses["method"] = uc.method;
  if (uc.verdict == DiscreteVerdict::not_spectral) {
    r.certificate.verdict = Verdict::not_spectral;
    r.certificate.provenance = uc.method;
    r.certificate.reason = uc.reason;
    return r;
  }
  if (uc.verdict == DiscreteVerdict::unknown) {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.provenance = uc.method;
    r.certificate.reason = uc.reason;
    return r;
  }
  const BiZeroOutcome bz = is_bizero(*uc.spectrum, base, EvalPolicy{40, o.tolerance});
  if (!bz) throw StructureError("spectrum-find: classifier spectrum failed exact validation: " + bz.reason);
  r.certificate.verdict = Verdict::spectral;
  r.certificate.provenance = uc.method + "; exact cyclotomic orthogonality";
  r.certificate.witnesses["spectrum"] = strings(*uc.spectrum);
  r.certificate.witnesses["orthogonality"] = pair_evidence(*bz.certificate, 256);
  return r;
}

Report frame_bounds_command(const FrameOptions& o) {
  Report r;
  std::optional<ExponentialSystem> sys;
  if (!o.system.empty()) {
    std::ifstream in(o.system);
    if (!in) throw ParseError("cannot read system file '" + o.system + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw ParseError(std::string("system file: ") + e.what());
    }
    if (!doc.contains("measure") || !doc.contains("frequencies")) {
      throw ParseError("system file needs 'measure' and 'frequencies'");
    }
    sys = ExponentialSystem{atomic_from_json(doc["measure"]), FrequencySet(rationals_from_json(doc["frequencies"]))};
  } else {
    if (o.freqs.empty()) throw ParseError("--freqs is required");
    sys = ExponentialSystem{atomic_from_text(o.atoms, o.weights), FrequencySet(parse_rational_list(o.freqs))};
  }
  r.input = {{"measure", to_json(sys->measure)}, {"frequencies", strings(sys->frequencies)}};
  const FrameBounds fb = frame_bounds(*sys);
  const bool riesz = is_riesz_spectrum(*sys, o.tolerance);
  const double rounding = eigen_rounding_bound(sys->measure.size(), fb.upper);
  r.certificate.policy.tolerance = o.tolerance;
  r.certificate.witnesses["bounds"] = {{"lower", fb.lower},
                                       {"upper", fb.upper},
                                       {"rounding_bound", rounding},
                                       {"optimal", fb.optimal}};
  const double cond = fb.condition_number();
  r.certificate.witnesses["condition_number"] = std::isfinite(cond) ? json(cond) : json("inf");
  r.certificate.witnesses["riesz"] = riesz;
  if (o.oracle) {
    const FrameRatioSample s = sample_frame_ratios(*sys, o.samples, o.seed);
    r.certificate.policy.seed = o.seed;
    const bool ok = s.min_ratio >= fb.lower - 1e-8 && s.max_ratio <= fb.upper + 1e-8;
    r.certificate.witnesses["oracle"] = {{"min_ratio", s.min_ratio},
                                         {"max_ratio", s.max_ratio},
                                         {"samples", s.samples},
                                         {"tolerance", 1e-8},
                                         {"bracketed", ok}};
  }
  r.certificate.provenance = "Hermitian eigenvalues of W V* V W";
  if (fb.lower > o.tolerance * fb.upper) {
    r.certificate.verdict = Verdict::frame;
  } else {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.reason = "lower frame bound is 0 within tolerance: the exponentials do not span";
  }
  return r;
}

Report jp_scan_command(const JpOptions& o) {
  Report r;
  const EvalPolicy policy{o.depth, o.tolerance};
  std::optional<Measure> mu;
  std::optional<FrequencySet> lambda;
  if (!o.freqs.empty()) lambda = FrequencySet(parse_rational_list(o.freqs));
  if (!o.digits.empty()) {
    if (!o.scale) throw ParseError("--digits needs --scale");
    const SelfSimilarMeasure ss = selfsimilar_from_text(o.digits, *o.scale);
    r.input["digits"] = ss.digits();
    r.input["scale"] = ss.scale();
    if (o.approximate) {
      mu = approximate_atoms(ss, *o.approximate);
      r.input["approximate"] = *o.approximate;
      if (!lambda) {
        check_size(tower_size(ss, *o.approximate), "jp-scan");
        lambda = selfsimilar_spectrum(ss, *o.approximate);
      }
    } else {
      mu = ss;
      if (!lambda) {
        const int k = o.spectrum_depth.value_or(3);
        check_size(tower_size(ss, k), "jp-scan");
        lambda = selfsimilar_spectrum(ss, k);
        r.input["spectrum_depth"] = k;
      }
    }
  } else {
    mu = atomic_from_text(o.atoms, o.weights);
    r.input["measure"] = to_json(std::get<AtomicMeasure>(*mu));
  }
  if (!lambda) throw ParseError("--freqs is required for atomic measures");
  check_size(lambda->size(), "jp-scan");
  r.input["frequencies_count"] = lambda->size();
  r.input["grid"] = {{"min", o.grid_min}, {"max", o.grid_max}, {"points", o.points}};

  const auto g = grid(o.grid_min, o.grid_max, o.points);
  const JpScanResult scan = jp_scan(*mu, *lambda, g, policy);
  double max_tail = 0.0;
  std::ostringstream csv;
  csv.precision(17);
  csv << "x,Q,tail_error\n";
  for (const auto& p : scan.points) {
    csv << p.x << ',' << p.q << ',' << p.tail_error << '\n';
    max_tail = std::max(max_tail, p.tail_error);
  }
  r.csv_text = csv.str();
  r.csv_path = o.csv;
  r.result = {{"max_deviation", scan.max_deviation},
              {"max_deficit", scan.max_deficit},
              {"max_tail_error", max_tail},
              {"bessel_ok", scan.bessel_ok},
              {"label", scan.label()}};
  r.certificate.policy.depth = scan.depth;
  r.certificate.policy.tolerance = o.tolerance;
  r.certificate.witnesses["scan"] = r.result;
  r.certificate.provenance = "Jorgensen-Pedersen sum on a grid";
  if (!scan.bessel_ok) {
    r.certificate.verdict = Verdict::not_spectral;
    r.certificate.reason = "Q exceeds 1 beyond tolerance: the exponentials are not orthogonal";
  } else if (scan.exact_model && scan.max_deviation < o.tolerance) {
    r.certificate.verdict = Verdict::spectral;
  } else if (scan.exact_model) {
    r.certificate.verdict = Verdict::not_spectral;
    r.certificate.reason = "Q differs from 1 on the grid";
  } else {
    r.certificate.verdict = Verdict::inconclusive;
    r.certificate.reason = scan.label() + ": a finite frequency set only bounds Q from below";
  }
  return r;
}

Report convolve_build(const ConvolveOptions& o) {
  Report r;
  RieszSearchOptions search;
  search.seed = o.seed;
  r.certificate.policy.seed = o.seed;

  if (!o.intervals.empty()) {
    std::vector<ClosedInterval> iv;
    for (const auto& item : split(o.intervals, ',')) {
      const auto ends = split(item, ':');
      if (ends.size() != 2) throw ParseError("interval '" + item + "' must be lo:hi");
      iv.push_back({parse_rational(ends[0]), parse_rational(ends[1])});
    }
    json echo = json::array();
    for (const auto& x : iv) echo.push_back({to_string(x.lo), to_string(x.hi)});
    r.input = {{"intervals", echo}};
    const IntervalUnionSpectrum iu = interval_union_rspectrum(iv);
    r.result = to_json(iu);
    r.certificate.witnesses["interval_union"] = r.result;
    r.certificate.provenance = "affine rescaling to unit intervals; finite-section Gram eigenvalues";
    r.certificate.verdict = iu.validated ? Verdict::riesz_evidence : Verdict::inconclusive;
    if (!iu.validated) r.certificate.reason = "a finite-section Gram matrix is singular within tolerance";
    return r;
  }

  if (o.eta.empty()) throw ParseError("--eta or --intervals is required");
  const auto parts = split(o.eta, ':');
  if (parts.size() > 2) throw ParseError("--eta must be atoms[:weights]");
  const AtomicMeasure eta = atomic_from_text(parts[0], parts.size() == 2 ? parts[1] : std::string{});

  std::string nu_text;
  for (const auto& t : o.nu) nu_text += (nu_text.empty() ? "" : ":") + t;
  const auto nu_parts = split(nu_text, ':');
  ContinuousFactor nu = UnitIntervalLebesgue{};
  if (nu_parts.empty() || nu_parts[0] == "lebesgue") {
    if (nu_parts.size() > 1) throw ParseError("--nu lebesgue takes no arguments");
  } else if (nu_parts[0] == "selfsimilar") {
    if (nu_parts.size() != 3) throw ParseError("--nu selfsimilar needs digits and scale");
    nu = selfsimilar_from_text(nu_parts[1], parse_int_list(nu_parts[2]).at(0));
  } else {
    throw ParseError("--nu must be 'lebesgue' or 'selfsimilar A n'");
  }
  const ConvolutionMeasure mu(eta, o.q, nu);
  r.input = {{"measure", to_json(mu)}, {"depth", o.depth}, {"evidence_depths", parse_depths(o.evidence_depths)}};
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&nu)) check_size(tower_size(*ss, o.depth), "convolve-build");

  json certs = json::array();
  Certificate spectral;
  try {
    spectral = nonspectral_certificate(mu, o.depth);
  } catch (const PreconditionError& e) {
    spectral.verdict = Verdict::inconclusive;
    spectral.provenance = "convolution factorization";
    spectral.reason = e.what();
    spectral.witnesses["hypothesis"] = "q Z_nu inside Z";
  }
  certs.push_back(to_json(spectral));

  const SpectrumGenerator gen = default_generator(nu);
  const ConvolutionSpectrum cs = riesz_spectrum_convolution(eta, o.q, gen, o.depth, search);
  r.result["riesz_spectrum"] = to_json(cs);

  const auto depths = parse_depths(o.evidence_depths);
  const RieszEvidence ev = riesz_evidence(mu, depths, o.atom_extra_depth, search);
  Certificate evidence;
  evidence.verdict = ev.floor_ok && ev.stable ? Verdict::riesz_evidence : Verdict::inconclusive;
  evidence.provenance = "invertible atom/spectrum matrix; Gram eigenvalues of finite sections";
  evidence.witnesses["evidence"] = to_json(ev);
  evidence.witnesses["witness_determinant"] = {cs.witness_determinant.real(), cs.witness_determinant.imag()};
  evidence.policy.depth = depths.back();
  evidence.policy.seed = o.seed;
  if (evidence.verdict == Verdict::inconclusive) {
    evidence.reason = "Gram eigenvalue floor not bounded away from 0 or not stable across depths";
  }
  certs.push_back(to_json(evidence));
  r.result["certificates"] = certs;

  if (spectral.verdict == Verdict::spectral) r.certificate = spectral;
  else r.certificate = evidence;
  r.certificate.policy.seed = o.seed;
  return r;
}

Report density_scan(const DensityOptions& o) {
  Report r;
  if (!(o.hi > o.lo)) throw ParseError("--lo/--hi must describe a non-empty window");
  std::vector<double> pts;
  if (!o.freqs.empty()) {
    pts = FrequencySet(parse_rational_list(o.freqs)).as_doubles();
    r.input["frequencies_count"] = pts.size();
  } else if (!o.lattice.empty()) {
    const Rational step = parse_rational(o.lattice);
    if (step <= 0) throw ParseError("--lattice step must be positive");
    const double d = to_double(step);
    const auto first = static_cast<std::int64_t>(std::ceil(o.lo / d));
    const auto last = static_cast<std::int64_t>(std::floor(o.hi / d));
    if (last - first > static_cast<std::int64_t>(1) << 24) throw SizeCapExceeded("density-scan: too many lattice points");
    for (std::int64_t k = first; k <= last; ++k) pts.push_back(to_double(step * k));
    r.input["lattice"] = to_string(step);
  } else if (!o.digits.empty()) {
    if (!o.scale) throw ParseError("--digits needs --scale");
    const SelfSimilarMeasure ss = selfsimilar_from_text(o.digits, *o.scale);
    check_size(tower_size(ss, o.depth), "density-scan");
    pts = selfsimilar_spectrum(ss, o.depth).as_doubles();
    r.input["digits"] = ss.digits();
    r.input["scale"] = ss.scale();
    r.input["depth"] = o.depth;
  } else {
    throw ParseError("one of --freqs, --lattice or --digits is required");
  }
  std::vector<double> hs;
  for (const auto& v : parse_rational_list(o.h)) hs.push_back(to_double(v));
  if (hs.empty()) throw ParseError("--h is required");
  r.input["window"] = {o.lo, o.hi};
  r.input["h"] = hs;

  const auto samples = beurling_lower_density_proxy(pts, o.lo, o.hi, hs);
  std::ostringstream csv;
  csv.precision(17);
  csv << "h,density\n";
  json rows = json::array();
  for (const auto& s : samples) {
    csv << s.h << ',' << s.density << '\n';
    rows.push_back({{"h", s.h}, {"density", s.density}});
  }
  r.csv_text = csv.str();
  r.csv_path = o.csv;
  r.result = {{"samples", rows}, {"label", "finite-window diagnostic, not the lower Beurling density"}};
  r.certificate.verdict = Verdict::inconclusive;
  r.certificate.provenance = "exact window minimum over event positions";
  r.certificate.reason = "density from a finite window is a diagnostic; the liminf is not computable from finite data";
  r.certificate.witnesses["samples"] = rows;
  return r;
}

}  // namespace spectra_forge::cli
