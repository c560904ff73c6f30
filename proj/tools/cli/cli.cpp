#include "cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "spectra_forge/errors.hpp"

namespace spectra_forge::cli {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, Riesz spectra and frames of discrete, self-similar and convolution measures",
               "spectra-forge"};
  app.require_subcommand(1);
  std::string out_path;

  TileOptions tile;
  auto* tile_cmd = app.add_subcommand("tile-analyze", "Tiling complement, (T1)/(T2) and spectrum of A in {0..n-1}");
  tile_cmd->add_option("--set", tile.set, "Digit set, e.g. 0,1,4,5")->required();
  tile_cmd->add_option("--n", tile.n, "Modulus n")->required();

  SpectrumOptions spec;
  std::int64_t spec_scale = 0;
  auto* spec_cmd = app.add_subcommand("spectrum-find", "Orthonormal spectrum of a discrete or self-similar measure");
  spec_cmd->add_option("--atoms", spec.atoms, "Atoms (or digits with --scale), e.g. 0,1,2")->required();
  spec_cmd->add_option("--weights", spec.weights, "Weights p/q; uniform when omitted");
  auto* spec_scale_opt = spec_cmd->add_option("--scale", spec_scale, "Self-similar scale n");
  spec_cmd->add_option("--depth", spec.depth, "Levels of the self-similar spectrum to certify");
  spec_cmd->add_option("--tolerance", spec.tolerance, "Numeric zero threshold for non-uniform weights");

  FrameOptions frame;
  auto* frame_cmd = app.add_subcommand("frame-bounds", "Optimal frame bounds of a finite exponential system");
  frame_cmd->add_option("--atoms", frame.atoms, "Atoms");
  frame_cmd->add_option("--weights", frame.weights, "Weights; uniform when omitted");
  frame_cmd->add_option("--freqs", frame.freqs, "Frequencies");
  frame_cmd->add_option("--system", frame.system, "JSON file with 'measure' and 'frequencies'");
  frame_cmd->add_flag("--oracle", frame.oracle, "Cross-check with random unit vectors");
  frame_cmd->add_option("--samples", frame.samples, "Random vectors for --oracle");
  frame_cmd->add_option("--seed", frame.seed, "Seed for --oracle");
  frame_cmd->add_option("--tolerance", frame.tolerance, "Relative Riesz tolerance");

  JpOptions jp;
  std::int64_t jp_scale = 0;
  int jp_spectrum_depth = 0;
  int jp_approximate = 0;
  auto* jp_cmd = app.add_subcommand("jp-scan", "Q(x) = sum |mu^(x + lambda)|^2 on a grid");
  jp_cmd->add_option("--atoms", jp.atoms, "Atoms of a discrete measure");
  jp_cmd->add_option("--weights", jp.weights, "Weights; uniform when omitted");
  jp_cmd->add_option("--digits", jp.digits, "Digits of a self-similar measure");
  auto* jp_scale_opt = jp_cmd->add_option("--scale", jp_scale, "Self-similar scale n");
  jp_cmd->add_option("--freqs", jp.freqs, "Frequencies; defaults to the self-similar spectrum");
  auto* jp_sd_opt = jp_cmd->add_option("--spectrum-depth", jp_spectrum_depth, "Levels of the default spectrum");
  auto* jp_ap_opt = jp_cmd->add_option("--approximate", jp_approximate, "Scan the depth-J atom approximation");
  jp_cmd->add_option("--depth", jp.depth, "Truncation depth of infinite products");
  jp_cmd->add_option("--tolerance", jp.tolerance, "Tolerance");
  jp_cmd->add_option("--grid-min", jp.grid_min, "Grid start");
  jp_cmd->add_option("--grid-max", jp.grid_max, "Grid end");
  jp_cmd->add_option("--points", jp.points, "Grid points");
  jp_cmd->add_option("--csv", jp.csv, "Write x,Q,tail_error rows to this file");

  ConvolveOptions conv;
  auto* conv_cmd = app.add_subcommand("convolve-build", "Spectra and Riesz spectra of eta_q * nu, or of interval unions");
  conv_cmd->add_option("--eta", conv.eta, "Discrete factor atoms[:weights], e.g. 0,1:1/3,2/3");
  conv_cmd->add_option("--q", conv.q, "Dilation q");
  conv_cmd->add_option("--nu", conv.nu, "lebesgue | selfsimilar A n")->expected(1, 3);
  conv_cmd->add_option("--intervals", conv.intervals, "Rational intervals lo:hi,lo:hi");
  conv_cmd->add_option("--depth", conv.depth, "Truncation depth of Gamma");
  conv_cmd->add_option("--evidence-depths", conv.evidence_depths, "Depths of the Gram sections");
  conv_cmd->add_option("--atom-extra-depth", conv.atom_extra_depth, "Extra atom levels for the Gram sections");
  conv_cmd->add_option("--seed", conv.seed, "Seed of the randomized search");

  DensityOptions dens;
  std::int64_t dens_scale = 0;
  auto* dens_cmd = app.add_subcommand("density-scan", "Finite-window lower Beurling density diagnostic");
  dens_cmd->set_help_flag("--help", "Print this help message and exit");
  dens_cmd->add_option("--freqs", dens.freqs, "Points");
  dens_cmd->add_option("--lattice", dens.lattice, "Lattice step d, points dZ in the window");
  dens_cmd->add_option("--digits", dens.digits, "Digits of a self-similar spectrum tower");
  auto* dens_scale_opt = dens_cmd->add_option("--scale", dens_scale, "Scale of the tower");
  dens_cmd->add_option("--depth", dens.depth, "Levels of the tower");
  dens_cmd->add_option("--lo", dens.lo, "Window start")->required();
  dens_cmd->add_option("--hi", dens.hi, "Window end")->required();
  dens_cmd->add_option("--h", dens.h, "Window sizes, e.g. 10,20")->required();
  dens_cmd->add_option("--csv", dens.csv, "Write h,density rows to this file");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitVerdict : kExitUsage;
  }

  if (spec_scale_opt->count() > 0) spec.scale = spec_scale;
  if (jp_scale_opt->count() > 0) jp.scale = jp_scale;
  if (jp_sd_opt->count() > 0) jp.spectrum_depth = jp_spectrum_depth;
  if (jp_ap_opt->count() > 0) jp.approximate = jp_approximate;
  if (dens_scale_opt->count() > 0) dens.scale = dens_scale;

  std::string command;
  try {
    Report report;
    if (tile_cmd->parsed()) {
      command = "tile-analyze";
      report = tile_analyze(tile);
    } else if (spec_cmd->parsed()) {
      command = "spectrum-find";
      report = spectrum_find(spec);
    } else if (frame_cmd->parsed()) {
      command = "frame-bounds";
      report = frame_bounds_command(frame);
    } else if (jp_cmd->parsed()) {
      command = "jp-scan";
      report = jp_scan_command(jp);
    } else if (conv_cmd->parsed()) {
      command = "convolve-build";
      report = convolve_build(conv);
    } else {
      command = "density-scan";
      report = density_scan(dens);
    }
    report.certificate.validate();

    nlohmann::json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["input"] = report.input;
    doc["input"]["argv"] = args;
    doc["certificate"] = to_json(report.certificate);
    if (!report.result.empty()) doc["result"] = report.result;

    if (report.csv_text && !report.csv_path.empty()) write_text(report.csv_path, *report.csv_text);
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) out << text;
    else write_text(out_path, text);

    return report.certificate.verdict == Verdict::inconclusive ? kExitInconclusive : kExitVerdict;
  } catch (const std::exception& e) {
    err << "error: " << (command.empty() ? "" : command + ": ") << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace spectra_forge::cli
