#include "nkicon/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "nkicon/io.hpp"
#include "nkicon/svg.hpp"

namespace nkicon {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

struct SpecArgs {
  int n = 4;
  int k = 1;
  std::string axis;
  double side = 60.0;
  double r = -1.0;
  int segments = 512;

  void add_to(CLI::App* cmd, bool with_tessellation) {
    cmd->add_option("--n", n, "polygon order (>= 3)")->required();
    cmd->add_option("--k", k, "twist steps (rotation 2*pi*k/n)")->required();
    cmd->add_option("--axis", axis, "revolution axis for even n: vv or mm")
        ->check(CLI::IsMember({"vv", "mm"}));
    cmd->add_option("--side", side, "polygon side length in mm [60]");
    cmd->add_option("--r", r, "half the side length in mm (cap-circle radius); overrides --side");
    if (with_tessellation)
      cmd->add_option("--segments", segments, "tessellation steps per revolution, even [512]");
  }

  IconSpec spec() const {
    IconSpec s;
    s.n = n;
    s.k = k;
    if (n % 2 != 0) {
      if (!axis.empty() && axis != "odd")
        throw Error(Errc::ParityMismatch, "odd n admits only its single axis; drop --axis");
      s.axis = Axis::Odd;
    } else {
      if (axis.empty())
        throw Error(Errc::InvalidArgument, "even n requires --axis vv or --axis mm");
      s.axis = axis_from_string(axis);
    }
    s.side = r > 0 ? 2.0 * r : side;
    s.segments = segments;
    validate(s);
    return s;
  }
};

std::string format_of(const std::string& requested, const std::string& path,
                      const std::string& fallback) {
  if (!requested.empty()) return requested;
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    for (auto& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == "stl" || ext == "obj" || ext == "svg" || ext == "json" || ext == "csv") return ext;
  }
  return fallback;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

int run(int argc, const char* const* argv) {
  CLI::App app{"nkicon: generalized sphericon construction, classification and templates"};
  app.require_subcommand(1);

  SpecArgs classify_args, mesh_args, template_args;
  std::string out_path, format;
  int n_max = 22;
  double st_h = 50.0, st_r = 1.5, seam_start = -1.0, offset = -1.0;
  int samples = 129;
  bool no_labels = false;
  double stroke = 0.25;

  auto* c_classify = app.add_subcommand("classify", "feature counts and designation as JSON");
  classify_args.add_to(c_classify, false);
  c_classify->add_option("--out", out_path, "output file (default: stdout)");

  auto* c_survey = app.add_subcommand("survey", "CSV of all canonical forms up to --n-max");
  c_survey->add_option("--n-max", n_max, "largest polygon order [22]")->check(CLI::Range(3, 10000));
  c_survey->add_option("--out", out_path, "output file (default: stdout)");

  auto* c_mesh = app.add_subcommand("mesh", "watertight STL/OBJ export");
  mesh_args.add_to(c_mesh, true);
  c_mesh->add_option("--out", out_path, "output file")->required();
  c_mesh->add_option("--format", format, "stl or obj (default: from extension)")
      ->check(CLI::IsMember({"stl", "obj"}));

  auto* c_template = app.add_subcommand("template", "fabrication templates as SVG");
  template_args.add_to(c_template, false);
  c_template->add_option("--out", out_path, "output file")->required();
  c_template->add_flag("--no-labels", no_labels, "omit seam labels and start markers");
  c_template->add_option("--stroke", stroke, "stroke width in mm [0.25]");

  auto* c_seam = app.add_subcommand("stadium-seam", "pita/D-form stitch pairing for stadia");
  c_seam->set_help_flag("--help", "print help");
  c_seam->add_option("--h", st_h, "stadium rectangle length in mm")->required();
  c_seam->add_option("--stadium-r,--r", st_r, "stadium cap radius in mm")->required();
  c_seam->add_option("--seam-start", seam_start, "pita seam start (ccw arc length)");
  c_seam->add_option("--offset", offset, "D-form offset between the two stadia (arc length)");
  c_seam->add_option("--samples", samples, "stitch sample count [129]");
  c_seam->add_option("--out", out_path, "output file (default: stdout)");
  c_seam->add_option("--format", format, "csv or json (default: csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c_classify->parsed()) {
    const IconSpec spec = classify_args.spec();
    const FeatureCount counts = feature_counts_formula(spec.n, spec.k, spec.axis);
    emit(out_path, classification_json(spec.n, spec.k, spec.axis, counts,
                                       designate(spec.n, spec.k, spec.axis)));
    return 0;
  }
  if (c_survey->parsed()) {
    emit(out_path, survey_csv(n_max));
    return 0;
  }
  if (c_mesh->parsed()) {
    const IconSpec spec = mesh_args.spec();
    if (degenerate_twist(spec.n, spec.k, spec.axis))
      std::cerr << "warning: twist is degenerate, exporting the uncut solid of revolution;"
                   " classification suppressed\n";
    const IconMesh mesh = synthesize_mesh(spec);
    const std::string fmt = format_of(format, out_path, "stl");
    if (fmt == "stl")
      write_stl(mesh, out_path);
    else if (fmt == "obj")
      write_obj(mesh, out_path);
    else
      throw Error(Errc::InvalidArgument, "mesh format must be stl or obj");
    std::cout << "volume_mm3 " << num(mesh_volume(mesh)) << "\n";
    std::cout << "total_angle_defect_rad " << num(total_angle_defect(mesh)) << "\n";
    return 0;
  }
  if (c_template->parsed()) {
    const IconSpec spec = template_args.spec();
    const auto pieces = assemble_templates(spec);
    SvgOptions opt;
    opt.labels = !no_labels;
    opt.stroke_mm = stroke;
    emit(out_path, emit_svg(pieces, opt));
    const Designation d = designate(spec.n, spec.k, spec.axis);
    std::cerr << "pieces " << pieces.size() << ", designation " << to_string(d.kind) << "\n";
    return 0;
  }
  if (c_seam->parsed()) {
    const Stadium st{st_h, st_r};
    SeamPairing seam;
    double parameter = 0.0;
    const bool have_start = c_seam->count("--seam-start") > 0;
    const bool have_offset = c_seam->count("--offset") > 0;
    if (have_start == have_offset)
      throw Error(Errc::InvalidArgument,
                  "give exactly one of --seam-start (pita) or --offset (D-form)");
    if (have_start) {
      seam = pita_seam(st, seam_start, samples);
      parameter = seam_start;
    } else {
      seam = dform_seam(st, st, offset, samples);
      parameter = offset;
    }
    if (seam.degenerate_flat) std::cerr << "warning: " << seam.note << "\n";
    const std::string fmt = format_of(format, out_path, "csv");
    emit(out_path, fmt == "json" ? seam_json(seam, parameter) : seam_csv(seam, parameter));
    return 0;
  }
  return 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::DegenerateTwist: return 3;
      case Errc::Io: return 4;
      case Errc::InvalidArgument:
      case Errc::ParityMismatch: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nkicon
