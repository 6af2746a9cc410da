#include "ctv/certificate.hpp"
#include "ctv/json_io.hpp"
#include "ctv/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace ctv;

constexpr int kExitCertificate = 0;
constexpr int kExitOpenCase = 2;
constexpr int kExitInputError = 1;

void emit(const Json& j, const std::string& out_path) {
  std::string text = dump_json(j);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
  }
}

int cmd_gen(const std::string& spec_path, const std::string& out_path) {
  InstanceSpec spec = spec_from_json(load_json(spec_path));
  Instance inst = generate_instance(spec);
  emit(instance_to_json(inst), out_path);
  return kExitCertificate;
}

int cmd_check_transversal(const std::string& inst_path, const std::string& out_path) {
  Instance inst = instance_from_json(load_json(inst_path));
  if (auto t = find_monochromatic_transversal(inst.family)) {
    auto w = make_transversal_witness(inst.family, t->first, t->second);
    emit(certificate_to_json(Certificate{w}), out_path);
    return kExitCertificate;
  }
  emit(Json{{"result", "no_monochromatic_transversal"}}, out_path);
  return kExitOpenCase;
}

int cmd_check_consistency(const std::string& inst_path, const std::string& out_path) {
  Instance inst = instance_from_json(load_json(inst_path));
  auto oracle = make_oracle(inst);
  auto res = is_rainbow_consistent(inst.family, inst.ordering, *oracle);
  if (auto* v = std::get_if<ConsistencyViolation>(&res)) {
    emit(certificate_to_json(Certificate{RadonViolation{v->pair, v->separator}}), out_path);
    return kExitCertificate;
  }
  emit(Json{{"result", "rainbow_consistent"}}, out_path);
  return kExitOpenCase;
}

int cmd_verify(const std::string& inst_path, bool both, const std::string& out_path) {
  Instance inst = instance_from_json(load_json(inst_path));
  auto oracle = make_oracle(inst);
  Certificate cert = verify_theorem(inst.family, inst.ordering, *oracle);

  Json out = certificate_to_json(cert);
  bool open = std::holds_alternative<OpenCase>(cert);
  if (!open && !validate_certificate(cert, inst.family, inst.ordering, *oracle))
    throw std::logic_error("emitted certificate failed independent validation");

  if (both) {
    // Cross-validation mode: also report the other branch of the dichotomy.
    Json cross;
    auto res = is_rainbow_consistent(inst.family, inst.ordering, *oracle);
    if (auto* v = std::get_if<ConsistencyViolation>(&res)) {
      cross = certificate_to_json(Certificate{RadonViolation{v->pair, v->separator}});
    } else {
      cross = Json{{"result", "rainbow_consistent"}};
    }
    out = Json{{"certificate", out}, {"consistency", cross}};
  }
  emit(out, out_path);
  return open ? kExitOpenCase : kExitCertificate;
}

int cmd_scan_zero_cell(const std::string& inst_path, const std::string& variant,
                       const std::string& out_path) {
  Instance inst = instance_from_json(load_json(inst_path));
  SVariant v;
  if (variant == "join") v = SVariant::Join;
  else if (variant == "slice") v = SVariant::SliceJoin;
  else if (variant == "convslice") v = SVariant::ConvSliceJoin;
  else throw std::invalid_argument("unknown variant: " + variant);

  if (auto hit = scan_zero_cell(inst.family, inst.ordering, v)) {
    emit(zero_cell_to_json(*hit), out_path);
    return kExitCertificate;
  }
  emit(Json{{"result", "origin_in_no_cell"}}, out_path);
  return kExitOpenCase;
}

int cmd_probe_r32(long rmin, long rmax, int seeds, long members, bool hard,
                  const std::string& out_path) {
  InstanceSpec base;
  base.members_per_color = members;
  base.kind = PolyKind::Segments;
  base.coord_bound = 8;
  base.hard = hard;
  auto rows = probe_r32(rmin, rmax, seeds, base);
  emit(probe_report_to_json(rows), out_path);
  return kExitCertificate;
}

int cmd_plot(const std::string& inst_path, const std::string& cert_path,
             const std::string& out_path) {
  Instance inst = instance_from_json(load_json(inst_path));
  std::string svg;
  if (cert_path.empty()) {
    svg = emit_svg(inst.family);
  } else {
    Certificate cert = certificate_from_json(load_json(cert_path));
    svg = emit_svg(inst.family, &cert);
  }
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << svg;
  }
  return kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact colored-transversal verification toolkit"};
  app.require_subcommand(1);

  std::string spec_path, inst_path, cert_path, out_path, variant = "convslice";
  bool both = false, hard = false;
  long rmin = 4, rmax = 7, members = 3;
  int seeds = 50;

  auto* gen = app.add_subcommand("gen", "generate a deterministic instance from a spec");
  gen->add_option("--spec", spec_path, "spec JSON file")->required();
  gen->add_option("--out", out_path, "output instance file");

  auto* ct = app.add_subcommand("check-transversal", "monochromatic hyperplane transversal");
  ct->add_option("instance", inst_path, "instance JSON file")->required();
  ct->add_option("--out", out_path, "output certificate file");

  auto* cc = app.add_subcommand("check-consistency", "rainbow consistency of the ordering");
  cc->add_option("instance", inst_path, "instance JSON file")->required();
  cc->add_option("--out", out_path, "output certificate file");

  auto* ver = app.add_subcommand("verify", "full dichotomy pipeline with certificates");
  ver->add_option("instance", inst_path, "instance JSON file")->required();
  ver->add_flag("--both", both, "also run the consistency branch for cross-validation");
  ver->add_option("--out", out_path, "output certificate file");

  auto* scan = app.add_subcommand("scan-zero-cell", "search cells for 0 in S(sigma)");
  scan->add_option("instance", inst_path, "instance JSON file")->required();
  scan->add_option("--variant", variant, "join | slice | convslice");
  scan->add_option("--out", out_path, "output witness file");

  auto* probe = app.add_subcommand("probe-r32", "sweep r for d=3, k=2 open cases");
  probe->add_option("--rmin", rmin, "smallest r");
  probe->add_option("--rmax", rmax, "largest r");
  probe->add_option("--seeds", seeds, "seeds per r");
  probe->add_option("--members", members, "members per color");
  probe->add_flag("--hard", hard, "hard-mode generation");
  probe->add_option("--out", out_path, "output report file");

  auto* plot = app.add_subcommand("plot", "render a d=2 instance (and certificate) as SVG");
  plot->add_option("instance", inst_path, "instance JSON file")->required();
  plot->add_option("certificate", cert_path, "certificate JSON file");
  plot->add_option("--out", out_path, "output SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (app.got_subcommand(gen)) return cmd_gen(spec_path, out_path);
    if (app.got_subcommand(ct)) return cmd_check_transversal(inst_path, out_path);
    if (app.got_subcommand(cc)) return cmd_check_consistency(inst_path, out_path);
    if (app.got_subcommand(ver)) return cmd_verify(inst_path, both, out_path);
    if (app.got_subcommand(scan)) return cmd_scan_zero_cell(inst_path, variant, out_path);
    if (app.got_subcommand(probe))
      return cmd_probe_r32(rmin, rmax, seeds, members, hard, out_path);
    if (app.got_subcommand(plot)) return cmd_plot(inst_path, cert_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
