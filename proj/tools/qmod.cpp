#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmod/error.hpp"
#include "qmod/expr.hpp"
#include "qmod/jsonio.hpp"

using namespace qmod;
using nlohmann::json;

namespace {

// exit-code contract: 0 pass/success, 1 definitive negative, 2 unknown or
// marginal, 3 usage error
constexpr int kPass = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

struct CommonOpts {
  std::string carrier;
  std::vector<std::string> gens;
  uint64_t seed = 1;
  bool as_json = false;
  double psd_tol = 1e-8;
  double norm_tol = 1e-7;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_carrier) {
  auto* c = cmd->add_option("--carrier", o.carrier, "carrier spec (e.g. cyclic:2, free:1)");
  if (need_carrier) c->required();
  cmd->add_option("--gen", o.gens, "module generator expression (repeatable)");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--json", o.as_json, "emit JSON");
  cmd->add_option("--psd-tol", o.psd_tol, "PSD tolerance");
  cmd->add_option("--norm-tol", o.norm_tol, "norm comparison tolerance");
}

ModulePresentation make_presentation(const CommonOpts& o) {
  Carrier c = parse_carrier_spec(o.carrier);
  std::vector<StarElement> gens;
  for (const std::string& g : o.gens) gens.push_back(parse_expression(g, c));
  return ModulePresentation(c, std::move(gens));
}

json read_json_file(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void print_report(const AuditReport& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << rep.title << "\n";
  for (const AuditCheck& ch : rep.checks) {
    std::cout << "  [" << ch.status << "] " << ch.name;
    if (ch.tolerance != 0.0)
      std::cout << " (residual " << num(ch.residual) << ", tolerance " << num(ch.tolerance)
                << ")";
    if (!ch.witness.empty()) std::cout << " -- " << ch.witness;
    std::cout << "\n";
  }
}

int report_exit(const AuditReport& rep) {
  if (!rep.passed()) return kNegative;
  if (rep.marginal()) return kUnknown;
  return kPass;
}

int run_norm(const CommonOpts& o, const std::string& expr, int samples) {
  ModulePresentation pres = make_presentation(o);
  StarElement a = parse_expression(expr, pres.carrier());
  NormEstimate est = seminorm(a, pres, o.seed, samples);
  if (o.as_json) {
    std::cout << norm_to_json(a, est).dump(2) << "\n";
  } else if (est.exact) {
    std::cout << num(est.upper) << " (exact)\n";
  } else if (std::isinf(est.upper)) {
    std::cout << "lower bound " << num(est.lower) << ", upper bound unknown";
    if (!est.note.empty()) std::cout << " (" << est.note << ")";
    std::cout << "\n";
  } else {
    std::cout << "in [" << num(est.lower) << ", " << num(est.upper) << "]\n";
  }
  return std::isinf(est.upper) ? kUnknown : kPass;
}

int run_cert_verify(const std::string& path, bool as_json) {
  CertificateFile cf = certificate_from_json(read_json_file(path));
  VerifyResult vr;
  if (cf.norm_claim) {
    NormCertificate nc{cf.norm_claim->first, cf.norm_claim->second, cf.cert};
    vr = cert_verify(nc, cf.pres);
  } else if (cf.target) {
    vr = cert_verify(cf.cert, *cf.target, cf.pres);
  } else {
    fail("certificate file carries no claims");
  }
  if (as_json) {
    json j;
    j["ok"] = vr.ok;
    j["reason"] = vr.reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (vr.ok ? "accepted" : "rejected: " + vr.reason) << "\n";
  }
  return vr.ok ? kPass : kNegative;
}

int run_cert_derive(const CommonOpts& o, const std::string& op, const std::string& expr,
                    const std::string& out_path) {
  ModulePresentation pres = make_presentation(o);
  StarElement a = parse_expression(expr, pres.carrier());
  NormCertificate nc = op == "l1" ? l1_certificate(a, pres) : bound_propagate(a, pres);
  CertificateFile cf{pres, nc.cert, std::nullopt, std::make_pair(nc.element, nc.bound)};
  std::string text = certificate_to_json(cf).dump(2);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) fail("cannot write '" + out_path + "'");
    out << text << "\n";
  }
  return kPass;
}

int run_arch(const CommonOpts& o, const std::string& expr) {
  ModulePresentation pres = make_presentation(o);
  StarElement x = parse_expression(expr, pres.carrier());
  ArchStatus st = arch_membership(x, pres, o.psd_tol, o.seed);
  if (o.as_json) {
    json j;
    j["element"] = print_expression(x);
    j["status"] = to_string(st);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(st) << "\n";
  }
  switch (st) {
    case ArchStatus::interior:
    case ArchStatus::boundary_arch: return kPass;
    case ArchStatus::outside: return kNegative;
    default: return kUnknown;
  }
}

int run_irreps(const CommonOpts& o) {
  Carrier c = parse_carrier_spec(o.carrier);
  IrrepSet s = decompose_irreps(c, o.seed);
  if (o.as_json) {
    std::cout << irreps_to_json(s).dump(2) << "\n";
    return kPass;
  }
  std::cout << s.reps.size() << " irreducible representations\n";
  for (size_t k = 0; k < s.reps.size(); ++k) {
    std::cout << "  #" << k << ": dimension " << s.reps[k].dim() << ", character";
    for (const cplx& z : s.character_table[k]) {
      std::cout << " " << num(z.real());
      if (std::fabs(z.imag()) > 1e-12) std::cout << (z.imag() > 0 ? "+" : "") << num(z.imag()) << "i";
    }
    std::cout << "\n";
  }
  return kPass;
}

int run_gns(const CommonOpts& o, const std::string& form_path, int samples) {
  json jf = read_json_file(form_path);
  PositiveForm f = [&] {
    try {
      return form_from_json(jf);
    } catch (const Error& e) {
      // a rejected form is a definitive negative, not a usage error
      std::cout << "form rejected: " << e.what() << "\n";
      std::exit(kNegative);
    }
  }();
  GNSResult g = gns(f);
  json j;
  j["dimension"] = g.rep.dim();
  j["scale"] = g.scale;
  json cyc = json::array();
  for (const cplx& z : g.cyclic) cyc.push_back(json::array({z.real(), z.imag()}));
  j["cyclic"] = cyc;
  if (o.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "GNS dimension " << g.rep.dim() << ", f(1) = " << num(g.scale) << "\n";
  if (!o.gens.empty() || !o.carrier.empty()) {
    ModulePresentation pres(f.carrier(), [&] {
      std::vector<StarElement> gens;
      for (const std::string& s : o.gens) gens.push_back(parse_expression(s, f.carrier()));
      return gens;
    }());
    AuditReport r9 = prop9_audit(f, pres, samples, o.seed);
    AuditReport r10 = prop10_audit(g, pres, samples, o.seed);
    print_report(r9, o.as_json);
    print_report(r10, o.as_json);
    int e9 = report_exit(r9), e10 = report_exit(r10);
    return std::max(e9, e10);
  }
  return kPass;
}

int run_audit(const CommonOpts& o, const std::string& kind, const std::string& expr,
              int samples) {
  ModulePresentation pres = make_presentation(o);
  AuditReport rep;
  if (kind == "theorem1") {
    rep = theorem1_audit(pres, samples, o.seed, o.psd_tol);
  } else if (kind == "corollary8") {
    try {
      AMModel m = build_AM_model(pres, o.seed, o.psd_tol);
      rep = corollary8_audit(m, samples, o.seed, o.psd_tol);
    } catch (const Error& e) {
      std::cout << "model unavailable: " << e.what() << "\n";
      return kUnknown;
    }
  } else if (kind == "evaluation") {
    StarElement a = expr.empty() ? StarElement::one(pres.carrier())
                                 : parse_expression(expr, pres.carrier());
    rep = evaluation_map_audit(pres, a, samples, 20, o.seed);
  } else if (kind == "example9") {
    rep = example9_audit(pres, samples, o.seed);
  } else {
    fail("unknown audit kind '" + kind + "'");
  }
  print_report(rep, o.as_json);
  return report_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity certificates and seminorms on *-rings"};
  app.require_subcommand(1);

  CommonOpts norm_o, derive_o, arch_o, irreps_o, gns_o, audit_o;
  std::string norm_expr, verify_path, derive_op = "l1", derive_expr, derive_out;
  std::string arch_expr, gns_form, audit_kind, audit_expr;
  int norm_samples = 64, gns_samples = 50, audit_samples = 100;
  bool verify_json = false;

  auto* cnorm = app.add_subcommand("norm", "two-sided seminorm estimate");
  add_common(cnorm, norm_o, true);
  cnorm->add_option("--samples", norm_samples, "lower-bound sampling budget");
  cnorm->add_option("element", norm_expr, "element expression")->required();

  auto* cverify = app.add_subcommand("cert-verify", "verify a certificate file");
  cverify->add_option("file", verify_path, "certificate JSON (or - for stdin)")->required();
  cverify->add_flag("--json", verify_json, "emit JSON");

  auto* cderive = app.add_subcommand("cert-derive", "derive a norm certificate");
  add_common(cderive, derive_o, true);
  cderive->add_option("--op", derive_op, "derivation: l1 or bound")
      ->check(CLI::IsMember({"l1", "bound"}));
  cderive->add_option("--out", derive_out, "output path (default stdout)");
  cderive->add_option("element", derive_expr, "element expression")->required();

  auto* carch = app.add_subcommand("arch", "archimedean closure membership");
  add_common(carch, arch_o, true);
  carch->add_option("element", arch_expr, "symmetric element expression")->required();

  auto* cirreps = app.add_subcommand("irreps", "decompose the regular representation");
  add_common(cirreps, irreps_o, true);

  auto* cgns = app.add_subcommand("gns", "GNS construction from a positive form");
  add_common(cgns, gns_o, false);
  cgns->add_option("--form", gns_form, "form JSON file")->required();
  cgns->add_option("--samples", gns_samples, "audit sample count");

  auto* caudit = app.add_subcommand("audit", "run a structural audit");
  add_common(caudit, audit_o, true);
  caudit->add_option("--kind", audit_kind, "theorem1 | corollary8 | evaluation | example9")
      ->required()
      ->check(CLI::IsMember({"theorem1", "corollary8", "evaluation", "example9"}));
  caudit->add_option("--samples", audit_samples, "sample count");
  caudit->add_option("element", audit_expr, "element expression (evaluation audit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kPass : kUsage;
  }

  try {
    if (cnorm->parsed()) return run_norm(norm_o, norm_expr, norm_samples);
    if (cverify->parsed()) return run_cert_verify(verify_path, verify_json);
    if (cderive->parsed()) return run_cert_derive(derive_o, derive_op, derive_expr, derive_out);
    if (carch->parsed()) return run_arch(arch_o, arch_expr);
    if (cirreps->parsed()) return run_irreps(irreps_o);
    if (cgns->parsed()) return run_gns(gns_o, gns_form, gns_samples);
    if (caudit->parsed()) return run_audit(audit_o, audit_kind, audit_expr, audit_samples);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
