#include "CLI11.hpp"

#include "xha/builders.hpp"
#include "xha/center.hpp"
#include "xha/structfile.hpp"
#include "xha/tannaka.hpp"
#include "xha/trace.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace xha;

namespace {

struct Options {
  std::string path;
  std::string report = "text";
  std::string strict = "on";
  std::string family;
};

int emit(const Report& r, const Options& opt) {
  std::cout << (opt.report == "machine" ? r.to_json() : r.to_text());
  if (r.has_input_error()) return 2;
  return r.all_passed() ? 0 : 1;
}

int input_error(const std::string& name, const std::string& message, const Options& opt) {
  Report r;
  r.input_error(name, message);
  return emit(r, opt);
}

/// Regular comodules of every component plus the tensor unit, with identity
/// morphisms; the family on which the categorical axioms are instantiated
/// when no family block is selected.
ObjectFamily regular_family(const CrossedHopfGAlgebra& h) {
  ObjectFamily fam;
  fam.objects.push_back(trivial_comodule(h));
  for (long a = 0; a < h.group().order(); ++a) fam.objects.push_back(regular_comodule(h, a));
  for (const Comodule& m : fam.objects) fam.morphisms.push_back(ComoduleMorphism{m, m, Mat::identity(m.dim)});
  return fam;
}

int cmd_verify(const StructureFile& f, const Options& opt) {
  VerifyOptions vo;
  vo.strict_phi_antipode = (opt.strict != "off");
  Report r = verify_crossed_hopf(f.structure, vo);
  if (f.cobraiding) r.merge(verify_cobraiding(f.structure, *f.cobraiding));
  if (f.cotwist) {
    if (f.cobraiding)
      r.merge(verify_cotwist(f.structure, *f.cobraiding, *f.cotwist));
    else
      r.input_error("cotwist", "cotwist block requires a cobraiding block");
  }
  return emit(r, opt);
}

int cmd_pack(const StructureFile& f, const Options& opt) {
  PackedHopfAlgebra p = pack(f.structure);
  std::cout << "packed dim = " << p.total_dim() << "\n";
  UnpackResult u = unpack(p);
  Report r = u.report;
  if (u.structure && *u.structure == f.structure)
    r.pass("pack-roundtrip");
  else
    r.fail("pack-roundtrip", "unpack(pack(h)) differs from h");
  return emit(r, opt);
}

int cmd_unpack(const StructureFile& f, const Options& opt) {
  UnpackResult u = unpack(pack(f.structure));
  return emit(u.report, opt);
}

int cmd_dual(const StructureFile& f, const Options& opt) {
  Report r;
  if (dualize_back(dualize(f.structure)) == f.structure)
    r.pass("dual-roundtrip");
  else
    r.fail("dual-roundtrip", "dualize_back(dualize(h)) differs from h");
  return emit(r, opt);
}

int cmd_cosemisimple(const StructureFile& f, const Options& opt) {
  CosemisimplicityVerdict v = is_cosemisimple(f.structure);
  for (long a = 0; a < f.structure.group().order(); ++a)
    std::cout << "component " << f.structure.group().label(a) << ": "
              << (v.component_cosemisimple[a] ? "cosemisimple" : "not cosemisimple") << "\n";
  std::cout << "overall: " << (v.overall ? "cosemisimple" : "not cosemisimple") << "\n";
  Report r;
  if (v.criterion_agrees)
    r.pass("cosemisimple-criterion");
  else
    r.fail("cosemisimple-criterion", "neutral-component criterion disagrees with the overall verdict");
  return emit(r, opt);
}

int cmd_braiding_check(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding) return input_error("braiding-check", "no cobraiding block", opt);
  const CrossedHopfGAlgebra& h = f.structure;
  Report r = verify_cobraiding(h, *f.cobraiding);
  r.merge(verify_braiding_axioms(h, regular_family(h), braiding_from_cobraiding(h, *f.cobraiding)));
  const long m = h.group().order();
  std::vector<std::vector<Mat>> braidings(m, std::vector<Mat>(m));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b)
      braidings[a][b] = braiding_map(h, *f.cobraiding, regular_comodule(h, a), regular_comodule(h, b)).f;
  Cobraiding back = extract_cobraiding(h, braidings);
  if (back.gamma == f.cobraiding->gamma)
    r.pass("cobraiding-roundtrip");
  else
    r.fail("cobraiding-roundtrip", "gamma -> braiding maps -> gamma changed the functionals");
  return emit(r, opt);
}

int cmd_twist_check(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding || !f.cotwist)
    return input_error("twist-check", "requires cobraiding and cotwist blocks", opt);
  const CrossedHopfGAlgebra& h = f.structure;
  Report r = verify_cotwist(h, *f.cobraiding, *f.cotwist);
  ObjectFamily fam = regular_family(h);
  r.merge(verify_twist_axioms(h, fam, braiding_from_cobraiding(h, *f.cobraiding),
                              twist_from_cotwist(h, *f.cotwist)));
  r.merge(verify_tortility(h, fam, twist_from_cotwist(h, *f.cotwist)));
  const long m = h.group().order();
  std::vector<Mat> twists;
  for (long a = 0; a < m; ++a) twists.push_back(twist_map(h, *f.cotwist, regular_comodule(h, a)).f);
  Cotwist back = extract_cotwist(h, twists);
  if (back.tau == f.cotwist->tau)
    r.pass("cotwist-roundtrip");
  else
    r.fail("cotwist-roundtrip", "tau -> twist maps -> tau changed the functionals");
  return emit(r, opt);
}

int cmd_qtrace(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding || !f.cotwist)
    return input_error("qtrace", "requires cobraiding and cotwist blocks", opt);
  const CrossedHopfGAlgebra& h = f.structure;
  Report r;
  Comodule unit = trivial_comodule(h);
  std::cout << "qdim (unit) = "
            << qtrace(h, *f.cobraiding, *f.cotwist, ComoduleMorphism{unit, unit, Mat::identity(1)}).to_string()
            << "\n";
  r.pass("qtrace");
  for (const auto& [name, m] : f.comodules) {
    if (m.component != h.group().identity()) continue;
    Cyc d = qtrace(h, *f.cobraiding, *f.cotwist, ComoduleMorphism{m, m, Mat::identity(m.dim)});
    std::cout << "qdim " << name << " = " << d.to_string() << "\n";
  }
  return emit(r, opt);
}

int cmd_smatrix(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding || !f.cotwist)
    return input_error("smatrix", "requires cobraiding and cotwist blocks", opt);
  std::string err;
  auto fam = build_family(f, opt.family, &err);
  if (!fam) return input_error("smatrix", err.empty() ? "--family required" : err, opt);
  Mat s = s_matrix(f.structure, *f.cobraiding, *f.cotwist, *fam);
  std::cout << "s-matrix " << s.rows() << "x" << s.cols() << "\n";
  for (long i = 0; i < s.rows(); ++i) {
    std::cout << "[";
    for (long j = 0; j < s.cols(); ++j) std::cout << (j ? ", " : "") << s.at(i, j).to_string();
    std::cout << "]\n";
  }
  std::cout << "determinant = " << s.determinant().to_string() << "\n";
  Report r;
  r.pass("smatrix");
  return emit(r, opt);
}

int cmd_modular(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding || !f.cotwist)
    return input_error("modular", "requires cobraiding and cotwist blocks", opt);
  std::string err;
  auto fam = build_family(f, opt.family, &err);
  if (!fam) return input_error("modular", err.empty() ? "--family required" : err, opt);
  return emit(is_modular(f.structure, *f.cobraiding, *f.cotwist, *fam), opt);
}

int cmd_coend(const StructureFile& f, const Options& opt) {
  if (!f.diagram) return input_error("coend", "no diagram block", opt);
  CoendPresentation p = coend_coalgebra(*f.diagram);
  std::cout << "ambient dim = " << p.ambient_dim << "\n";
  std::cout << "coend dim = " << p.dim() << "\n";
  std::cout << "basis =";
  for (long b = 0; b < p.dim(); ++b)
    std::cout << " (" << p.basis_object(b) << "," << p.basis_row(b) << "," << p.basis_col(b) << ")";
  std::cout << "\n";
  Report r;
  if (pairing_check(*f.diagram))
    r.pass("coend-pairing");
  else
    r.fail("coend-pairing", "trace pairing with the end is degenerate");
  return emit(r, opt);
}

int cmd_reconstruct(const StructureFile& f, const Options& opt) {
  TannakianPresentation tp;
  bool from_regulars = f.presentation_is_regulars;
  try {
    if (from_regulars)
      tp = presentation_of_regulars(f.structure);
    else if (f.presentation)
      tp = *f.presentation;
    else
      return input_error("reconstruct", "no presentation block", opt);
    ReconstructionResult rec = reconstruct(tp);
    std::cout << "reconstructed dims =";
    for (long a = 0; a < rec.structure.group().order(); ++a) std::cout << " " << rec.structure.dim(a);
    std::cout << "\n";
    Report r = verify_crossed_hopf(rec.structure);
    if (from_regulars) {
      if (group_like_isomorphism(f.structure, rec.structure))
        r.pass("reconstruct-isomorphic");
      else
        r.fail("reconstruct-isomorphic", "no group-like isomorphism onto the source");
    }
    return emit(r, opt);
  } catch (const ArithmeticError& e) {
    return input_error("reconstruct", e.what(), opt);
  }
}

int cmd_center(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding) return input_error("center", "no cobraiding block", opt);
  std::string err;
  auto fam = build_family(f, opt.family, &err);
  if (!fam) return input_error("center", err.empty() ? "--family required" : err, opt);
  const CrossedHopfGAlgebra& h = f.structure;
  const long n = static_cast<long>(fam->objects.size());
  Report r;
  ObjectFamily linear;
  linear.objects = fam->objects;
  for (const Comodule& m : fam->objects)
    linear.morphisms.push_back(ComoduleMorphism{m, m, Mat::identity(m.dim)});
  for (long u = 0; u < n; ++u) {
    HalfBraidingCandidate hb;
    hb.object = fam->objects[u];
    hb.family = fam->objects;
    hb.morphisms = linear.morphisms;
    for (long i = 0; i < n; ++i)
      hb.c.push_back(braiding_map(h, *f.cobraiding, hb.object, fam->objects[i]).f);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Comodule prod = tensor_comodules(h, fam->objects[i], fam->objects[j]);
        long result = -1;
        for (long k = 0; k < n; ++k)
          if (same_comodule(fam->objects[k], prod)) {
            result = k;
            break;
          }
        hb.tensor_pairs.push_back({i, j, result});
      }
    r.merge(verify_half_braiding(h, hb));
    std::cout << "solution space dim at object " << u << " = "
              << natural_solution_space(h, fam->objects[u], linear).size() << "\n";
  }
  return emit(r, opt);
}

int cmd_ribbon_check(const StructureFile& f, const Options& opt) {
  if (!f.cobraiding || !f.cotwist)
    return input_error("ribbon-check", "requires cobraiding and cotwist blocks", opt);
  std::string err;
  auto fam = build_family(f, opt.family, &err);
  if (!fam) return input_error("ribbon-check", err.empty() ? "--family required" : err, opt);
  const CrossedHopfGAlgebra& h = f.structure;
  Report r;
  for (const Comodule& u : fam->objects) {
    DZObject obj{u, twist_map(h, *f.cotwist, u).f};
    r.merge(ribbon_membership(h, *f.cobraiding, obj, dual_comodule(h, u)));
  }
  return emit(r, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for crossed Hopf group algebras"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::pair<std::string, int (*)(const StructureFile&, const Options&)>> commands = {
      {"verify", cmd_verify},
      {"pack", cmd_pack},
      {"unpack", cmd_unpack},
      {"dual", cmd_dual},
      {"cosemisimple", cmd_cosemisimple},
      {"braiding-check", cmd_braiding_check},
      {"twist-check", cmd_twist_check},
      {"qtrace", cmd_qtrace},
      {"smatrix", cmd_smatrix},
      {"modular", cmd_modular},
      {"coend", cmd_coend},
      {"reconstruct", cmd_reconstruct},
      {"center", cmd_center},
      {"ribbon-check", cmd_ribbon_check},
  };
  for (auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", opt.path, "structure file")->required();
    sub->add_option("--report", opt.report)->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--strict-phi-antipode", opt.strict)->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--family", opt.family);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) std::cerr << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  std::ifstream in(opt.path);
  if (!in) {
    std::cerr << "cannot read " << opt.path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_structure_file(buf.str());
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics) std::cout << d.to_string() << "\n";
    return 2;
  }

  try {
    for (auto& [name, fn] : commands)
      if (app.get_subcommand(name)->parsed()) return fn(*parsed.file, opt);
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
