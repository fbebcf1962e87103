#include "xha/structfile.hpp"

#include "json.hpp"

#include <algorithm>
#include <variant>

namespace xha {

namespace {

using nlohmann::json;
using PathTok = std::variant<std::string, long>;
using Path = std::vector<PathTok>;

std::string path_string(const Path& path) {
  std::string out;
  for (const PathTok& t : path) {
    if (std::holds_alternative<std::string>(t)) {
      if (!out.empty()) out += '.';
      out += std::get<std::string>(t);
    } else {
      out += '[' + std::to_string(std::get<long>(t)) + ']';
    }
  }
  return out.empty() ? "(root)" : out;
}

/// A minimal cursor over the raw text, used only to recover line/column
/// positions of JSON nodes the semantic layer complains about.
struct Locator {
  const std::string& s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
  }
  void skip_string() {
    ++pos;  // opening quote
    while (pos < s.size()) {
      if (s[pos] == '\\')
        pos += 2;
      else if (s[pos] == '"') {
        ++pos;
        return;
      } else
        ++pos;
    }
  }
  std::string read_key() {
    std::string key;
    ++pos;  // opening quote
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\') ++pos;
      if (pos < s.size()) key += s[pos++];
    }
    if (pos < s.size()) ++pos;
    return key;
  }
  void skip_value() {
    ws();
    if (pos >= s.size()) return;
    char c = s[pos];
    if (c == '"') {
      skip_string();
    } else if (c == '{' || c == '[') {
      char open = c, close = (c == '{') ? '}' : ']';
      long depth = 0;
      while (pos < s.size()) {
        char d = s[pos];
        if (d == '"') {
          skip_string();
          continue;
        }
        if (d == open) ++depth;
        if (d == close) {
          --depth;
          ++pos;
          if (depth == 0) return;
          continue;
        }
        ++pos;
      }
    } else {
      while (pos < s.size() && s[pos] != ',' && s[pos] != '}' && s[pos] != ']') ++pos;
    }
  }
};

/// Byte offset of the node addressed by `path`, or npos if unlocatable.
size_t locate(const std::string& s, const Path& path) {
  Locator c{s};
  c.ws();
  for (const PathTok& tok : path) {
    c.ws();
    if (std::holds_alternative<std::string>(tok)) {
      if (c.pos >= s.size() || s[c.pos] != '{') return std::string::npos;
      ++c.pos;
      const std::string& want = std::get<std::string>(tok);
      bool found = false;
      while (c.pos < s.size()) {
        c.ws();
        if (c.pos >= s.size() || s[c.pos] == '}') break;
        if (s[c.pos] == ',') {
          ++c.pos;
          continue;
        }
        std::string key = c.read_key();
        c.ws();
        if (c.pos < s.size() && s[c.pos] == ':') ++c.pos;
        c.ws();
        if (key == want) {
          found = true;
          break;
        }
        c.skip_value();
      }
      if (!found) return std::string::npos;
    } else {
      if (c.pos >= s.size() || s[c.pos] != '[') return std::string::npos;
      ++c.pos;
      for (long i = 0; i < std::get<long>(tok); ++i) {
        c.skip_value();
        c.ws();
        if (c.pos < s.size() && s[c.pos] == ',') ++c.pos;
      }
      c.ws();
    }
  }
  c.ws();
  return c.pos;
}

std::pair<long, long> line_col(const std::string& s, size_t offset) {
  long line = 1, col = 1;
  for (size_t i = 0; i < offset && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Parser {
 public:
  Parser(const std::string& text) : text_(text) {}

  std::vector<Diagnostic> diagnostics;

  void diag(const Path& path, const std::string& message) {
    size_t off = locate(text_, path);
    Path parent = path;
    while (off == std::string::npos && !parent.empty()) {
      parent.pop_back();
      off = locate(text_, parent);
    }
    auto [line, col] = line_col(text_, off == std::string::npos ? 0 : off);
    diagnostics.push_back(Diagnostic{path_string(path), line, col, message});
  }

  void check_keys(const json& j, const Path& path, const std::vector<std::string>& allowed) {
    if (!j.is_object()) return;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        Path p = path;
        p.push_back(it.key());
        diag(p, "unknown key '" + it.key() + "'");
      }
    }
  }

  const json* require(const json& j, const Path& path, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) {
      diag(path, "missing required key '" + key + "'");
      return nullptr;
    }
    Path p = path;
    p.push_back(key);
    return &j.at(key);
  }

  std::optional<long> get_integer(const json& j, const Path& path) {
    if (!j.is_number_integer()) {
      diag(path, "expected an integer");
      return std::nullopt;
    }
    return j.get<long>();
  }

  std::optional<std::vector<long>> get_int_array(const json& j, const Path& path) {
    if (!j.is_array()) {
      diag(path, "expected an array of integers");
      return std::nullopt;
    }
    std::vector<long> out;
    for (size_t i = 0; i < j.size(); ++i) {
      Path p = path;
      p.push_back(static_cast<long>(i));
      auto v = get_integer(j[i], p);
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
    return out;
  }

  /// Matrices are nested arrays of scalar strings. Expected dimensions of -1
  /// accept any size (the matrix must still be rectangular).
  std::optional<Mat> get_matrix(const json& j, const Path& path, long rows, long cols) {
    if (!j.is_array()) {
      diag(path, "expected a matrix (array of rows)");
      return std::nullopt;
    }
    long r = static_cast<long>(j.size());
    if (rows >= 0 && r != rows) {
      diag(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
      return std::nullopt;
    }
    std::vector<std::vector<Cyc>> data;
    long c = cols;
    for (long i = 0; i < r; ++i) {
      Path pr = path;
      pr.push_back(i);
      if (!j[i].is_array()) {
        diag(pr, "expected a row (array of scalar strings)");
        return std::nullopt;
      }
      long rc = static_cast<long>(j[i].size());
      if (c < 0) c = rc;
      if (rc != c) {
        diag(pr, "expected " + std::to_string(c) + " columns, found " + std::to_string(rc));
        return std::nullopt;
      }
      std::vector<Cyc> row;
      for (long k = 0; k < rc; ++k) {
        Path pe = pr;
        pe.push_back(k);
        if (!j[i][k].is_string()) {
          diag(pe, "expected a scalar string");
          return std::nullopt;
        }
        auto v = parse_scalar(j[i][k].get<std::string>());
        if (!v) {
          diag(pe, "unparsable scalar '" + j[i][k].get<std::string>() + "'");
          return std::nullopt;
        }
        row.push_back(*v);
      }
      data.push_back(std::move(row));
    }
    if (c < 0) c = (cols >= 0) ? cols : 0;
    Mat m(r, c);
    for (long i = 0; i < r; ++i)
      for (long k = 0; k < c; ++k) m.at(i, k) = data[i][k];
    return m;
  }

  std::optional<long> component_index(const json& j, const Path& path, const FiniteGroup& g) {
    if (j.is_number_integer()) {
      long v = j.get<long>();
      if (v < 0 || v >= g.order()) {
        diag(path, "component index out of range");
        return std::nullopt;
      }
      return v;
    }
    if (j.is_string()) {
      auto idx = g.index_of(j.get<std::string>());
      if (!idx) {
        diag(path, "unresolvable component label '" + j.get<std::string>() + "'");
        return std::nullopt;
      }
      return *idx;
    }
    diag(path, "expected a component index or label");
    return std::nullopt;
  }

 private:
  const std::string& text_;
};

}  // namespace

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + " " + path + ": " + message;
}

ParseResult parse_structure_file(const std::string& text) {
  ParseResult result;
  Parser p(text);

  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) {
    // re-parse with exceptions to recover the byte offset of the syntax error
    try {
      (void)json::parse(text);
    } catch (const json::parse_error& e) {
      auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
      result.diagnostics.push_back(Diagnostic{"(root)", line, col, e.what()});
      return result;
    }
  }
  if (!root.is_object()) {
    result.diagnostics.push_back(Diagnostic{"(root)", 1, 1, "expected a top-level object"});
    return result;
  }

  Path rp;
  p.check_keys(root, rp,
               {"conductor", "group", "components", "mult", "unit", "conj", "antipode", "cobraiding", "cotwist",
                "comodules", "families", "diagram", "presentation"});

  long conductor = 1;
  if (root.contains("conductor")) {
    auto v = p.get_integer(root["conductor"], {PathTok{"conductor"}});
    if (v && *v >= 1) conductor = *v;
    else if (v) p.diag({PathTok{"conductor"}}, "conductor must be positive");
  }

  // group block
  std::optional<FiniteGroup> group;
  if (const json* jg = p.require(root, rp, "group")) {
    Path gp{PathTok{"group"}};
    p.check_keys(*jg, gp, {"labels", "table"});
    const json* jl = p.require(*jg, gp, "labels");
    const json* jt = p.require(*jg, gp, "table");
    if (jl && jt && jl->is_array() && jt->is_array()) {
      std::vector<std::string> labels;
      bool ok = true;
      for (size_t i = 0; i < jl->size(); ++i) {
        if (!(*jl)[i].is_string()) {
          p.diag({PathTok{"group"}, PathTok{"labels"}, PathTok{static_cast<long>(i)}}, "expected a string label");
          ok = false;
          break;
        }
        labels.push_back((*jl)[i].get<std::string>());
      }
      std::vector<std::vector<long>> table;
      for (size_t i = 0; ok && i < jt->size(); ++i) {
        Path tp{PathTok{"group"}, PathTok{"table"}, PathTok{static_cast<long>(i)}};
        auto row = p.get_int_array((*jt)[i], tp);
        if (!row) {
          ok = false;
          break;
        }
        table.push_back(*row);
      }
      if (ok) {
        try {
          group.emplace(FiniteGroup(labels, table));
        } catch (const GroupError& e) {
          p.diag(gp, e.what());
        }
      }
    } else if (jl && !jl->is_array()) {
      p.diag({PathTok{"group"}, PathTok{"labels"}}, "expected an array");
    } else if (jt && !jt->is_array()) {
      p.diag({PathTok{"group"}, PathTok{"table"}}, "expected an array");
    }
  }
  if (!group) {
    result.diagnostics = p.diagnostics;
    return result;
  }
  const long m = group->order();

  // components
  std::vector<Component> comps;
  if (const json* jc = p.require(root, rp, "components")) {
    if (!jc->is_array() || static_cast<long>(jc->size()) != m) {
      p.diag({PathTok{"components"}}, "expected one component per group element");
    } else {
      for (long a = 0; a < m; ++a) {
        Path cp{PathTok{"components"}, PathTok{a}};
        const json& c = (*jc)[a];
        p.check_keys(c, cp, {"dim", "delta", "epsilon"});
        Component comp;
        bool ok = true;
        if (const json* jd = p.require(c, cp, "dim")) {
          Path dp = cp;
          dp.push_back(std::string("dim"));
          auto v = p.get_integer(*jd, dp);
          if (v && *v >= 0)
            comp.dim = *v;
          else
            ok = false;
        } else
          ok = false;
        if (ok) {
          if (const json* jd = p.require(c, cp, "delta")) {
            Path dp = cp;
            dp.push_back(std::string("delta"));
            auto mmat = p.get_matrix(*jd, dp, comp.dim * comp.dim, comp.dim);
            if (mmat)
              comp.delta = *mmat;
            else
              ok = false;
          } else
            ok = false;
          if (const json* je = p.require(c, cp, "epsilon")) {
            Path ep = cp;
            ep.push_back(std::string("epsilon"));
            auto mmat = p.get_matrix(*je, ep, 1, comp.dim);
            if (mmat)
              comp.epsilon = *mmat;
            else
              ok = false;
          } else
            ok = false;
        }
        comps.push_back(ok ? comp : Component{comp.dim, Mat(comp.dim * comp.dim, comp.dim), Mat(1, comp.dim)});
      }
    }
  }
  if (static_cast<long>(comps.size()) != m) {
    result.diagnostics = p.diagnostics;
    return result;
  }
  auto dim = [&](long a) { return comps[a].dim; };

  // mult / unit / conj / antipode
  std::vector<std::vector<Mat>> mult(m, std::vector<Mat>(m));
  if (const json* jm = p.require(root, rp, "mult")) {
    if (!jm->is_array() || static_cast<long>(jm->size()) != m)
      p.diag({PathTok{"mult"}}, "expected one row of matrices per group element");
    else
      for (long a = 0; a < m; ++a) {
        const json& row = (*jm)[a];
        if (!row.is_array() || static_cast<long>(row.size()) != m) {
          p.diag({PathTok{"mult"}, PathTok{a}}, "expected one matrix per group element");
          continue;
        }
        for (long b = 0; b < m; ++b) {
          Path mp{PathTok{"mult"}, PathTok{a}, PathTok{b}};
          auto mm = p.get_matrix(row[b], mp, dim(group->mul(a, b)), dim(a) * dim(b));
          if (mm)
            mult[a][b] = *mm;
          else
            mult[a][b] = Mat(dim(group->mul(a, b)), dim(a) * dim(b));
        }
      }
  }
  Mat unit(dim(group->identity()), 1);
  if (const json* ju = p.require(root, rp, "unit")) {
    auto mm = p.get_matrix(*ju, {PathTok{"unit"}}, dim(group->identity()), 1);
    if (mm) unit = *mm;
  }
  std::vector<std::vector<Mat>> conj(m, std::vector<Mat>(m));
  if (const json* jc = p.require(root, rp, "conj")) {
    if (!jc->is_array() || static_cast<long>(jc->size()) != m)
      p.diag({PathTok{"conj"}}, "expected one row of matrices per group element");
    else
      for (long b = 0; b < m; ++b) {
        const json& row = (*jc)[b];
        if (!row.is_array() || static_cast<long>(row.size()) != m) {
          p.diag({PathTok{"conj"}, PathTok{b}}, "expected one matrix per group element");
          continue;
        }
        for (long a = 0; a < m; ++a) {
          Path cp{PathTok{"conj"}, PathTok{b}, PathTok{a}};
          auto mm = p.get_matrix(row[a], cp, dim(group->conj(b, a)), dim(a));
          if (mm)
            conj[b][a] = *mm;
          else
            conj[b][a] = Mat(dim(group->conj(b, a)), dim(a));
        }
      }
  }
  std::vector<Mat> antipode(m);
  if (const json* js = p.require(root, rp, "antipode")) {
    if (!js->is_array() || static_cast<long>(js->size()) != m)
      p.diag({PathTok{"antipode"}}, "expected one matrix per group element");
    else
      for (long a = 0; a < m; ++a) {
        Path ap{PathTok{"antipode"}, PathTok{a}};
        auto mm = p.get_matrix((*js)[a], ap, dim(group->inv(a)), dim(a));
        if (mm)
          antipode[a] = *mm;
        else
          antipode[a] = Mat(dim(group->inv(a)), dim(a));
      }
    for (long a = 0; a < m; ++a)
      if (antipode[a].rows() == 0 && dim(group->inv(a)) != 0) antipode[a] = Mat(dim(group->inv(a)), dim(a));
  }

  if (!p.diagnostics.empty()) {
    result.diagnostics = p.diagnostics;
    return result;
  }

  StructureFile file{conductor, CrossedHopfGAlgebra(*group, comps, mult, unit, conj, antipode),
                     std::nullopt, std::nullopt, {}, {}, std::nullopt, std::nullopt, false};

  // cobraiding / cotwist
  if (root.contains("cobraiding")) {
    const json& jb = root["cobraiding"];
    Path bp{PathTok{"cobraiding"}};
    p.check_keys(jb, bp, {"gamma", "gamma_inv"});
    Cobraiding c;
    c.gamma.assign(m, std::vector<Mat>(m));
    c.gamma_inv.assign(m, std::vector<Mat>(m));
    bool ok = true;
    for (const char* key : {"gamma", "gamma_inv"}) {
      const json* jg = p.require(jb, bp, key);
      if (!jg || !jg->is_array() || static_cast<long>(jg->size()) != m) {
        if (jg) p.diag({PathTok{"cobraiding"}, PathTok{std::string(key)}}, "expected one row per group element");
        ok = false;
        continue;
      }
      for (long a = 0; a < m; ++a) {
        const json& row = (*jg)[a];
        if (!row.is_array() || static_cast<long>(row.size()) != m) {
          p.diag({PathTok{"cobraiding"}, PathTok{std::string(key)}, PathTok{a}}, "expected one matrix per group element");
          ok = false;
          continue;
        }
        for (long b = 0; b < m; ++b) {
          Path gp{PathTok{"cobraiding"}, PathTok{std::string(key)}, PathTok{a}, PathTok{b}};
          auto mm = p.get_matrix(row[b], gp, 1, dim(a) * dim(b));
          if (mm)
            (std::string(key) == "gamma" ? c.gamma : c.gamma_inv)[a][b] = *mm;
          else
            ok = false;
        }
      }
    }
    if (ok) file.cobraiding = std::move(c);
  }
  if (root.contains("cotwist")) {
    const json& jt = root["cotwist"];
    Path tp{PathTok{"cotwist"}};
    p.check_keys(jt, tp, {"tau", "tau_inv"});
    Cotwist t;
    bool ok = true;
    for (const char* key : {"tau", "tau_inv"}) {
      const json* jv = p.require(jt, tp, key);
      if (!jv || !jv->is_array() || static_cast<long>(jv->size()) != m) {
        if (jv) p.diag({PathTok{"cotwist"}, PathTok{std::string(key)}}, "expected one matrix per group element");
        ok = false;
        continue;
      }
      for (long a = 0; a < m; ++a) {
        Path ap{PathTok{"cotwist"}, PathTok{std::string(key)}, PathTok{a}};
        auto mm = p.get_matrix((*jv)[a], ap, 1, dim(a));
        if (mm)
          (std::string(key) == "tau" ? t.tau : t.tau_inv).push_back(*mm);
        else
          ok = false;
      }
    }
    if (ok) file.cotwist = std::move(t);
  }

  // comodules
  if (root.contains("comodules")) {
    const json& jc = root["comodules"];
    if (!jc.is_object())
      p.diag({PathTok{"comodules"}}, "expected an object of named comodules");
    else
      for (auto it = jc.begin(); it != jc.end(); ++it) {
        Path cp{PathTok{"comodules"}, PathTok{it.key()}};
        p.check_keys(it.value(), cp, {"component", "dim", "rho"});
        Comodule c;
        bool ok = true;
        if (const json* ja = p.require(it.value(), cp, "component")) {
          Path ap = cp;
          ap.push_back(std::string("component"));
          auto v = p.component_index(*ja, ap, *group);
          if (v)
            c.component = *v;
          else
            ok = false;
        } else
          ok = false;
        if (const json* jd = p.require(it.value(), cp, "dim")) {
          Path dp = cp;
          dp.push_back(std::string("dim"));
          auto v = p.get_integer(*jd, dp);
          if (v && *v >= 0)
            c.dim = *v;
          else
            ok = false;
        } else
          ok = false;
        if (ok) {
          if (const json* jr = p.require(it.value(), cp, "rho")) {
            Path rp2 = cp;
            rp2.push_back(std::string("rho"));
            auto mm = p.get_matrix(*jr, rp2, dim(c.component) * c.dim, c.dim);
            if (mm)
              c.rho = *mm;
            else
              ok = false;
          } else
            ok = false;
        }
        if (ok) file.comodules.emplace(it.key(), std::move(c));
      }
  }

  // families
  if (root.contains("families")) {
    const json& jf = root["families"];
    if (!jf.is_object())
      p.diag({PathTok{"families"}}, "expected an object of named families");
    else
      for (auto it = jf.begin(); it != jf.end(); ++it) {
        Path fp{PathTok{"families"}, PathTok{it.key()}};
        p.check_keys(it.value(), fp, {"objects", "zero", "dual_index", "dual_witness"});
        FamilyBlock fam;
        bool ok = true;
        if (const json* jo = p.require(it.value(), fp, "objects")) {
          if (!jo->is_array()) {
            p.diag(fp, "objects must be an array of comodule names");
            ok = false;
          } else
            for (size_t i = 0; i < jo->size(); ++i) {
              Path op = fp;
              op.push_back(std::string("objects"));
              op.push_back(static_cast<long>(i));
              if (!(*jo)[i].is_string()) {
                p.diag(op, "expected a comodule name");
                ok = false;
                break;
              }
              std::string name = (*jo)[i].get<std::string>();
              if (!file.comodules.count(name)) {
                p.diag(op, "unresolvable comodule name '" + name + "'");
                ok = false;
                break;
              }
              fam.objects.push_back(name);
            }
        } else
          ok = false;
        if (const json* jz = p.require(it.value(), fp, "zero")) {
          Path zp = fp;
          zp.push_back(std::string("zero"));
          auto v = p.get_integer(*jz, zp);
          if (v)
            fam.zero = *v;
          else
            ok = false;
        } else
          ok = false;
        if (const json* jd = p.require(it.value(), fp, "dual_index")) {
          Path dp = fp;
          dp.push_back(std::string("dual_index"));
          auto v = p.get_int_array(*jd, dp);
          if (v && v->size() == fam.objects.size())
            fam.dual_index = *v;
          else {
            if (v) p.diag(dp, "dual_index must list one entry per object");
            ok = false;
          }
        } else
          ok = false;
        if (ok && it.value().contains("dual_witness")) {
          const json& jw = it.value()["dual_witness"];
          Path wp = fp;
          wp.push_back(std::string("dual_witness"));
          if (!jw.is_array() || jw.size() != fam.objects.size()) {
            p.diag(wp, "dual_witness must list one matrix per object");
            ok = false;
          } else
            for (size_t i = 0; ok && i < jw.size(); ++i) {
              Path ep = wp;
              ep.push_back(static_cast<long>(i));
              auto mm = p.get_matrix(jw[i], ep, -1, -1);
              if (mm)
                fam.dual_witness.push_back(*mm);
              else
                ok = false;
            }
        }
        if (ok) file.families.emplace(it.key(), std::move(fam));
      }
  }

  // diagram
  if (root.contains("diagram")) {
    const json& jd = root["diagram"];
    Path dp{PathTok{"diagram"}};
    p.check_keys(jd, dp, {"dims", "arrows"});
    FiniteDiagram d;
    bool ok = true;
    if (const json* jm = p.require(jd, dp, "dims")) {
      Path mp = dp;
      mp.push_back(std::string("dims"));
      auto v = p.get_int_array(*jm, mp);
      if (v)
        d.dims = *v;
      else
        ok = false;
    } else
      ok = false;
    if (ok && jd.contains("arrows")) {
      const json& ja = jd["arrows"];
      Path ap = dp;
      ap.push_back(std::string("arrows"));
      if (!ja.is_array()) {
        p.diag(ap, "expected an array of arrows");
        ok = false;
      } else
        for (size_t i = 0; ok && i < ja.size(); ++i) {
          Path ip = ap;
          ip.push_back(static_cast<long>(i));
          p.check_keys(ja[i], ip, {"src", "dst", "value"});
          FiniteDiagram::Arrow arrow;
          const json* jsrc = p.require(ja[i], ip, "src");
          const json* jdst = p.require(ja[i], ip, "dst");
          const json* jval = p.require(ja[i], ip, "value");
          if (!jsrc || !jdst || !jval) {
            ok = false;
            break;
          }
          Path sp = ip;
          sp.push_back(std::string("src"));
          Path tp = ip;
          tp.push_back(std::string("dst"));
          auto s = p.get_integer(*jsrc, sp);
          auto t = p.get_integer(*jdst, tp);
          if (!s || !t || *s < 0 || *t < 0 || *s >= static_cast<long>(d.dims.size()) ||
              *t >= static_cast<long>(d.dims.size())) {
            p.diag(ip, "arrow endpoints out of range");
            ok = false;
            break;
          }
          arrow.src = *s;
          arrow.dst = *t;
          Path vp = ip;
          vp.push_back(std::string("value"));
          auto mm = p.get_matrix(*jval, vp, d.dims[*t], d.dims[*s]);
          if (!mm) {
            ok = false;
            break;
          }
          arrow.value = *mm;
          d.arrows.push_back(std::move(arrow));
        }
    }
    if (ok) file.diagram = std::move(d);
  }

  // presentation: either the regulars shorthand or the explicit tables
  if (root.contains("presentation")) {
    const json& jp = root["presentation"];
    Path pp{PathTok{"presentation"}};
    if (jp.is_object() && jp.contains("regulars")) {
      p.check_keys(jp, pp, {"regulars"});
      if (jp["regulars"].is_boolean() && jp["regulars"].get<bool>())
        file.presentation_is_regulars = true;
      else
        p.diag(pp, "regulars must be true when present");
    } else if (jp.is_object()) {
      p.check_keys(jp, pp,
                   {"grade", "dims", "arrows", "tensor", "unit_object", "dual", "evaluation", "coevaluation",
                    "conj_obj", "conj_mat"});
      TannakianPresentation tp;
      tp.group = *group;
      bool ok = true;
      auto ints = [&](const char* key, std::vector<long>& out) {
        const json* jv = p.require(jp, pp, key);
        if (!jv) return false;
        Path kp = pp;
        kp.push_back(std::string(key));
        auto v = p.get_int_array(*jv, kp);
        if (!v) return false;
        out = *v;
        return true;
      };
      ok = ints("grade", tp.grade) && ok;
      ok = ints("dims", tp.dims) && ok;
      ok = ints("dual", tp.dual) && ok;
      if (const json* jv = p.require(jp, pp, "unit_object")) {
        Path kp = pp;
        kp.push_back(std::string("unit_object"));
        auto v = p.get_integer(*jv, kp);
        if (v)
          tp.unit_object = *v;
        else
          ok = false;
      } else
        ok = false;
      if (const json* jv = p.require(jp, pp, "tensor")) {
        Path kp = pp;
        kp.push_back(std::string("tensor"));
        if (!jv->is_array()) {
          p.diag(kp, "expected an array of rows");
          ok = false;
        } else
          for (size_t i = 0; ok && i < jv->size(); ++i) {
            Path ip = kp;
            ip.push_back(static_cast<long>(i));
            auto row = p.get_int_array((*jv)[i], ip);
            if (row)
              tp.tensor.push_back(*row);
            else
              ok = false;
          }
      } else
        ok = false;
      auto mats = [&](const char* key, std::vector<Mat>& out) {
        const json* jv = p.require(jp, pp, key);
        if (!jv) return false;
        Path kp = pp;
        kp.push_back(std::string(key));
        if (!jv->is_array()) {
          p.diag(kp, "expected an array of matrices");
          return false;
        }
        for (size_t i = 0; i < jv->size(); ++i) {
          Path ip = kp;
          ip.push_back(static_cast<long>(i));
          auto mm = p.get_matrix((*jv)[i], ip, -1, -1);
          if (!mm) return false;
          out.push_back(*mm);
        }
        return true;
      };
      ok = mats("evaluation", tp.evaluation) && ok;
      ok = mats("coevaluation", tp.coevaluation) && ok;
      if (const json* jv = p.require(jp, pp, "conj_obj")) {
        Path kp = pp;
        kp.push_back(std::string("conj_obj"));
        if (!jv->is_array()) {
          p.diag(kp, "expected an array of rows");
          ok = false;
        } else
          for (size_t i = 0; ok && i < jv->size(); ++i) {
            Path ip = kp;
            ip.push_back(static_cast<long>(i));
            auto row = p.get_int_array((*jv)[i], ip);
            if (row)
              tp.conj_obj.push_back(*row);
            else
              ok = false;
          }
      } else
        ok = false;
      if (const json* jv = p.require(jp, pp, "conj_mat")) {
        Path kp = pp;
        kp.push_back(std::string("conj_mat"));
        if (!jv->is_array()) {
          p.diag(kp, "expected an array of rows of matrices");
          ok = false;
        } else
          for (size_t i = 0; ok && i < jv->size(); ++i) {
            Path ip = kp;
            ip.push_back(static_cast<long>(i));
            if (!(*jv)[i].is_array()) {
              p.diag(ip, "expected an array of matrices");
              ok = false;
              break;
            }
            std::vector<Mat> row;
            for (size_t k = 0; k < (*jv)[i].size(); ++k) {
              Path ep = ip;
              ep.push_back(static_cast<long>(k));
              auto mm = p.get_matrix((*jv)[i][k], ep, -1, -1);
              if (!mm) {
                ok = false;
                break;
              }
              row.push_back(*mm);
            }
            if (!ok) break;
            tp.conj_mat.push_back(std::move(row));
          }
      } else
        ok = false;
      if (ok && jp.contains("arrows")) {
        const json& ja = jp["arrows"];
        Path ap = pp;
        ap.push_back(std::string("arrows"));
        if (!ja.is_array()) {
          p.diag(ap, "expected an array of arrows");
          ok = false;
        } else
          for (size_t i = 0; ok && i < ja.size(); ++i) {
            Path ip = ap;
            ip.push_back(static_cast<long>(i));
            p.check_keys(ja[i], ip, {"src", "dst", "value"});
            const json* jsrc = p.require(ja[i], ip, "src");
            const json* jdst = p.require(ja[i], ip, "dst");
            const json* jval = p.require(ja[i], ip, "value");
            if (!jsrc || !jdst || !jval) {
              ok = false;
              break;
            }
            Path sp = ip;
            sp.push_back(std::string("src"));
            Path tpp = ip;
            tpp.push_back(std::string("dst"));
            Path vp = ip;
            vp.push_back(std::string("value"));
            auto s = p.get_integer(*jsrc, sp);
            auto t = p.get_integer(*jdst, tpp);
            auto mm = p.get_matrix(*jval, vp, -1, -1);
            if (!s || !t || !mm) {
              ok = false;
              break;
            }
            tp.arrows.push_back({*s, *t, *mm});
          }
      }
      if (ok) file.presentation = std::move(tp);
    } else {
      p.diag(pp, "expected an object");
    }
  }

  result.diagnostics = p.diagnostics;
  if (result.diagnostics.empty()) result.file = std::move(file);
  return result;
}

namespace {

nlohmann::ordered_json matrix_to_json(const Mat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string serialize_structure_file(const StructureFile& f) {
  nlohmann::ordered_json root;
  const FiniteGroup& g = f.structure.group();
  const long m = g.order();

  root["conductor"] = f.conductor;
  nlohmann::ordered_json jg;
  jg["labels"] = nlohmann::ordered_json::array();
  for (long i = 0; i < m; ++i) jg["labels"].push_back(g.label(i));
  jg["table"] = g.table();
  root["group"] = std::move(jg);

  root["components"] = nlohmann::ordered_json::array();
  for (long a = 0; a < m; ++a) {
    nlohmann::ordered_json c;
    c["dim"] = f.structure.dim(a);
    c["delta"] = matrix_to_json(f.structure.delta(a));
    c["epsilon"] = matrix_to_json(f.structure.epsilon(a));
    root["components"].push_back(std::move(c));
  }
  root["mult"] = nlohmann::ordered_json::array();
  for (long a = 0; a < m; ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long b = 0; b < m; ++b) row.push_back(matrix_to_json(f.structure.mult(a, b)));
    root["mult"].push_back(std::move(row));
  }
  root["unit"] = matrix_to_json(f.structure.unit());
  root["conj"] = nlohmann::ordered_json::array();
  for (long b = 0; b < m; ++b) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (long a = 0; a < m; ++a) row.push_back(matrix_to_json(f.structure.conj(b, a)));
    root["conj"].push_back(std::move(row));
  }
  root["antipode"] = nlohmann::ordered_json::array();
  for (long a = 0; a < m; ++a) root["antipode"].push_back(matrix_to_json(f.structure.antipode(a)));

  if (f.cobraiding) {
    nlohmann::ordered_json jb;
    for (const char* key : {"gamma", "gamma_inv"}) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      const auto& src = std::string(key) == "gamma" ? f.cobraiding->gamma : f.cobraiding->gamma_inv;
      for (long a = 0; a < m; ++a) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long b = 0; b < m; ++b) row.push_back(matrix_to_json(src[a][b]));
        rows.push_back(std::move(row));
      }
      jb[key] = std::move(rows);
    }
    root["cobraiding"] = std::move(jb);
  }
  if (f.cotwist) {
    nlohmann::ordered_json jt;
    for (const char* key : {"tau", "tau_inv"}) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      const auto& src = std::string(key) == "tau" ? f.cotwist->tau : f.cotwist->tau_inv;
      for (long a = 0; a < m; ++a) rows.push_back(matrix_to_json(src[a]));
      jt[key] = std::move(rows);
    }
    root["cotwist"] = std::move(jt);
  }
  if (!f.comodules.empty()) {
    nlohmann::ordered_json jc;
    for (const auto& [name, c] : f.comodules) {
      nlohmann::ordered_json jm;
      jm["component"] = g.label(c.component);
      jm["dim"] = c.dim;
      jm["rho"] = matrix_to_json(c.rho);
      jc[name] = std::move(jm);
    }
    root["comodules"] = std::move(jc);
  }
  if (!f.families.empty()) {
    nlohmann::ordered_json jf;
    for (const auto& [name, fam] : f.families) {
      nlohmann::ordered_json jm;
      jm["objects"] = fam.objects;
      jm["zero"] = fam.zero;
      jm["dual_index"] = fam.dual_index;
      if (!fam.dual_witness.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const Mat& w : fam.dual_witness) rows.push_back(matrix_to_json(w));
        jm["dual_witness"] = std::move(rows);
      }
      jf[name] = std::move(jm);
    }
    root["families"] = std::move(jf);
  }
  if (f.diagram) {
    nlohmann::ordered_json jd;
    jd["dims"] = f.diagram->dims;
    nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
    for (const auto& a : f.diagram->arrows) {
      nlohmann::ordered_json ja;
      ja["src"] = a.src;
      ja["dst"] = a.dst;
      ja["value"] = matrix_to_json(a.value);
      arrows.push_back(std::move(ja));
    }
    jd["arrows"] = std::move(arrows);
    root["diagram"] = std::move(jd);
  }
  if (f.presentation_is_regulars) {
    root["presentation"] = nlohmann::ordered_json{{"regulars", true}};
  } else if (f.presentation) {
    const TannakianPresentation& tp = *f.presentation;
    nlohmann::ordered_json jp;
    jp["grade"] = tp.grade;
    jp["dims"] = tp.dims;
    nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
    for (const auto& a : tp.arrows) {
      nlohmann::ordered_json ja;
      ja["src"] = a.src;
      ja["dst"] = a.dst;
      ja["value"] = matrix_to_json(a.value);
      arrows.push_back(std::move(ja));
    }
    jp["arrows"] = std::move(arrows);
    jp["tensor"] = tp.tensor;
    jp["unit_object"] = tp.unit_object;
    jp["dual"] = tp.dual;
    nlohmann::ordered_json evs = nlohmann::ordered_json::array(), coevs = nlohmann::ordered_json::array();
    for (const Mat& e : tp.evaluation) evs.push_back(matrix_to_json(e));
    for (const Mat& c : tp.coevaluation) coevs.push_back(matrix_to_json(c));
    jp["evaluation"] = std::move(evs);
    jp["coevaluation"] = std::move(coevs);
    jp["conj_obj"] = tp.conj_obj;
    nlohmann::ordered_json cm = nlohmann::ordered_json::array();
    for (const auto& row : tp.conj_mat) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const Mat& mmat : row) r.push_back(matrix_to_json(mmat));
      cm.push_back(std::move(r));
    }
    jp["conj_mat"] = std::move(cm);
    root["presentation"] = std::move(jp);
  }
  return root.dump(2) + "\n";
}

std::optional<SimpleFamily> build_family(const StructureFile& f, const std::string& name, std::string* error) {
  auto it = f.families.find(name);
  if (it == f.families.end()) {
    if (error) *error = "no family named '" + name + "'";
    return std::nullopt;
  }
  const FamilyBlock& block = it->second;
  SimpleFamily fam;
  for (const std::string& obj : block.objects) {
    auto cit = f.comodules.find(obj);
    if (cit == f.comodules.end()) {
      if (error) *error = "unresolvable comodule name '" + obj + "'";
      return std::nullopt;
    }
    fam.objects.push_back(cit->second);
  }
  const long n = static_cast<long>(fam.objects.size());
  if (block.zero < 0 || block.zero >= n || static_cast<long>(block.dual_index.size()) != n) {
    if (error) *error = "family index data inconsistent with object count";
    return std::nullopt;
  }
  fam.zero = block.zero;
  fam.dual_index = block.dual_index;
  for (long i = 0; i < n; ++i) {
    if (fam.dual_index[i] < 0 || fam.dual_index[i] >= n) {
      if (error) *error = "dual_index out of range";
      return std::nullopt;
    }
    try {
      DualComodule d = dual_comodule(f.structure, fam.objects[i]);
      Mat w = (i < static_cast<long>(block.dual_witness.size())) ? block.dual_witness[i]
                                                                 : Mat::identity(d.dual.dim);
      fam.dual_witness.push_back(ComoduleMorphism{fam.objects[fam.dual_index[i]], d.dual, w});
    } catch (const ArithmeticError& e) {
      if (error) *error = std::string("dual computation failed: ") + e.what();
      return std::nullopt;
    }
  }
  return fam;
}

}  // namespace xha
