#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyspline/error.hpp"
#include "polyspline/hilbert.hpp"
#include "polyspline/oracle.hpp"
#include "polyspline/xi_graph.hpp"

namespace polyspline::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

/// c(n, r) with r left symbolic.
std::string c_symbolic(int n) {
  if (n == 2) return "(r+1)^2";
  std::ostringstream os;
  os << "C(r+2,2) + a/2*(2r+3+a-" << n << "*(1+a)), a=floor((r+1)/" << (n - 1) << ")";
  return os.str();
}

void add_common_fields(Report& rep, const Complex& c) {
  rep.field("name", c.name().empty() ? "(unnamed)" : c.name());
}

void add_warnings(Report& rep, const Complex& c) {
  for (const auto& w : c.warnings()) rep.notes.push_back(w);
}

} // namespace

Report cmd_analyze(const Complex& c) {
  Report rep;
  add_common_fields(rep, c);
  const FaceCounts fc = face_counts(c);
  rep.field("f2", std::to_string(fc.faces));
  rep.field("interior_edges", std::to_string(fc.interior_edges));
  rep.field("interior_vertices", std::to_string(fc.interior_vertices));
  rep.field("boundary_edges", std::to_string(fc.boundary_edges));
  rep.field("boundary_vertices", std::to_string(fc.boundary_vertices));
  rep.field("euler",
            std::to_string(fc.interior_vertices + fc.boundary_vertices - fc.interior_edges -
                           fc.boundary_edges + fc.faces));
  rep.field("hereditary", "yes"); // parse would have rejected otherwise
  rep.field("simplicial", yesno(is_simplicial(c)));
  rep.field("candidate_xi", std::to_string(candidate_xi(c).size()));

  const auto cycles = all_cycles(c);
  std::size_t ncycles = 0;
  for (const auto& [xi, cds] : cycles) ncycles += cds.size();
  rep.field("cycle_carrying_xi", std::to_string(cycles.size()));
  rep.field("cycles", std::to_string(ncycles));
  if (cycles.empty()) {
    rep.notes.push_back("no cycle-carrying xi");
  } else {
    Report::Table t{"cycle_table", {"xi", "length", "n", "c"}, {}};
    for (const auto& [xi, cds] : cycles)
      for (const auto& cd : cds)
        t.rows.push_back({xi.str(), std::to_string(cd.length),
                          std::to_string(cd.distinct_lines), c_symbolic(cd.distinct_lines)});
    rep.tables.push_back(std::move(t));
  }
  add_warnings(rep, c);
  return rep;
}

Report cmd_hp(const Complex& c, int r) {
  if (r < 0) throw ValidationError("--r must be >= 0");
  Report rep;
  add_common_fields(rep, c);
  rep.field("r", std::to_string(r));
  const HilbPoly hp = planar_hp(c, r);
  rep.field("hp", hp.str());
  rep.field("k2", hp.a2.str());
  rep.field("k1", hp.a1.str());
  rep.field("k0", hp.a0.str());
  HilbPoly quad;
  quad.a2 = hp.quad_lin_a2;
  quad.a1 = hp.quad_lin_a1;
  rep.field("quad_linear", quad.str());
  rep.field("const_faces_edges", hp.const_faces_edges.str());
  rep.field("const_cycles", hp.const_cycles.str());
  if (!hp.cycle_terms.empty()) {
    Report::Table t{"cycle_table", {"xi", "length", "n", "c"}, {}};
    for (const auto& ct : hp.cycle_terms)
      t.rows.push_back(
          {ct.xi.str(), std::to_string(ct.length), std::to_string(ct.n), ct.c.str()});
    rep.tables.push_back(std::move(t));
  }
  rep.notes.push_back("hp = quad_linear + const_faces_edges + const_cycles; exact for k in the "
                      "stable range (see verify)");
  add_warnings(rep, c);
  return rep;
}

Report cmd_dim(const Complex& c, int r, int k, const std::string& method) {
  if (r < 0 || k < 0) throw ValidationError("--r and --k must be >= 0");
  Report rep;
  add_common_fields(rep, c);
  rep.field("r", std::to_string(r));
  rep.field("k", std::to_string(k));
  rep.field("method", method);
  if (method == "formula") {
    const HilbPoly hp = planar_hp(c, r);
    rep.field("dim", hp.eval(Rational(static_cast<long>(k))).str());
    rep.notes.push_back(
        "formula value equals dim C^r_k only for k in the stable range (see verify)");
  } else if (method == "oracle") {
    rep.field("dim", std::to_string(spline_dim_oracle(c, r, k)));
  } else {
    throw ValidationError("--method must be 'formula' or 'oracle'");
  }
  add_warnings(rep, c);
  return rep;
}

std::pair<Report, bool> cmd_verify(const Complex& c, int r, int kmin, int kmax) {
  if (r < 0) throw ValidationError("--r must be >= 0");
  if (kmin < 0 || kmax < kmin) throw ValidationError("need 0 <= kmin <= kmax");
  Report rep;
  add_common_fields(rep, c);
  rep.field("r", std::to_string(r));
  rep.field("kmin", std::to_string(kmin));
  rep.field("kmax", std::to_string(kmax));

  const HilbPoly hp = planar_hp(c, r);
  const auto oracle = spline_dim_oracle_range(c, r, kmin, kmax);
  Report::Table t{"grid", {"k", "oracle", "formula", "match"}, {}};
  int k_star = -1;
  for (int k = kmin; k <= kmax; ++k) {
    const Rational formula = hp.eval(Rational(static_cast<long>(k)));
    const bool match =
        formula.is_integer() && formula.num() == mpz_class(static_cast<long>(oracle[k - kmin]));
    if (!match)
      k_star = -1;
    else if (k_star < 0)
      k_star = k;
    t.rows.push_back({std::to_string(k), std::to_string(oracle[k - kmin]), formula.str(),
                      yesno(match)});
  }
  rep.tables.push_back(std::move(t));
  const bool stabilized = k_star >= 0;
  rep.field("stabilized", yesno(stabilized));
  if (stabilized) {
    rep.field("k_star", std::to_string(k_star));
  } else {
    rep.notes.push_back("no stabilization observed in [" + std::to_string(kmin) + ", " +
                        std::to_string(kmax) + "]");
  }
  add_warnings(rep, c);
  return {std::move(rep), stabilized};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dimension of smooth piecewise-polynomial spaces on planar polyhedral complexes"};
  app.require_subcommand(1);

  std::string path, format = "text", method;
  int r = 0, k = 0, kmin = 0, kmax = 0;

  auto add_path_format = [&](CLI::App* sub) {
    sub->add_option("path", path, "input complex (JSON document)")->required();
    sub->add_option("--format", format, "output format: text, tsv or json")
        ->default_val("text");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "f-vector, interior counts and the cycle inventory of a complex");
  add_path_format(analyze);

  CLI::App* hp = app.add_subcommand("hp", "Hilbert polynomial of C^r with table breakdown");
  add_path_format(hp);
  hp->add_option("--r", r, "smoothness order")->required();

  CLI::App* dim = app.add_subcommand("dim", "dimension of C^r_k by formula or oracle");
  add_path_format(dim);
  dim->add_option("--r", r, "smoothness order")->required();
  dim->add_option("--k", k, "polynomial degree")->required();
  dim->add_option("--method", method, "formula or oracle")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "formula-vs-oracle table over a degree range");
  add_path_format(verify);
  verify->add_option("--r", r, "smoothness order")->required();
  verify->add_option("--kmin", kmin, "first degree")->required();
  verify->add_option("--kmax", kmax, "last degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(format);
    const Complex c = parse_complex(read_file(path));
    if (analyze->parsed()) {
      out << render(cmd_analyze(c), fmt);
    } else if (hp->parsed()) {
      out << render(cmd_hp(c, r), fmt);
    } else if (dim->parsed()) {
      out << render(cmd_dim(c, r, k, method), fmt);
    } else if (verify->parsed()) {
      auto [rep, stabilized] = cmd_verify(c, r, kmin, kmax);
      out << render(rep, fmt);
      if (!stabilized) return 1;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace polyspline::cli
