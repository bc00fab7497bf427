#include "taut/cli.hpp"

#include "taut/arith.hpp"
#include "taut/errors.hpp"
#include "taut/json_io.hpp"
#include "taut/projection.hpp"
#include "taut/realmult.hpp"
#include "taut/ring.hpp"
#include "taut/table.hpp"
#include "taut/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace taut::cli {

namespace {

struct Options {
  std::string format = "text";
  bool allow_large = false;

  int g = 0;
  std::string variant = "cpt";
  std::string space;
  std::string parts;
  std::string pairing_path;
  std::string field_path;
  std::string suite;
  int gmax = 0;
  std::vector<std::string> files;
};

std::shared_ptr<const RingContext> ring_for(int g, const Options& o) {
  if (g < 1)
    throw ValidationError("genus must be positive, got " + std::to_string(g));
  return shared_ring(g, RingOptions{.allow_large = o.allow_large});
}

void emit_class(const TautClass& c, Format f, std::ostream& out) {
  switch (f) {
  case Format::text:
    out << render(c) << '\n';
    break;
  case Format::json:
    out << to_json(c).dump(2) << '\n';
    break;
  case Format::csv: {
    Table t{{"monomial", "coeff"}, {}};
    for (auto& [m, q] : c.terms())
      t.add({Cell::mono(m), Cell::rational(q)});
    emit_table(t, f, out);
    break;
  }
  }
}

void emit_value(const std::string& name, const Rational& q, Format f, std::ostream& out) {
  if (f == Format::text) {
    out << to_string(q) << '\n';
    return;
  }
  if (f == Format::json) {
    out << Json{{name, to_string(q)}}.dump(2) << '\n';
    return;
  }
  Table t{{name}, {}};
  t.add({Cell::rational(q)});
  emit_table(t, f, out);
}

std::string poincare_string(const std::vector<long>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0)
      continue;
    if (!s.empty())
      s += " + ";
    std::string coeff = c[i] == 1 && i > 0 ? "" : std::to_string(c[i]);
    std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    s += coeff + power;
  }
  return s;
}

int cmd_ring_info(const Options& o, Format f, std::ostream& out) {
  auto ring = ring_for(o.g, o);
  Variant v = parse_variant(o.variant);
  auto dims = ring->dimensions(v);
  Table basis{{"degree", "monomial"}, {}};
  for (int d = 0; d < static_cast<int>(dims.size()); ++d)
    for (auto m : ring->basis(d, v))
      basis.add({Cell::integer(d), Cell::mono(m)});
  if (f == Format::csv) {
    emit_table(basis, f, out);
    return kOk;
  }
  if (f == Format::json) {
    Json b = Json::array();
    for (int d = 0; d < static_cast<int>(dims.size()); ++d)
      for (auto m : ring->basis(d, v))
        b.push_back(m.indices());
    Json j{{"g", o.g},
           {"variant", std::string(variant_name(v))},
           {"gamma_g", to_string(gamma_g(o.g))},
           {"poincare", dims},
           {"dimension", ring->total_dimension(v)},
           {"basis", b}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "genus      " << o.g << '\n'
      << "variant    " << variant_name(v) << '\n'
      << "gamma_g    " << to_string(gamma_g(o.g)) << '\n'
      << "poincare   " << poincare_string(dims) << '\n'
      << "dimension  " << ring->total_dimension(v) << '\n';
  std::string line;
  for (auto& row : basis.rows)
    line += (line.empty() ? "" : ", ") + render_ascending(row[1].monomial);
  out << "basis      {" << line << "}\n";
  return kOk;
}

TautClass load_class(const std::string& path) { return class_from_json(read_json_file(path)); }

int cmd_mul(const Options& o, Format f, std::ostream& out) {
  auto ring = ring_for(o.g, o);
  Variant v = parse_variant(o.variant);
  TautClass a = load_class(o.files.at(0));
  TautClass b = load_class(o.files.at(1));
  for (auto* c : {&a, &b})
    if (c->genus() != o.g || c->variant() != v)
      throw ValidationError("class is in genus " + std::to_string(c->genus()) + " variant " +
                            std::string(variant_name(c->variant())) + ", expected genus " + std::to_string(o.g) +
                            " variant " + std::string(variant_name(v)));
  emit_class(ring->mul(a, b), f, out);
  return kOk;
}

int cmd_integrate(const Options& o, Format f, std::ostream& out) {
  Variant space = parse_variant(o.space);
  TautClass a = load_class(o.files.at(0));
  auto ring = ring_for(a.genus(), o);
  bool same_ring = space != Variant::open && a.variant() != Variant::open;
  if (a.variant() != space && !same_ring)
    throw ValidationError("class variant " + std::string(variant_name(a.variant())) + " does not live on " +
                          std::string(variant_name(space)));
  Rational value;
  switch (space) {
  case Variant::lagrangian:
    value = ring->integrate_lg(a.relabel(Variant::lagrangian));
    break;
  case Variant::compact:
    value = ring->integrate_abar(a.relabel(Variant::compact));
    break;
  case Variant::open:
    value = ring->integrate_open(a);
    break;
  }
  emit_value("integral", value, f, out);
  return kOk;
}

int cmd_project_product(const Options& o, Format f, std::ostream& out) {
  auto p = ProductPartition::parse(o.parts);
  if (p.genus() != o.g)
    throw ValidationError("parts " + p.to_string() + " sum to " + std::to_string(p.genus()) + ", not g = " +
                          std::to_string(o.g));
  auto ring = ring_for(o.g, o);
  Variant space = parse_variant(o.space);
  if (space == Variant::lagrangian)
    throw ValidationError("project-product: space must be cpt or open");
  emit_class(space == Variant::open ? product_projection_open(p, *ring) : product_projection_cpt(p, *ring), f, out);
  return kOk;
}

int cmd_project(const Options& o, Format f, std::ostream& out) {
  PairingFunctional pf = pairing_from_json(read_json_file(o.pairing_path));
  auto ring = ring_for(pf.genus, o);
  emit_class(project(pf, *ring), f, out);
  return kOk;
}

int cmd_rm(const Options& o, Format f, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  RMFieldData field = field_from_json(read_json_file(o.field_path), &warnings);
  for (auto& w : warnings)
    err << "warning: " << w << '\n';
  auto ring = ring_for(field.genus(), o);
  auto cf = conjecture_f_class(field, *ring);
  TautClass schur = schur_me(field.m, field.e, *ring);
  Rational chi = chi_orb(field);
  if (f == Format::json) {
    Json j{{"field", to_json(field)},
           {"g", field.genus()},
           {"gamma_prime_F", to_string(gamma_prime_f(field))},
           {"gamma_F", to_string(gamma_f(field))},
           {"chi_orb", to_string(chi)},
           {"conjecture_constant", to_string(cf.constant)},
           {"schur", to_json(schur)},
           {"conjecture_class", to_json(cf.cls)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  Table t{{"quantity", "value"}, {}};
  t.add({Cell::str("g"), Cell::integer(field.genus())});
  t.add({Cell::str("gamma_prime_F"), Cell::rational(gamma_prime_f(field))});
  t.add({Cell::str("gamma_F"), Cell::rational(gamma_f(field))});
  t.add({Cell::str("chi_orb"), Cell::rational(chi)});
  t.add({Cell::str("conjecture_constant"), Cell::rational(cf.constant)});
  t.add({Cell::str("schur"), Cell::str(render(schur))});
  t.add({Cell::str("conjecture_class"), Cell::str(render(cf.cls))});
  emit_table(t, f, out);
  return kOk;
}

int cmd_verify(const Options& o, Format f, std::ostream& out) {
  int gmax = o.gmax > 0 ? o.gmax : suite_default_gmax(o.suite);
  if (gmax > kDefaultGenusCap && !o.allow_large)
    throw ResourceLimitError("gmax " + std::to_string(gmax) + " exceeds " + std::to_string(kDefaultGenusCap) +
                             "; pass --allow-large");
  if (gmax > kLargeGenusCap)
    throw ResourceLimitError("gmax " + std::to_string(gmax) + " exceeds " + std::to_string(kLargeGenusCap));
  Report r = run_suite(o.suite, gmax);
  emit_table(r.table(), f, out);
  if (f == Format::text)
    out << r.checks.size() << " checks, " << r.failures() << " failed\n";
  return r.ok() ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the tautological rings of A_g and its compactification", "tautproj"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--allow-large", o.allow_large, "Permit genus up to 10");

  auto* ring_info = app.add_subcommand("ring-info", "Basis, Poincare polynomial and gamma_g");
  ring_info->add_option("--g", o.g, "Genus")->required();
  ring_info->add_option("--variant", o.variant, "cpt, open or lg")->check(CLI::IsMember({"cpt", "open", "lg"}));

  auto* mul = app.add_subcommand("mul", "Product of two classes");
  mul->add_option("--g", o.g, "Genus")->required();
  mul->add_option("--variant", o.variant, "cpt, open or lg")->check(CLI::IsMember({"cpt", "open", "lg"}));
  mul->add_option("files", o.files, "Two class files")->required()->expected(2);

  auto* integrate = app.add_subcommand("integrate", "Integral of a class");
  integrate->add_option("--space", o.space, "lg, cpt or open")->required()->check(CLI::IsMember({"lg", "cpt", "open"}));
  integrate->add_option("file", o.files, "Class file")->required()->expected(1);

  auto* project_product = app.add_subcommand("project-product", "Projection of a product locus");
  project_product->add_option("--g", o.g, "Genus")->required();
  project_product->add_option("--parts", o.parts, "Comma-separated genera, e.g. 1,1,2")->required();
  project_product->add_option("--space", o.space, "cpt or open")->required()->check(CLI::IsMember({"cpt", "open"}));

  auto* project_cmd = app.add_subcommand("project", "Tautological projection of pairing data");
  project_cmd->add_option("--pairing", o.pairing_path, "Pairing functional file")->required();

  auto* rm = app.add_subcommand("rm", "Real multiplication constants");
  rm->add_option("--field", o.field_path, "Field data file")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--gmax", o.gmax, "Largest genus")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Format f = parse_format(o.format);
    if (ring_info->parsed())
      return cmd_ring_info(o, f, out);
    if (mul->parsed())
      return cmd_mul(o, f, out);
    if (integrate->parsed())
      return cmd_integrate(o, f, out);
    if (project_product->parsed())
      return cmd_project_product(o, f, out);
    if (project_cmd->parsed())
      return cmd_project(o, f, out);
    if (rm->parsed())
      return cmd_rm(o, f, out, err);
    if (verify->parsed())
      return cmd_verify(o, f, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

} // namespace taut::cli
