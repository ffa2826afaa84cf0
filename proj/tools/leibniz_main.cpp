// Command-line front end. Every subcommand reads an algebra file, runs one
// library query or check, and prints a human report or, with --json, a
// machine-readable record with deterministic key order.
//
// Exit codes: 0 success or property holds, 1 property failure, 2 usage or
// parse errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/eigen.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/series.hpp"
#include "leibniz/verify.hpp"

using nlohmann::json;
using namespace leibniz;

namespace {

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json rat_list_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json matrix_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(rat_list_json(m.row(i)));
  return json{{"cols", m.cols()}, {"entries", entries}, {"rows", m.rows()}};
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(rat_list_json(s.basis_row(i)));
  return json{{"ambient", s.ambient_dim()}, {"basis", rows}, {"dim", s.dim()}};
}

void print_matrix(const Matrix& m, const char* indent = "  ") {
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::cout << indent << vec_str(m.row(i)) << "\n";
}

void print_subspace(const Subspace& s, const char* indent = "  ") {
  std::cout << indent << "dim " << s.dim() << "\n";
  for (std::size_t i = 0; i < s.dim(); ++i)
    std::cout << indent << "  " << vec_str(s.basis_row(i)) << "\n";
}

ProductSide parse_side(const std::string& s) {
  return s == "left" ? ProductSide::left : ProductSide::right;
}

int cmd_check(const std::string& file) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const IdentityReport rep = check_leibniz_identity(L);
  if (g_json) {
    json j{{"command", "check"}, {"dim", L.dim()}, {"name", L.name()}, {"ok", rep.ok}};
    if (!rep.ok) {
      j["triple"] = {rep.i + 1, rep.j + 1, rep.k + 1};
      j["lhs"] = rat_list_json(rep.lhs);
      j["rhs"] = rat_list_json(rep.rhs);
    }
    emit(j);
  } else if (rep.ok) {
    std::cout << L.name() << ": Leibniz identity holds on all " << L.dim() << "^3 basis triples\n";
  } else {
    std::cout << L.name() << ": Leibniz identity FAILS at basis triple (" << rep.i + 1 << ","
              << rep.j + 1 << "," << rep.k + 1 << ")\n"
              << "  [x,[y,z]]           = " << vec_str(rep.lhs) << "\n"
              << "  [[x,y],z]-[[x,z],y] = " << vec_str(rep.rhs) << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_series(const std::string& file, const std::string& kind_name, std::size_t ary) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const bool derived_kind = kind_name == "derived";
  const SeriesKind kind = ary == 2 ? (derived_kind ? SeriesKind::derived : SeriesKind::lower_central)
                                   : (derived_kind ? SeriesKind::n_derived : SeriesKind::n_lower);
  const SeriesReport rep = series(L, Subspace::full(L.dim()), kind, ary);
  if (g_json) {
    json dims = json::array();
    for (const auto& t : rep.terms) dims.push_back(t.dim());
    json j{{"arity", ary},
           {"command", "series"},
           {"dims", dims},
           {"kind", series_kind_name(kind)},
           {"name", L.name()},
           {"reaches_zero", rep.reaches_zero()},
           {"stabilized", rep.stabilized},
           {"terminal_dim", rep.terminal_dim}};
    if (rep.reaches_zero()) j["zero_index"] = rep.zero_index();
    emit(j);
  } else {
    std::cout << L.name() << ": " << series_kind_name(kind) << " series (arity " << ary << ")\n";
    for (std::size_t i = 0; i < rep.terms.size(); ++i)
      std::cout << "  term " << i + 1 << ": dim " << rep.terms[i].dim() << "\n";
    if (rep.reaches_zero())
      std::cout << "  reaches zero at term " << rep.zero_index() << "\n";
    else
      std::cout << "  stabilizes at dim " << rep.terminal_dim << "\n";
  }
  return 0;
}

int cmd_nilpotency(const std::string& file) {
  const AlgebraDoc doc = load_algebra(file);
  const NilpotencyResult res = is_nilpotent(doc.algebra);
  if (g_json) {
    json j{{"command", "nilpotency"}, {"name", doc.algebra.name()}, {"nilpotent", res.nilpotent}};
    if (res.nilpotent) j["nilindex"] = res.nilindex;
    emit(j);
  } else if (res.nilpotent) {
    std::cout << "nilpotent, nilindex " << res.nilindex << "\n";
  } else {
    std::cout << "not nilpotent\n";
  }
  return 0;
}

int cmd_solvability(const std::string& file) {
  const AlgebraDoc doc = load_algebra(file);
  const bool solv = is_solvable(doc.algebra);
  if (g_json)
    emit(json{{"command", "solvability"}, {"name", doc.algebra.name()}, {"solvable", solv}});
  else
    std::cout << (solv ? "solvable" : "not solvable") << "\n";
  return 0;
}

int cmd_derivations(const std::string& file, std::size_t order, const std::string& side) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const DerivationQuery q{order, parse_side(side)};
  const MapSpace space = derivation_space(L, q, std::max<std::size_t>(5, order));
  if (g_json) {
    json basis = json::array();
    for (const auto& B : space.basis()) basis.push_back(matrix_json(B));
    emit(json{{"basis", basis},
              {"command", "derivations"},
              {"dim", space.dim()},
              {"name", L.name()},
              {"order", order},
              {"side", side}});
  } else {
    std::cout << L.name() << ": " << side << " Leibniz-derivations of order " << order
              << ", space dimension " << space.dim() << "\n";
    std::size_t idx = 1;
    for (const auto& B : space.basis()) {
      std::cout << "  basis element " << idx++ << ":\n";
      print_matrix(B, "    ");
    }
  }
  return 0;
}

int cmd_classify(const std::string& file) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const ClassificationReport rep = classify(L);
  if (g_json) {
    json orders = json::array();
    for (const auto& [o, w] : rep.invertible_orders) {
      json item{{"invertible", w.has_value()}, {"order", o}};
      if (w) item["witness"] = matrix_json(*w);
      orders.push_back(item);
    }
    json j{{"char_nilpotent", rep.char_nilpotent},
           {"command", "classify"},
           {"derivation_dim", rep.der_dim},
           {"invertible_orders", orders},
           {"max_order_scanned", rep.max_order_scanned},
           {"name", L.name()},
           {"nilpotent", rep.nilp.nilpotent},
           {"order3_dim", rep.preder_dim},
           {"strongly_nilpotent", rep.strongly_nilpotent}};
    if (rep.nilp.nilpotent) j["nilindex"] = rep.nilp.nilindex;
    emit(j);
  } else {
    std::cout << L.name() << " (dim " << L.dim() << ")\n";
    if (rep.nilp.nilpotent)
      std::cout << "  nilpotent, nilindex " << rep.nilp.nilindex << "\n";
    else
      std::cout << "  not nilpotent\n";
    std::cout << "  characteristically nilpotent: " << (rep.char_nilpotent ? "yes" : "no") << "\n"
              << "  strongly nilpotent: " << (rep.strongly_nilpotent ? "yes" : "no") << "\n"
              << "  derivation space dim " << rep.der_dim << ", order-3 space dim "
              << rep.preder_dim << "\n"
              << "  invertible elements by order (scanned 2.." << rep.max_order_scanned << "):\n";
    for (const auto& [o, w] : rep.invertible_orders) {
      std::cout << "    order " << o << ": " << (w ? "invertible element exists" : "none") << "\n";
      if (w) print_matrix(*w, "      ");
    }
  }
  return 0;
}

int cmd_invertible(const std::string& file, std::size_t order) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const MapSpace space =
      derivation_space(L, {order, ProductSide::right}, std::max<std::size_t>(5, order));
  const InvertibleResult res = exists_invertible(space);
  if (g_json) {
    json j{{"command", "invertible"},
           {"exists", res.exists},
           {"name", L.name()},
           {"order", order},
           {"space_dim", space.dim()}};
    if (res.witness) j["witness"] = matrix_json(*res.witness);
    if (res.point) j["point"] = rat_list_json(*res.point);
    emit(j);
  } else if (res.exists) {
    std::cout << L.name() << ": invertible element in the order-" << order
              << " space (dim " << space.dim() << ")\n";
    if (res.point) std::cout << "  coordinates " << vec_str(*res.point) << "\n";
    if (res.witness) print_matrix(*res.witness);
  } else {
    std::cout << L.name() << ": no invertible element in the order-" << order << " space (dim "
              << space.dim() << ")\n";
  }
  return 0;
}

int cmd_prop_derivation(const std::string& file) {
  const AlgebraDoc doc = load_algebra(file);
  const ScalingDerivation sd = construct_invertible_derivation(doc.algebra);
  if (g_json) {
    emit(json{{"command", "prop-derivation"},
              {"matrix", matrix_json(sd.P)},
              {"name", doc.algebra.name()},
              {"order", sd.order}});
  } else {
    std::cout << doc.algebra.name() << ": invertible Leibniz-derivation of order " << sd.order
              << "\n";
    print_matrix(sd.P);
  }
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& map_file) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const Matrix D = load_matrix(map_file);
  if (D.rows() != L.dim() || D.cols() != L.dim())
    throw ShapeError("map is " + std::to_string(D.rows()) + "x" + std::to_string(D.cols()) +
                     " but the algebra has dimension " + std::to_string(L.dim()));
  const WeightDecomposition dec = decompose(D);

  // When the map is a Leibniz-derivation, products of weight spaces must
  // land in the weight space of the summed weight; report that too.
  struct OrderCheck {
    std::size_t order;
    bool containment_ok;
  };
  std::vector<OrderCheck> order_checks;
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}})
    if (is_derivation(L, D, {n, ProductSide::right}))
      order_checks.push_back({n, weight_product_check(L, D, n).containment_ok});
  bool ok = true;
  for (const auto& oc : order_checks) ok = ok && oc.containment_ok;

  if (g_json) {
    json pairs = json::array();
    for (const auto& p : dec.pairs())
      pairs.push_back(json{{"eigenvalue", p.eigenvalue.str()}, {"space", subspace_json(p.space)}});
    json orders = json::array();
    for (const auto& oc : order_checks)
      orders.push_back(json{{"containment_ok", oc.containment_ok}, {"order", oc.order}});
    emit(json{{"command", "decompose"},
              {"name", L.name()},
              {"ok", ok},
              {"order_checks", orders},
              {"weights", pairs}});
  } else {
    std::cout << L.name() << ": weight decomposition of the map\n";
    for (const auto& p : dec.pairs()) {
      std::cout << "  weight " << p.eigenvalue.str() << ":\n";
      print_subspace(p.space, "    ");
    }
    if (order_checks.empty())
      std::cout << "  map is not a right Leibniz-derivation of any order in 2..4\n";
    for (const auto& oc : order_checks)
      std::cout << "  order-" << oc.order << " weight-product containment: "
                << (oc.containment_ok ? "ok" : "VIOLATED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_identity_n(const std::string& file, std::size_t ary) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const NAlgebraIdentityReport rep = check_n_algebra_identity(L, ary);
  if (g_json) {
    json j{{"arity", ary}, {"command", "identity-n"}, {"name", L.name()}, {"ok", rep.ok}};
    if (!rep.ok) {
      json xs = json::array(), ys = json::array();
      for (auto i : rep.xs) xs.push_back(i + 1);
      for (auto i : rep.ys) ys.push_back(i + 1);
      j["xs"] = xs;
      j["ys"] = ys;
      j["lhs"] = rat_list_json(rep.lhs);
      j["rhs"] = rat_list_json(rep.rhs);
    }
    emit(j);
  } else if (rep.ok) {
    std::cout << L.name() << ": the " << ary << "-algebra identity holds on all basis tuples\n";
  } else {
    std::cout << L.name() << ": the " << ary << "-algebra identity FAILS\n  x indices (";
    for (std::size_t t = 0; t < rep.xs.size(); ++t)
      std::cout << (t ? "," : "") << rep.xs[t] + 1;
    std::cout << "), y indices (";
    for (std::size_t t = 0; t < rep.ys.size(); ++t)
      std::cout << (t ? "," : "") << rep.ys[t] + 1;
    std::cout << ")\n  lhs " << vec_str(rep.lhs) << "\n  rhs " << vec_str(rep.rhs) << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_invariance(const std::string& file, const std::string& ideal_file, std::size_t order) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const Subspace I = load_subspace(ideal_file);
  const bool ok = invariance_check(L, I, {order, ProductSide::right});
  if (g_json) {
    emit(json{{"command", "invariance"},
              {"ideal_dim", I.dim()},
              {"invariant", ok},
              {"name", L.name()},
              {"order", order}});
  } else {
    std::cout << L.name() << ": ideal (dim " << I.dim() << ") is "
              << (ok ? "invariant" : "NOT invariant") << " under the order-" << order
              << " space\n";
  }
  return ok ? 0 : 1;
}

int cmd_theorem_check(const std::string& file, std::size_t max_order) {
  const AlgebraDoc doc = load_algebra(file);
  const LeibnizAlgebra& L = doc.algebra;
  const TheoremReport th = theorem_check(L, max_order);
  if (g_json) {
    json orders = json::array();
    for (const auto& [o, ex] : th.order_results)
      orders.push_back(json{{"invertible", ex}, {"order", o}});
    json j{{"command", "theorem-check"},
           {"detail", th.detail},
           {"max_order_scanned", th.max_order_scanned},
           {"name", L.name()},
           {"nilpotent", th.nilpotent},
           {"ok", th.ok},
           {"order_results", orders}};
    if (th.nilpotent) {
      j["nilindex"] = th.nilindex;
      j["constructed_order"] = th.constructed_order;
      j["construction_valid"] = th.construction_valid;
      j["space_has_invertible"] = th.space_has_invertible;
    }
    emit(j);
  } else if (th.nilpotent) {
    std::cout << (th.ok ? "nilpotent; invertible right Leibniz-derivation of order " +
                              std::to_string(th.constructed_order) + " constructed and verified"
                        : "nilpotent; construction FAILED")
              << "\n  " << th.detail << "\n";
  } else {
    std::cout << (th.ok ? "not nilpotent; no invertible right Leibniz-derivation of order <= " +
                              std::to_string(th.max_order_scanned)
                        : "not nilpotent; but an invertible right Leibniz-derivation EXISTS")
              << "\n  " << th.detail << "\n";
  }
  return th.ok ? 0 : 1;
}

int cmd_verify_paper(const std::string& corpus_dir) {
  const VerifyReport rep = verify_paper(corpus_dir);
  if (g_json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"description", c.description},
                            {"details", c.details},
                            {"id", c.id},
                            {"status", status_name(c.status)}});
    emit(json{{"all_passed", rep.all_passed()}, {"checks", checks}, {"command", "verify-paper"}});
  } else {
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
      std::cout << "[" << status_name(c.status) << "] " << c.id << ": " << c.details << "\n";
      if (c.status == CheckResult::Status::pass) ++passed;
    }
    std::cout << passed << "/" << rep.checks.size() << " checks passed\n";
  }
  return rep.all_passed() ? 0 : 1;
}

void report_error(const std::string& what) {
  if (g_json)
    emit(json{{"error", what}});
  else
    std::cerr << "error: " << what << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for finite-dimensional Leibniz algebras over Q"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, kind = "lower-central", side = "right", map_file, ideal_file;
  std::string corpus_dir = "corpus";
  std::size_t ary = 2, order = 2, inv_order = 2, id_ary = 3, max_order = 0;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "algebra file (JSON)")->required();
    sub->add_flag("--json", g_json, "machine-readable output");
  };

  auto* c_check = app.add_subcommand("check", "exhaustive Leibniz identity check");
  add_file(c_check);
  c_check->callback([&] { rc = cmd_check(file); });

  auto* c_series = app.add_subcommand("series", "descending series of the whole algebra");
  add_file(c_series);
  c_series->add_option("--kind", kind, "series kind")
      ->check(CLI::IsMember({"lower-central", "derived"}))
      ->capture_default_str();
  c_series->add_option("--ary", ary, "product arity (2 = binary series)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}))
      ->capture_default_str();
  c_series->callback([&] { rc = cmd_series(file, kind, ary); });

  auto* c_nilp = app.add_subcommand("nilpotency", "nilpotency via the lower central series");
  add_file(c_nilp);
  c_nilp->callback([&] { rc = cmd_nilpotency(file); });

  auto* c_solv = app.add_subcommand("solvability", "solvability via the derived series");
  add_file(c_solv);
  c_solv->callback([&] { rc = cmd_solvability(file); });

  auto* c_der = app.add_subcommand("derivations", "Leibniz-derivation space of a given order");
  add_file(c_der);
  c_der->add_option("--order", order, "derivation order (2 = classical)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}))
      ->capture_default_str();
  c_der->add_option("--side", side, "product side")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  c_der->callback([&] { rc = cmd_derivations(file, order, side); });

  auto* c_cls = app.add_subcommand("classify", "nilpotency classes and invertible orders");
  add_file(c_cls);
  c_cls->callback([&] { rc = cmd_classify(file); });

  auto* c_inv = app.add_subcommand("invertible", "invertible element search in an order space");
  add_file(c_inv);
  c_inv->add_option("--order", inv_order, "derivation order")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}))
      ->capture_default_str();
  c_inv->callback([&] { rc = cmd_invertible(file, inv_order); });

  auto* c_prop = app.add_subcommand(
      "prop-derivation", "construct the invertible scaling derivation of a nilpotent algebra");
  add_file(c_prop);
  c_prop->callback([&] { rc = cmd_prop_derivation(file); });

  auto* c_dec = app.add_subcommand("decompose", "weight decomposition of a map from a file");
  add_file(c_dec);
  c_dec->add_option("--map", map_file, "matrix file (JSON)")->required();
  c_dec->callback([&] { rc = cmd_decompose(file, map_file); });

  auto* c_idn = app.add_subcommand("identity-n", "n-algebra fundamental identity check");
  add_file(c_idn);
  c_idn->add_option("--ary", id_ary, "product arity")
      ->check(CLI::Range(std::size_t{2}, std::size_t{8}))
      ->capture_default_str();
  c_idn->callback([&] { rc = cmd_identity_n(file, id_ary); });

  auto* c_invar = app.add_subcommand("invariance", "ideal invariance under an order space");
  add_file(c_invar);
  c_invar->add_option("--ideal", ideal_file, "ideal basis rows (matrix file)")->required();
  c_invar->add_option("--order", order, "derivation order")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}))
      ->capture_default_str();
  c_invar->callback([&] { rc = cmd_invariance(file, ideal_file, order); });

  auto* c_thm = app.add_subcommand("theorem-check",
                                   "nilpotency vs invertible Leibniz-derivation characterization");
  add_file(c_thm);
  c_thm->add_option("--max-order", max_order,
                    "scan bound for non-nilpotent inputs (0 = default policy)")
      ->capture_default_str();
  c_thm->callback([&] { rc = cmd_theorem_check(file, max_order); });

  auto* c_ver = app.add_subcommand("verify-paper", "run the full acceptance suite");
  c_ver->add_option("--corpus", corpus_dir, "corpus directory")->capture_default_str();
  c_ver->add_flag("--json", g_json, "machine-readable output");
  c_ver->callback([&] { rc = cmd_verify_paper(corpus_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const IdentityViolation& e) {
    report_error(e.what());
    return 1;
  } catch (const NotNilpotent& e) {
    report_error(e.what());
    return 1;
  } catch (const NotAnIdeal& e) {
    report_error(e.what());
    return 1;
  } catch (const NotADerivation& e) {
    report_error(e.what());
    return 1;
  } catch (const NonSplitSpectrum& e) {
    report_error(e.what());
    return 1;
  } catch (const Error& e) {
    report_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(e.what());
    return 2;
  }
  return rc;
}
