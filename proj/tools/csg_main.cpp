#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csg/boxed.hpp"
#include "csg/enumeration.hpp"
#include "csg/error.hpp"
#include "csg/families.hpp"
#include "csg/io.hpp"
#include "csg/oracle.hpp"
#include "csg/parallel.hpp"
#include "csg/partition.hpp"
#include "csg/semigroup.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string cone = "full:2";
  std::string order = "1,1;1,0";
  std::string out;
  std::string format = "records";
  int threads = 0;
};

csg::Ctx make_ctx(const Options& o) {
  csg::set_threads(o.threads);
  csg::Cone cone = csg::parse_cone_spec(o.cone);
  csg::WeightOrder order = csg::WeightOrder::make(cone, csg::parse_weight_rows(o.order));
  return csg::make_context(std::move(cone), std::move(order));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) csg::fail(csg::Errc::parse_error, "cannot write " + o.out);
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) csg::fail(csg::Errc::parse_error, "cannot write " + path);
  f << text;
}

std::string records(const std::vector<csg::CSemigroup>& list) {
  std::string out;
  for (const csg::CSemigroup& s : list) {
    out += csg::semigroup_to_json(s);
    out += '\n';
  }
  return out;
}

// list commands honor --format: records = one semigroup per line,
// csv = a single key,count row
void emit_list(const Options& o, const std::string& key,
               const std::vector<csg::CSemigroup>& list, bool count_only) {
  if (o.format == "csv") {
    emit(o, csg::csv_counts({{key, static_cast<long long>(list.size())}}));
  } else if (count_only) {
    emit(o, std::to_string(list.size()) + "\n");
  } else if (o.format == "records") {
    emit(o, records(list));
  } else {
    csg::fail(csg::Errc::bad_parameters, "format " + o.format + " not available here");
  }
}

json points_j(const std::vector<csg::Point>& pts) {
  json a = json::array();
  for (const csg::Point& p : pts) {
    json q = json::array();
    for (int v : p) q.push_back(v);
    a.push_back(q);
  }
  return a;
}

json wilf_j(const csg::WilfReport& r) {
  json j;
  j["kind"] = r.kind == csg::WilfReport::Kind::generalized ? "generalized" : "extended";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and enumeration for semigroups over integer cones"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--cone", opt.cone, "cone: \"full:p\" or a cone file");
  app.add_option("--order", opt.order, "weight rows, e.g. \"1,1;1,0\"");
  app.add_option("--out", opt.out, "write output to a file instead of stdout");
  app.add_option("--format", opt.format, "records | csv | dot")
      ->check(CLI::IsMember({"records", "csv", "dot"}));
  app.add_option("--threads", opt.threads, "worker threads (0 = library default)");

  std::string sfile, fstr, cstr, mstr;
  long long g = 0, n = 0, kpar = 1, gmax = 0, slack = 0, pimax = 0;
  bool count = false, with_msg = false, with_wilf = false;
  bool wgen = false, wext = false, wboth = false;
  std::string dotfile;

  auto* inv = app.add_subcommand("invariants", "genus, Frobenius element, conductor, ...")->fallthrough();
  inv->add_option("-s", sfile, "semigroup file")->required();
  inv->callback([&] {
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    emit(opt, csg::invariants_to_json(s, csg::invariants(s, true)) + "\n");
  });

  auto* msg = app.add_subcommand("msg", "minimal generating set")->fallthrough();
  msg->add_option("-s", sfile, "semigroup file")->required();
  auto* slackopt = msg->add_option("--oracle-slack", slack, "check the bound with slack");
  msg->callback([&] {
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    std::vector<csg::Point> gens =
        slackopt->count() ? csg::oracle_msg(s, slack) : csg::minimal_generators(s);
    json j;
    j["generators"] = points_j(gens);
    j["e"] = gens.size();
    emit(opt, j.dump() + "\n");
  });

  auto* sg = app.add_subcommand("special-gaps", "gaps whose fill keeps a semigroup")->fallthrough();
  sg->add_option("-s", sfile, "semigroup file")->required();
  sg->callback([&] {
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    json j;
    j["special_gaps"] = points_j(csg::special_gaps(s));
    emit(opt, j.dump() + "\n");
  });

  auto* en = app.add_subcommand("enum", "enumerate semigroups")->fallthrough();
  en->require_subcommand(1);
  auto* efg = en->add_subcommand("fb-genus", "fixed Frobenius element and genus")->fallthrough();
  efg->add_option("-f", fstr, "Frobenius element a,b")->required();
  efg->add_option("-g", g, "genus")->required();
  efg->add_flag("--count", count, "print only the count");
  efg->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::enumerate_fb_genus(ctx, csg::parse_point(fstr), g);
    emit_list(opt, "f=" + csg::show(csg::parse_point(fstr)) + " g=" + std::to_string(g), list,
              count);
  });
  auto* eg = en->add_subcommand("genus", "fixed genus")->fallthrough();
  eg->add_option("-g", g, "genus")->required();
  eg->add_flag("--count", count, "print only the count");
  eg->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::enumerate_genus(ctx, g);
    emit_list(opt, "g=" + std::to_string(g), list, count);
  });
  auto* egs = en->add_subcommand("genus-smalls", "fixed genus and small-element count")->fallthrough();
  egs->add_option("-g", g, "genus")->required();
  egs->add_option("-n", n, "small elements, zero included")->required();
  egs->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::enumerate_genus_smalls(ctx, g, n);
    emit_list(opt, "g=" + std::to_string(g) + " n=" + std::to_string(n), list, false);
  });
  auto* efr = en->add_subcommand("frobenius", "fixed Frobenius element, any genus")->fallthrough();
  efr->add_option("-f", fstr, "Frobenius element a,b")->required();
  efr->add_flag("--count", count, "print only the count");
  efr->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    csg::Point f = csg::parse_point(fstr);
    if (count && opt.format != "csv") {
      emit(opt, std::to_string(csg::count_frobenius(ctx, f)) + "\n");
      return;
    }
    auto list = csg::enumerate_frobenius(ctx, f);
    emit_list(opt, "f=" + csg::show(f), list, count);
  });

  auto* b = app.add_subcommand("b", "semigroups with all gaps inside the Frobenius box")->fallthrough();
  b->require_subcommand(1);
  auto* ben = b->add_subcommand("enum", "the full tree for a Frobenius element")->fallthrough();
  ben->add_option("-f", fstr, "Frobenius element a,b")->required();
  ben->add_option("--dot", dotfile, "also write the tree as DOT");
  ben->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    csg::SemigroupTree tree = csg::boxed_tree(ctx, csg::parse_point(fstr));
    if (!dotfile.empty()) write_file(dotfile, csg::tree_to_dot(tree));
    if (opt.format == "dot") {
      emit(opt, csg::tree_to_dot(tree));
      return;
    }
    std::vector<csg::CSemigroup> list;
    for (size_t i = 0; i < tree.size(); ++i) list.push_back(tree.materialize(static_cast<int>(i)));
    csg::canonical_sort(list);
    emit_list(opt, "f=" + csg::show(csg::parse_point(fstr)), list, false);
  });
  auto* bfg = b->add_subcommand("fb-genus", "fixed Frobenius element and genus")->fallthrough();
  bfg->add_option("-f", fstr, "Frobenius element a,b")->required();
  bfg->add_option("-g", g, "genus")->required();
  bfg->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::enumerate_boxed_fb_genus(ctx, csg::parse_point(fstr), g);
    emit_list(opt, "f=" + csg::show(csg::parse_point(fstr)) + " g=" + std::to_string(g), list,
              false);
  });
  auto* bg = b->add_subcommand("genus", "fixed genus")->fallthrough();
  bg->add_option("-g", g, "genus")->required();
  bg->add_flag("--count", count, "print only the count");
  bg->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::enumerate_boxed_genus(ctx, g);
    emit_list(opt, "g=" + std::to_string(g), list, count);
  });
  auto* bc = b->add_subcommand("census", "counts for genus 1..gmax")->fallthrough();
  bc->add_option("--gmax", gmax, "largest genus")->required();
  bc->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    std::vector<std::pair<std::string, long long>> rows;
    for (const auto& [gv, cnt] : csg::boxed_census(ctx, gmax))
      rows.emplace_back(std::to_string(gv), cnt);
    emit(opt, csg::csv_counts(rows));
  });

  auto* cls = app.add_subcommand("class", "semigroups sharing the box closure")->fallthrough();
  cls->add_option("-s", sfile, "semigroup file")->required();
  cls->add_option("--dot", dotfile, "also write the class tree as DOT");
  cls->callback([&] {
    csg::set_threads(opt.threads);
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    csg::SemigroupTree tree = csg::closure_class_tree(s);
    if (!dotfile.empty()) write_file(dotfile, csg::tree_to_dot(tree));
    if (opt.format == "dot") {
      emit(opt, csg::tree_to_dot(tree));
      return;
    }
    std::vector<csg::CSemigroup> list;
    for (size_t i = 0; i < tree.size(); ++i) list.push_back(tree.materialize(static_cast<int>(i)));
    csg::canonical_sort(list);
    emit_list(opt, "class", list, false);
  });

  auto* fam = app.add_subcommand("family", "ordinary and mult-embedded semigroups")->fallthrough();
  fam->require_subcommand(1);
  auto* fo = fam->add_subcommand("ordinary", "everything at or above a conductor")->fallthrough();
  fo->add_option("-c", cstr, "conductor a,b")->required();
  fo->add_flag("--msg", with_msg, "include the generator list");
  fo->add_flag("--wilf", with_wilf, "include both Wilf reports");
  fo->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    csg::Point c = csg::parse_point(cstr);
    csg::MsgFormula form = csg::ordinary_msg_formula(ctx, c);
    csg::CSemigroup s = csg::ordinary_semigroup(ctx, c);
    json j;
    j["conductor"] = points_j({c})[0];
    j["e_formula"] = form.e;
    j["e_direct"] = csg::minimal_generators(s).size();
    if (with_msg) j["generators"] = points_j(form.gens);
    if (with_wilf)
      j["wilf"] = {wilf_j(csg::check_generalized_wilf(s)), wilf_j(csg::check_extended_wilf(s))};
    emit(opt, j.dump() + "\n");
  });
  auto* fm = fam->add_subcommand("mult-embedded", "k multiples of m, then everything")->fallthrough();
  fm->add_option("-m", mstr, "multiplicity a,b")->required();
  fm->add_option("-k", kpar, "number of multiples")->required();
  fm->add_flag("--msg", with_msg, "include the generator list");
  fm->add_flag("--wilf", with_wilf, "include both Wilf reports");
  fm->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    csg::Point m = csg::parse_point(mstr);
    csg::MsgFormula form = csg::mult_embedded_msg_formula(ctx, m, kpar);
    csg::CSemigroup s = csg::mult_embedded_semigroup(ctx, m, kpar);
    json j;
    j["multiplicity"] = points_j({m})[0];
    j["k"] = kpar;
    j["e_formula"] = form.e;
    j["e_direct"] = csg::minimal_generators(s).size();
    if (with_msg) j["generators"] = points_j(form.gens);
    if (with_wilf)
      j["wilf"] = {wilf_j(csg::check_generalized_wilf(s)), wilf_j(csg::check_extended_wilf(s))};
    emit(opt, j.dump() + "\n");
  });
  auto* fs = fam->add_subcommand("sweep", "closed form vs direct over a parameter grid")->fallthrough();
  fs->add_option("--pi-max", pimax, "largest first weight of the conductor")->required();
  fs->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    std::string out = "params,e_formula,e_direct,wilf_glhs,wilf_grhs,wilf_elhs,wilf_erhs\n";
    auto row = [&](const std::string& params, const csg::MsgFormula& form,
                   const csg::CSemigroup& s) {
      csg::WilfReport wg = csg::check_generalized_wilf(s);
      csg::WilfReport we = csg::check_extended_wilf(s);
      out += params + "," + std::to_string(form.e) + "," +
             std::to_string(csg::minimal_generators(s).size()) + "," + std::to_string(wg.lhs) +
             "," + std::to_string(wg.rhs) + "," + std::to_string(we.lhs) + "," +
             std::to_string(we.rhs) + "\n";
    };
    for (long long pi = 1; pi <= pimax; ++pi)
      for (long long c1 = 0; c1 <= pi; ++c1) {
        csg::Point c{static_cast<int>(c1), static_cast<int>(pi - c1)};
        row("ordinary c=" + csg::show(c), csg::ordinary_msg_formula(ctx, c),
            csg::ordinary_semigroup(ctx, c));
      }
    for (long long k = 2; k <= pimax; ++k)
      for (long long pi = 1; k * pi <= pimax; ++pi)
        for (long long m1 = 0; m1 <= pi; ++m1) {
          csg::Point m{static_cast<int>(m1), static_cast<int>(pi - m1)};
          row("embedded m=" + csg::show(m) + " k=" + std::to_string(k),
              csg::mult_embedded_msg_formula(ctx, m, k),
              csg::mult_embedded_semigroup(ctx, m, k));
        }
    emit(opt, out);
  });

  auto* wf = app.add_subcommand("wilf", "check the two Wilf-style inequalities")->fallthrough();
  wf->add_option("-s", sfile, "semigroup file")->required();
  wf->add_flag("--generalized", wgen, "nu * e >= p * gamma");
  wf->add_flag("--extended", wext, "n * e >= N(Fb) + 1");
  wf->add_flag("--both", wboth, "both checks (default)");
  wf->callback([&] {
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    if (!wgen && !wext) wboth = true;
    std::string out;
    if (wgen || wboth) out += wilf_j(csg::check_generalized_wilf(s)).dump() + "\n";
    if (wext || wboth) out += wilf_j(csg::check_extended_wilf(s)).dump() + "\n";
    emit(opt, out);
  });

  auto* orc = app.add_subcommand("oracle", "brute-force reference paths")->fallthrough();
  orc->require_subcommand(1);
  auto* ofg = orc->add_subcommand("fb-genus", "subset enumeration")->fallthrough();
  ofg->add_option("-f", fstr, "Frobenius element a,b")->required();
  ofg->add_option("-g", g, "genus")->required();
  ofg->callback([&] {
    csg::Ctx ctx = make_ctx(opt);
    auto list = csg::oracle_enumerate_fb_genus(ctx, csg::parse_point(fstr), g);
    emit_list(opt, "f=" + csg::show(csg::parse_point(fstr)) + " g=" + std::to_string(g), list,
              false);
  });
  auto* omsg = orc->add_subcommand("msg", "definition scan past the bound")->fallthrough();
  omsg->add_option("-s", sfile, "semigroup file")->required();
  omsg->add_option("--slack", slack, "extra first-weight range")->required();
  omsg->callback([&] {
    csg::CSemigroup s = csg::load_semigroup_file(sfile);
    std::vector<csg::Point> gens = csg::oracle_msg(s, slack);
    json j;
    j["generators"] = points_j(gens);
    j["e"] = gens.size();
    emit(opt, j.dump() + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const csg::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == csg::Errc::budget_exceeded ? 3 : 2;
  }
  return 0;
}
