#include "oscp/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "oscp/asymptotics.hpp"
#include "oscp/boundary.hpp"
#include "oscp/mc_validate.hpp"
#include "oscp/model_io.hpp"
#include "oscp/table.hpp"

namespace oscp {

namespace {

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ModelIoError("bad value '" + item + "' in " + what + " list");
    }
  }
  if (out.empty()) throw ModelIoError(what + " list is empty");
  return out;
}

void emit(const Table& table, const std::string& output, const std::string& format) {
  const std::string text = format == "json" ? table.to_json() : table.to_csv();
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw ModelIoError("cannot open output file: " + output);
    f << text;
  }
}

const Component& pick_comp(const OscillatingModel& m, int comp) {
  if (comp == 1) return m.comp1;
  if (comp == 2) return m.comp2;
  throw ModelIoError("--comp must be 1 or 2");
}

struct CommonOpts {
  std::string model_path;
  std::string output;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_model = true) {
  if (needs_model)
    cmd->add_option("--model", o.model_path, "model definition JSON")->required();
  cmd->add_option("--output", o.output, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exit-problem transforms of an oscillating compound Poisson process"};
  app.require_subcommand(1);
  int status = 0;
  std::function<void()> action;

  // ---- exponent ----
  auto ex = std::make_shared<CommonOpts>();
  auto ex_z = std::make_shared<std::string>("0,0.5,1");
  auto ex_s = std::make_shared<std::string>("");
  auto ex_comp = std::make_shared<int>(0);
  {
    CLI::App* cmd = app.add_subcommand("exponent", "Laplace exponent k(z) and Cramer roots c(s)");
    add_common(cmd, *ex);
    cmd->add_option("--comp", *ex_comp, "component (1 or 2; default both)");
    cmd->add_option("--z", *ex_z, "comma list of z values");
    cmd->add_option("--s", *ex_s, "comma list of s values for Cramer roots");
    cmd->callback([&action, ex, ex_z, ex_s, ex_comp] {
      action = [=] {
        const OscillatingModel m = load_model(ex->model_path);
        Table t({"comp", "quantity", "arg", "value"});
        std::vector<int> comps = *ex_comp == 0 ? std::vector<int>{1, 2} : std::vector<int>{*ex_comp};
        for (int ci : comps) {
          const Component& comp = pick_comp(m, ci);
          for (double z : parse_list(*ex_z, "--z"))
            t.add_row({static_cast<long long>(ci), std::string("k"), z, comp.laplace_exponent(z)});
          if (!ex_s->empty())
            for (double s : parse_list(*ex_s, "--s"))
              t.add_row({static_cast<long long>(ci), std::string("c"), s, comp.cramer_root(s)});
        }
        emit(t, ex->output, ex->format);
      };
    });
  }

  // ---- resolvent ----
  auto rv = std::make_shared<CommonOpts>();
  auto rv_x = std::make_shared<std::string>();
  auto rv_s = std::make_shared<std::string>("1");
  auto rv_comp = std::make_shared<int>(1);
  {
    CLI::App* cmd = app.add_subcommand("resolvent", "resolvent R^s(x) of one component");
    add_common(cmd, *rv);
    cmd->add_option("--comp", *rv_comp, "component (1 or 2)");
    cmd->add_option("--x", *rv_x, "comma list of levels")->required();
    cmd->add_option("--s", *rv_s, "comma list of s values");
    cmd->callback([&action, rv, rv_x, rv_s, rv_comp] {
      action = [=] {
        const OscillatingModel m = load_model(rv->model_path);
        const Component& comp = pick_comp(m, *rv_comp);
        Table t({"comp", "s", "x", "value"});
        for (double s : parse_list(*rv_s, "--s")) {
          const Resolvent res(comp, s);
          for (double x : parse_list(*rv_x, "--x"))
            t.add_row({static_cast<long long>(*rv_comp), s, x, res(x)});
        }
        emit(t, rv->output, rv->format);
      };
    });
  }

  // ---- passage (auxiliary one-boundary) ----
  auto pa = std::make_shared<CommonOpts>();
  auto pa_dir = std::make_shared<std::string>("down");
  auto pa_x = std::make_shared<std::string>();
  auto pa_s = std::make_shared<std::string>("1");
  auto pa_z = std::make_shared<std::string>("0");
  auto pa_comp = std::make_shared<int>(1);
  {
    CLI::App* cmd =
        app.add_subcommand("passage", "auxiliary first-passage transforms of one component");
    add_common(cmd, *pa);
    cmd->add_option("--comp", *pa_comp, "component (1 or 2)");
    cmd->add_option("--direction", *pa_dir, "down or up")
        ->check(CLI::IsMember({"down", "up"}));
    cmd->add_option("--x", *pa_x, "comma list of levels (x >= 0)")->required();
    cmd->add_option("--s", *pa_s, "comma list of s values");
    cmd->add_option("--z", *pa_z, "comma list of overshoot arguments (up only)");
    cmd->callback([&action, pa, pa_dir, pa_x, pa_s, pa_z, pa_comp] {
      action = [=] {
        const OscillatingModel m = load_model(pa->model_path);
        const Component& comp = pick_comp(m, *pa_comp);
        Table t({"comp", "direction", "x", "s", "z", "value"});
        for (double s : parse_list(*pa_s, "--s")) {
          if (*pa_dir == "down") {
            for (double x : parse_list(*pa_x, "--x"))
              t.add_row({static_cast<long long>(*pa_comp), *pa_dir, x, s, 0.0,
                         passage_down_lt(comp, x, s)});
          } else {
            const Resolvent res(comp, s);
            for (double x : parse_list(*pa_x, "--x"))
              for (double z : parse_list(*pa_z, "--z"))
                t.add_row({static_cast<long long>(*pa_comp), *pa_dir, x, s, z,
                           cross_up_lt(res, x, z).real()});
          }
        }
        emit(t, pa->output, pa->format);
      };
    });
  }

  // ---- exit (auxiliary two-sided) ----
  auto axe = std::make_shared<CommonOpts>();
  auto axe_d = std::make_shared<double>(0.0);
  auto axe_x = std::make_shared<std::string>();
  auto axe_s = std::make_shared<std::string>("1");
  auto axe_z = std::make_shared<std::string>("0");
  auto axe_comp = std::make_shared<int>(1);
  {
    CLI::App* cmd = app.add_subcommand("exit", "auxiliary exit from [0, d] of one component");
    add_common(cmd, *axe);
    cmd->add_option("--comp", *axe_comp, "component (1 or 2)");
    cmd->add_option("--d", *axe_d, "interval upper end (> 0)")->required();
    cmd->add_option("--x", *axe_x, "comma list of starts in [0, d]")->required();
    cmd->add_option("--s", *axe_s, "comma list of s values");
    cmd->add_option("--z", *axe_z, "comma list of overshoot arguments");
    cmd->callback([&action, axe, axe_d, axe_x, axe_s, axe_z, axe_comp] {
      action = [=] {
        const OscillatingModel m = load_model(axe->model_path);
        const Component& comp = pick_comp(m, *axe_comp);
        Table t({"comp", "d", "x", "s", "z", "down", "up"});
        for (double s : parse_list(*axe_s, "--s")) {
          const Resolvent res(comp, s);
          for (double x : parse_list(*axe_x, "--x"))
            for (double z : parse_list(*axe_z, "--z")) {
              const TwoSidedExit v = exit_interval_lt(res, x, *axe_d, z);
              t.add_row({static_cast<long long>(*axe_comp), *axe_d, x, s, z, v.down,
                         v.up.real()});
            }
        }
        emit(t, axe->output, axe->format);
      };
    });
  }

  // ---- osc-passage ----
  auto op = std::make_shared<CommonOpts>();
  auto op_dir = std::make_shared<std::string>("down");
  auto op_r = std::make_shared<double>(0.0);
  auto op_k = std::make_shared<double>(0.0);
  auto op_x = std::make_shared<std::string>();
  auto op_s = std::make_shared<std::string>("1");
  auto op_z = std::make_shared<std::string>("0");
  {
    CLI::App* cmd =
        app.add_subcommand("osc-passage", "one-boundary transforms of the switching process");
    add_common(cmd, *op);
    cmd->add_option("--direction", *op_dir, "down or up")->check(CLI::IsMember({"down", "up"}));
    cmd->add_option("--r", *op_r, "lower level (down)");
    cmd->add_option("--k", *op_k, "upper level (up)");
    cmd->add_option("--x", *op_x, "comma list of starts")->required();
    cmd->add_option("--s", *op_s, "comma list of s values");
    cmd->add_option("--z", *op_z, "comma list of overshoot arguments (up only)");
    cmd->callback([&action, op, op_dir, op_r, op_k, op_x, op_s, op_z] {
      action = [=] {
        const OscillatingModel m = load_model(op->model_path);
        Table t({"direction", "x", "boundary", "s", "z", "value"});
        for (double s : parse_list(*op_s, "--s")) {
          const OscFunctionals osc(m, s);
          for (double x : parse_list(*op_x, "--x")) {
            if (*op_dir == "down") {
              t.add_row({*op_dir, x, *op_r, s, 0.0, osc.passage_down(x, *op_r)});
            } else {
              for (double z : parse_list(*op_z, "--z"))
                t.add_row({*op_dir, x, *op_k, s, z, osc.cross_up(x, *op_k, z).real()});
            }
          }
        }
        emit(t, op->output, op->format);
      };
    });
  }

  // ---- osc-exit ----
  auto oe = std::make_shared<CommonOpts>();
  auto oe_B = std::make_shared<double>(0.0);
  auto oe_x = std::make_shared<std::string>();
  auto oe_s = std::make_shared<std::string>("1");
  auto oe_z = std::make_shared<std::string>("0");
  {
    CLI::App* cmd =
        app.add_subcommand("osc-exit", "two-sided exit from [0, B] of the switching process");
    add_common(cmd, *oe);
    cmd->add_option("--B", *oe_B, "interval upper end")->required();
    cmd->add_option("--x", *oe_x, "comma list of starts in [0, B]")->required();
    cmd->add_option("--s", *oe_s, "comma list of s values");
    cmd->add_option("--z", *oe_z, "comma list of overshoot arguments");
    cmd->callback([&action, oe, oe_B, oe_x, oe_s, oe_z] {
      action = [=] {
        const OscillatingModel m = load_model(oe->model_path);
        Table t({"x", "B", "s", "z", "down", "up"});
        for (double s : parse_list(*oe_s, "--s")) {
          const OscFunctionals osc(m, s);
          for (double x : parse_list(*oe_x, "--x"))
            for (double z : parse_list(*oe_z, "--z")) {
              const TwoSidedExit v = osc.exit_interval(x, *oe_B, z);
              t.add_row({x, *oe_B, s, z, v.down, v.up.real()});
            }
        }
        emit(t, oe->output, oe->format);
      };
    });
  }

  // ---- mc-validate ----
  auto mv = std::make_shared<CommonOpts>();
  auto mv_n = std::make_shared<long long>(1000000);
  auto mv_seed = std::make_shared<uint64_t>(42);
  {
    CLI::App* cmd = app.add_subcommand(
        "mc-validate", "validate every closed form against exact simulation (built-in grid)");
    add_common(cmd, *mv, /*needs_model=*/false);
    cmd->add_option("--n", *mv_n, "paths per cell (default 1000000)");
    cmd->add_option("--seed", *mv_seed, "master seed (default 42)");
    cmd->callback([&action, &status, mv, mv_n, mv_seed] {
      action = [=, &status] {
        const auto rows = run_mc_validation(*mv_n, *mv_seed);
        Table t({"functional", "params", "closed_form", "mc_value", "stderr", "z_score", "pass"});
        bool all_pass = true;
        for (const auto& r : rows) {
          t.add_row({r.functional, r.params, r.closed_form, r.mc_value, r.stderr_, r.z_score,
                     r.pass});
          all_pass = all_pass && r.pass;
        }
        emit(t, mv->output, mv->format);
        if (!all_pass) {
          std::cerr << "mc-validate: at least one |z| > 3.5\n";
          status = 1;
        }
      };
    });
  }

  // ---- limit-study ----
  auto ls = std::make_shared<CommonOpts>();
  auto ls_s = std::make_shared<double>(1.0);
  auto ls_B = std::make_shared<std::string>("10,50,250");
  auto ls_geom = std::make_shared<ScalingGeometry>();
  {
    CLI::App* cmd = app.add_subcommand(
        "limit-study", "finite-scale functionals against their diffusion limits");
    add_common(cmd, *ls);
    cmd->add_option("--s", *ls_s, "time-transform argument (default 1)");
    cmd->add_option("--B", *ls_B, "comma list of scales (default 10,50,250)");
    cmd->add_option("--gx", ls_geom->x, "start fraction (lower branch)");
    cmd->add_option("--gxneg", ls_geom->x_neg, "negative kernel argument fraction");
    cmd->add_option("--gb", ls_geom->b, "switch fraction");
    cmd->add_option("--gk", ls_geom->k, "upper-level fraction");
    cmd->add_option("--gr", ls_geom->r, "lower-level fraction");
    cmd->add_option("--gu", ls_geom->u, "kernel argument fraction");
    cmd->callback([&action, &status, ls, ls_s, ls_B, ls_geom] {
      action = [=, &status] {
        const OscillatingModel m = load_model(ls->model_path);
        const auto rows = convergence_study(m, *ls_geom, *ls_s, parse_list(*ls_B, "--B"));
        Table t({"functional", "B", "finite_value", "limit_value", "abs_err"});
        for (const auto& r : rows)
          t.add_row({r.functional, r.scale, r.finite_value, r.limit_value, r.abs_err});
        emit(t, ls->output, ls->format);
        const std::string violation = convergence_violation(rows);
        if (!violation.empty()) {
          std::cerr << "limit-study: convergence violation: " << violation << "\n";
          status = 1;
        }
      };
    });
  }

  // ---- pr-check ----
  auto pr = std::make_shared<CommonOpts>();
  auto pr_comp = std::make_shared<int>(1);
  auto pr_s = std::make_shared<std::string>("1,1,2");
  auto pr_z = std::make_shared<std::string>("0,2.999,0.5");
  auto pr_p = std::make_shared<std::string>("3,3,4");
  auto pr_xmax = std::make_shared<double>(0.0);
  auto pr_tol = std::make_shared<double>(1e-6);
  {
    CLI::App* cmd = app.add_subcommand(
        "pr-check", "level-transform identity: quadrature side against the closed form");
    add_common(cmd, *pr);
    cmd->add_option("--comp", *pr_comp, "component (1 or 2)");
    cmd->add_option("--s", *pr_s, "comma list of s values (zipped with --z, --p)");
    cmd->add_option("--z", *pr_z, "comma list of z values");
    cmd->add_option("--p", *pr_p, "comma list of p values");
    cmd->add_option("--x-max", *pr_xmax, "integration horizon (0 = automatic)");
    cmd->add_option("--tol", *pr_tol, "pass threshold on |lhs - rhs|");
    cmd->callback([&action, &status, pr, pr_comp, pr_s, pr_z, pr_p, pr_xmax, pr_tol] {
      action = [=, &status] {
        const OscillatingModel m = load_model(pr->model_path);
        const Component& comp = pick_comp(m, *pr_comp);
        const auto ss = parse_list(*pr_s, "--s");
        const auto zz = parse_list(*pr_z, "--z");
        const auto pp = parse_list(*pr_p, "--p");
        if (ss.size() != zz.size() || ss.size() != pp.size())
          throw ModelIoError("--s, --z, --p lists must have equal lengths");
        Table t({"comp", "s", "z", "p", "lhs", "rhs", "abs_err", "pass"});
        bool all_pass = true;
        for (size_t i = 0; i < ss.size(); ++i) {
          const double x_max =
              *pr_xmax > 0.0 ? *pr_xmax : 1.05 * (-std::log(1e-10 * pp[i]) / pp[i]);
          const PrCheck chk = verify_pecherskii_rogozin(comp, zz[i], ss[i], pp[i], x_max);
          const bool pass = chk.abs_err <= *pr_tol;
          all_pass = all_pass && pass;
          t.add_row({static_cast<long long>(*pr_comp), ss[i], zz[i], pp[i], chk.lhs.real(),
                     chk.rhs.real(), chk.abs_err, pass});
        }
        emit(t, pr->output, pr->format);
        if (!all_pass) {
          std::cerr << "pr-check: at least one residual above tolerance\n";
          status = 1;
        }
      };
    });
  }

  std::vector<std::string> argv_owned = args;
  std::vector<const char*> argv;
  argv.push_back("oscp");
  for (const auto& a : argv_owned) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const ModelIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace oscp
