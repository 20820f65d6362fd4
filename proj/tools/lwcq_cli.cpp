#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "lwcq/basis_change.hpp"
#include "lwcq/config.hpp"
#include "lwcq/errors.hpp"
#include "lwcq/json_io.hpp"
#include "lwcq/qmzv.hpp"
#include "lwcq/quasi_shuffle.hpp"
#include "lwcq/series.hpp"
#include "lwcq/standard_rba.hpp"
#include "lwcq/zeta.hpp"

namespace {

using namespace lwcq;

constexpr int kExitOk = 0;
constexpr int kExitNotVerified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitBudget = 4;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t idx = 0;
            out.push_back(std::stoi(item, &idx));
            if (idx != item.size()) throw ParseError("bad integer list entry '" + item + "'");
        } catch (const std::exception&) {
            throw ParseError("bad integer list entry '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

void print_verify(const std::string& name, double lhs, double rhs, double residual, double tail,
                  double tol, bool verified) {
    std::printf("%-16s lhs=%.12g rhs=%.12g residual=%.3g tail=%.3g tol=%.3g -> %s\n",
                name.c_str(), lhs, rhs, residual, tail, tol, verified ? "verified" : "NOT verified");
}

int run(int argc, char** argv) {
    // resolve config defaults first: file from --config or LWCQ_CONFIG
    Config cfg;
    {
        std::string path = config_path_from_env();
        for (int i = 1; i + 1 < argc; ++i) {
            if (std::string(argv[i]) == "--config") path = argv[i + 1];
        }
        if (!path.empty()) cfg = load_config_file(path);
    }

    CLI::App app{"left weak composition quasi-symmetric functions: exact products, basis "
                 "changes, and certified zeta numerics"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (also: LWCQ_CONFIG)");

    bool json_out = cfg.json;
    app.add_flag("--json", json_out, "emit machine-readable JSON");

    double tol = cfg.tol;
    double qval = cfg.q;
    long long iter_cap = cfg.iter_cap;
    std::size_t budget = cfg.term_budget;
    int vars = cfg.vars;
    int zero_budget = cfg.zero_budget;

    // product
    auto* prod = app.add_subcommand("product", "quasi-shuffle or augmented product");
    std::string arg_a, arg_b;
    bool mbar = false;
    prod->add_option("a", arg_a, "first index")->required();
    prod->add_option("b", arg_b, "second index")->required();
    prod->add_flag("--mbar", mbar, "augmented product on head;(tail) elements");
    prod->add_option("--budget", budget, "term budget");

    // basis
    auto* basis = app.add_subcommand("basis", "change of basis for a single index");
    std::string basis_dir, basis_arg;
    basis->add_option("direction", basis_dir, "f2m or m2f")->required();
    basis->add_option("alpha", basis_arg, "left weak composition")->required();

    // matrix
    auto* matrix = app.add_subcommand("matrix", "transition matrix on a finite slice");
    int matrix_n = 2;
    std::string matrix_dir = "f2m";
    matrix->add_option("-n,--size", matrix_n, "grading")->required();
    matrix->add_option("--zero-budget", zero_budget, "zero budget of the slice");
    matrix->add_option("--dir", matrix_dir, "f2m or m2f");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a zeta symbol");
    eval->require_subcommand(1);
    auto* eval_mzv = eval->add_subcommand("mzv", "weighted multiple zeta value");
    std::string eval_sym;
    eval_mzv->add_option("symbol", eval_sym, "symbol 's_1,..,s_k;i_1,..,i_k'")->required();
    eval_mzv->add_option("--tol", tol, "target tolerance");
    eval_mzv->add_option("--iter-cap", iter_cap, "cutoff cap");
    auto* eval_qmzv = eval->add_subcommand("qmzv", "q-analog multiple zeta value");
    std::string eval_qsym, eval_word;
    eval_qmzv->add_option("symbol", eval_qsym, "index 'a_1,..,a_k' or 's;I'");
    eval_qmzv->add_option("--word", eval_word, "word over {r,y} instead of an index");
    eval_qmzv->add_option("--q", qval, "evaluation point in (0,1)");
    eval_qmzv->add_option("--tol", tol, "target tolerance");
    eval_qmzv->add_option("--iter-cap", iter_cap, "cutoff cap");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify an identity; exit 0 iff verified");
    verify_cmd->require_subcommand(1);
    int a = 3, b = 3, m = 1, n = 1, sp_k = 2, sp_n = 3, rb_size = 5;
    double perturb = 0.0;
    std::string du_s = "2", du_t = "1", word_u = "ry", word_v = "ry";
    bool use_q = false;

    auto add_abmn = [&](CLI::App* sub) {
        sub->add_option("-a", a, "first exponent")->required();
        sub->add_option("-b", b, "second exponent")->required();
        sub->add_option("-m", m, "first binomial order")->required();
        sub->add_option("-n", n, "second binomial order")->required();
        sub->add_option("--tol", tol, "verification tolerance");
        sub->add_option("--iter-cap", iter_cap, "cutoff cap per symbol");
        sub->add_option("--perturb", perturb, "perturb one coefficient (negative control)");
    };
    auto* v_stuffle = verify_cmd->add_subcommand("stuffle", "product vs quasi-shuffle expansion");
    add_abmn(v_stuffle);
    v_stuffle->add_flag("--q-analog", use_q, "verify the q-analog instead");
    v_stuffle->add_option("--q", qval, "q for the q-analog");
    auto* v_shuffle = verify_cmd->add_subcommand("shuffle", "product vs shuffle expansion");
    add_abmn(v_shuffle);
    auto* v_double = verify_cmd->add_subcommand("double-shuffle", "stuffle minus shuffle");
    add_abmn(v_double);

    auto* v_spitzer = verify_cmd->add_subcommand("spitzer", "Spitzer expansion equality");
    v_spitzer->add_option("-k", sp_k, "part size")->required();
    v_spitzer->add_option("-n", sp_n, "repetition count")->required();
    v_spitzer->add_option("--budget", budget, "term budget");

    auto* v_rb = verify_cmd->add_subcommand("rb-identity", "Rota-Baxter identity sweep");
    v_rb->add_option("-s,--size", rb_size, "total size bound");
    v_rb->add_option("--zero-budget", zero_budget, "tail zero bound");

    auto* v_duality = verify_cmd->add_subcommand("duality", "q-MZV duality");
    v_duality->add_option("--s", du_s, "tuple s_1,..,s_k")->required();
    v_duality->add_option("--t", du_t, "tuple t_1,..,t_k")->required();
    v_duality->add_option("--q", qval, "evaluation point");
    v_duality->add_option("--tol", tol, "tolerance");

    auto* v_hom = verify_cmd->add_subcommand("homomorphism", "q-shuffle homomorphism");
    v_hom->add_option("-u", word_u, "first word over {r,y}")->required();
    v_hom->add_option("-v", word_v, "second word over {r,y}")->required();
    v_hom->add_option("--q", qval, "evaluation point");
    v_hom->add_option("--tol", tol, "tolerance");

    int w_vars = 3, w_deg = 3;
    auto* v_waring = verify_cmd->add_subcommand("waring", "power sums vs elementary");
    v_waring->add_option("--vars", w_vars, "variable count");
    v_waring->add_option("--deg", w_deg, "t-order");

    auto* v_oracle = verify_cmd->add_subcommand("oracle-series", "series oracle sweeps");
    int o_size = 3;
    v_oracle->add_option("--size", o_size, "size bound for the sweep");
    v_oracle->add_option("--zero-budget", zero_budget, "zero budget for the sweep");
    v_oracle->add_option("--vars", vars, "truncation variables");

    // top-level alias mirroring the module interface
    auto* waring_alias = app.add_subcommand("waring", "same as verify waring");
    waring_alias->add_option("--vars", w_vars, "variable count");
    waring_alias->add_option("--deg", w_deg, "t-order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*prod) {
        if (mbar) {
            MbarComb result =
                diamond(MbarComb(parse_mbar(arg_a)), MbarComb(parse_mbar(arg_b)), budget);
            if (json_out) {
                std::cout << lincomb_to_json(result).dump(2) << "\n";
            } else {
                std::cout << format_lincomb(result, [](const MbarElement& e) {
                    return "(" + format_mbar(e) + ")";
                }) << "\n";
            }
        } else {
            LinComb<Lwc> result = quasi_shuffle(parse_lwc(arg_a), parse_lwc(arg_b), budget);
            if (json_out) {
                std::cout << lincomb_to_json(result, "M").dump(2) << "\n";
            } else {
                std::cout << format_lincomb(result, format_lwc) << "\n";
            }
        }
        return kExitOk;
    }

    if (*basis) {
        Lwc alpha = parse_lwc(basis_arg);
        LinComb<Lwc> result;
        std::string tag;
        if (basis_dir == "f2m") {
            result = f_to_m(alpha);
            tag = "M";
        } else if (basis_dir == "m2f") {
            result = m_to_f(alpha);
            tag = "F";
        } else {
            throw ParseError("direction must be f2m or m2f");
        }
        if (json_out) {
            std::cout << lincomb_to_json(result, tag).dump(2) << "\n";
        } else {
            std::cout << format_lincomb(result, format_lwc) << "\n";
        }
        return kExitOk;
    }

    if (*matrix) {
        BasisDirection dir;
        if (matrix_dir == "f2m") dir = BasisDirection::FtoM;
        else if (matrix_dir == "m2f") dir = BasisDirection::MtoF;
        else throw ParseError("direction must be f2m or m2f");
        TransitionMatrix tm = transition_matrix(matrix_n, zero_budget, dir);
        std::cout << matrix_to_json(tm).dump(2) << "\n";
        return kExitOk;
    }

    if (*eval_mzv) {
        ZetaSymbol sym = parse_zeta_symbol(eval_sym);
        EvalOptions opts;
        opts.tol = tol;
        opts.iter_cap = iter_cap;
        EvalResult res = zeta_lwc(sym, opts);
        if (json_out) {
            std::cout << eval_result_to_json(format_zeta_symbol(sym), res).dump(2) << "\n";
        } else {
            std::printf("zeta(%s) = %.15g  tail<=%.3g  cutoff=%lld%s\n",
                        format_zeta_symbol(sym).c_str(), res.value, res.tail,
                        static_cast<long long>(res.cutoff),
                        res.tol_met ? "" : "  (iteration cap reached before tol)");
        }
        return kExitOk;
    }

    if (*eval_qmzv) {
        Lwc alpha;
        std::string label;
        if (!eval_word.empty()) {
            alpha = word_to_index(parse_word(eval_word));
            label = eval_word;
        } else if (!eval_qsym.empty()) {
            alpha = parse_zeta_symbol(eval_qsym).flat();
            label = eval_qsym;
        } else {
            throw ParseError("eval qmzv needs an index or --word");
        }
        QEvalOptions opts;
        opts.tol = tol;
        opts.iter_cap = iter_cap;
        EvalResult res = zeta_q(alpha, qval, opts);
        if (json_out) {
            std::cout << eval_result_to_json(label, res).dump(2) << "\n";
        } else {
            std::printf("zeta_q(%s) at q=%g = %.15g  tail<=%.3g  cutoff=%lld%s\n", label.c_str(),
                        qval, res.value, res.tail, static_cast<long long>(res.cutoff),
                        res.tol_met ? "" : "  (iteration cap reached before tol)");
        }
        return kExitOk;
    }

    auto emit_relation_verify = [&](const Relation& rel) {
        Relation r = rel;
        if (perturb != 0.0) {
            r = perturb_relation(rel, Rational(static_cast<long long>(perturb * 1e9), 1000000000LL));
        }
        EvalOptions opts;
        opts.tol = tol / 10;
        opts.iter_cap = iter_cap;
        ZetaEvaluator evaluator(opts);
        VerifyReport rep = verify(r, tol, evaluator);
        if (json_out) std::cout << verify_report_to_json(r, rep).dump(2) << "\n";
        else print_verify(r.name, rep.lhs_value, rep.rhs_value, rep.residual, rep.tail_bound,
                          rep.tolerance, rep.verified);
        return rep.verified ? kExitOk : kExitNotVerified;
    };

    if (*v_stuffle) {
        if (use_q) {
            Relation rel = stuffle_relation(a, b, m, n);
            if (perturb != 0.0) {
                rel = perturb_relation(rel,
                                       Rational(static_cast<long long>(perturb * 1e9), 1000000000LL));
            }
            QEvalOptions opts;
            opts.tol = tol / 10;
            opts.iter_cap = iter_cap;
            QCheckReport rep = verify_q(rel, qval, tol, opts);
            if (json_out) std::cout << qcheck_report_to_json(rep).dump(2) << "\n";
            else print_verify("stuffle-q", rep.lhs_value, rep.rhs_value, rep.residual,
                              rep.tail_bound, rep.tolerance, rep.verified);
            return rep.verified ? kExitOk : kExitNotVerified;
        }
        return emit_relation_verify(stuffle_relation(a, b, m, n));
    }
    if (*v_shuffle) return emit_relation_verify(shuffle_relation(a, b, m, n));
    if (*v_double) return emit_relation_verify(double_shuffle_relation(a, b, m, n));

    if (*v_spitzer) {
        auto [lhs, rhs] = spitzer_check(sp_k, sp_n, budget);
        bool ok = lhs == rhs;
        if (json_out) {
            Json j{{"kind", "spitzer"}, {"k", sp_k}, {"n", sp_n}, {"verified", ok},
                   {"lhs", lincomb_to_json(lhs, "M")}, {"rhs", lincomb_to_json(rhs, "M")}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("spitzer k=%d n=%d -> %s\n", sp_k, sp_n, ok ? "verified" : "NOT verified");
        }
        return ok ? kExitOk : kExitNotVerified;
    }

    if (*v_rb) {
        bool ok = true;
        std::vector<MbarElement> basis_elems;
        for (int total = 1; total <= rb_size; ++total) {
            for (const auto& lw : lwcs_of_size(total, zero_budget)) {
                const auto& p = lw.parts();
                basis_elems.emplace_back(p[0], Lwc(WeakSeq(p.begin() + 1, p.end())));
            }
        }
        long long checked = 0;
        for (const auto& x : basis_elems) {
            for (const auto& y : basis_elems) {
                if (x.size() + y.size() > rb_size) continue;
                if (!rb_residual(MbarComb(x), MbarComb(y), budget).is_zero()) ok = false;
                ++checked;
            }
        }
        if (json_out) {
            Json j{{"kind", "rb-identity"}, {"size", rb_size}, {"pairs", checked}, {"verified", ok}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("rb-identity size<=%d (%lld pairs) -> %s\n", rb_size, checked,
                        ok ? "verified" : "NOT verified");
        }
        return ok ? kExitOk : kExitNotVerified;
    }

    if (*v_duality) {
        QEvalOptions opts;
        opts.tol = tol / 10;
        opts.iter_cap = iter_cap;
        QCheckReport rep = duality_check(parse_int_list(du_s), parse_int_list(du_t), qval, tol, opts);
        if (json_out) std::cout << qcheck_report_to_json(rep).dump(2) << "\n";
        else print_verify("duality", rep.lhs_value, rep.rhs_value, rep.residual, rep.tail_bound,
                          rep.tolerance, rep.verified);
        return rep.verified ? kExitOk : kExitNotVerified;
    }

    if (*v_hom) {
        QEvalOptions opts;
        opts.tol = tol / 10;
        opts.iter_cap = iter_cap;
        QCheckReport rep = homomorphism_check(parse_word(word_u), parse_word(word_v), qval, tol, opts);
        if (json_out) std::cout << qcheck_report_to_json(rep).dump(2) << "\n";
        else print_verify("homomorphism", rep.lhs_value, rep.rhs_value, rep.residual,
                          rep.tail_bound, rep.tolerance, rep.verified);
        return rep.verified ? kExitOk : kExitNotVerified;
    }

    if (*v_waring || *waring_alias) {
        WaringReport rep = waring_check(w_vars, w_deg);
        if (json_out) {
            Json lhs = Json::array(), rhs = Json::array();
            for (const auto& s : rep.lhs) lhs.push_back(series_to_json(s));
            for (const auto& s : rep.rhs) rhs.push_back(series_to_json(s));
            Json j{{"kind", "waring"}, {"vars", w_vars}, {"deg", w_deg}, {"verified", rep.equal},
                   {"exp_side", lhs}, {"elementary_side", rhs}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t d = 0; d < rep.lhs.size(); ++d) {
                std::printf("t^%zu: exp side   = %s\n", d, format_series(rep.lhs[d]).c_str());
                std::printf("      elementary = %s\n", format_series(rep.rhs[d]).c_str());
            }
            std::printf("waring vars=%d deg=%d -> %s\n", w_vars, w_deg,
                        rep.equal ? "pass" : "FAIL");
        }
        return rep.equal ? kExitOk : kExitNotVerified;
    }

    if (*v_oracle) {
        bool ok = true;
        long long cases = 0;
        // quasi-shuffle homomorphism against the truncated-series product
        std::vector<Lwc> all;
        for (int s = 1; s <= o_size; ++s) {
            for (const auto& lw : lwcs_of_size(s, zero_budget)) all.push_back(lw);
        }
        for (const auto& x : all) {
            for (const auto& y : all) {
                if (x.size() + y.size() > o_size) continue;
                int D = static_cast<int>(x.size() + y.size());
                TruncatedSeries lhs =
                    multiply(expand_M(x, vars, D), expand_M(y, vars, D));
                TruncatedSeries rhs = expand_M_lincomb(quasi_shuffle(x, y), vars, D);
                if (!(lhs == rhs)) ok = false;
                ++cases;
            }
        }
        // fundamental basis vs poset generating function
        for (const auto& x : all) {
            if (x.size() > o_size) continue;
            int D = static_cast<int>(x.size());
            if (!(gamma_P(x, vars, D) == expand_F(x, vars, D))) ok = false;
            ++cases;
        }
        if (json_out) {
            Json j{{"kind", "oracle-series"}, {"cases", cases}, {"verified", ok}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("oracle-series size<=%d (%lld cases) -> %s\n", o_size, cases,
                        ok ? "verified" : "NOT verified");
        }
        return ok ? kExitOk : kExitNotVerified;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lwcq::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const lwcq::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
