// hcwb: workbench CLI for cyclotomic Hecke-Clifford / Sergeev algebras.

#include <CLI11.hpp>
#include <json.hpp>

#include "hc/seminormal.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

using namespace hc;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string flavor = "nd";
    std::string type = "s";
    int m = 0;
    std::string q = "2";
    std::string Q; // comma-separated
    int n = 3;
    unsigned precision = 256;
    std::string tolerance = "1e-30";
    unsigned seed = 1;
    std::string output;
    std::string grid;
};

json scalar_json(const Scalar& s) {
    return json{{"re", s.re_str(40)}, {"im", s.im_str(40)}};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Params make_params(const Options& o) {
    Params p;
    if (o.flavor == "nd" || o.flavor == "nondegenerate")
        p.flavor = Flavor::NonDegenerate;
    else if (o.flavor == "deg" || o.flavor == "degenerate")
        p.flavor = Flavor::Degenerate;
    else
        throw std::invalid_argument("flavor must be nd|deg");
    if (o.type == "0")
        p.bullet = Bullet::Zero;
    else if (o.type == "s")
        p.bullet = Bullet::S;
    else if (o.type == "ss")
        p.bullet = Bullet::SS;
    else
        throw std::invalid_argument("type must be 0|s|ss");
    p.m = o.m;
    p.n = o.n;
    if (p.flavor == Flavor::NonDegenerate) p.q = Scalar::parse(o.q);
    for (const auto& part : split(o.Q, ',')) p.Q.push_back(Scalar::parse(part));
    if (static_cast<int>(p.Q.size()) != p.m)
        throw std::invalid_argument("need exactly m values in --Q");
    p.validate();
    return p;
}

json config_json(const Params& p, const Options& o) {
    json j;
    j["flavor"] = to_string(p.flavor);
    j["type"] = to_string(p.bullet);
    j["m"] = p.m;
    if (p.flavor == Flavor::NonDegenerate) j["q"] = o.q;
    j["Q"] = split(o.Q, ',');
    j["n"] = p.n;
    j["precision_bits"] = o.precision;
    j["tolerance"] = o.tolerance;
    return j;
}

void emit(const Options& o, const json& payload) {
    std::string text = payload.dump(2);
    if (o.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(o.output);
        f << text << "\n";
    }
}

json tableau_json(const StandardTableau& t, const Params& p) {
    json j;
    json filling = json::array();
    for (int k = 1; k <= t.n(); ++k) {
        const Box& b = t.entry_box[static_cast<size_t>(k - 1)];
        filling.push_back(json{{"entry", k}, {"row", b.row}, {"col", b.col}, {"comp", b.comp}});
    }
    j["filling"] = filling;
    auto dd = diagonal_data(t);
    j["diag_entries"] = dd.diag_entries;
    json od = json::array();
    for (int k = 1; k <= t.n(); ++k)
        if (has_bit(dd.od_mask, k)) od.push_back(k);
    j["od_entries"] = od;
    j["d_lambda"] = dd.d_lambda;
    json rs = json::array(), qs = json::array();
    for (const auto& r : res_seq(t, p)) rs.push_back(scalar_json(r));
    for (const auto& qv : q_seq(t, p)) qs.push_back(scalar_json(qv));
    j["residues"] = rs;
    j["q_sequence"] = qs;
    return j;
}

int check_separate(const Params& p, const Options& o) {
    std::string why;
    if (!separate_check(p, &why)) {
        json j;
        j["schema"] = "v1";
        j["error"] = "separateness failure";
        j["detail"] = why;
        emit(o, j);
        return 2;
    }
    return 0;
}

int cmd_tableaux(const Params& p, const Options& o) {
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    json shapes = json::array();
    for (const auto& shape : enumerate_multipartitions(p)) {
        json js;
        js["shape"] = shape.str();
        js["t_prime"] = static_cast<int>(shape.diagonal_boxes().size());
        json tabs = json::array();
        for (const auto& t : enumerate_std(shape)) tabs.push_back(tableau_json(t, p));
        js["std"] = tabs;
        shapes.push_back(js);
    }
    j["shapes"] = shapes;
    emit(o, j);
    return 0;
}

json sparse_matrix_json(const Matrix& m) {
    json triples = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            if (!m.at(i, k).is_zero())
                triples.push_back(json{{"row", i}, {"col", k}, {"value", scalar_json(m.at(i, k))}});
    return triples;
}

int cmd_module(const Params& p, const Options& o) {
    if (int rc = check_separate(p, o)) return rc;
    Rep rep(p);
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    json blocks = json::array();
    for (int b = 0; b < rep.num_blocks(); ++b) {
        const auto& mod = rep.module(b);
        json jb;
        jb["shape"] = mod.shape().str();
        jb["dim"] = mod.dim();
        json basis = json::array();
        for (const auto& v : mod.basis())
            basis.push_back(json{{"tab", v.tab}, {"beta", v.beta}, {"alpha", v.alpha}});
        jb["basis"] = basis;
        json eig = json::array();
        for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
            json row = json::array();
            for (int i = 1; i <= p.n; ++i) row.push_back(scalar_json(mod.eig(t, i)));
            eig.push_back(row);
        }
        jb[p.flavor == Flavor::NonDegenerate ? "b" : "u"] = eig;
        json acts;
        for (int i = 1; i <= p.n; ++i)
            acts["X" + std::to_string(i)] = sparse_matrix_json(rep.gen_X(i).blocks[static_cast<size_t>(b)]);
        for (int i = 1; i <= p.n; ++i)
            acts["C" + std::to_string(i)] = sparse_matrix_json(rep.gen_C(i).blocks[static_cast<size_t>(b)]);
        for (int i = 1; i < p.n; ++i)
            acts["T" + std::to_string(i)] = sparse_matrix_json(rep.gen_T(i).blocks[static_cast<size_t>(b)]);
        jb["actions"] = acts;
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    emit(o, j);
    return 0;
}

json ledger_json(const Params& p) {
    auto led = dimension_ledger(p);
    json j;
    j["pbw_dim"] = led.pbw_dim;
    j["block_sum"] = led.block_sum;
    j["module_dim"] = led.total_module_dim;
    j["balanced"] = led.balanced;
    j["blocks"] = led.lines;
    return j;
}

int cmd_idempotents(const Params& p, const Options& o) {
    if (int rc = check_separate(p, o)) return rc;
    Rep rep(p);
    Idempotents idem(rep);
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    auto all = idem.tri0_all();
    BlockOp sum = rep.zero();
    for (const auto& T : all) sum = sum + idem.F(T);
    Real completeness = sum.residual(rep.identity());
    Real ortho(0);
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = 0; b < all.size(); ++b) {
            BlockOp prod = idem.F(all[a]) * idem.F(all[b]);
            Real r = (a == b) ? prod.residual(idem.F(all[a])) : prod.max_abs();
            if (r > ortho) ortho = r;
        }
    j["count"] = all.size();
    json per_block = json::array();
    for (int b = 0; b < rep.num_blocks(); ++b)
        per_block.push_back(json{{"shape", rep.module(b).shape().str()},
                                 {"count", idem.tri0(b).size()},
                                 {"expected", idem.expected_count(b)}});
    j["per_block"] = per_block;
    j["completeness_residual"] = completeness.str(3);
    j["orthogonality_residual"] = ortho.str(3);
    j["ledger"] = ledger_json(p);
    emit(o, j);
    return 0;
}

int cmd_seminormal(const Params& p, const Options& o) {
    if (int rc = check_separate(p, o)) return rc;
    Rep rep(p);
    Idempotents idem(rep);
    Seminormal sn(rep, idem);
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    json blocks = json::array();
    for (int b = 0; b < rep.num_blocks(); ++b) {
        const auto& mod = rep.module(b);
        int w = mod.tab_index(t_row(mod.shape()));
        int dl = mod.diag()[0].d_lambda;
        auto tri0 = idem.tri0(b);
        json jb;
        jb["shape"] = mod.shape().str();
        jb["d_lambda"] = dl;
        jb["w"] = "t_row";
        json consts = json::array();
        // nonzero structure constants f^w_{S,Ta} f^w_{T0,Vb} = coeff f^w_{S,V(a+b)}
        for (size_t ti = 0; ti < tri0.size(); ++ti) {
            Scalar c = sn.c_T_w(tri0[ti], w);
            if (dl == 1) {
                const auto& dd = mod.diag()[static_cast<size_t>(tri0[ti].tab)];
                if (popcount_above(tri0[ti].alpha, dd.last_entry()) % 2) c = -c;
            }
            consts.push_back(json{{"T", static_cast<int>(ti)}, {"c", scalar_json(c)}});
        }
        jb["structure_constants"] = consts;
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    emit(o, j);
    return 0;
}

json subalgebra_json(const Params& p) {
    Rep rep(p);
    Idempotents idem(rep);
    Seminormal sn(rep, idem);
    PBWFrame frame(rep);
    auto r = subalgebra_report(rep, idem, sn, frame);
    json j;
    j["dim_G"] = r.dim_G;
    j["dim_P"] = r.dim_P;
    j["dim_A"] = r.dim_A;
    j["dim_centralizer_P"] = r.dim_CP;
    j["expected"] = json{{"G", r.exp_G}, {"P", r.exp_P}, {"A", r.exp_A}, {"CP", r.exp_CP}};
    j["bases_ok"] = r.g_basis_ok && r.p_basis_ok;
    j["A_equals_centralizer_G"] = r.a_eq_centralizer_g;
    j["G_equals_even_centralizer_A"] = r.g_eq_even_centralizer_a;
    j["double_centralizer_P"] = r.double_centralizer_p;
    j["commutative_gap"] = r.gap;
    j["ok"] = r.ok();
    return j;
}

int cmd_subalgebras(const Params& p, const Options& o) {
    if (int rc = check_separate(p, o)) return rc;
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    j["subalgebras"] = subalgebra_json(p);
    emit(o, j);
    return j["subalgebras"]["ok"].get<bool>() ? 0 : 3;
}

int cmd_dims(const Params& p, const Options& o) {
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    json table = json::array();
    for (int n = 1; n <= std::max(4, p.n); ++n) {
        Params pn = p;
        pn.n = n;
        auto led = dimension_ledger(pn);
        table.push_back(json{{"n", n},
                             {"pbw_dim", led.pbw_dim},
                             {"block_sum", led.block_sum},
                             {"module_dim", led.total_module_dim},
                             {"balanced", led.balanced}});
    }
    j["dimension_identity"] = table;
    bool all = true;
    for (const auto& row : j["dimension_identity"]) all = all && row["balanced"].get<bool>();
    emit(o, j);
    return all ? 0 : 3;
}

int cmd_verify(const Params& p, const Options& o) {
    if (int rc = check_separate(p, o)) return rc;
    Rep rep(p);
    Idempotents idem(rep);
    Seminormal sn(rep, idem);
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(p, o);
    json checks;
    Real worst(0);
    bool ok = true;
    auto record = [&](const std::string& name, const Real& r) {
        checks[name] = r.str(3);
        if (r > worst) worst = r;
        if (r > tol()) ok = false;
    };

    // defining relations as operator identities
    {
        Real r(0);
        auto upd = [&](const Real& v) { if (v > r) r = v; };
        BlockOp I = rep.identity();
        if (p.flavor == Flavor::NonDegenerate) {
            Scalar eps = p.epsilon();
            for (int i = 1; i < p.n; ++i) {
                upd((rep.gen_T(i) * rep.gen_T(i)).residual(rep.gen_T(i) * eps + I));
                upd((rep.gen_T(i) * rep.gen_X(i))
                        .residual(rep.gen_X(i + 1) * rep.gen_T(i) - rep.gen_X(i + 1) * eps -
                                  rep.gen_C(i) * rep.gen_C(i + 1) * rep.gen_X(i) * eps));
                upd((rep.gen_T(i) * rep.gen_C(i)).residual(rep.gen_C(i + 1) * rep.gen_T(i)));
            }
            for (int i = 1; i + 1 < p.n; ++i)
                upd((rep.gen_T(i) * rep.gen_T(i + 1) * rep.gen_T(i))
                        .residual(rep.gen_T(i + 1) * rep.gen_T(i) * rep.gen_T(i + 1)));
            for (int i = 1; i <= p.n; ++i)
                upd((rep.gen_X(i) * rep.gen_C(i)).residual(rep.gen_C(i) * rep.gen_Xinv(i)));
        } else {
            for (int i = 1; i < p.n; ++i) {
                upd((rep.gen_T(i) * rep.gen_T(i)).residual(I));
                upd((rep.gen_T(i) * rep.gen_X(i))
                        .residual(rep.gen_X(i + 1) * rep.gen_T(i) - I -
                                  rep.gen_C(i) * rep.gen_C(i + 1)));
            }
            for (int i = 1; i <= p.n; ++i)
                upd((rep.gen_X(i) * rep.gen_C(i) + rep.gen_C(i) * rep.gen_X(i)).max_abs());
        }
        record("relations", r);
    }
    record("cyclotomic_annihilation", rep.represent(cyclotomic_poly(p)).max_abs());
    {
        PBWFrame frame(rep);
        checks["pbw_rank"] = frame.rank();
        checks["pbw_expected"] = frame.size();
        if (frame.rank() != frame.size()) ok = false;
        // star duality spot check on every idempotent
        Real r(0);
        for (const auto& T : idem.tri0_all()) {
            Real v = frame.star_op(idem.F(T)).residual(idem.F(idem.hat_triple(T)));
            if (v > r) r = v;
        }
        record("star_of_idempotents", r);
    }
    {
        auto all = idem.tri0_all();
        BlockOp sum = rep.zero();
        for (const auto& T : all) sum = sum + idem.F(T);
        record("idempotent_completeness", sum.residual(rep.identity()));
    }
    if (p.flavor == Flavor::Degenerate && p.bullet == Bullet::S && p.m == 0) {
        Real r(0);
        for (int b = 0; b < rep.num_blocks(); ++b) {
            const auto& mod = rep.module(b);
            for (int t = 0; t < static_cast<int>(mod.tabs().size()); ++t) {
                auto z = z2_sets(mod.diag()[static_cast<size_t>(t)], p.n);
                for (uint32_t beta : z.beta) {
                    Real v = idem.kms_E(b, t, beta).residual(idem.F_tab_beta(b, t, beta));
                    if (v > r) r = v;
                }
            }
        }
        record("kms_idempotents", r);
    }
    {
        // seminormal multiplication law sampled per block
        Real r(0);
        std::mt19937 rng(o.seed);
        for (int b = 0; b < rep.num_blocks(); ++b) {
            auto tri0 = idem.tri0(b);
            const auto& mod = rep.module(b);
            int dl = mod.diag()[0].d_lambda;
            int w = mod.tab_index(t_row(mod.shape()));
            std::uniform_int_distribution<size_t> pick(0, tri0.size() - 1);
            for (int iter = 0; iter < 8; ++iter) {
                const Triple &S = tri0[pick(rng)], &T = tri0[pick(rng)], &U = tri0[pick(rng)],
                             &V = tri0[pick(rng)];
                int a = dl ? static_cast<int>(rng() % 2) : 0;
                int bb = dl ? static_cast<int>(rng() % 2) : 0;
                BlockOp prod = sn.f_w(S, T, a, w) * sn.f_w(U, V, bb, w);
                BlockOp expect = rep.zero();
                if (T == U) {
                    Scalar c = sn.c_T_w(T, w);
                    if (dl == 1) {
                        const auto& dd = mod.diag()[static_cast<size_t>(T.tab)];
                        if (popcount_above(T.alpha, dd.last_entry()) % 2) c = -c;
                    }
                    expect = sn.f_w(S, V, (a + bb) % 2, w) * c;
                }
                Real v = prod.residual(expect);
                if (v > r) r = v;
            }
        }
        record("seminormal_multiplication", r);
    }
    j["checks"] = checks;
    j["max_residual"] = worst.str(3);
    j["pass"] = ok;
    emit(o, j);
    return ok ? 0 : 3;
}

int cmd_conjecture(const Params& base, const Options& o) {
    // grid syntax: "q=2,3;Q=3,5"
    std::vector<std::string> qs{o.q}, Qs{o.Q};
    for (const auto& part : split(o.grid, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad grid entry: " + part);
        std::string key = part.substr(0, eq);
        auto vals = split(part.substr(eq + 1), ',');
        if (key == "q")
            qs = vals;
        else if (key == "Q")
            Qs = vals;
        else
            throw std::invalid_argument("grid keys are q and Q");
    }
    json j;
    j["schema"] = "v1";
    j["config"] = config_json(base, o);
    j["grid"] = o.grid;
    json rows = json::array();
    json first;
    bool identical = true;
    for (const auto& qv : qs)
        for (const auto& Qv : Qs) {
            Options oo = o;
            oo.q = qv;
            oo.Q = Qv;
            Params p = make_params(oo);
            std::string why;
            json row;
            row["q"] = qv;
            row["Q"] = Qv;
            if (!separate_check(p, &why)) {
                row["separate"] = false;
                identical = false;
            } else {
                row["separate"] = true;
                row["dims"] = subalgebra_json(p);
                json probe = json{{"G", row["dims"]["dim_G"]},
                                  {"P", row["dims"]["dim_P"]},
                                  {"A", row["dims"]["dim_A"]},
                                  {"CP", row["dims"]["dim_centralizer_P"]}};
                if (first.is_null())
                    first = probe;
                else if (first != probe)
                    identical = false;
            }
            rows.push_back(row);
        }
    j["points"] = rows;
    j["dimensions_identical"] = identical;
    emit(o, j);
    return identical ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclotomic Hecke-Clifford / Sergeev workbench"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("HCWB_PRECISION")) o.precision = static_cast<unsigned>(std::stoul(env));

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--flavor", o.flavor, "nd | deg");
        cmd->add_option("--type", o.type, "0 | s | ss");
        cmd->add_option("--m", o.m, "number of Q parameters");
        cmd->add_option("--q", o.q, "quantum parameter (exact rational/decimal string)");
        cmd->add_option("--Q", o.Q, "comma-separated Q_1..Q_m");
        cmd->add_option("--n", o.n, "number of letters");
        cmd->add_option("--precision", o.precision, "mantissa bits");
        cmd->add_option("--tolerance", o.tolerance, "equality tolerance");
        cmd->add_option("--seed", o.seed, "seed for randomized spot checks");
        cmd->add_option("--output", o.output, "write JSON here instead of stdout");
    };
    std::map<std::string, int> which;
    for (const char* name : {"tableaux", "module", "idempotents", "seminormal", "subalgebras",
                             "verify", "conjecture", "dims"}) {
        CLI::App* cmd = app.add_subcommand(name);
        add_common(cmd);
        if (std::string(name) == "conjecture")
            cmd->add_option("--grid", o.grid, "parameter grid, e.g. q=2,3;Q=3,5");
    }
    CLI11_PARSE(app, argc, argv);
    std::string sub = app.get_subcommands().front()->get_name();

    try {
        init_numeric(o.precision, o.tolerance);
        Params p = make_params(o);
        if (sub == "tableaux") return cmd_tableaux(p, o);
        if (sub == "module") return cmd_module(p, o);
        if (sub == "idempotents") return cmd_idempotents(p, o);
        if (sub == "seminormal") return cmd_seminormal(p, o);
        if (sub == "subalgebras") return cmd_subalgebras(p, o);
        if (sub == "verify") return cmd_verify(p, o);
        if (sub == "conjecture") return cmd_conjecture(p, o);
        if (sub == "dims") return cmd_dims(p, o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
