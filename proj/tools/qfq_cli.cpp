#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfq/qfq.h"

namespace {

qfq_format parse_format(const std::string &f) {
    if (f == "json") return QFQ_FORMAT_JSON;
    if (f == "csv") return QFQ_FORMAT_CSV;
    return QFQ_FORMAT_TEXT;
}

int library_error() {
    std::fprintf(stderr, "error: %s\n", qfq_last_error());
    return 1;
}

int emit(char *owned) {
    std::fputs(owned, stdout);
    qfq_string_free(owned);
    return 0;
}

int render_and_free_series(qfq_series *s, qfq_format fmt) {
    char *out = nullptr;
    qfq_status st = qfq_series_render(s, fmt, &out);
    qfq_series_free(s);
    if (st != QFQ_OK) return library_error();
    return emit(out);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact degree-zero DT series of the generic quantum Fermat "
                 "quintic threefold"};
    app.set_version_flag("--version", std::string("qfq ") + qfq_version());
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int threads = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", threads,
                   "worker threads (0 = all hardware threads)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    auto sub = [](CLI::App *parent, const std::string &name,
                  const std::string &desc) {
        CLI::App *s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App *cmd_macmahon =
        sub(&app, "macmahon", "MacMahon function M(t), truncated");
    int mac_trunc = 5;
    cmd_macmahon->add_option("--trunc", mac_trunc, "truncation degree")
        ->capture_default_str();

    CLI::App *cmd_pp = sub(&app, "pp", "plane partition enumeration");
    cmd_pp->require_subcommand(1);
    CLI::App *cmd_pp_count =
        sub(cmd_pp, "count", "plane partition counts by size");
    int pp_max = 5;
    cmd_pp_count->add_option("--max", pp_max, "largest size")
        ->capture_default_str();
    CLI::App *cmd_pp_colored = sub(
        cmd_pp, "colored", "mu_r(a,b,c)-colored generating function");
    int col_r = 5, col_trunc = 5;
    std::vector<int> col_weights = {1, 1, 3};
    bool col_specialize = false;
    cmd_pp_colored->add_option("--r", col_r, "group order")
        ->capture_default_str();
    cmd_pp_colored
        ->add_option("--weights", col_weights, "action weights a,b,c")
        ->delimiter(',')
        ->expected(3);
    cmd_pp_colored->add_option("--trunc", col_trunc, "truncation degree")
        ->capture_default_str();
    cmd_pp_colored->add_flag("--specialize", col_specialize,
                             "collapse to a single variable");

    CLI::App *cmd_multi = sub(
        &app, "multicolored", "n_Q(d) table of multi-colored plane partitions");
    int multi_trunc = 5;
    bool multi_oracle = false;
    cmd_multi->add_option("--trunc", multi_trunc, "largest |d|")
        ->capture_default_str();
    cmd_multi->add_flag("--oracle", multi_oracle,
                        "use the direct subset-coloring enumeration");

    CLI::App *cmd_dt = sub(&app, "dt", "signed DT generating functions");
    cmd_dt->require_subcommand(1);
    CLI::App *cmd_dt_quiver =
        sub(cmd_dt, "quiver", "Z^{Q,W} for the McKay quiver of mu_5(1,1,3)");
    int dtq_trunc = 5;
    bool dtq_orbit = false;
    cmd_dt_quiver->add_option("--trunc", dtq_trunc, "truncation degree")
        ->capture_default_str();
    cmd_dt_quiver->add_flag("--orbit-view", dtq_orbit,
                            "include the orbit-compressed table");
    CLI::App *cmd_dt_orbifold =
        sub(cmd_dt, "orbifold", "orbifold series for [C^3/mu_r(a,b,c)]");
    int orb_r = 5, orb_trunc = 5;
    std::vector<int> orb_weights = {1, 1, 3};
    cmd_dt_orbifold->add_option("--r", orb_r, "group order")
        ->capture_default_str();
    cmd_dt_orbifold
        ->add_option("--weights", orb_weights, "action weights a,b,c")
        ->delimiter(',')
        ->expected(3);
    cmd_dt_orbifold->add_option("--trunc", orb_trunc, "truncation degree")
        ->capture_default_str();
    CLI::App *cmd_dt_quintic =
        sub(cmd_dt, "quintic", "Z^A of the quantum Fermat quintic");
    int quintic_trunc = 5;
    cmd_dt_quintic->add_option("--trunc", quintic_trunc, "truncation degree")
        ->capture_default_str();

    CLI::App *cmd_euler =
        sub(&app, "euler", "stratum Euler characteristics of the hyperplane");
    int ambient = 4;
    cmd_euler->add_option("--ambient", ambient, "projective dimension n")
        ->capture_default_str();

    sub(&app, "ext-quiver",
        "derivation chain: global matrix -> local matrix -> quiver");

    CLI::App *cmd_check = sub(&app, "check", "run every cross-validation");
    int check_trunc = 5, oracle_ceiling = 5;
    cmd_check->add_option("--trunc", check_trunc, "truncation degree")
        ->check(CLI::Range(0, 10))
        ->capture_default_str();
    cmd_check
        ->add_option("--oracle-ceiling", oracle_ceiling,
                     "largest truncation for oracle-backed checks")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    const qfq_format fmt = parse_format(format);
    qfq_status st = QFQ_OK;

    if (app.got_subcommand(cmd_macmahon)) {
        qfq_series *s = nullptr;
        if ((st = qfq_macmahon(mac_trunc, &s)) != QFQ_OK)
            return library_error();
        return render_and_free_series(s, fmt);
    }
    if (cmd_pp->parsed() && cmd_pp->got_subcommand(cmd_pp_count)) {
        char *out = nullptr;
        if ((st = qfq_pp_counts_render(pp_max, threads, fmt, &out)) != QFQ_OK)
            return library_error();
        return emit(out);
    }
    if (cmd_pp->parsed() && cmd_pp->got_subcommand(cmd_pp_colored)) {
        qfq_series *s = nullptr;
        st = qfq_colored_gf(col_r, col_weights[0], col_weights[1],
                            col_weights[2], col_trunc, threads, &s);
        if (st != QFQ_OK) return library_error();
        if (col_specialize) {
            qfq_series *u = nullptr;
            st = qfq_series_specialize(s, &u);
            qfq_series_free(s);
            if (st != QFQ_OK) return library_error();
            s = u;
        }
        return render_and_free_series(s, fmt);
    }
    if (app.got_subcommand(cmd_multi)) {
        qfq_count_table *t = nullptr;
        st = qfq_multicolor_table(multi_trunc, multi_oracle ? 1 : 0, threads,
                                  &t);
        if (st != QFQ_OK) return library_error();
        char *out = nullptr;
        st = qfq_count_table_render(t, fmt, &out);
        qfq_count_table_free(t);
        if (st != QFQ_OK) return library_error();
        return emit(out);
    }
    if (cmd_dt->parsed() && cmd_dt->got_subcommand(cmd_dt_quiver)) {
        qfq_report *r = nullptr;
        if ((st = qfq_dt_quiver_report(dtq_trunc, threads, &r)) != QFQ_OK)
            return library_error();
        char *out = nullptr;
        st = qfq_report_render(r, dtq_orbit ? 1 : 0, fmt, &out);
        qfq_report_free(r);
        if (st != QFQ_OK) return library_error();
        return emit(out);
    }
    if (cmd_dt->parsed() && cmd_dt->got_subcommand(cmd_dt_orbifold)) {
        qfq_series *s = nullptr;
        st = qfq_dt_orbifold_series(orb_r, orb_weights[0], orb_weights[1],
                                    orb_weights[2], orb_trunc, threads, &s);
        if (st != QFQ_OK) return library_error();
        return render_and_free_series(s, fmt);
    }
    if (cmd_dt->parsed() && cmd_dt->got_subcommand(cmd_dt_quintic)) {
        qfq_series *s = nullptr;
        if ((st = qfq_quintic_series(quintic_trunc, threads, &s)) != QFQ_OK)
            return library_error();
        return render_and_free_series(s, fmt);
    }
    if (app.got_subcommand(cmd_euler)) {
        char *out = nullptr;
        if ((st = qfq_euler_render(ambient, fmt, &out)) != QFQ_OK)
            return library_error();
        return emit(out);
    }
    if (app.got_subcommand("ext-quiver")) {
        char *out = nullptr;
        if ((st = qfq_ext_chain_render(fmt, &out)) != QFQ_OK)
            return library_error();
        return emit(out);
    }
    if (app.got_subcommand(cmd_check)) {
        qfq_check_report *r = nullptr;
        st = qfq_run_check(check_trunc, oracle_ceiling, threads, &r);
        if (st != QFQ_OK) return library_error();
        char *out = nullptr;
        st = qfq_check_render(r, fmt, &out);
        if (st != QFQ_OK) {
            qfq_check_free(r);
            return library_error();
        }
        emit(out);
        int ok = qfq_check_ok(r);
        qfq_check_free(r);
        return ok ? 0 : 1;
    }
    return 2;  // unreachable: require_subcommand guarantees a match
}
