#include "qfq/qfq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "assembly.hpp"
#include "check.hpp"
#include "json_io.hpp"

struct qfq_series {
    qfq::Series impl;
};
struct qfq_quiver {
    qfq::Quiver impl;
};
struct qfq_count_table {
    qfq::CountTable impl;
};
struct qfq_report {
    qfq::SignedSeriesReport impl;
};
struct qfq_check_report {
    qfq::CheckReport impl;
};

namespace {

thread_local std::string g_last_error;

qfq_status fail(qfq_status code, const char *msg) {
    g_last_error = msg;
    return code;
}

qfq_status from_exception() {
    try {
        throw;
    } catch (const qfq::DimensionMismatch &e) {
        return fail(QFQ_ERR_DIMENSION_MISMATCH, e.what());
    } catch (const qfq::NotInvertible &e) {
        return fail(QFQ_ERR_NOT_INVERTIBLE, e.what());
    } catch (const qfq::SymmetryViolation &e) {
        return fail(QFQ_ERR_NOT_CYCLIC_INVARIANT, e.what());
    } catch (const qfq::UnsupportedQuiver &e) {
        return fail(QFQ_ERR_UNSUPPORTED_QUIVER, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(QFQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(QFQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QFQ_ERR_INTERNAL, "unknown error");
    }
}

template <class F>
qfq_status guard(F &&f) {
    try {
        qfq_status s = f();
        if (s == QFQ_OK) g_last_error.clear();
        return s;
    } catch (...) {
        return from_exception();
    }
}

qfq_status require(bool cond, const char *msg) {
    if (cond) return QFQ_OK;
    throw std::invalid_argument(msg);
}

char *dup_string(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

qfq_format checked_format(qfq_format fmt) {
    if (fmt != QFQ_FORMAT_TEXT && fmt != QFQ_FORMAT_JSON &&
        fmt != QFQ_FORMAT_CSV)
        throw std::invalid_argument("unknown output format");
    return fmt;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

qfq::Exponent to_exponent(const int *data, int len) {
    require(data != nullptr, "null exponent pointer");
    require(len >= 0, "negative exponent length");
    return qfq::Exponent(data, data + len);
}

}  // namespace

extern "C" {

const char *qfq_version(void) { return "1.0.0"; }

const char *qfq_last_error(void) { return g_last_error.c_str(); }

void qfq_string_free(char *s) { std::free(s); }

/* ---- series ------------------------------------------------------------ */

qfq_status qfq_series_one(int num_vars, int trunc, qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{qfq::Series::one(num_vars, trunc)};
        return QFQ_OK;
    });
}

qfq_status qfq_series_clone(const qfq_series *s, qfq_series **out) {
    return guard([&] {
        require(s != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{s->impl};
        return QFQ_OK;
    });
}

void qfq_series_free(qfq_series *s) { delete s; }

int qfq_series_num_vars(const qfq_series *s) {
    return s ? s->impl.num_vars() : 0;
}

int qfq_series_trunc(const qfq_series *s) { return s ? s->impl.trunc() : 0; }

long qfq_series_num_terms(const qfq_series *s) {
    return s ? static_cast<long>(s->impl.terms().size()) : 0;
}

qfq_status qfq_series_term(const qfq_series *s, long index, int *exponent,
                           char **coeff) {
    return guard([&] {
        require(s != nullptr && exponent != nullptr && coeff != nullptr,
                "null pointer");
        require(index >= 0 &&
                    index < static_cast<long>(s->impl.terms().size()),
                "term index out of range");
        auto it = std::next(s->impl.terms().begin(), index);
        std::copy(it->first.begin(), it->first.end(), exponent);
        *coeff = dup_string(it->second.get_str());
        return QFQ_OK;
    });
}

qfq_status qfq_series_coeff(const qfq_series *s, const int *exponent, int len,
                            char **coeff) {
    return guard([&] {
        require(s != nullptr && coeff != nullptr, "null pointer");
        qfq::Exponent e = to_exponent(exponent, len);
        require(len == s->impl.num_vars(), "exponent length mismatch");
        *coeff = dup_string(s->impl.coeff(e).get_str());
        return QFQ_OK;
    });
}

qfq_status qfq_series_equal(const qfq_series *a, const qfq_series *b,
                            int *out) {
    return guard([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null pointer");
        *out = a->impl == b->impl ? 1 : 0;
        return QFQ_OK;
    });
}

qfq_status qfq_series_mul(const qfq_series *a, const qfq_series *b,
                          qfq_series **out) {
    return guard([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{a->impl.mul(b->impl)};
        return QFQ_OK;
    });
}

qfq_status qfq_series_int_pow(const qfq_series *a, long e, qfq_series **out) {
    return guard([&] {
        require(a != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{a->impl.int_pow(e)};
        return QFQ_OK;
    });
}

qfq_status qfq_series_specialize(const qfq_series *a, qfq_series **out) {
    return guard([&] {
        require(a != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{a->impl.specialize()};
        return QFQ_OK;
    });
}

qfq_status qfq_series_substitute_power(const qfq_series *a, int sign, int m,
                                       int new_trunc, qfq_series **out) {
    return guard([&] {
        require(a != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{a->impl.substitute_power(sign, m, new_trunc)};
        return QFQ_OK;
    });
}

qfq_status qfq_series_cyclic_shift(const qfq_series *a, int s,
                                   qfq_series **out) {
    return guard([&] {
        require(a != nullptr && out != nullptr, "null pointer");
        *out = new qfq_series{a->impl.cyclic_shift(s)};
        return QFQ_OK;
    });
}

qfq_status qfq_series_render(const qfq_series *a, qfq_format fmt, char **out) {
    return guard([&] {
        require(a != nullptr && out != nullptr, "null pointer");
        *out = dup_string(qfq::render_series(a->impl, checked_format(fmt)));
        return QFQ_OK;
    });
}

qfq_status qfq_macmahon(int trunc, qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{qfq::macmahon(trunc)};
        return QFQ_OK;
    });
}

/* ---- plane partitions -------------------------------------------------- */

qfq_status qfq_pp_counts(int max_size, int threads, long long *counts) {
    return guard([&] {
        require(counts != nullptr, "null output pointer");
        std::vector<long long> v =
            qfq::pp_counts_by_size(max_size, resolve_threads(threads));
        std::copy(v.begin(), v.end(), counts);
        return QFQ_OK;
    });
}

qfq_status qfq_pp_counts_render(int max_size, int threads, qfq_format fmt,
                                char **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        std::vector<long long> v =
            qfq::pp_counts_by_size(max_size, resolve_threads(threads));
        *out = dup_string(qfq::render_pp_counts(v, checked_format(fmt)));
        return QFQ_OK;
    });
}

qfq_status qfq_colored_gf(int r, int a, int b, int c, int trunc, int threads,
                          qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{qfq::colored_gf(qfq::ColorWeights{r, a, b, c},
                                              trunc, resolve_threads(threads))};
        return QFQ_OK;
    });
}

/* ---- quivers ------------------------------------------------------------ */

qfq_status qfq_mckay_quiver(int r, int a, int b, int c, qfq_quiver **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_quiver{qfq::mckay_quiver(qfq::ColorWeights{r, a, b, c})};
        return QFQ_OK;
    });
}

void qfq_quiver_free(qfq_quiver *q) { delete q; }

int qfq_quiver_num_vertices(const qfq_quiver *q) {
    return q ? q->impl.num_vertices : 0;
}

long qfq_quiver_num_arrows(const qfq_quiver *q) {
    return q ? static_cast<long>(q->impl.arrows.size()) : 0;
}

qfq_status qfq_quiver_arrow(const qfq_quiver *q, long index, int *source,
                            int *target, char *label) {
    return guard([&] {
        require(q != nullptr && source != nullptr && target != nullptr &&
                    label != nullptr,
                "null pointer");
        require(index >= 0 && index < static_cast<long>(q->impl.arrows.size()),
                "arrow index out of range");
        const qfq::Arrow &a = q->impl.arrows[index];
        *source = a.source;
        *target = a.target;
        *label = a.label;
        return QFQ_OK;
    });
}

qfq_status qfq_quiver_render(const qfq_quiver *q, qfq_format fmt, char **out) {
    return guard([&] {
        require(q != nullptr && out != nullptr, "null pointer");
        *out = dup_string(qfq::render_quiver(q->impl, checked_format(fmt)));
        return QFQ_OK;
    });
}

qfq_status qfq_bilinear_form(const qfq_quiver *q, const int *d, const int *d2,
                             int len, long long *out) {
    return guard([&] {
        require(q != nullptr && out != nullptr, "null pointer");
        *out = qfq::bilinear_form(q->impl, to_exponent(d, len),
                                  to_exponent(d2, len));
        return QFQ_OK;
    });
}

qfq_status qfq_euler_pairing(const qfq_quiver *q, const int *d, const int *d2,
                             int len, long long *out) {
    return guard([&] {
        require(q != nullptr && out != nullptr, "null pointer");
        *out = qfq::euler_pairing(q->impl, to_exponent(d, len),
                                  to_exponent(d2, len));
        return QFQ_OK;
    });
}

qfq_status qfq_framed_moduli_dim(const qfq_quiver *q, const int *d, int len,
                                 long long *out) {
    return guard([&] {
        require(q != nullptr && out != nullptr, "null pointer");
        *out = qfq::framed_moduli_dim(q->impl, to_exponent(d, len));
        return QFQ_OK;
    });
}

qfq_status qfq_ext_chain_render(qfq_format fmt, char **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = dup_string(
            qfq::render_ext_chain(qfq::ext_chain(), checked_format(fmt)));
        return QFQ_OK;
    });
}

/* ---- multi-colored counting -------------------------------------------- */

qfq_status qfq_multicolor_table(int trunc, int use_oracle, int threads,
                                qfq_count_table **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        int th = resolve_threads(threads);
        qfq::CountTable t;
        if (use_oracle) {
            qfq::Quiver q = qfq::mckay_quiver(qfq::ColorWeights{5, 1, 1, 3});
            t = qfq::multicolor_oracle(q, trunc, th);
        } else {
            t = qfq::table_from_series(qfq::multicolor_product(trunc, th));
        }
        *out = new qfq_count_table{std::move(t)};
        return QFQ_OK;
    });
}

void qfq_count_table_free(qfq_count_table *t) { delete t; }

long qfq_count_table_size(const qfq_count_table *t) {
    return t ? static_cast<long>(t->impl.counts.size()) : 0;
}

qfq_status qfq_count_table_entry(const qfq_count_table *t, long index,
                                 int *dimension, long long *count) {
    return guard([&] {
        require(t != nullptr && dimension != nullptr && count != nullptr,
                "null pointer");
        require(index >= 0 &&
                    index < static_cast<long>(t->impl.counts.size()),
                "table index out of range");
        auto it = std::next(t->impl.counts.begin(), index);
        std::copy(it->first.begin(), it->first.end(), dimension);
        *count = it->second;
        return QFQ_OK;
    });
}

qfq_status qfq_count_table_lookup(const qfq_count_table *t,
                                  const int *dimension, int len,
                                  long long *count) {
    return guard([&] {
        require(t != nullptr && count != nullptr, "null pointer");
        qfq::DimVector d = to_exponent(dimension, len);
        if (!t->impl.counts.empty() &&
            d.size() != t->impl.counts.begin()->first.size())
            throw qfq::DimensionMismatch("dimension vector length mismatch");
        *count = t->impl.lookup(d);
        return QFQ_OK;
    });
}

qfq_status qfq_count_table_render(const qfq_count_table *t, qfq_format fmt,
                                  char **out) {
    return guard([&] {
        require(t != nullptr && out != nullptr, "null pointer");
        *out =
            dup_string(qfq::render_count_table(t->impl, checked_format(fmt)));
        return QFQ_OK;
    });
}

/* ---- DT series assembly ------------------------------------------------- */

qfq_status qfq_dt_quiver_report(int trunc, int threads, qfq_report **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_report{
            qfq::dt_quiver_series(trunc, resolve_threads(threads))};
        return QFQ_OK;
    });
}

void qfq_report_free(qfq_report *r) { delete r; }

qfq_status qfq_report_series(const qfq_report *r, int which,
                             qfq_series **out) {
    return guard([&] {
        require(r != nullptr && out != nullptr, "null pointer");
        require(which == QFQ_REPORT_MULTIVARIATE ||
                    which == QFQ_REPORT_UNIVARIATE,
                "unknown report series selector");
        *out = new qfq_series{which == QFQ_REPORT_MULTIVARIATE
                                  ? r->impl.multivariate
                                  : r->impl.univariate};
        return QFQ_OK;
    });
}

long qfq_report_num_anomalies(const qfq_report *r) {
    return r ? static_cast<long>(r->impl.anomalies.size()) : 0;
}

const char *qfq_report_anomaly(const qfq_report *r, long index) {
    if (!r || index < 0 ||
        index >= static_cast<long>(r->impl.anomalies.size()))
        return nullptr;
    return r->impl.anomalies[index].c_str();
}

qfq_status qfq_report_render(const qfq_report *r, int orbit_view,
                             qfq_format fmt, char **out) {
    return guard([&] {
        require(r != nullptr && out != nullptr, "null pointer");
        *out = dup_string(qfq::render_report(r->impl, orbit_view != 0,
                                             checked_format(fmt)));
        return QFQ_OK;
    });
}

qfq_status qfq_dt_orbifold_series(int r, int a, int b, int c, int trunc,
                                  int threads, qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{
            qfq::dt_orbifold_series(qfq::ColorWeights{r, a, b, c}, trunc,
                                    resolve_threads(threads))};
        return QFQ_OK;
    });
}

qfq_status qfq_quot_factor(int trunc, qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{qfq::quot_factor(trunc)};
        return QFQ_OK;
    });
}

qfq_status qfq_quintic_series(int trunc, int threads, qfq_series **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_series{
            qfq::quintic_series(trunc, resolve_threads(threads))};
        return QFQ_OK;
    });
}

qfq_status qfq_euler_strata(int ambient, long long *chis, long long *weighted) {
    return guard([&] {
        require(chis != nullptr && weighted != nullptr, "null pointer");
        qfq::EulerStrata e = qfq::stratum_euler_chars(ambient);
        std::copy(e.chis.begin(), e.chis.end(), chis);
        *weighted = e.weighted;
        return QFQ_OK;
    });
}

qfq_status qfq_euler_render(int ambient, qfq_format fmt, char **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = dup_string(qfq::render_euler(qfq::stratum_euler_chars(ambient),
                                            checked_format(fmt)));
        return QFQ_OK;
    });
}

/* ---- cross-validation --------------------------------------------------- */

qfq_status qfq_run_check(int trunc, int oracle_ceiling, int threads,
                         qfq_check_report **out) {
    return guard([&] {
        require(out != nullptr, "null output pointer");
        *out = new qfq_check_report{
            qfq::run_check(trunc, oracle_ceiling, resolve_threads(threads))};
        return QFQ_OK;
    });
}

void qfq_check_free(qfq_check_report *r) { delete r; }

long qfq_check_num_entries(const qfq_check_report *r) {
    return r ? static_cast<long>(r->impl.entries.size()) : 0;
}

qfq_status qfq_check_entry(const qfq_check_report *r, long index,
                           const char **name, const char **status,
                           const char **detail) {
    return guard([&] {
        require(r != nullptr && name != nullptr && status != nullptr &&
                    detail != nullptr,
                "null pointer");
        require(index >= 0 &&
                    index < static_cast<long>(r->impl.entries.size()),
                "check index out of range");
        const qfq::CheckEntry &e = r->impl.entries[index];
        *name = e.name.c_str();
        *status = e.status.c_str();
        *detail = e.detail.c_str();
        return QFQ_OK;
    });
}

int qfq_check_ok(const qfq_check_report *r) {
    return r && r->impl.ok() ? 1 : 0;
}

qfq_status qfq_check_render(const qfq_check_report *r, qfq_format fmt,
                            char **out) {
    return guard([&] {
        require(r != nullptr && out != nullptr, "null pointer");
        *out = dup_string(qfq::render_check(r->impl, checked_format(fmt)));
        return QFQ_OK;
    });
}

} /* extern "C" */
