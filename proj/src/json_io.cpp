#include "json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace qfq {

namespace {

using nlohmann::ordered_json;

std::string finish(const ordered_json &j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string tuple_str(const Exponent &e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

// "1 + 5t + 5t^2 - 210t^4" style; `monomial` renders the exponent, with the
// coefficient magnitude suppressed when it is 1 against a nonempty monomial.
// `sep` sits between a kept magnitude and the monomial ("" or " ").
template <class Monomial>
std::string polynomial_text(const std::map<Exponent, mpz_class> &terms,
                            Monomial &&monomial, const char *sep = "") {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms) {
        mpz_class a = abs(c);
        std::string mono = monomial(e);
        std::string body;
        if (mono.empty())
            body = a.get_str();
        else if (a == 1)
            body = mono;
        else
            body = a.get_str() + sep + mono;
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string univariate_monomial(const Exponent &e) {
    if (e[0] == 0) return "";
    if (e[0] == 1) return "t";
    return "t^" + std::to_string(e[0]);
}

std::string plain_monomial(const Exponent &e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "t" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string series_text(const Series &s) {
    if (s.num_vars() == 1)
        return polynomial_text(s.terms(), univariate_monomial);
    try {
        std::map<Exponent, mpz_class> orbit_terms;
        for (const OrbitTerm &o : orbit_compress(s))
            orbit_terms.emplace(o.rep, o.coeff);
        return polynomial_text(orbit_terms, [](const Exponent &e) {
            return total_degree(e) == 0 ? std::string()
                                        : "t^" + tuple_str(e);
        });
    } catch (const SymmetryViolation &) {
        return polynomial_text(s.terms(), plain_monomial, " ");
    }
}

ordered_json series_json(const Series &s) {
    ordered_json terms = ordered_json::array();
    for (const auto &[e, c] : s.terms())
        terms.push_back({{"exponent", e}, {"coefficient", c.get_str()}});
    return {{"variables", s.num_vars()},
            {"truncation", s.trunc()},
            {"terms", terms}};
}

std::string series_csv(const Series &s) {
    std::string out;
    if (s.num_vars() == 1) {
        out = "degree,coefficient\n";
        for (const auto &[e, c] : s.terms())
            out += std::to_string(e[0]) + "," + c.get_str() + "\n";
        return out;
    }
    for (int i = 0; i < s.num_vars(); ++i)
        out += "e" + std::to_string(i) + ",";
    out += "coefficient\n";
    for (const auto &[e, c] : s.terms()) {
        for (int v : e) out += std::to_string(v) + ",";
        out += c.get_str() + "\n";
    }
    return out;
}

ordered_json quiver_json(const Quiver &q) {
    ordered_json arrows = ordered_json::array();
    for (const Arrow &a : q.arrows)
        arrows.push_back({a.source, a.target, std::string(1, a.label)});
    return {{"vertices", q.num_vertices}, {"arrows", arrows}};
}

std::string quiver_text(const Quiver &q) {
    std::string out = "vertices: " + std::to_string(q.num_vertices) + "\n";
    for (const Arrow &a : q.arrows)
        out += std::string(1, a.label) + ": " + std::to_string(a.source) +
               " -> " + std::to_string(a.target) + "\n";
    return out;
}

ordered_json matrix_json(const QuantumMatrix &m) {
    return {{"modulus", m.r}, {"exponents", m.exponents}};
}

std::string matrix_text(const QuantumMatrix &m) {
    std::string out;
    for (const auto &row : m.exponents) {
        out += " ";
        for (int v : row) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

ordered_json orbit_json(const std::vector<OrbitTerm> &orbits) {
    ordered_json arr = ordered_json::array();
    for (const OrbitTerm &o : orbits)
        arr.push_back({{"rep", o.rep},
                       {"coefficient", o.coeff.get_str()},
                       {"orbit_size", o.orbit_size}});
    return arr;
}

}  // namespace

std::string render_series(const Series &s, qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON:
            return finish(series_json(s));
        case QFQ_FORMAT_CSV:
            return series_csv(s);
        default:
            return series_text(s) + "\n";
    }
}

std::string render_pp_counts(const std::vector<long long> &counts,
                             qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON:
            return finish(
                {{"max_size", counts.size() - 1}, {"counts", counts}});
        case QFQ_FORMAT_CSV: {
            std::string out = "size,count\n";
            for (size_t n = 0; n < counts.size(); ++n)
                out += std::to_string(n) + "," + std::to_string(counts[n]) +
                       "\n";
            return out;
        }
        default: {
            std::string out;
            for (size_t n = 0; n < counts.size(); ++n)
                out += std::to_string(n) + ": " + std::to_string(counts[n]) +
                       "\n";
            return out;
        }
    }
}

std::string render_quiver(const Quiver &q, qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON:
            return finish(quiver_json(q));
        case QFQ_FORMAT_CSV: {
            std::string out = "source,target,label\n";
            for (const Arrow &a : q.arrows)
                out += std::to_string(a.source) + "," +
                       std::to_string(a.target) + "," + a.label + "\n";
            return out;
        }
        default:
            return quiver_text(q);
    }
}

std::string render_count_table(const CountTable &t, qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON: {
            ordered_json arr = ordered_json::array();
            for (const auto &[d, c] : t.counts)
                arr.push_back({{"dimension", d}, {"count", c}});
            return finish(arr);
        }
        case QFQ_FORMAT_CSV: {
            std::string out;
            int vars = t.counts.empty()
                           ? 5
                           : static_cast<int>(t.counts.begin()->first.size());
            for (int i = 0; i < vars; ++i)
                out += "d" + std::to_string(i) + ",";
            out += "count\n";
            for (const auto &[d, c] : t.counts) {
                for (int v : d) out += std::to_string(v) + ",";
                out += std::to_string(c) + "\n";
            }
            return out;
        }
        default: {
            std::string out;
            for (const auto &[d, c] : t.counts)
                out += tuple_str(d) + ": " + std::to_string(c) + "\n";
            return out;
        }
    }
}

std::string render_report(const SignedSeriesReport &r, bool orbit_view,
                          qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON: {
            ordered_json j = {{"multivariate", series_json(r.multivariate)},
                              {"univariate", series_json(r.univariate)},
                              {"orbits", orbit_json(r.orbits)},
                              {"anomalies", r.anomalies}};
            return finish(j);
        }
        case QFQ_FORMAT_CSV: {
            if (!orbit_view) return series_csv(r.univariate);
            std::string out;
            int vars = r.multivariate.num_vars();
            for (int i = 0; i < vars; ++i)
                out += "rep" + std::to_string(i) + ",";
            out += "coefficient,orbit_size\n";
            for (const OrbitTerm &o : r.orbits) {
                for (int v : o.rep) out += std::to_string(v) + ",";
                out += o.coeff.get_str() + "," +
                       std::to_string(o.orbit_size) + "\n";
            }
            return out;
        }
        default: {
            std::string out = "univariate: " + series_text(r.univariate) + "\n";
            if (orbit_view)
                out += "multivariate: " + series_text(r.multivariate) + "\n";
            for (const std::string &a : r.anomalies)
                out += "anomaly: " + a + "\n";
            return out;
        }
    }
}

std::string render_euler(const EulerStrata &e, qfq_format fmt) {
    long long total = 0;
    for (long long v : e.chis) total += v;
    switch (fmt) {
        case QFQ_FORMAT_JSON:
            return finish({{"ambient", e.chis.size()},
                           {"chis", e.chis},
                           {"weighted", e.weighted},
                           {"total", total}});
        case QFQ_FORMAT_CSV: {
            std::string out = "stratum,value\n";
            for (size_t i = 0; i < e.chis.size(); ++i)
                out += "X_(" + std::to_string(i) + ")," +
                       std::to_string(e.chis[i]) + "\n";
            out += "weighted," + std::to_string(e.weighted) + "\n";
            out += "total," + std::to_string(total) + "\n";
            return out;
        }
        default: {
            std::string out;
            for (size_t i = 0; i < e.chis.size(); ++i)
                out += "chi(X_(" + std::to_string(i) + ")) = " +
                       std::to_string(e.chis[i]) + "\n";
            out += "weighted = " + std::to_string(e.weighted) + "\n";
            out += "total = " + std::to_string(total) + "\n";
            return out;
        }
    }
}

std::string render_check(const CheckReport &r, qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON: {
            ordered_json entries = ordered_json::array();
            for (const CheckEntry &e : r.entries)
                entries.push_back({{"name", e.name},
                                   {"status", e.status},
                                   {"detail", e.detail}});
            return finish({{"truncation", r.trunc},
                           {"oracle_ceiling", r.oracle_ceiling},
                           {"ok", r.ok()},
                           {"entries", entries}});
        }
        case QFQ_FORMAT_CSV: {
            std::string out = "name,status,detail\n";
            for (const CheckEntry &e : r.entries)
                out += e.name + "," + e.status + "," + csv_escape(e.detail) +
                       "\n";
            return out;
        }
        default: {
            std::string out;
            int fails = 0, anomalies = 0, skips = 0;
            for (const CheckEntry &e : r.entries) {
                out += e.name + ": " + e.status + " (" + e.detail + ")\n";
                if (e.status == "fail") ++fails;
                if (e.status == "paper_anomaly") ++anomalies;
                if (e.status == "skipped") ++skips;
            }
            out += "result: " + std::string(r.ok() ? "ok" : "FAIL") + " (" +
                   std::to_string(r.entries.size()) + " checks, " +
                   std::to_string(fails) + " failed, " +
                   std::to_string(anomalies) + " anomalies, " +
                   std::to_string(skips) + " skipped)\n";
            return out;
        }
    }
}

std::string render_ext_chain(const ExtChain &c, qfq_format fmt) {
    switch (fmt) {
        case QFQ_FORMAT_JSON: {
            ordered_json iso;
            if (c.iso) {
                iso = {{"vertex_map", c.iso->vertex_map},
                       {"label_map",
                        {{"x", std::string(1, c.iso->label_map[0])},
                         {"y", std::string(1, c.iso->label_map[1])},
                         {"z", std::string(1, c.iso->label_map[2])}}}};
            } else {
                iso = nullptr;
            }
            return finish({{"global", matrix_json(c.global)},
                           {"local", matrix_json(c.local)},
                           {"ext_quiver", quiver_json(c.ext)},
                           {"mckay", quiver_json(c.mckay)},
                           {"isomorphism", iso}});
        }
        case QFQ_FORMAT_CSV: {
            std::string out = "source,target,label\n";
            for (const Arrow &a : c.ext.arrows)
                out += std::to_string(a.source) + "," +
                       std::to_string(a.target) + "," + a.label + "\n";
            return out;
        }
        default: {
            std::string out = "global exponent matrix (mod " +
                              std::to_string(c.global.r) + "):\n" +
                              matrix_text(c.global);
            out += "local exponent matrix at base 0 (mod " +
                   std::to_string(c.local.r) + "):\n" + matrix_text(c.local);
            out += "ext quiver:\n" + quiver_text(c.ext);
            out += "mckay quiver of mu_5(1,1,3):\n" + quiver_text(c.mckay);
            if (c.iso) {
                out += "isomorphism: vertex map [";
                for (size_t i = 0; i < c.iso->vertex_map.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(c.iso->vertex_map[i]);
                }
                out += "], labels x->";
                out += c.iso->label_map[0];
                out += " y->";
                out += c.iso->label_map[1];
                out += " z->";
                out += c.iso->label_map[2];
                out += "\n";
            } else {
                out += "isomorphism: none found\n";
            }
            return out;
        }
    }
}

}  // namespace qfq
