#pragma once

#include <string>

#include "assembly.hpp"
#include "check.hpp"
#include "qfq/qfq.h"

namespace qfq {

// All renderers are byte-deterministic for a fixed input and format and end
// with a newline.  JSON follows the documented serialization contracts; CSV
// flattens term tables under a header row; text uses the orbit-compressed
// t^(a0,...,a{r-1}) notation whenever the series is cyclically invariant.

std::string render_series(const Series &s, qfq_format fmt);
std::string render_pp_counts(const std::vector<long long> &counts,
                             qfq_format fmt);
std::string render_quiver(const Quiver &q, qfq_format fmt);
std::string render_count_table(const CountTable &t, qfq_format fmt);
std::string render_report(const SignedSeriesReport &r, bool orbit_view,
                          qfq_format fmt);
std::string render_euler(const EulerStrata &e, qfq_format fmt);
std::string render_check(const CheckReport &r, qfq_format fmt);
std::string render_ext_chain(const ExtChain &c, qfq_format fmt);

}  // namespace qfq
