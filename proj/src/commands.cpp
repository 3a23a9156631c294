#include "twisted/commands.hpp"

#include "twisted/conf_betti.hpp"
#include "twisted/conf_counts.hpp"
#include "twisted/tori.hpp"
#include "twisted/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace twisted {

using nlohmann::json;

RepArg rep_from_args(const std::optional<std::string>& rep, const std::optional<std::string>& lambda) {
    if (rep && lambda) throw std::invalid_argument("give --rep or --lambda, not both");
    if (lambda) {
        const LambdaSpec l = LambdaSpec::parse(*lambda);
        return {"binom(X,(" + l.str() + "))", CharPoly::basis(l)};
    }
    if (!rep) throw std::invalid_argument("--rep or --lambda is required");
    return {*rep, parse_rep(*rep)};
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (s.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    }
    return out;
}

std::vector<BigInt> parse_q_list(std::string_view text) {
    std::vector<BigInt> out;
    for (const auto& item : split_top_level(text)) {
        BigInt q;
        if (q.set_str(item, 10) != 0) throw std::invalid_argument("bad q value '" + item + "'");
        if (!is_prime_power(q)) throw std::invalid_argument("q = " + item + " is not a prime power");
        out.push_back(q);
    }
    return out;
}

namespace {

void check_grid(const BettiOptions& o) {
    if (o.max_i < 0 || o.max_n < 0 || o.min_n < 0) throw std::invalid_argument("grid bounds must be nonnegative");
    if (o.max_n > kMaxGridN || o.max_i > kMaxGridI)
        throw std::invalid_argument("grid bound exceeded: --max-n <= " + std::to_string(kMaxGridN) +
                                    ", --max-i <= " + std::to_string(kMaxGridI));
    if (o.min_n > o.max_n) throw std::invalid_argument("--min-n exceeds --max-n");
}

json q_list_json(const std::vector<BigInt>& qs) {
    json out = json::array();
    for (const auto& q : qs) out.push_back(q.get_str());
    return out;
}

json even_qs(const std::vector<BigInt>& qs) {
    json out = json::array();
    for (const auto& q : qs)
        if (q % 2 == 0) out.push_back(q.get_str());
    return out;
}

constexpr const char* kEvenNote = "even q lies outside the odd-q hypothesis of the point-count formula; reported, not asserted";

}  // namespace

OutputDocument cmd_conf_betti(const BettiOptions& o) {
    check_grid(o);
    const BettiTable t = betti_table_conf(o.rep.poly, o.max_i, o.max_n);
    std::optional<StableSummary> stable;
    if (o.stable)
        stable = StableSummary{stable_betti_conf(o.rep.poly, o.max_i), recurrence_conf(o.rep.poly),
                               stable_phi(o.rep.poly).scale_variable(Rational(-1))};
    return betti_document(t, o.rep.label, o.min_n, stable);
}

OutputDocument cmd_tori_betti(const BettiOptions& o) {
    check_grid(o);
    const BettiTable t = betti_table_tori(o.rep.poly, o.max_i, o.max_n);
    std::optional<StableSummary> stable;
    if (o.stable)
        stable = StableSummary{stable_betti_tori(o.rep.poly, o.max_i), recurrence_tori(o.rep.poly),
                               stable_psi(o.rep.poly)};
    return betti_document(t, o.rep.label, o.min_n, stable);
}

OutputDocument cmd_count(const CountOptions& o) {
    if (o.max_n < 0 || o.max_n > 500) throw std::invalid_argument("--max-n must lie in [0, 500]");
    std::vector<PointCountData> varieties;
    if (o.qs.empty()) varieties.push_back(resolve_variety(o.variety, std::nullopt));
    for (const auto& q : o.qs) varieties.push_back(resolve_variety(o.variety, q));

    OutputDocument doc;
    doc.meta["variety"] = o.variety;
    doc.meta["dim"] = varieties.front().dim;
    doc.meta["rep"] = o.rep.label;
    doc.meta["character_polynomial"] = o.rep.poly.str();
    std::vector<BigInt> qs;
    for (const auto& v : varieties) qs.push_back(v.q);
    doc.meta["q"] = q_list_json(qs);
    if (!even_qs(qs).empty()) {
        doc.meta["outside_hypothesis"] = even_qs(qs);
        doc.meta["note"] = kEvenNote;
    }

    if (o.limits) {
        doc.kind = "limits";
        doc.meta["columns"] = {"q", "rep", "normalized", "expectation"};
        doc.meta["title"] = "limits as n -> infinity of q^{-nd} sum_C P(sigma_C) and of its average";
        for (const auto& v : varieties) {
            const Rational norm = limit_normalized(v, o.rep.poly);
            const Rational total = limit_normalized(v, LambdaSpec{});
            doc.data.push_back({{"q", v.q.get_str()}, {"rep", o.rep.label}, {"normalized", exact(norm)},
                                {"expectation", exact(norm / total)}});
        }
        return doc;
    }

    doc.kind = "table";
    doc.meta["columns"] = {"q", "n", "value"};
    doc.meta["title"] = "sum over Conf_n V(F_q) of P(sigma_C)";
    doc.meta["max_n"] = o.max_n;
    for (const auto& v : varieties) {
        std::vector<Rational> total(static_cast<size_t>(o.max_n) + 1);
        for (const auto& [lambda, c] : o.rep.poly.terms()) {
            const auto s = weighted_count_series(v, lambda, o.max_n);
            for (int n = 0; n <= o.max_n; ++n) total[static_cast<size_t>(n)] += c * s[static_cast<size_t>(n)];
        }
        for (int n = 0; n <= o.max_n; ++n)
            doc.data.push_back({{"q", v.q.get_str()}, {"n", n}, {"value", exact(total[static_cast<size_t>(n)])}});
    }
    return doc;
}

OutputDocument cmd_verify(const VerifyOptions& o) {
    if (o.qs.empty()) throw std::invalid_argument("verify needs at least one q");
    if (o.reps.empty()) throw std::invalid_argument("verify needs at least one rep");
    if (o.max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
    if (o.max_n > (o.side == Side::Conf ? kMaxGridN : 12))
        throw std::invalid_argument("--max-n too large for verify on this side");
    if (o.bruteforce) {
        if (o.side != Side::Conf) throw std::invalid_argument("--bruteforce applies to --side conf only");
        // refuse before doing any work rather than part-way through the grid
        for (const auto& q : o.qs) {
            if (!q.fits_sint_p() || !is_prime(q.get_si()))
                throw std::invalid_argument("brute force needs prime q, got " + q.get_str());
            if (ipow(q, static_cast<unsigned long>(o.max_n)) > BigInt(std::to_string(o.guard)))
                throw GuardExceeded("brute force over F_" + q.get_str() + " up to n = " + std::to_string(o.max_n) +
                                    " enumerates " + q.get_str() + "^" + std::to_string(o.max_n) +
                                    " polynomials, above the guard " + std::to_string(o.guard));
        }
    }

    struct Job {
        const BigInt* q;
        int n;
        const RepArg* rep;
    };
    std::vector<Job> jobs;
    for (const auto& q : o.qs)
        for (int n = 0; n <= o.max_n; ++n)
            for (const auto& rep : o.reps) jobs.push_back({&q, n, &rep});

    std::vector<json> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k = next++; k < jobs.size(); k = next++) {
            const Job& j = jobs[k];
            try {
                json row = {{"q", j.q->get_str()}, {"n", j.n}, {"rep", j.rep->label}};
                if (o.side == Side::Conf) {
                    const GlCheck c = gl_crosscheck_conf(j.rep->poly, *j.q, j.n, o.bruteforce, o.guard);
                    row["lhs"] = exact(c.lhs);
                    row["rhs"] = exact(c.rhs);
                    if (c.bruteforce) row["bruteforce"] = exact(*c.bruteforce);
                    row["pass"] = c.equal;
                } else {
                    const GlCheck c = gl_crosscheck_tori(j.rep->poly, *j.q, j.n);
                    const Rational series = tori_weighted_count(j.rep->poly, *j.q, j.n);
                    row["lhs"] = exact(c.lhs);
                    row["rhs"] = exact(c.rhs);
                    row["series"] = exact(series);
                    row["pass"] = c.equal && series == c.lhs;
                }
                rows[k] = std::move(row);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < std::max(o.threads, 1); ++t) pool.emplace_back(work);
        work();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    OutputDocument doc;
    doc.kind = "verification";
    const bool conf = o.side == Side::Conf;
    doc.meta["side"] = conf ? "conf" : "tori";
    doc.meta["q"] = q_list_json(o.qs);
    doc.meta["max_n"] = o.max_n;
    json reps = json::array();
    for (const auto& r : o.reps) reps.push_back(r.label);
    doc.meta["reps"] = reps;
    if (conf) {
        doc.meta["title"] = "sum_C P(sigma_C) over Conf_n A^1(F_q): lhs = partition sum, rhs = q^n sum_i (-1)^i alpha_i(n) q^-i";
        doc.meta["columns"] = o.bruteforce ? json{"q", "n", "rep", "lhs", "rhs", "bruteforce", "pass"}
                                           : json{"q", "n", "rep", "lhs", "rhs", "pass"};
        if (!even_qs(o.qs).empty()) {
            doc.meta["outside_hypothesis"] = even_qs(o.qs);
            doc.meta["note"] = kEvenNote;
        }
    } else {
        doc.meta["title"] = "sum_T P(sigma_T) over T_n(F_q): lhs = partition sum, rhs = q^{n(n-1)} sum_i beta_i(n) q^-i, series = generating function";
        doc.meta["columns"] = {"q", "n", "rep", "lhs", "rhs", "series", "pass"};
    }
    for (auto& r : rows) doc.data.push_back(std::move(r));
    return doc;
}

bool all_pass(const OutputDocument& doc) {
    for (const auto& row : doc.data)
        if (row.contains("pass") && !row["pass"].get<bool>()) return false;
    return true;
}

int threads_from_env() {
    const char* s = std::getenv("TWISTED_THREADS");
    if (!s || !*s) return 1;
    try {
        const int t = std::stoi(s);
        return std::clamp(t, 1, 256);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("TWISTED_THREADS must be a positive integer, got '") + s + "'");
    }
}

}  // namespace twisted
