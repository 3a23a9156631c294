#pragma once

#include "twisted/chars.hpp"
#include "twisted/output.hpp"
#include "twisted/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twisted {

inline constexpr int kMaxGridN = 40;
inline constexpr int kMaxGridI = 200;

/// A character polynomial together with the text the user gave for it.
struct RepArg {
    std::string label;
    CharPoly poly;
};

/// From --rep (builtin name or expression) or --lambda (a single binomial basis element).
RepArg rep_from_args(const std::optional<std::string>& rep, const std::optional<std::string>& lambda);

/// Splits on sep outside parentheses, so "C(X1,2),V1" gives two items.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

std::vector<BigInt> parse_q_list(std::string_view text);

struct BettiOptions {
    RepArg rep;
    int max_i = 13;
    int max_n = 14;
    int min_n = 0;
    bool stable = false;
};

OutputDocument cmd_conf_betti(const BettiOptions& o);
OutputDocument cmd_tori_betti(const BettiOptions& o);

struct CountOptions {
    std::string variety = "affine:1";
    std::vector<BigInt> qs;  // may be empty for file varieties
    RepArg rep;
    int max_n = 10;
    bool limits = false;
};

/// Weighted counts sum_C P(sigma_C) for n = 0..max_n, or (with limits) the exact
/// limits of q^{-nd} times that sum and of its average over Conf_n.
OutputDocument cmd_count(const CountOptions& o);

enum class Side { Conf, Tori };

struct VerifyOptions {
    Side side = Side::Conf;
    std::vector<BigInt> qs;
    int max_n = 6;
    std::vector<RepArg> reps;
    bool bruteforce = false;
    long long guard = 100'000'000;
    int threads = 1;
};

/// One row per (q, n, rep) in that order, whatever the thread count.
OutputDocument cmd_verify(const VerifyOptions& o);

/// True when the document has no row with pass == false.
bool all_pass(const OutputDocument& doc);

/// TWISTED_THREADS, default 1.
int threads_from_env();

}  // namespace twisted
