// Command-line front end: conf-betti, tori-betti, count, verify.

#include "twisted/commands.hpp"
#include "twisted/conf_counts.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace twisted;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Common {
    std::string format = "table";
};

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted Betti numbers of Conf_n(C) and of the space of maximal tori, with exact point counts over F_q"};
    app.require_subcommand(1);

    // conf-betti / tori-betti share their options
    struct BettiArgs {
        Common common;
        std::optional<std::string> rep, lambda;
        int max_i = 13, max_n = 14, min_n = 0;
        bool stable = false;
    } conf_args, tori_args;
    auto add_betti = [&](const char* name, const char* help, BettiArgs& a) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--rep", a.rep, "V1, V11, V2 or a character polynomial such as \"C(X1,2) - X2 + 1\"");
        cmd->add_option("--lambda", a.lambda, "binomial basis element binom(X, lambda), e.g. 0,1");
        cmd->add_option("--max-i", a.max_i, "largest cohomological index")->capture_default_str();
        cmd->add_option("--max-n", a.max_n, "largest n")->capture_default_str();
        cmd->add_option("--min-n", a.min_n, "first column shown")->capture_default_str();
        cmd->add_flag("--stable", a.stable, "also report stable values and their recurrence");
        add_format(cmd, a.common);
        return cmd;
    };
    CLI::App* conf_cmd = add_betti("conf-betti", "dim H^i(Conf_n(C); P)", conf_args);
    CLI::App* tori_cmd = add_betti("tori-betti", "dim H^{2i}(T_n(C); P)", tori_args);

    Common count_common;
    std::string variety = "affine:1";
    std::string count_q;
    std::optional<std::string> count_rep, count_lambda;
    int count_max_n = 10;
    bool limits = false;
    CLI::App* count_cmd = app.add_subcommand("count", "sum over Conf_n V(F_q) of P(sigma_C)");
    count_cmd->add_option("--variety", variety, "affine:d, projective:d or file:PATH")->capture_default_str();
    count_cmd->add_option("--q", count_q, "prime power(s), comma separated");
    count_cmd->add_option("--rep", count_rep, "character polynomial (default 1)");
    count_cmd->add_option("--lambda", count_lambda, "binomial basis element");
    count_cmd->add_option("--max-n", count_max_n, "largest n")->capture_default_str();
    count_cmd->add_flag("--limits", limits, "exact limits as n grows");
    add_format(count_cmd, count_common);

    Common verify_common;
    std::string side;
    std::string verify_q;
    std::string verify_reps = "1,V1,V11,V2";
    int verify_max_n = 6;
    bool bruteforce = false;
    long long guard = kDefaultBruteForceGuard;
    CLI::App* verify_cmd = app.add_subcommand("verify", "point counts against Betti numbers");
    verify_cmd->add_option("--side", side, "conf or tori")->required()->check(CLI::IsMember({"conf", "tori"}));
    verify_cmd->add_option("--q", verify_q, "prime power(s), comma separated (default 3,5,7 for conf, 2,3,5 for tori)");
    verify_cmd->add_option("--rep", verify_reps, "representations, comma separated")->capture_default_str();
    verify_cmd->add_option("--max-n", verify_max_n, "largest n")->capture_default_str();
    verify_cmd->add_flag("--bruteforce", bruteforce, "also enumerate polynomials over F_q (conf)");
    verify_cmd->add_option("--guard", guard, "largest number of polynomials to enumerate")->capture_default_str();
    add_format(verify_cmd, verify_common);

    CLI11_PARSE(app, argc, argv);

    try {
        OutputDocument doc;
        std::string format;
        int status = 0;
        if (conf_cmd->parsed() || tori_cmd->parsed()) {
            BettiArgs& a = conf_cmd->parsed() ? conf_args : tori_args;
            BettiOptions o{rep_from_args(a.rep, a.lambda), a.max_i, a.max_n, a.min_n, a.stable};
            doc = conf_cmd->parsed() ? cmd_conf_betti(o) : cmd_tori_betti(o);
            format = a.common.format;
        } else if (count_cmd->parsed()) {
            CountOptions o;
            o.variety = variety;
            if (!count_q.empty()) o.qs = parse_q_list(count_q);
            o.rep = (count_rep || count_lambda) ? rep_from_args(count_rep, count_lambda) : rep_from_args("1", std::nullopt);
            o.max_n = count_max_n;
            o.limits = limits;
            doc = cmd_count(o);
            format = count_common.format;
        } else {
            VerifyOptions o;
            o.side = side == "conf" ? Side::Conf : Side::Tori;
            o.qs = parse_q_list(verify_q.empty() ? (o.side == Side::Conf ? "3,5,7" : "2,3,5") : verify_q);
            o.max_n = verify_max_n;
            for (const auto& r : split_top_level(verify_reps)) o.reps.push_back(rep_from_args(r, std::nullopt));
            o.bruteforce = bruteforce;
            o.guard = guard;
            o.threads = threads_from_env();
            doc = cmd_verify(o);
            format = verify_common.format;
            if (!all_pass(doc)) status = kExitFail;
        }
        std::cout << render(doc, parse_format(format));
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
