#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polydiag/counting.hpp"
#include "polydiag/hodge.hpp"
#include "polydiag/json_io.hpp"
#include "polydiag/limits.hpp"
#include "polydiag/strata.hpp"
#include "polydiag/trees.hpp"

using namespace polydiag;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw validation_error("format: '" + format + "' not valid for this command");
}

IntegerPartition parse_lambda(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw validation_error("lambda: '" + item + "' is not an integer");
        }
    }
    if (parts.empty()) throw validation_error("lambda: empty list");
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted != parts)
        std::cerr << "warning: lambda: parts reordered to weakly decreasing "
                  << IntegerPartition(sorted).to_string() << "\n";
    return IntegerPartition(parts);
}

// ---------------------------------------------------------------------------
// count

void run_count_table(int max_n, const std::string& format) {
    check_format(format, {"table", "csv", "json"});
    if (max_n < 2) throw validation_error("max-n: must be >= 2");
    std::vector<int> ns;
    std::vector<BigInt> fm, pd;
    for (int n = 2; n <= max_n; ++n) {
        ns.push_back(n);
        fm.push_back(fm_strata(n));
        pd.push_back(polydiag_strata(n));
    }
    if (format == "csv") {
        std::cout << "n,fm_strata,polydiag_strata\n";
        for (std::size_t i = 0; i < ns.size(); ++i)
            std::cout << ns[i] << ',' << fm[i] << ',' << pd[i] << '\n';
        return;
    }
    if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ns.size(); ++i)
            rows.push_back({{"n", ns[i]},
                            {"fm_strata", to_string(fm[i])},
                            {"polydiag_strata", to_string(pd[i])}});
        std::cout << json{{"rows", rows}}.dump() << '\n';
        return;
    }
    // Classic layout: one column per n, one row per space.
    std::vector<std::size_t> width(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i)
        width[i] = std::max(std::to_string(ns[i]).size(), to_string(pd[i]).size());
    auto row = [&](const std::string& head, const std::function<std::string(std::size_t)>& cell) {
        std::cout << head;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            std::string s = cell(i);
            std::cout << "  " << std::string(width[i] - s.size(), ' ') << s;
        }
        std::cout << '\n';
    };
    row("n   ", [&](std::size_t i) { return std::to_string(ns[i]); });
    row("X[n]", [&](std::size_t i) { return to_string(fm[i]); });
    row("X<n>", [&](std::size_t i) { return to_string(pd[i]); });
}

void run_count_strata(int n, std::optional<int> codim, const std::string& format) {
    check_format(format, {"table", "csv", "json"});
    if (codim) {
        BigInt c = strata_by_codim(n, *codim);
        if (format == "json")
            std::cout << json{{"n", n}, {"codim", *codim}, {"count", to_string(c)}}.dump()
                      << '\n';
        else if (format == "csv")
            std::cout << "n,codim,count\n" << n << ',' << *codim << ',' << c << '\n';
        else
            std::cout << c << '\n';
        return;
    }
    std::vector<BigInt> counts;
    for (int k = 0; k <= n - 1; ++k) counts.push_back(strata_by_codim(n, k));
    BigInt total = polydiag_strata(n);
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : counts) arr.push_back(to_string(c));
        std::cout << json{{"n", n}, {"by_codim", arr}, {"total", to_string(total)}}.dump()
                  << '\n';
    } else if (format == "csv") {
        std::cout << "codim,count\n";
        for (std::size_t k = 0; k < counts.size(); ++k) std::cout << k << ',' << counts[k] << '\n';
    } else {
        for (std::size_t k = 0; k < counts.size(); ++k)
            std::cout << "codim " << k << ": " << counts[k] << '\n';
        std::cout << "total: " << total << '\n';
    }
}

// ---------------------------------------------------------------------------
// enumerate

void require_limit_above(int n, const std::optional<long>& limit) {
    if (n > 7 && !limit)
        throw validation_error("limit: required for enumeration above n = 7");
}

void run_enumerate_partitions(int n, std::optional<int> k, std::optional<long> limit,
                              const std::string& format) {
    check_format(format, {"table", "json"});
    require_limit_above(n, limit);
    long emitted = 0;
    for_each_partition(n, k, [&](const SetPartition& p) {
        if (limit && emitted >= *limit) return false;
        ++emitted;
        if (format == "json")
            std::cout << to_json(p).dump() << '\n';
        else
            std::cout << p.to_string() << '\n';
        return true;
    });
}

void run_enumerate_chains(int n, std::optional<int> length, std::optional<long> limit,
                          const std::string& format) {
    check_format(format, {"table", "json"});
    require_limit_above(n, limit);
    long emitted = 0;
    for_each_chain(n, length, [&](const Chain& c) {
        if (limit && emitted >= *limit) return false;
        ++emitted;
        if (format == "json")
            std::cout << to_json(c).dump() << '\n';
        else
            std::cout << c.to_string() << '\n';
        return true;
    });
}

void run_enumerate_nests(int n, std::optional<long> limit, const std::string& format) {
    check_format(format, {"table", "json"});
    require_limit_above(n, limit);
    long emitted = 0;
    for_each_nest(n, [&](const Nest& nest) {
        if (limit && emitted >= *limit) return false;
        ++emitted;
        if (format == "json")
            std::cout << to_json(nest).dump() << '\n';
        else
            std::cout << nest.to_string() << '\n';
        return true;
    });
}

void run_enumerate_strata(int n, int m, bool open, std::optional<long> limit,
                          const std::string& format) {
    check_format(format, {"table", "csv", "json"});
    require_limit_above(n, limit);
    HodgeContext ctx(m);
    if (format == "csv") std::cout << "chain,codim,base,fibers,poly\n";
    long emitted = 0;
    for_each_chain(n, std::nullopt, [&](const Chain& chain) {
        if (limit && emitted >= *limit) return false;
        ++emitted;
        auto desc = bundle_description(chain, m);
        XPoly p = ctx.stratum_poly(chain, open);
        std::string fibers;
        for (std::size_t i = 0; i < desc.fibers.size(); ++i)
            fibers += (i ? " x " : "") + desc.fibers[i].to_string();
        if (format == "json") {
            json j = to_json(desc);
            j["chain"] = to_json(chain);
            j["open"] = open;
            j["poly"] = to_json(p);
            std::cout << j.dump() << '\n';
        } else if (format == "csv") {
            std::cout << '"' << chain.to_string() << "\"," << desc.codim << ",X<"
                      << desc.base_size << ">,\"" << fibers << "\",\"" << p.to_string()
                      << "\"\n";
        } else {
            std::cout << chain.to_string() << " | codim " << desc.codim << " | base X<"
                      << desc.base_size << ">";
            if (!fibers.empty()) std::cout << " | fibers " << fibers;
            std::cout << " | poly " << p.to_string() << '\n';
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// poly

void run_poly_u(int m, int n, const std::string& var, bool closed_form,
                const std::string& format) {
    check_format(format, {"table", "json"});
    if (var != "u" && var != "t") throw validation_error("var: must be 'u' or 't'");
    HodgeContext ctx(m);
    XPoly p = closed_form ? ctx.u_poly_closed(n) : ctx.u_poly(n);
    if (format == "json") {
        json j = to_json(p);
        j["m"] = m;
        j["n"] = n;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << p.to_string(var) << '\n';
    }
}

void run_poly_brick(int m, const std::string& lambda_text, bool open, const std::string& var,
                    const std::string& format) {
    check_format(format, {"table", "json"});
    if (var != "u" && var != "t") throw validation_error("var: must be 'u' or 't'");
    IntegerPartition lambda = parse_lambda(lambda_text);
    HodgeContext ctx(m);
    UPoly p = open ? ctx.open_brick_poly(lambda) : ctx.brick_poly(lambda);
    if (format == "json") {
        json j = to_json(p);
        j["m"] = m;
        j["lambda"] = lambda.parts();
        j["open"] = open;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << p.to_string(var) << '\n';
    }
}

void run_poly_stratum(int m, const std::string& chain_file, bool open, const std::string& var,
                      const std::string& format) {
    check_format(format, {"table", "json"});
    if (var != "u" && var != "t") throw validation_error("var: must be 'u' or 't'");
    Chain chain = chain_from_json(load_json(chain_file));
    HodgeContext ctx(m);
    XPoly p = ctx.stratum_poly(chain, open);
    if (format == "json") {
        json j = to_json(p);
        j["m"] = m;
        j["open"] = open;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << p.to_string(var) << '\n';
    }
}

// ---------------------------------------------------------------------------
// check / theta / classify / tree

int run_check_consistency(int m, int n) {
    HodgeContext ctx(m);
    auto report = ctx.consistency_check(n);
    std::cout << to_json(report).dump() << '\n';
    if (!report.ok) {
        std::cerr << "error: consistency: chain sum disagrees with the universal polynomial\n";
        return 2;
    }
    return 0;
}

void run_theta_schedule(int n, const std::string& format) {
    check_format(format, {"table", "csv", "json"});
    auto schedule = theta_schedule(n);
    if (format == "json") {
        json stages = json::array();
        for (const auto& st : schedule) {
            json centers = json::array();
            for (const auto& [sizes, count] : st.centers)
                centers.push_back({{"sizes", sizes}, {"count", to_string(count)}});
            stages.push_back({{"stage", st.stage},
                              {"centers", centers},
                              {"total", to_string(st.total())}});
        }
        std::cout << json{{"n", n}, {"stages", stages}}.dump() << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << "stage,sizes,count\n";
        for (const auto& st : schedule)
            for (const auto& [sizes, count] : st.centers) {
                std::cout << st.stage << ",\"(";
                for (std::size_t i = 0; i < sizes.size(); ++i)
                    std::cout << (i ? "," : "") << sizes[i];
                std::cout << ")\"," << count << '\n';
            }
        return;
    }
    if (schedule.empty()) {
        std::cout << "identity (no blowdown stages for n = " << n << ")\n";
        return;
    }
    for (const auto& st : schedule) {
        std::cout << "stage " << st.stage << ":";
        for (const auto& [sizes, count] : st.centers) {
            std::cout << " (";
            for (std::size_t i = 0; i < sizes.size(); ++i)
                std::cout << (i ? "," : "") << sizes[i];
            std::cout << ")x" << count;
        }
        std::cout << "  total " << st.total() << '\n';
    }
}

void run_theta_fiber(const std::string& tree_file, bool list, const std::string& format) {
    check_format(format, {"table", "json"});
    RootedTree tree = rooted_tree_from_json(load_json(tree_file));
    if (list) {
        for_each_eta_fiber(tree, [&](const LeveledTree& lt) {
            if (format == "json")
                std::cout << to_json(lt).dump() << '\n';
            else
                std::cout << tree_to_chain(lt).to_string() << '\n';
            return true;
        });
        return;
    }
    BigInt count = eta_fiber_count(tree);
    if (format == "json")
        std::cout << json{{"count", to_string(count)}}.dump() << '\n';
    else
        std::cout << count << '\n';
}

void run_classify(const std::string& profile_file, const std::string& curves_file, bool dot,
                  const std::string& format) {
    check_format(format, {"table", "json", "dot"});
    if (profile_file.empty() == curves_file.empty())
        throw validation_error("input: exactly one of --profile and --curves is required");
    ApproachProfile profile =
        profile_file.empty() ? profile_from_curves(curves_from_json(load_json(curves_file)))
                             : profile_from_json(load_json(profile_file));
    auto cls = classify(profile);
    if (format == "json") {
        std::cout << json{{"chain", to_json(cls.chain)},
                          {"tree", to_json(cls.tree)},
                          {"nest", to_json(cls.nest)}}
                         .dump()
                  << '\n';
        if (dot) std::cout << to_dot(cls.tree);
        return;
    }
    if (format == "dot") {
        std::cout << to_dot(cls.tree);
        return;
    }
    std::cout << "chain: " << cls.chain.to_string() << '\n';
    std::cout << "nest: " << cls.nest.to_string() << '\n';
    if (dot) std::cout << to_dot(cls.tree);
}

void run_tree(const std::string& chain_file, bool dot, const std::string& format) {
    check_format(format, {"table", "json", "dot"});
    Chain chain = chain_from_json(load_json(chain_file));
    LeveledTree tree = chain_to_tree(chain);
    if (dot || format == "dot") {
        std::cout << to_dot(tree);
        return;
    }
    if (format == "json")
        std::cout << to_json(tree).dump() << '\n';
    else
        std::cout << to_json(tree).dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of polydiagonal configuration-space "
                 "compactifications: strata, leveled trees, Hodge polynomials, "
                 "bricks, and collision classification"};
    app.require_subcommand(1);
    int exit_code = 0;

    // count
    auto* count = app.add_subcommand("count", "Strata counting");
    count->require_subcommand(1);
    {
        auto* table = count->add_subcommand("table", "Strata totals for X[n] and X<n>");
        auto max_n = std::make_shared<int>(9);
        auto format = std::make_shared<std::string>("table");
        table->add_option("--max-n", *max_n, "Largest n in the table")->required();
        table->add_option("--format", *format, "table|csv|json");
        table->callback([=] { run_count_table(*max_n, *format); });

        auto* strata = count->add_subcommand("strata", "Strata counts for one n");
        auto n = std::make_shared<int>(0);
        auto codim = std::make_shared<int>(-1);
        auto fmt = std::make_shared<std::string>("table");
        strata->add_option("--n", *n, "Number of points")->required();
        auto* codim_opt = strata->add_option("--codim", *codim, "Restrict to one codimension");
        strata->add_option("--format", *fmt, "table|csv|json");
        strata->callback([=] {
            run_count_strata(*n, *codim_opt ? std::optional<int>(*codim) : std::nullopt, *fmt);
        });
    }

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Stream combinatorial objects");
    enumerate->require_subcommand(1);
    {
        auto* parts = enumerate->add_subcommand("partitions", "Set partitions of [n]");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto limit = std::make_shared<long>(-1);
        auto fmt = std::make_shared<std::string>("table");
        parts->add_option("--n", *n, "Ground-set size")->required();
        auto* k_opt = parts->add_option("--k", *k, "Exactly k blocks");
        auto* lim_opt = parts->add_option("--limit", *limit, "Stop after this many rows");
        parts->add_option("--format", *fmt, "table|json");
        parts->callback([=] {
            run_enumerate_partitions(*n, *k_opt ? std::optional<int>(*k) : std::nullopt,
                                     *lim_opt ? std::optional<long>(*limit) : std::nullopt, *fmt);
        });

        auto* chains = enumerate->add_subcommand("chains", "Chains in L_[n] minus top");
        auto cn = std::make_shared<int>(0);
        auto length = std::make_shared<int>(0);
        auto climit = std::make_shared<long>(-1);
        auto cfmt = std::make_shared<std::string>("table");
        chains->add_option("--n", *cn, "Ground-set size")->required();
        auto* len_opt = chains->add_option("--length", *length, "Exactly this chain length");
        auto* clim_opt = chains->add_option("--limit", *climit, "Stop after this many rows");
        chains->add_option("--format", *cfmt, "table|json");
        chains->callback([=] {
            run_enumerate_chains(*cn, *len_opt ? std::optional<int>(*length) : std::nullopt,
                                 *clim_opt ? std::optional<long>(*climit) : std::nullopt, *cfmt);
        });

        auto* nests = enumerate->add_subcommand("nests", "Nests on [n]");
        auto nn = std::make_shared<int>(0);
        auto nlimit = std::make_shared<long>(-1);
        auto nfmt = std::make_shared<std::string>("table");
        nests->add_option("--n", *nn, "Ground-set size")->required();
        auto* nlim_opt = nests->add_option("--limit", *nlimit, "Stop after this many rows");
        nests->add_option("--format", *nfmt, "table|json");
        nests->callback([=] {
            run_enumerate_nests(*nn, *nlim_opt ? std::optional<long>(*nlimit) : std::nullopt,
                                *nfmt);
        });

        auto* strata = enumerate->add_subcommand(
            "strata", "All strata with codimension, bundle data and polynomial");
        auto sn = std::make_shared<int>(0);
        auto sm = std::make_shared<int>(1);
        auto sopen = std::make_shared<bool>(false);
        auto slimit = std::make_shared<long>(-1);
        auto sfmt = std::make_shared<std::string>("table");
        strata->add_option("--n", *sn, "Ground-set size")->required();
        strata->add_option("--m", *sm, "Base dimension");
        strata->add_flag("--open", *sopen, "Open-stratum polynomials");
        auto* slim_opt = strata->add_option("--limit", *slimit, "Stop after this many rows");
        strata->add_option("--format", *sfmt, "table|csv|json");
        strata->callback([=] {
            run_enumerate_strata(*sn, *sm, *sopen,
                                 *slim_opt ? std::optional<long>(*slimit) : std::nullopt, *sfmt);
        });
    }

    // poly
    auto* poly = app.add_subcommand("poly", "Exact Hodge polynomials");
    poly->require_subcommand(1);
    {
        auto* u = poly->add_subcommand("u", "Universal polynomial of the compactification");
        auto m = std::make_shared<int>(1);
        auto n = std::make_shared<int>(0);
        auto var = std::make_shared<std::string>("u");
        auto closed = std::make_shared<bool>(false);
        auto fmt = std::make_shared<std::string>("table");
        u->add_option("--m", *m, "Base dimension")->required();
        u->add_option("--n", *n, "Number of points")->required();
        u->add_option("--var", *var, "u|t");
        u->add_flag("--closed-form", *closed, "Use the direct summation route");
        u->add_option("--format", *fmt, "table|json");
        u->callback([=] { run_poly_u(*m, *n, *var, *closed, *fmt); });

        auto* brick = poly->add_subcommand("brick", "Brick polynomial for a shape");
        auto bm = std::make_shared<int>(1);
        auto lambda = std::make_shared<std::string>();
        auto open = std::make_shared<bool>(false);
        auto bvar = std::make_shared<std::string>("u");
        auto bfmt = std::make_shared<std::string>("table");
        brick->add_option("--m", *bm, "Base dimension")->required();
        brick->add_option("--lambda", *lambda, "Comma-separated shape, e.g. 1,1,1")->required();
        brick->add_flag("--open", *open, "Open brick instead of the closed one");
        brick->add_option("--var", *bvar, "u|t");
        brick->add_option("--format", *bfmt, "table|json");
        brick->callback([=] { run_poly_brick(*bm, *lambda, *open, *bvar, *bfmt); });

        auto* stratum = poly->add_subcommand("stratum", "Stratum polynomial for a chain");
        auto sm = std::make_shared<int>(1);
        auto chain_file = std::make_shared<std::string>();
        auto sopen = std::make_shared<bool>(false);
        auto svar = std::make_shared<std::string>("u");
        auto sfmt = std::make_shared<std::string>("table");
        stratum->add_option("--m", *sm, "Base dimension")->required();
        stratum->add_option("--chain", *chain_file, "Chain JSON file")->required();
        stratum->add_flag("--open", *sopen, "Open stratum instead of the closed one");
        stratum->add_option("--var", *svar, "u|t");
        stratum->add_option("--format", *sfmt, "table|json");
        stratum->callback([=] { run_poly_stratum(*sm, *chain_file, *sopen, *svar, *sfmt); });
    }

    // check
    auto* check = app.add_subcommand("check", "Internal identities");
    check->require_subcommand(1);
    {
        auto* consistency = check->add_subcommand(
            "consistency", "Chain sum of open strata against the universal polynomial");
        auto m = std::make_shared<int>(1);
        auto n = std::make_shared<int>(0);
        consistency->add_option("--m", *m, "Base dimension")->required();
        consistency->add_option("--n", *n, "Number of points")->required();
        consistency->callback([&exit_code, m, n] { exit_code = run_check_consistency(*m, *n); });
    }

    // theta
    auto* theta = app.add_subcommand("theta", "The blowdown to the Fulton-MacPherson space");
    theta->require_subcommand(1);
    {
        auto* schedule = theta->add_subcommand("schedule", "Blowdown stages and center counts");
        auto n = std::make_shared<int>(0);
        auto fmt = std::make_shared<std::string>("table");
        schedule->add_option("--n", *n, "Number of points")->required();
        schedule->add_option("--format", *fmt, "table|csv|json");
        schedule->callback([=] { run_theta_schedule(*n, *fmt); });

        auto* fiber = theta->add_subcommand("fiber", "Level assignments over a rooted tree");
        auto tree_file = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        auto ffmt = std::make_shared<std::string>("table");
        fiber->add_option("--tree", *tree_file, "Rooted tree JSON file")->required();
        fiber->add_flag("--list", *list, "Stream the leveled trees instead of counting");
        fiber->add_option("--format", *ffmt, "table|json");
        fiber->callback([=] { run_theta_fiber(*tree_file, *list, *ffmt); });
    }

    // classify
    {
        auto* classify_cmd =
            app.add_subcommand("classify", "Stratum of a degenerating configuration");
        auto profile_file = std::make_shared<std::string>();
        auto curves_file = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        auto fmt = std::make_shared<std::string>("table");
        classify_cmd->add_option("--profile", *profile_file, "Collision-rate matrix JSON");
        classify_cmd->add_option("--curves", *curves_file, "Approach-curve family JSON");
        classify_cmd->add_flag("--dot", *dot, "Also emit the leveled tree as DOT");
        classify_cmd->add_option("--format", *fmt, "table|json|dot");
        classify_cmd->callback([=] { run_classify(*profile_file, *curves_file, *dot, *fmt); });
    }

    // tree
    {
        auto* tree_cmd = app.add_subcommand("tree", "Leveled tree of a chain");
        auto chain_file = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        auto fmt = std::make_shared<std::string>("table");
        tree_cmd->add_option("--chain", *chain_file, "Chain JSON file")->required();
        tree_cmd->add_flag("--dot", *dot, "Emit DOT");
        tree_cmd->add_option("--format", *fmt, "table|json|dot");
        tree_cmd->callback([=] { run_tree(*chain_file, *dot, *fmt); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: argv: " << e.what() << '\n';
        return 1;
    } catch (const identity_error& e) {
        std::cerr << "error: identity: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
